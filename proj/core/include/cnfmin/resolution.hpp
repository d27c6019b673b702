#pragma once

#include <cstddef>
#include <vector>

#include "cnfmin/cnf.hpp"

namespace cnfmin {

struct ClosureOptions {
    std::size_t max_clauses = 100000;
};

struct ClosureResult {
    Formula closure;  // least set containing the input and closed under resolution
    Formula prime;    // subset-minimal members of closure
    int generations = 0; // fixpoint rounds that added clauses
};

/// All non-tautological resolvents of the pair, one per clashing variable.
/// A resolvent never contains the resolving variable and never equals a parent.
std::vector<Clause> resolve_pair(const Clause& c1, const Clause& c2);

/// Exactly one resolution of one clause of a with one clause of b.
Formula resolve_sets(const Formula& a, const Formula& b);

Formula resolve_clause_with(const Clause& c, const Formula& f);

/// Whether the pair has at least one non-tautological resolvent.
bool resolves(const Clause& c1, const Clause& c2);

/// Throws resource_limit_error when the closure exceeds options.max_clauses.
ClosureResult resolution_closure(const Formula& f, const ClosureOptions& options = {});

/// Subset-minimal clauses of the resolution closure.
Formula prime_implicates(const Formula& f, const ClosureOptions& options = {});

} // namespace cnfmin
