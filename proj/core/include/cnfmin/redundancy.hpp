#pragma once

#include <optional>

#include "cnfmin/cnf.hpp"
#include "cnfmin/resolution.hpp"

namespace cnfmin {

enum class Method { definition, first_step, one_two };

struct RedundancyReport {
    Clause clause;
    bool redundant = false;         // entailed by the rest of the formula
    bool superredundant = false;    // redundant in the resolution closure
    Method method = Method::first_step;
    // For one_two: a derived strict subset of clause, or a derived pair
    // {c1 v a, c2 v -a} with clause = c1 v c2 and a outside the clause.
    // Otherwise a best-effort entailing set.
    std::optional<Formula> witness;
};

/// The rest of the formula entails c. c must be in f.
bool is_redundant(const Formula& f, const Clause& c);

/// Superredundancy of c in f. The default check resolves c once against the
/// whole formula and tests entailment of c by the rest plus the resolvents;
/// the definition method checks redundancy in the full closure instead.
RedundancyReport is_superredundant(const Formula& f, const Clause& c,
                                   Method method = Method::first_step,
                                   const ClosureOptions& options = {});

/// Last-step criterion: searches the closure for a strict subset of c or for
/// a pair c1 v a, c2 v -a with c = c1 v c2 and a not in c.
RedundancyReport superredundant_one_two(const Formula& f, const Clause& c,
                                        const ClosureOptions& options = {});

/// Single-literal clause shortcut: drop the unit, strip the opposite literal
/// from the clauses containing it, test entailment of l. When the opposite
/// literal does not occur at all this degenerates to plain redundancy of l.
bool superredundant_unit(const Formula& f, Literal l);

/// The subset of f whose clauses are superirredundant. Clauses built on a
/// uniform-polarity literal outside the checked clause are dropped first, and
/// satisfiable variable-disjoint parts are analyzed separately.
Formula superirredundant_clauses(const Formula& f, const ClosureOptions& options = {});

} // namespace cnfmin
