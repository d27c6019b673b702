#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cnfmin/cnf.hpp"
#include "cnfmin/minimize.hpp"
#include "cnfmin/resolution.hpp"

namespace cnfmin {

/// Formula plus the variables to keep; everything else is forgotten.
struct ForgetSpec {
    Formula formula;
    std::set<VarId> keep;
};

struct ForgetOptions {
    std::size_t max_clauses = 100000;     // intermediate blowup cap for forget_all
    std::size_t max_enumeration = 1u << 20; // literal-set enumeration cap
    bool greedy_order = false;            // forget the variable minimizing immediate growth
};

/// Replaces the clauses mentioning x by their cross-resolutions. The result
/// never mentions x; x absent from f returns f unchanged.
Formula forget_one(const Formula& f, VarId x);

/// forget_one iterated over the variables outside keep, in ascending id order
/// (or size-greedy order when requested).
Formula forget_all(const ForgetSpec& spec, const ForgetOptions& options = {});

/// Prime implicates of the formula restricted to clauses over keep variables.
Formula forget_by_prime_implicates(const ForgetSpec& spec, const ClosureOptions& options = {});

/// Candidate ranges over keep variables only and has the same consistent
/// complete literal sets over keep as the spec formula. Enumerates all
/// 2^|keep| complete sets; throws on the enumeration cap, and
/// std::invalid_argument when the candidate mentions a forgotten variable.
bool expresses_forgetting(const Formula& candidate, const ForgetSpec& spec,
                          const ForgetOptions& options = {});

struct NecessaryLiteralReport {
    Literal literal;
    LiteralSet witness; // complete over keep; consistent with the formula,
                        // inconsistent once the literal is flipped
};

/// Literals over keep that every CNF formula expressing the forgetting must
/// contain. Sufficient, not necessarily complete, for literal necessity.
std::vector<NecessaryLiteralReport> necessary_literals(const ForgetSpec& spec,
                                                       const ForgetOptions& options = {});

struct MinForgetResult {
    int size = 0;
    std::vector<Formula> witnesses;
};

/// Minimum size over all CNF formulas expressing the forgetting, with every
/// minimum-size witness.
MinForgetResult min_forget_size(const ForgetSpec& spec, const MinimizeOptions& options = {});

/// Bounded variant; nothing of size <= bound yields nullopt.
std::optional<MinForgetResult> min_forget_size_within(const ForgetSpec& spec, int bound,
                                                      const MinimizeOptions& options = {});

} // namespace cnfmin
