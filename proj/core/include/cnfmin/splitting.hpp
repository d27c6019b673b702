#pragma once

#include <vector>

#include "cnfmin/cnf.hpp"
#include "cnfmin/redundancy.hpp"

namespace cnfmin {

/// Replacement of target by part1 v fresh and part2 v -fresh.
/// part1 and part2 partition the literals of target; fresh occurs nowhere in
/// the input formula.
struct SplitPlan {
    Clause target;
    Clause part1;
    Clause part2;
    VarId fresh{-1};
    Formula result;
};

/// Validates the partition against f and fills in the resulting formula.
SplitPlan make_split_plan(const Formula& f, const Clause& target, const Clause& part1,
                          const Clause& part2, VarId fresh);

/// Applies the plan to f. The original f expresses forgetting the fresh
/// variable from the result.
Formula split(const Formula& f, const SplitPlan& plan);

struct SplitSafetyReport {
    // Parts whose glued copy cannot become superirredundant: parts that are
    // already clauses of f, or that are superredundant once added alone.
    std::vector<Clause> precondition_violations;
    // Clauses of f resolving with both parts; the only ones that may lose
    // superirredundancy.
    Formula collateral;

    bool clean() const { return precondition_violations.empty() && collateral.empty(); }
};

SplitSafetyReport analyze_split(const Formula& f, const SplitPlan& plan);

struct RepairOptions {
    std::size_t max_splits = 32;
    ClosureOptions closure{};
};

struct RepairResult {
    Formula formula;
    std::vector<SplitPlan> plans;
};

/// Splits target (which must be superredundant in f, with at least two
/// literals) on a fresh variable, then iterates on collateral clauses that
/// became superredundant. The default partition is the first literal against
/// the rest; all partitions are tried before declaring the repair impossible.
RepairResult make_superirredundant(const Formula& f, const Clause& target, VarTable& table,
                                   const RepairOptions& options = {});

} // namespace cnfmin
