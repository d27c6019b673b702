#include "cnfmin/splitting.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "cnfmin/errors.hpp"
#include "cnfmin/resolution.hpp"

namespace cnfmin {

namespace {

void validate(const Formula& f, const Clause& target, const Clause& part1, const Clause& part2,
              VarId fresh) {
    if (!f.contains(target)) throw std::invalid_argument("split target not in formula");
    if (part1.empty() || part2.empty())
        throw std::invalid_argument("split parts must be nonempty");
    for (Literal l : part1)
        if (part2.contains(l)) throw std::invalid_argument("split parts overlap");
    if (part1.size() + part2.size() != target.size())
        throw std::invalid_argument("split parts do not partition the target");
    for (Literal l : part1)
        if (!target.contains(l)) throw std::invalid_argument("split part outside target");
    for (Literal l : part2)
        if (!target.contains(l)) throw std::invalid_argument("split part outside target");
    for (VarId v : variables(f))
        if (v == fresh) throw std::invalid_argument("fresh split variable occurs in formula");
}

Formula apply_split(const Formula& f, const Clause& target, const Clause& part1,
                    const Clause& part2, VarId fresh) {
    return f.without(target)
        .with(part1.with(Literal(fresh, true)))
        .with(part2.with(Literal(fresh, false)));
}

// A part breaks the repair when its glued copy cannot become
// superirredundant: either the part is already a clause of f (the copy would
// strictly contain it) or it is superredundant once added alone.
bool part_violates(const Formula& f, const Clause& part) {
    if (f.contains(part)) return true;
    return is_superredundant(f.with(part), part).superredundant;
}

Formula collateral_clauses(const Formula& f, const Clause& target, const Clause& part1,
                           const Clause& part2) {
    std::vector<Clause> out;
    for (const Clause& c : f) {
        if (c == target) continue;
        if (resolves(c, part1) && resolves(c, part2)) out.push_back(c);
    }
    return Formula(std::move(out));
}

} // namespace

SplitPlan make_split_plan(const Formula& f, const Clause& target, const Clause& part1,
                          const Clause& part2, VarId fresh) {
    validate(f, target, part1, part2, fresh);
    SplitPlan plan{target, part1, part2, fresh, apply_split(f, target, part1, part2, fresh)};
    return plan;
}

Formula split(const Formula& f, const SplitPlan& plan) {
    validate(f, plan.target, plan.part1, plan.part2, plan.fresh);
    return apply_split(f, plan.target, plan.part1, plan.part2, plan.fresh);
}

SplitSafetyReport analyze_split(const Formula& f, const SplitPlan& plan) {
    validate(f, plan.target, plan.part1, plan.part2, plan.fresh);
    SplitSafetyReport report;
    for (const Clause& part : {plan.part1, plan.part2})
        if (part_violates(f, part)) report.precondition_violations.push_back(part);
    report.collateral = collateral_clauses(f, plan.target, plan.part1, plan.part2);
    return report;
}

namespace {

// Partitions in deterministic order: singleton first literal against the
// rest, then the remaining bitmask choices over the canonically ordered
// literals (bit set places the literal in part1).
std::vector<std::pair<Clause, Clause>> partitions_of(const Clause& target) {
    const auto& lits = target.literals();
    std::size_t n = lits.size();
    std::vector<std::pair<Clause, Clause>> out;
    std::vector<std::uint64_t> masks;
    masks.push_back(1);
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask)
        if (mask != 1) masks.push_back(mask);
    for (std::uint64_t mask : masks) {
        std::vector<Literal> a, b;
        for (std::size_t i = 0; i < n; ++i)
            ((mask >> i) & 1 ? a : b).push_back(lits[i]);
        out.emplace_back(Clause(std::move(a)), Clause(std::move(b)));
    }
    return out;
}

} // namespace

RepairResult make_superirredundant(const Formula& f, const Clause& target, VarTable& table,
                                   const RepairOptions& options) {
    if (!f.contains(target)) throw std::invalid_argument("target not in formula");
    if (target.size() < 2) throw std::invalid_argument("target has fewer than two literals");
    if (!is_superredundant(f, target, Method::first_step, options.closure).superredundant)
        throw std::invalid_argument("target already superirredundant");

    RepairResult result;
    result.formula = f;
    std::deque<Clause> queue{target};

    while (!queue.empty()) {
        Clause current = queue.front();
        queue.pop_front();
        if (!result.formula.contains(current)) continue;
        if (!is_superredundant(result.formula, current, Method::first_step, options.closure)
                 .superredundant)
            continue;
        if (current.size() < 2)
            throw repair_error("superredundant unit clause cannot be split");

        bool applied = false;
        for (const auto& [part1, part2] : partitions_of(current)) {
            if (part_violates(result.formula, part1) || part_violates(result.formula, part2))
                continue;
            Formula collateral = collateral_clauses(result.formula, current, part1, part2);
            VarId fresh = table.fresh_indexed("$");
            SplitPlan plan =
                make_split_plan(result.formula, current, part1, part2, fresh);
            result.formula = plan.result;
            result.plans.push_back(std::move(plan));
            for (const Clause& c : collateral) queue.push_back(c);
            applied = true;
            break;
        }
        if (!applied)
            throw repair_error("repair impossible: some part of every partition is "
                               "superredundant on its own");
        if (result.plans.size() > options.max_splits)
            throw resource_limit_error("split iteration cap of " +
                                       std::to_string(options.max_splits) + " exceeded");
    }
    return result;
}

} // namespace cnfmin
