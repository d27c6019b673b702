#include "cnfmin/forgetting.hpp"

#include <algorithm>
#include <stdexcept>

#include "cnfmin/errors.hpp"
#include "cnfmin/sat.hpp"

namespace cnfmin {

Formula forget_one(const Formula& f, VarId x) {
    Formula pos = clauses_with_literal(f, Literal(x, true));
    Formula neg = clauses_with_literal(f, Literal(x, false));
    std::vector<Clause> rest;
    for (const Clause& c : f)
        if (!c.mentions(x)) rest.push_back(c);
    return Formula(std::move(rest)).united(resolve_sets(pos, neg));
}

Formula forget_all(const ForgetSpec& spec, const ForgetOptions& options) {
    Formula f = spec.formula;
    std::vector<VarId> pending;
    for (VarId v : variables(f))
        if (!spec.keep.count(v)) pending.push_back(v);

    while (!pending.empty()) {
        VarId next = pending.front();
        if (options.greedy_order) {
            int best_size = size(forget_one(f, next));
            for (std::size_t i = 1; i < pending.size(); ++i) {
                int s = size(forget_one(f, pending[i]));
                if (s < best_size) {
                    best_size = s;
                    next = pending[i];
                }
            }
        }
        f = forget_one(f, next);
        if (f.clause_count() > options.max_clauses)
            throw resource_limit_error("forgetting exceeded the clause cap of " +
                                       std::to_string(options.max_clauses));
        pending.erase(std::find(pending.begin(), pending.end(), next));
    }
    return f;
}

Formula forget_by_prime_implicates(const ForgetSpec& spec, const ClosureOptions& options) {
    Formula prime = prime_implicates(spec.formula, options);
    std::vector<Clause> kept;
    for (const Clause& c : prime) {
        bool over_keep = true;
        for (VarId v : variables(c))
            if (!spec.keep.count(v)) {
                over_keep = false;
                break;
            }
        if (over_keep) kept.push_back(c);
    }
    return Formula(std::move(kept));
}

namespace {

std::vector<VarId> keep_sorted(const ForgetSpec& spec) {
    return std::vector<VarId>(spec.keep.begin(), spec.keep.end());
}

void check_enumeration_cap(std::size_t bits, const ForgetOptions& options) {
    if (bits >= 8 * sizeof(std::uint64_t) || (std::uint64_t{1} << bits) > options.max_enumeration)
        throw resource_limit_error("literal-set enumeration over " + std::to_string(bits) +
                                   " variables exceeds the cap");
}

LiteralSet set_for_mask(const std::vector<VarId>& vars, std::uint64_t mask) {
    std::vector<Literal> lits;
    lits.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
        lits.emplace_back(vars[i], (mask >> i) & 1);
    return LiteralSet(std::move(lits));
}

} // namespace

bool expresses_forgetting(const Formula& candidate, const ForgetSpec& spec,
                          const ForgetOptions& options) {
    for (VarId v : variables(candidate))
        if (!spec.keep.count(v))
            throw std::invalid_argument("candidate mentions forgotten variable");

    std::vector<VarId> vars = keep_sorted(spec);
    check_enumeration_cap(vars.size(), options);

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
        LiteralSet s = set_for_mask(vars, mask);
        if (consistent_with(spec.formula, s) != consistent_with(candidate, s)) return false;
    }
    return true;
}

std::vector<NecessaryLiteralReport> necessary_literals(const ForgetSpec& spec,
                                                       const ForgetOptions& options) {
    std::vector<VarId> vars = keep_sorted(spec);
    if (!vars.empty()) check_enumeration_cap(vars.size() - 1, options);

    std::vector<NecessaryLiteralReport> out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (bool positive : {true, false}) {
            Literal l(vars[i], positive);
            std::vector<VarId> others;
            for (std::size_t j = 0; j < vars.size(); ++j)
                if (j != i) others.push_back(vars[j]);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
                LiteralSet s = set_for_mask(others, mask).with(l);
                if (!consistent_with(spec.formula, s)) continue;
                if (consistent_with(spec.formula, s.flipped(l))) continue;
                out.push_back({l, s});
                break;
            }
        }
    }
    return out;
}

MinForgetResult min_forget_size(const ForgetSpec& spec, const MinimizeOptions& options) {
    MinimizationResult r = minimize(forget_by_prime_implicates(spec, options.closure), options);
    return {r.min_size, std::move(r.witnesses)};
}

std::optional<MinForgetResult> min_forget_size_within(const ForgetSpec& spec, int bound,
                                                      const MinimizeOptions& options) {
    auto r = minimize_within(forget_by_prime_implicates(spec, options.closure), bound, options);
    if (!r) return std::nullopt;
    return MinForgetResult{r->min_size, std::move(r->witnesses)};
}

} // namespace cnfmin
