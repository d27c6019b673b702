#include "cnfmin/resolution.hpp"

#include <set>

#include "cnfmin/errors.hpp"

namespace cnfmin {

std::vector<Clause> resolve_pair(const Clause& c1, const Clause& c2) {
    std::vector<Clause> out;
    for (Literal l : c1) {
        if (!c2.contains(l.negated())) continue;
        std::vector<Literal> merged;
        merged.reserve(c1.size() + c2.size() - 2);
        for (Literal x : c1)
            if (x != l) merged.push_back(x);
        for (Literal x : c2)
            if (x != l.negated()) merged.push_back(x);
        if (auto r = Clause::try_make(std::move(merged))) out.push_back(std::move(*r));
    }
    return out;
}

bool resolves(const Clause& c1, const Clause& c2) {
    return !resolve_pair(c1, c2).empty();
}

Formula resolve_sets(const Formula& a, const Formula& b) {
    std::vector<Clause> out;
    for (const Clause& c1 : a)
        for (const Clause& c2 : b)
            for (Clause& r : resolve_pair(c1, c2)) out.push_back(std::move(r));
    return Formula(std::move(out));
}

Formula resolve_clause_with(const Clause& c, const Formula& f) {
    return resolve_sets(Formula({c}), f);
}

ClosureResult resolution_closure(const Formula& f, const ClosureOptions& options) {
    std::set<Clause> all(f.begin(), f.end());
    std::vector<Clause> frontier(f.begin(), f.end());
    int generations = 0;

    while (!frontier.empty()) {
        std::set<Clause> next;
        for (const Clause& c1 : frontier)
            for (const Clause& c2 : all)
                for (Clause& r : resolve_pair(c1, c2))
                    if (!all.count(r)) next.insert(std::move(r));
        if (next.empty()) break;
        ++generations;
        all.insert(next.begin(), next.end());
        if (all.size() > options.max_clauses)
            throw resource_limit_error("resolution closure exceeds " +
                                       std::to_string(options.max_clauses) + " clauses");
        frontier.assign(next.begin(), next.end());
    }

    ClosureResult result;
    result.closure = Formula(std::vector<Clause>(all.begin(), all.end()));
    result.generations = generations;

    std::vector<Clause> prime;
    for (const Clause& c : all) {
        bool minimal = true;
        for (const Clause& d : all)
            if (d.strict_subset_of(c)) {
                minimal = false;
                break;
            }
        if (minimal) prime.push_back(c);
    }
    result.prime = Formula(std::move(prime));
    return result;
}

Formula prime_implicates(const Formula& f, const ClosureOptions& options) {
    return resolution_closure(f, options).prime;
}

} // namespace cnfmin
