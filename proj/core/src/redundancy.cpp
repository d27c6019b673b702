#include "cnfmin/redundancy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "cnfmin/sat.hpp"

namespace cnfmin {

namespace {

void require_member(const Formula& f, const Clause& c) {
    if (!f.contains(c)) throw std::invalid_argument("clause not in formula");
}

} // namespace

bool is_redundant(const Formula& f, const Clause& c) {
    require_member(f, c);
    return entails(f.without(c), c);
}

RedundancyReport is_superredundant(const Formula& f, const Clause& c, Method method,
                                   const ClosureOptions& options) {
    if (method == Method::one_two) return superredundant_one_two(f, c, options);
    require_member(f, c);

    RedundancyReport report;
    report.clause = c;
    report.method = method;
    report.redundant = entails(f.without(c), c);

    Formula g;
    if (method == Method::first_step) {
        g = f.without(c).united(resolve_clause_with(c, f));
    } else {
        g = resolution_closure(f, options).closure.without(c);
    }
    report.superredundant = report.redundant || entails(g, c);
    if (report.superredundant) report.witness = g;
    return report;
}

RedundancyReport superredundant_one_two(const Formula& f, const Clause& c,
                                        const ClosureOptions& options) {
    require_member(f, c);

    RedundancyReport report;
    report.clause = c;
    report.method = Method::one_two;
    report.redundant = entails(f.without(c), c);

    Formula closure = resolution_closure(f, options).closure;

    for (const Clause& d : closure) {
        if (d.strict_subset_of(c)) {
            report.superredundant = true;
            report.witness = Formula({d});
            return report;
        }
    }

    // Pair case: both halves of a split of c extended by opposite fresh-to-c
    // literals over the same variable.
    for (VarId a : variables(closure)) {
        if (c.mentions(a)) continue;
        Literal pos(a, true), neg(a, false);
        std::vector<Clause> with_pos, with_neg;
        for (const Clause& d : closure) {
            if (d.contains(pos) && d.without(pos).subset_of(c)) with_pos.push_back(d);
            if (d.contains(neg) && d.without(neg).subset_of(c)) with_neg.push_back(d);
        }
        for (const Clause& d1 : with_pos)
            for (const Clause& d2 : with_neg) {
                Clause joined = Clause([&] {
                    std::vector<Literal> lits(d1.without(pos).literals());
                    for (Literal l : d2.without(neg)) lits.push_back(l);
                    return lits;
                }());
                if (joined == c) {
                    report.superredundant = true;
                    report.witness = Formula({d1, d2});
                    return report;
                }
            }
    }

    report.superredundant = false;
    return report;
}

bool superredundant_unit(const Formula& f, Literal l) {
    Clause unit({l});
    if (!f.contains(unit)) throw std::invalid_argument("not a unit clause of the formula");

    if (!occurs(f, l.negated())) return entails(f.without(unit), unit);

    std::vector<Clause> transformed;
    for (const Clause& c : f) {
        if (c == unit) continue;
        if (c.contains(l.negated())) transformed.push_back(c.without(l.negated()));
        else transformed.push_back(c);
    }
    return entails(Formula(std::move(transformed)), unit);
}

namespace {

// Drops clauses built on a uniform-polarity literal that c does not contain,
// then restricts to c's variable-connected component when the remainder is
// satisfiable. Superredundancy of c is unchanged by these reductions.
Formula reduce_around(const Formula& f, const Clause& c) {
    Formula g = f;

    bool changed = true;
    while (changed) {
        changed = false;
        for (VarId v : variables(g)) {
            for (bool positive : {true, false}) {
                Literal l(v, positive);
                if (c.contains(l)) continue;
                if (!occurs(g, l) || occurs(g, l.negated())) continue;
                std::vector<Clause> kept;
                for (const Clause& d : g)
                    if (!d.contains(l)) kept.push_back(d);
                g = Formula(std::move(kept));
                changed = true;
            }
        }
    }

    // Union-find over variables.
    std::map<VarId, VarId> parent;
    std::function<VarId(VarId)> find = [&](VarId v) {
        auto it = parent.find(v);
        if (it == parent.end() || it->second == v) return v;
        VarId root = find(it->second);
        it->second = root;
        return root;
    };
    for (const Clause& d : g) {
        auto vars = variables(d);
        for (std::size_t i = 1; i < vars.size(); ++i) {
            VarId a = find(vars[i]);
            VarId b = find(vars[0]);
            if (a != b) parent.insert_or_assign(a, b);
        }
    }

    auto component_of = [&](const Clause& d) -> std::optional<VarId> {
        auto vars = variables(d);
        if (vars.empty()) return std::nullopt;
        return find(vars[0]);
    };

    auto c_root = component_of(c);
    std::vector<Clause> same, rest;
    for (const Clause& d : g) {
        auto root = component_of(d);
        bool with_c = (d == c) || (root.has_value() && c_root.has_value() && *root == *c_root);
        (with_c ? same : rest).push_back(d);
    }
    if (!rest.empty()) {
        Formula others(std::move(rest));
        if (satisfiable(others).has_value()) g = Formula(std::move(same));
    }
    return g;
}

} // namespace

Formula superirredundant_clauses(const Formula& f, const ClosureOptions& options) {
    std::vector<Clause> out;
    for (const Clause& c : f) {
        Formula g = reduce_around(f, c);
        if (!is_superredundant(g, c, Method::first_step, options).superredundant)
            out.push_back(c);
    }
    return Formula(std::move(out));
}

} // namespace cnfmin
