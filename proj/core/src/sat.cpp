#include "cnfmin/sat.hpp"

#include <algorithm>
#include <vector>

namespace cnfmin {

namespace {

Assignment horn_sat_model(const Formula& f, const std::vector<VarId>& vars, bool& unsat) {
    // Least model: unit-propagate forced positives, everything else false.
    std::vector<VarId> forced;
    auto is_forced = [&](VarId v) {
        return std::find(forced.begin(), forced.end(), v) != forced.end();
    };
    bool changed = true;
    unsat = false;
    while (changed && !unsat) {
        changed = false;
        for (const Clause& c : f) {
            bool satisfied = false;
            bool all_negs_true = true;
            std::optional<VarId> positive;
            for (Literal l : c) {
                if (l.positive()) {
                    positive = l.var();
                    if (is_forced(l.var())) satisfied = true;
                } else if (!is_forced(l.var())) {
                    all_negs_true = false;
                }
            }
            if (satisfied || !all_negs_true) continue;
            if (!positive) {
                unsat = true;
                break;
            }
            forced.push_back(*positive);
            changed = true;
        }
    }
    Assignment a;
    for (VarId v : vars) a.set(v, is_forced(v));
    return a;
}

// Dense-indexed clause matrix; literals are +-(index+1).
struct Matrix {
    std::vector<VarId> vars;
    std::vector<std::vector<int>> clauses;

    explicit Matrix(const Formula& f) {
        vars = variables(f);
        auto index_of = [&](VarId v) {
            return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) -
                                    vars.begin());
        };
        clauses.reserve(f.clause_count());
        for (const Clause& c : f) {
            std::vector<int> row;
            row.reserve(c.size());
            for (Literal l : c) row.push_back((index_of(l.var()) + 1) * (l.positive() ? 1 : -1));
            clauses.push_back(std::move(row));
        }
    }
};

enum class Value : signed char { unset = 0, yes = 1, no = -1 };

struct Dpll {
    const Matrix& m;
    int n;

    explicit Dpll(const Matrix& matrix) : m(matrix), n(static_cast<int>(matrix.vars.size())) {}

    static bool lit_true(const std::vector<Value>& val, int lit) {
        Value v = val[static_cast<std::size_t>(std::abs(lit)) - 1];
        return v != Value::unset && (v == Value::yes) == (lit > 0);
    }
    static bool lit_false(const std::vector<Value>& val, int lit) {
        Value v = val[static_cast<std::size_t>(std::abs(lit)) - 1];
        return v != Value::unset && (v == Value::yes) != (lit > 0);
    }

    // Returns false on conflict.
    bool propagate(std::vector<Value>& val) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& c : m.clauses) {
                int unassigned = 0;
                int last = 0;
                bool satisfied = false;
                for (int lit : c) {
                    if (lit_true(val, lit)) {
                        satisfied = true;
                        break;
                    }
                    if (!lit_false(val, lit)) {
                        ++unassigned;
                        last = lit;
                    }
                }
                if (satisfied) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) {
                    val[static_cast<std::size_t>(std::abs(last)) - 1] =
                        last > 0 ? Value::yes : Value::no;
                    changed = true;
                }
            }
        }
        return true;
    }

    // Assigns the lowest pure variable among open clauses, if any.
    bool assign_pure(std::vector<Value>& val) const {
        std::vector<signed char> seen(static_cast<std::size_t>(n), 0); // 1 pos, 2 neg, 3 both
        for (const auto& c : m.clauses) {
            bool satisfied = false;
            for (int lit : c)
                if (lit_true(val, lit)) {
                    satisfied = true;
                    break;
                }
            if (satisfied) continue;
            for (int lit : c) {
                std::size_t i = static_cast<std::size_t>(std::abs(lit)) - 1;
                if (val[i] != Value::unset) continue;
                seen[i] |= lit > 0 ? 1 : 2;
            }
        }
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (seen[i] == 1 || seen[i] == 2) {
                val[i] = seen[i] == 1 ? Value::yes : Value::no;
                return true;
            }
        }
        return false;
    }

    bool all_satisfied(const std::vector<Value>& val) const {
        for (const auto& c : m.clauses) {
            bool satisfied = false;
            for (int lit : c)
                if (lit_true(val, lit)) {
                    satisfied = true;
                    break;
                }
            if (!satisfied) return false;
        }
        return true;
    }

    bool solve(std::vector<Value> val, std::vector<Value>& out) const {
        while (true) {
            if (!propagate(val)) return false;
            if (all_satisfied(val)) {
                out = std::move(val);
                return true;
            }
            if (!assign_pure(val)) break;
        }
        int branch = -1;
        for (int i = 0; i < n; ++i)
            if (val[static_cast<std::size_t>(i)] == Value::unset) {
                branch = i;
                break;
            }
        if (branch < 0) return false; // total assignment with an unsatisfied clause
        for (Value v : {Value::no, Value::yes}) {
            std::vector<Value> next = val;
            next[static_cast<std::size_t>(branch)] = v;
            if (solve(std::move(next), out)) return true;
        }
        return false;
    }
};

} // namespace

std::optional<Assignment> satisfiable(const Formula& f, const SatOptions& options) {
    for (const Clause& c : f)
        if (c.empty()) return std::nullopt;

    std::vector<VarId> vars = variables(f);

    if (!options.force_general && is_horn(f)) {
        bool unsat = false;
        Assignment a = horn_sat_model(f, vars, unsat);
        if (unsat) return std::nullopt;
        return a;
    }

    Matrix m(f);
    Dpll solver(m);
    std::vector<Value> out;
    if (!solver.solve(std::vector<Value>(vars.size(), Value::unset), out)) return std::nullopt;
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a.set(vars[i], out[i] == Value::yes);
    return a;
}

bool entails(const Formula& f, const Clause& c) {
    Formula g = f;
    for (Literal l : c) g = g.with(Clause({l.negated()}));
    return !satisfiable(g).has_value();
}

bool equivalent(const Formula& f, const Formula& g) {
    if (f == g) return true;
    for (const Clause& c : g)
        if (!entails(f, c)) return false;
    for (const Clause& c : f)
        if (!entails(g, c)) return false;
    return true;
}

bool consistent_with(const Formula& f, const LiteralSet& s) {
    return satisfiable(f.united(s.as_units())).has_value();
}

} // namespace cnfmin
