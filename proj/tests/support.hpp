#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cnfmin/cnf.hpp"
#include "cnfmin/parser.hpp"
#include "cnfmin/sat.hpp"

namespace support {

using namespace cnfmin;

inline Formula F(VarTable& table, const std::string& tokens) {
    std::vector<std::string> parts;
    std::string word;
    for (char c : tokens + " ") {
        if (c == ' ' || c == '\t') {
            if (!word.empty()) parts.push_back(word);
            word.clear();
        } else {
            word += c;
        }
    }
    return parse_tokens(parts, table);
}

inline Clause C(VarTable& table, const std::string& token) {
    Formula f = parse_clause_token(token, table);
    if (f.clause_count() != 1) throw error("C() expects a single clause");
    return *f.begin();
}

inline Literal L(VarTable& table, const std::string& text) {
    bool positive = true;
    std::string name = text;
    if (!name.empty() && name[0] == '-') {
        positive = false;
        name = name.substr(1);
    }
    return Literal(table.intern(name), positive);
}

inline std::set<VarId> V(VarTable& table, const std::string& letters) {
    std::set<VarId> vars;
    for (char c : letters)
        if (c != ' ') vars.insert(table.intern(std::string_view(&c, 1)));
    return vars;
}

// Truth-table oracles, independent of the solver.

inline std::vector<VarId> tt_vars(const Formula& f, const Clause& extra = Clause()) {
    std::vector<VarId> vars = variables(f);
    for (VarId v : variables(extra))
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    return vars;
}

inline Assignment tt_assignment(const std::vector<VarId>& vars, std::uint64_t mask) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a.set(vars[i], (mask >> i) & 1);
    return a;
}

inline bool tt_satisfiable(const Formula& f) {
    std::vector<VarId> vars = tt_vars(f);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask)
        if (tt_assignment(vars, mask).satisfies(f)) return true;
    return false;
}

inline bool tt_entails(const Formula& f, const Clause& c) {
    std::vector<VarId> vars = tt_vars(f, c);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
        Assignment a = tt_assignment(vars, mask);
        if (a.satisfies(f) && !a.satisfies(c)) return false;
    }
    return true;
}

inline bool tt_equivalent(const Formula& f, const Formula& g) {
    std::vector<VarId> vars = variables(f.united(g));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
        Assignment a = tt_assignment(vars, mask);
        if (a.satisfies(f) != a.satisfies(g)) return false;
    }
    return true;
}

// Subset-minimal members, the oracle for prime implicate extraction.
inline Formula subset_minimal(const Formula& f) {
    std::vector<Clause> out;
    for (const Clause& c : f) {
        bool minimal = true;
        for (const Clause& d : f)
            if (d.strict_subset_of(c)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    return Formula(std::move(out));
}

// Deterministic random formulas over the first max_vars letters.

struct Rng {
    std::mt19937 engine;
    explicit Rng(std::uint32_t seed) : engine(seed) {}
    int below(int n) { return static_cast<int>(engine() % static_cast<std::uint32_t>(n)); }
    bool flip() { return (engine() & 1) != 0; }
};

inline std::vector<VarId> letter_vars(VarTable& table, int count) {
    std::vector<VarId> vars;
    for (int i = 0; i < count; ++i) {
        char c = static_cast<char>('a' + i);
        vars.push_back(table.intern(std::string_view(&c, 1)));
    }
    return vars;
}

inline Clause random_clause(Rng& rng, const std::vector<VarId>& vars, int max_len) {
    int len = 1 + rng.below(max_len);
    std::vector<VarId> pool = vars;
    std::vector<Literal> lits;
    for (int i = 0; i < len && !pool.empty(); ++i) {
        int pick = rng.below(static_cast<int>(pool.size()));
        lits.emplace_back(pool[static_cast<std::size_t>(pick)], rng.flip());
        pool.erase(pool.begin() + pick);
    }
    return Clause(std::move(lits));
}

inline Formula random_formula(Rng& rng, const std::vector<VarId>& vars, int max_clauses,
                              int max_len) {
    int count = 1 + rng.below(max_clauses);
    std::vector<Clause> clauses;
    for (int i = 0; i < count; ++i) clauses.push_back(random_clause(rng, vars, max_len));
    return Formula(std::move(clauses));
}

} // namespace support
