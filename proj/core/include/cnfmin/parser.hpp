#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cnfmin/cnf.hpp"

namespace cnfmin {

/// Declared expected outputs of a problem file.
struct Expectations {
    std::optional<Formula> closure;
    std::optional<Formula> prime;
    std::optional<Formula> redundant;
    std::optional<Formula> superredundant;
    std::optional<std::vector<Formula>> minimal;        // one formula per line
    std::optional<Formula> forget;
    std::optional<std::vector<Formula>> forget_minimal; // one formula per line
    std::optional<int> min_forget_size;

    bool any() const {
        return closure || prime || redundant || superredundant || minimal ||
               forget || forget_minimal || min_forget_size;
    }
};

struct ProblemFile {
    Formula formula;
    std::optional<std::set<VarId>> keep_vars;
    std::optional<std::set<VarId>> forget_vars;
    bool want_minimal = false;
    Expectations expect;
};

/// Parses one clause token. Grammar:
///   token   := lhs "->" rhs | lit "=" rhs | string
///   string  := lit+
///   lit     := "-"? letter
/// "->" yields one clause (lhs literals negated, rhs kept). "=" expands the
/// bi-implication of a single literal with the conjunction of rhs.
/// Plain strings are one clause. May yield several clauses.
Formula parse_clause_token(std::string_view token, VarTable& table);

/// Whitespace-separated clause tokens.
Formula parse_tokens(const std::vector<std::string>& tokens, VarTable& table);

std::string print_literal(Literal l, const VarTable& table);

/// Compact form ("ad", "-cd") when every variable name is a single character,
/// otherwise '|'-separated literals. The empty clause prints as "()".
std::string print_clause(const Clause& c, const VarTable& table);

/// Clauses space-separated, each in canonical (display-name) order, clauses
/// ordered by their literal sequences. parse(print(f)) == f for formulas of
/// nonempty clauses over single-letter names.
std::string print_formula(const Formula& f, const VarTable& table);

/// Problem file: UTF-8 text, one "key: value" per line, '#' starts a comment.
/// Keys: formula, forget, keep, minimal, expect-closure, expect-prime,
/// expect-redundant, expect-superredundant, expect-minimal (repeatable),
/// expect-forget, expect-forget-minimal (repeatable), expect-min-forget-size.
ProblemFile load_problem(const std::filesystem::path& path, VarTable& table);
ProblemFile parse_problem(std::istream& in, VarTable& table);

} // namespace cnfmin
