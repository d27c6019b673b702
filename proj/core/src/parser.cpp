#include "cnfmin/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace cnfmin {

namespace {

bool is_letter(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

// Positions are 1-based within the token; `base` offsets into the line.
std::vector<Literal> parse_literal_string(std::string_view s, VarTable& table, int line,
                                          int base) {
    std::vector<Literal> lits;
    std::size_t i = 0;
    while (i < s.size()) {
        bool positive = true;
        if (s[i] == '-') {
            positive = false;
            ++i;
            if (i >= s.size())
                throw parse_error("'-' must be followed by a variable letter", line,
                                  base + static_cast<int>(i));
        }
        if (!is_letter(s[i]))
            throw parse_error(std::string("unexpected character '") + s[i] + "'", line,
                              base + static_cast<int>(i) + 1);
        lits.emplace_back(table.intern(s.substr(i, 1)), positive);
        ++i;
    }
    if (lits.empty()) throw parse_error("empty literal string", line, base + 1);
    return lits;
}

Formula parse_token_at(std::string_view token, VarTable& table, int line, int base) {
    if (token.empty()) throw parse_error("empty clause token", line, base + 1);

    if (auto arrow = token.find("->"); arrow != std::string_view::npos) {
        auto lhs = parse_literal_string(token.substr(0, arrow), table, line, base);
        auto rhs = parse_literal_string(token.substr(arrow + 2), table, line,
                                        base + static_cast<int>(arrow) + 2);
        std::vector<Literal> lits;
        for (Literal l : lhs) lits.push_back(l.negated());
        lits.insert(lits.end(), rhs.begin(), rhs.end());
        return Formula({Clause(std::move(lits))});
    }

    if (auto eq = token.find('='); eq != std::string_view::npos) {
        auto lhs = parse_literal_string(token.substr(0, eq), table, line, base);
        if (lhs.size() != 1)
            throw parse_error("left side of '=' must be a single literal", line, base + 1);
        auto rhs = parse_literal_string(token.substr(eq + 1), table, line,
                                        base + static_cast<int>(eq) + 1);
        Literal l = lhs.front();
        std::vector<Clause> clauses;
        for (Literal r : rhs) clauses.push_back(Clause({l.negated(), r}));
        std::vector<Literal> back;
        for (Literal r : rhs) back.push_back(r.negated());
        back.push_back(l);
        clauses.push_back(Clause(std::move(back)));
        return Formula(std::move(clauses));
    }

    return Formula({Clause(parse_literal_string(token, table, line, base))});
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string word;
    while (in >> word) out.push_back(word);
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::set<VarId> parse_var_letters(std::string_view value, VarTable& table, int line) {
    std::set<VarId> vars;
    for (const std::string& word : split_ws(value))
        for (char c : word) {
            if (!is_letter(c))
                throw parse_error(std::string("bad variable name '") + c + "'", line);
            vars.insert(table.intern(std::string_view(&c, 1)));
        }
    if (vars.empty()) throw parse_error("empty variable list", line);
    return vars;
}

} // namespace

Formula parse_clause_token(std::string_view token, VarTable& table) {
    return parse_token_at(token, table, 0, 0);
}

Formula parse_tokens(const std::vector<std::string>& tokens, VarTable& table) {
    Formula f;
    for (const std::string& token : tokens) f = f.united(parse_clause_token(token, table));
    return f;
}

std::string print_literal(Literal l, const VarTable& table) {
    std::string s;
    if (!l.positive()) s += '-';
    s += table.name(l.var());
    return s;
}

namespace {

struct NameOrder {
    const VarTable* table;
    // display name, then positive before negative
    bool operator()(Literal a, Literal b) const {
        const std::string& na = table->name(a.var());
        const std::string& nb = table->name(b.var());
        if (na != nb) return na < nb;
        return a.positive() && !b.positive();
    }
};

bool single_letter_names(const Formula& f, const VarTable& table) {
    for (VarId v : variables(f))
        if (table.name(v).size() != 1) return false;
    return true;
}

std::string print_clause_sorted(const Clause& c, const VarTable& table, bool compact) {
    if (c.empty()) return "()";
    std::vector<Literal> lits(c.begin(), c.end());
    std::sort(lits.begin(), lits.end(), NameOrder{&table});
    std::string s;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (!compact && i > 0) s += '|';
        s += print_literal(lits[i], table);
    }
    return s;
}

} // namespace

std::string print_clause(const Clause& c, const VarTable& table) {
    bool compact = true;
    for (VarId v : variables(c))
        if (table.name(v).size() != 1) compact = false;
    return print_clause_sorted(c, table, compact);
}

std::string print_formula(const Formula& f, const VarTable& table) {
    bool compact = single_letter_names(f, table);
    std::vector<std::string> parts;
    parts.reserve(f.clause_count());
    for (const Clause& c : f) parts.push_back(print_clause_sorted(c, table, compact));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ' ';
        out += parts[i];
    }
    return out;
}

ProblemFile parse_problem(std::istream& in, VarTable& table) {
    ProblemFile pf;
    bool have_formula = false;
    std::vector<Formula> minimal_lines;
    std::vector<Formula> forget_minimal_lines;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected 'key: value'", line_no);
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));

        auto parse_formula_value = [&]() {
            Formula f;
            for (const std::string& token : split_ws(value))
                f = f.united(parse_token_at(token, table, line_no, 0));
            return f;
        };
        auto set_once = [&](auto& slot, auto parsed) {
            if (slot.has_value()) throw parse_error("duplicate key '" + key + "'", line_no);
            slot = std::move(parsed);
        };

        if (key == "formula") {
            pf.formula = pf.formula.united(parse_formula_value());
            have_formula = true;
        } else if (key == "forget") {
            if (pf.keep_vars) throw parse_error("both keep and forget given", line_no);
            auto vars = parse_var_letters(value, table, line_no);
            if (!pf.forget_vars) pf.forget_vars.emplace();
            pf.forget_vars->insert(vars.begin(), vars.end());
        } else if (key == "keep") {
            if (pf.forget_vars) throw parse_error("both keep and forget given", line_no);
            auto vars = parse_var_letters(value, table, line_no);
            if (!pf.keep_vars) pf.keep_vars.emplace();
            pf.keep_vars->insert(vars.begin(), vars.end());
        } else if (key == "minimal") {
            if (value == "yes") pf.want_minimal = true;
            else if (value == "no") pf.want_minimal = false;
            else throw parse_error("minimal must be yes or no", line_no);
        } else if (key == "expect-closure") {
            set_once(pf.expect.closure, parse_formula_value());
        } else if (key == "expect-prime") {
            set_once(pf.expect.prime, parse_formula_value());
        } else if (key == "expect-redundant") {
            set_once(pf.expect.redundant, parse_formula_value());
        } else if (key == "expect-superredundant") {
            set_once(pf.expect.superredundant, parse_formula_value());
        } else if (key == "expect-minimal") {
            minimal_lines.push_back(parse_formula_value());
        } else if (key == "expect-forget") {
            set_once(pf.expect.forget, parse_formula_value());
        } else if (key == "expect-forget-minimal") {
            forget_minimal_lines.push_back(parse_formula_value());
        } else if (key == "expect-min-forget-size") {
            try {
                set_once(pf.expect.min_forget_size, std::stoi(value));
            } catch (const std::invalid_argument&) {
                throw parse_error("expect-min-forget-size must be an integer", line_no);
            } catch (const std::out_of_range&) {
                throw parse_error("expect-min-forget-size out of range", line_no);
            }
        } else {
            throw parse_error("unknown key '" + key + "'", line_no);
        }
    }

    if (!have_formula) throw parse_error("missing mandatory 'formula:' line");
    if (!minimal_lines.empty()) pf.expect.minimal = std::move(minimal_lines);
    if (!forget_minimal_lines.empty()) pf.expect.forget_minimal = std::move(forget_minimal_lines);
    return pf;
}

ProblemFile load_problem(const std::filesystem::path& path, VarTable& table) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path.string());
    return parse_problem(in, table);
}

} // namespace cnfmin
