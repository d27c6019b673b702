#include "cnfmin/driver.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>

#include "cnfmin/errors.hpp"
#include "cnfmin/minimize.hpp"
#include "cnfmin/parser.hpp"
#include "cnfmin/redundancy.hpp"
#include "cnfmin/sat.hpp"

namespace cnfmin {

namespace {

struct Reporter {
    std::ostream& out;
    bool machine;

    void line(const std::string& section, const std::string& payload) {
        out << section << (machine ? "\t" : ": ") << payload << '\n';
    }
};

std::set<VarId> letters_to_vars(const std::string& names, VarTable& table) {
    std::set<VarId> vars;
    for (char c : names) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw parse_error(std::string("bad variable name '") + c + "'");
        vars.insert(table.intern(std::string_view(&c, 1)));
    }
    if (vars.empty()) throw parse_error("empty variable list");
    return vars;
}

void format_witnesses(const std::vector<Formula>& witnesses, const VarTable& table,
                      std::vector<std::string>& lines) {
    lines.clear();
    for (const Formula& w : witnesses) lines.push_back(print_formula(w, table));
    std::sort(lines.begin(), lines.end());
}

int classify(const std::exception& e, const std::string& stage, std::ostream& err) {
    err << "error in " << stage << ": " << e.what() << '\n';
    if (dynamic_cast<const resource_limit_error*>(&e)) return exit_code::resource;
    if (dynamic_cast<const parse_error*>(&e) || dynamic_cast<const io_error*>(&e) ||
        dynamic_cast<const tautology_error*>(&e) ||
        dynamic_cast<const inconsistent_literals*>(&e) ||
        dynamic_cast<const std::invalid_argument*>(&e))
        return exit_code::parse;
    return exit_code::failure;
}

} // namespace

std::optional<ReductionKind> reduction_kind_from(const std::string& name) {
    std::string n = name;
    std::replace(n.begin(), n.end(), '_', '-');
    if (n == "horn-conp") return ReductionKind::horn_conp;
    if (n == "horn-np") return ReductionKind::horn_np;
    if (n == "general-p2") return ReductionKind::general_p2;
    if (n == "general-s2") return ReductionKind::general_s2;
    return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.reduction) return run_reduction(config, out, err);

    VarTable table;
    Reporter report{out, config.machine};
    std::string stage = "input";
    try {
        ProblemFile problem;
        if (config.problem_path) {
            problem = load_problem(*config.problem_path, table);
        } else {
            problem.formula = parse_tokens(config.tokens, table);
        }
        if (config.minimal) problem.want_minimal = true;
        if (config.forget_names) {
            if (problem.keep_vars) throw parse_error("both keep and forget given");
            auto vars = letters_to_vars(*config.forget_names, table);
            if (!problem.forget_vars) problem.forget_vars.emplace();
            problem.forget_vars->insert(vars.begin(), vars.end());
        }
        if (config.keep_names) {
            if (problem.forget_vars) throw parse_error("both keep and forget given");
            auto vars = letters_to_vars(*config.keep_names, table);
            if (!problem.keep_vars) problem.keep_vars.emplace();
            problem.keep_vars->insert(vars.begin(), vars.end());
        }

        const Formula& f = problem.formula;
        ClosureOptions closure_options{config.cap_closure};
        MinimizeOptions minimize_options;
        minimize_options.closure = closure_options;

        std::vector<std::pair<std::string, std::string>> mismatches;
        auto expect_formula = [&](const std::string& name,
                                  const std::optional<Formula>& expected, const Formula& got) {
            if (expected && *expected != got)
                mismatches.emplace_back(name, print_formula(got, table));
        };

        stage = "closure";
        ClosureResult cr = resolution_closure(f, closure_options);
        report.line("closure", print_formula(cr.closure, table));
        report.line("prime", print_formula(cr.prime, table));
        expect_formula("closure", problem.expect.closure, cr.closure);
        expect_formula("prime", problem.expect.prime, cr.prime);

        stage = "redundancy";
        std::vector<Clause> redundant, superredundant;
        for (const Clause& c : f) {
            if (is_redundant(f, c)) redundant.push_back(c);
            if (is_superredundant(f, c, Method::first_step, closure_options).superredundant)
                superredundant.push_back(c);
        }
        Formula redundant_f{std::move(redundant)}, superredundant_f{std::move(superredundant)};
        report.line("redundant", print_formula(redundant_f, table));
        report.line("superredundant", print_formula(superredundant_f, table));
        expect_formula("redundant", problem.expect.redundant, redundant_f);
        expect_formula("superredundant", problem.expect.superredundant, superredundant_f);

        std::vector<std::string> lines;
        if (problem.want_minimal) {
            stage = "minimization";
            MinimizationResult mr = minimize(f, minimize_options);
            format_witnesses(mr.witnesses, table, lines);
            for (const std::string& w : lines) report.line("minimal", w);
            if (problem.expect.minimal) {
                std::vector<std::string> expected;
                for (const Formula& w : *problem.expect.minimal)
                    expected.push_back(print_formula(w, table));
                std::sort(expected.begin(), expected.end());
                if (expected != lines) mismatches.emplace_back("minimal", "witness set differs");
            }
        }

        if (problem.forget_vars || problem.keep_vars) {
            stage = "forgetting";
            std::set<VarId> keep;
            if (problem.keep_vars) {
                keep = *problem.keep_vars;
            } else {
                for (VarId v : variables(f))
                    if (!problem.forget_vars->count(v)) keep.insert(v);
            }
            ForgetSpec spec{f, keep};
            Formula forgotten = forget_by_prime_implicates(spec, closure_options);
            report.line("forget", print_formula(forgotten, table));
            expect_formula("forget", problem.expect.forget, forgotten);

            MinimizationResult mr = minimize(forgotten, minimize_options);
            format_witnesses(mr.witnesses, table, lines);
            for (const std::string& w : lines) report.line("forget-minimal", w);
            report.line("min-forget-size", std::to_string(mr.min_size));
            if (problem.expect.forget_minimal) {
                std::vector<std::string> expected;
                for (const Formula& w : *problem.expect.forget_minimal)
                    expected.push_back(print_formula(w, table));
                std::sort(expected.begin(), expected.end());
                if (expected != lines)
                    mismatches.emplace_back("forget-minimal", "witness set differs");
            }
            if (problem.expect.min_forget_size &&
                *problem.expect.min_forget_size != mr.min_size)
                mismatches.emplace_back("min-forget-size", std::to_string(mr.min_size));
            if (config.bound)
                report.line("within-bound", mr.min_size <= *config.bound ? "yes" : "no");
        } else if (config.bound) {
            throw parse_error("-bound needs -forget or -keep");
        }

        if (!mismatches.empty()) {
            for (const auto& [name, got] : mismatches)
                err << "expectation mismatch in " << name << ": got " << got << '\n';
            return exit_code::mismatch;
        }
        return exit_code::ok;
    } catch (const std::exception& e) {
        return classify(e, stage, err);
    }
}

int run_reduction(const RunConfig& config, std::ostream& out, std::ostream& err) {
    VarTable table;
    Reporter report{out, config.machine};
    std::string stage = "reduction input";
    try {
        ReductionKind kind = *config.reduction;
        ReductionInstance inst;

        if (kind == ReductionKind::horn_conp || kind == ReductionKind::horn_np) {
            Formula source = parse_tokens(config.tokens, table);
            stage = "reduction build";
            inst = kind == ReductionKind::horn_conp ? build_horn_conp(source, table)
                                                    : build_horn_np(source, table);
        } else {
            if (config.tokens.size() < 2)
                throw parse_error("expected outer-block and inner-block tokens before the matrix");
            auto block = [&](const std::string& token) {
                std::set<VarId> vars;
                if (token == ".") return vars;
                return letters_to_vars(token, table);
            };
            std::set<VarId> outer = block(config.tokens[0]);
            std::set<VarId> inner = block(config.tokens[1]);
            std::vector<std::string> matrix_tokens(config.tokens.begin() + 2,
                                                   config.tokens.end());
            Qbf qbf;
            if (kind == ReductionKind::general_p2) {
                qbf.order = Qbf::Order::forall_exists;
                qbf.universal = std::move(outer);
                qbf.existential = std::move(inner);
                qbf.matrix = parse_tokens(matrix_tokens, table);
            } else {
                qbf.order = Qbf::Order::exists_forall;
                qbf.existential = std::move(outer);
                qbf.universal = std::move(inner);
                std::vector<LiteralSet> terms;
                for (const std::string& token : matrix_tokens) {
                    if (token.find('=') != std::string::npos ||
                        token.find("->") != std::string::npos)
                        throw parse_error("a DNF term must be a plain literal string");
                    Formula term = parse_clause_token(token, table);
                    const Clause& c = *term.begin();
                    terms.push_back(LiteralSet({c.begin(), c.end()}));
                }
                qbf.matrix = std::move(terms);
            }
            stage = "reduction build";
            inst = kind == ReductionKind::general_p2 ? build_general_p2(qbf, table)
                                                     : build_general_s2(qbf, table);
        }

        report.line("kind", to_string(inst.kind));
        report.line("k", std::to_string(inst.bound_k));
        std::string keep_names;
        for (VarId v : inst.keep) {
            if (!keep_names.empty()) keep_names += ' ';
            keep_names += table.name(v);
        }
        report.line("keep", keep_names);
        if (inst.kind == ReductionKind::horn_conp || inst.kind == ReductionKind::horn_np)
            report.line("source-answer", inst.source_answer ? "sat" : "unsat");
        else
            report.line("source-answer", inst.source_answer ? "valid" : "invalid");
        report.line("formula", print_formula(inst.formula, table));

        if (config.verify) {
            stage = "verification";
            VerifyOptions options;
            options.hard_branch = true;
            options.minimize.closure.max_clauses = config.cap_closure;
            options.forget.max_enumeration = config.cap_enum;
            VerifyReport verdict = verify_reduction(inst, options);
            for (const CheckResult& check : verdict.checks) {
                std::string status = check.skipped ? "skipped" : (check.pass ? "pass" : "fail");
                report.line("verify-" + check.name,
                            check.detail.empty() ? status : status + " " + check.detail);
            }
            if (!verdict.all_passed()) {
                err << "verification failed\n";
                return exit_code::mismatch;
            }
        }
        return exit_code::ok;
    } catch (const std::exception& e) {
        return classify(e, stage, err);
    }
}

} // namespace cnfmin
