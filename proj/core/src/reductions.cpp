#include "cnfmin/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "cnfmin/errors.hpp"
#include "cnfmin/redundancy.hpp"
#include "cnfmin/sat.hpp"

namespace cnfmin {

std::string to_string(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::horn_conp: return "horn-conp";
        case ReductionKind::horn_np: return "horn-np";
        case ReductionKind::general_p2: return "general-p2";
        case ReductionKind::general_s2: return "general-s2";
    }
    return "unknown";
}

namespace {

std::vector<VarId> fresh_group(VarTable& table, const std::string& prefix, std::size_t n) {
    std::vector<VarId> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(table.fresh(prefix + std::to_string(i)));
    return out;
}

std::size_t index_in(const std::vector<VarId>& sorted, VarId v) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || *it != v) throw error("variable outside the expected group");
    return static_cast<std::size_t>(it - sorted.begin());
}

bool matrix_satisfied(const std::variant<Formula, std::vector<LiteralSet>>& matrix,
                      const Assignment& a) {
    if (std::holds_alternative<Formula>(matrix)) return a.satisfies(std::get<Formula>(matrix));
    for (const LiteralSet& term : std::get<std::vector<LiteralSet>>(matrix)) {
        bool all = true;
        for (Literal l : term)
            if (!a.satisfies(l)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

std::vector<VarId> matrix_variables(const std::variant<Formula, std::vector<LiteralSet>>& matrix) {
    std::vector<VarId> vars;
    if (std::holds_alternative<Formula>(matrix)) {
        vars = variables(std::get<Formula>(matrix));
    } else {
        for (const LiteralSet& term : std::get<std::vector<LiteralSet>>(matrix))
            for (Literal l : term) vars.push_back(l.var());
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    }
    return vars;
}

Assignment assignment_for(const std::vector<VarId>& vars, std::uint64_t mask) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a.set(vars[i], (mask >> i) & 1);
    return a;
}

Assignment merged(const Assignment& a, const Assignment& b) {
    Assignment out = a;
    for (const auto& [v, val] : b.values()) out.set(v, val);
    return out;
}

} // namespace

bool qbf_eval(const Qbf& q, std::size_t var_cap) {
    for (VarId v : q.universal)
        if (q.existential.count(v)) throw std::invalid_argument("QBF blocks share a variable");
    for (VarId v : matrix_variables(q.matrix))
        if (!q.universal.count(v) && !q.existential.count(v))
            throw std::invalid_argument("QBF matrix variable outside both blocks");

    std::vector<VarId> outer, inner;
    if (q.order == Qbf::Order::forall_exists) {
        outer.assign(q.universal.begin(), q.universal.end());
        inner.assign(q.existential.begin(), q.existential.end());
    } else {
        outer.assign(q.existential.begin(), q.existential.end());
        inner.assign(q.universal.begin(), q.universal.end());
    }
    if (outer.size() + inner.size() > var_cap)
        throw resource_limit_error("QBF expansion over " +
                                   std::to_string(outer.size() + inner.size()) +
                                   " variables exceeds the cap of " + std::to_string(var_cap));

    for (std::uint64_t om = 0; om < (std::uint64_t{1} << outer.size()); ++om) {
        Assignment oa = assignment_for(outer, om);
        bool all_inner = true;
        bool some_inner = false;
        for (std::uint64_t im = 0; im < (std::uint64_t{1} << inner.size()); ++im) {
            bool ok = matrix_satisfied(q.matrix, merged(oa, assignment_for(inner, im)));
            all_inner = all_inner && ok;
            some_inner = some_inner || ok;
            if (q.order == Qbf::Order::forall_exists && some_inner) break;
            if (q.order == Qbf::Order::exists_forall && !all_inner) break;
        }
        if (q.order == Qbf::Order::forall_exists && !some_inner) return false;
        if (q.order == Qbf::Order::exists_forall && all_inner) return true;
    }
    return q.order == Qbf::Order::forall_exists;
}

ReductionInstance build_horn_conp(const Formula& source, VarTable& table) {
    ReductionInstance inst;
    inst.kind = ReductionKind::horn_conp;
    inst.source = source;
    inst.source_answer = satisfiable(source).has_value();

    std::vector<VarId> x_vars = variables(source);
    std::size_t n = x_vars.size();
    std::size_t m = source.clause_count();
    std::vector<VarId> e_vars = fresh_group(table, "e", n);
    std::vector<VarId> t_vars = fresh_group(table, "t", n);
    std::vector<VarId> c_vars = fresh_group(table, "c", m);
    VarId a = table.fresh("a");
    VarId b = table.fresh("b");

    std::vector<Clause> exclusive, truth, clause_links;
    for (std::size_t i = 0; i < n; ++i) {
        exclusive.push_back(Clause({{x_vars[i], false}, {e_vars[i], false}}));
        truth.push_back(Clause({{x_vars[i], false}, {t_vars[i], true}}));
        truth.push_back(Clause({{e_vars[i], false}, {t_vars[i], true}}));
    }
    std::size_t j = 0;
    for (const Clause& fj : source) {
        for (Literal l : fj) {
            std::size_t i = index_in(x_vars, l.var());
            VarId lhs = l.positive() ? x_vars[i] : e_vars[i];
            clause_links.push_back(Clause({{lhs, false}, {c_vars[j], true}}));
        }
        ++j;
    }
    std::vector<Literal> long_lits;
    for (VarId t : t_vars) long_lits.emplace_back(t, false);
    for (VarId c : c_vars) long_lits.emplace_back(c, false);
    long_lits.emplace_back(a, false);
    long_lits.emplace_back(b, true);

    inst.families["exclusive"] = Formula(std::move(exclusive));
    inst.families["truth"] = Formula(std::move(truth));
    inst.families["clause"] = Formula(std::move(clause_links));
    inst.families["long"] = Formula({Clause(std::move(long_lits))});
    inst.families["last"] = Formula({Clause({{a, true}, {b, false}})});

    inst.formula = inst.families["exclusive"]
                       .united(inst.families["truth"])
                       .united(inst.families["clause"])
                       .united(inst.families["long"])
                       .united(inst.families["last"]);
    inst.keep.insert(x_vars.begin(), x_vars.end());
    inst.keep.insert(e_vars.begin(), e_vars.end());
    inst.keep.insert(a);
    inst.keep.insert(b);
    inst.bound_k = 2 * static_cast<int>(n) + 2;

    inst.var_groups["x"] = x_vars;
    inst.var_groups["e"] = e_vars;
    inst.var_groups["t"] = t_vars;
    inst.var_groups["c"] = c_vars;
    inst.var_groups["a"] = {a};
    inst.var_groups["b"] = {b};
    return inst;
}

ReductionInstance build_horn_np(const Formula& source, VarTable& table) {
    ReductionInstance inst;
    inst.kind = ReductionKind::horn_np;
    inst.source = source;
    inst.source_answer = satisfiable(source).has_value();

    std::vector<VarId> x_vars = variables(source);
    std::size_t n = x_vars.size();
    std::size_t m = source.clause_count();
    std::vector<VarId> o_vars = fresh_group(table, "o", n);
    std::vector<VarId> e_vars = fresh_group(table, "e", n);
    std::vector<VarId> p_vars = fresh_group(table, "p", n);
    std::vector<VarId> t_vars = fresh_group(table, "t", n);
    std::vector<VarId> c_vars = fresh_group(table, "c", m);
    std::vector<VarId> r_vars = fresh_group(table, "r", n);
    std::vector<VarId> s_vars = fresh_group(table, "s", n);
    VarId q = table.fresh("q");

    std::vector<Clause> defs, truth, clause_links, bridge;
    for (std::size_t i = 0; i < n; ++i) {
        defs.push_back(Clause({{x_vars[i], true}, {o_vars[i], false}}));
        defs.push_back(Clause({{o_vars[i], true}, {q, false}}));
        defs.push_back(Clause({{e_vars[i], true}, {p_vars[i], false}}));
        defs.push_back(Clause({{p_vars[i], true}, {q, false}}));
        truth.push_back(Clause({{x_vars[i], false}, {t_vars[i], true}}));
        truth.push_back(Clause({{e_vars[i], false}, {t_vars[i], true}}));
    }
    std::size_t j = 0;
    for (const Clause& fj : source) {
        for (Literal l : fj) {
            std::size_t i = index_in(x_vars, l.var());
            VarId lhs = l.positive() ? x_vars[i] : e_vars[i];
            clause_links.push_back(Clause({{lhs, false}, {c_vars[j], true}}));
        }
        ++j;
    }
    auto negated_ts_and_cs = [&]() {
        std::vector<Literal> lits;
        for (VarId t : t_vars) lits.emplace_back(t, false);
        for (VarId c : c_vars) lits.emplace_back(c, false);
        return lits;
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Literal> lx = negated_ts_and_cs();
        lx.emplace_back(x_vars[i], true);
        lx.emplace_back(r_vars[i], false);
        bridge.push_back(Clause(std::move(lx)));
        bridge.push_back(Clause({{r_vars[i], true}, {q, false}}));
        std::vector<Literal> le = negated_ts_and_cs();
        le.emplace_back(e_vars[i], true);
        le.emplace_back(s_vars[i], false);
        bridge.push_back(Clause(std::move(le)));
        bridge.push_back(Clause({{s_vars[i], true}, {q, false}}));
    }

    inst.families["defs"] = Formula(std::move(defs));
    inst.families["truth"] = Formula(std::move(truth));
    inst.families["clause"] = Formula(std::move(clause_links));
    inst.families["bridge"] = Formula(std::move(bridge));

    inst.formula = inst.families["defs"]
                       .united(inst.families["truth"])
                       .united(inst.families["clause"])
                       .united(inst.families["bridge"]);
    inst.keep.insert(x_vars.begin(), x_vars.end());
    inst.keep.insert(e_vars.begin(), e_vars.end());
    inst.keep.insert(t_vars.begin(), t_vars.end());
    inst.keep.insert(c_vars.begin(), c_vars.end());
    inst.keep.insert(r_vars.begin(), r_vars.end());
    inst.keep.insert(s_vars.begin(), s_vars.end());
    inst.keep.insert(q);
    inst.bound_k = 2 * static_cast<int>(n) + size(inst.families["truth"]) +
                   size(inst.families["clause"]) + size(inst.families["bridge"]);

    inst.var_groups["x"] = x_vars;
    inst.var_groups["o"] = o_vars;
    inst.var_groups["e"] = e_vars;
    inst.var_groups["p"] = p_vars;
    inst.var_groups["t"] = t_vars;
    inst.var_groups["c"] = c_vars;
    inst.var_groups["r"] = r_vars;
    inst.var_groups["s"] = s_vars;
    inst.var_groups["q"] = {q};
    return inst;
}

ReductionInstance build_general_p2(const Qbf& q, VarTable& table) {
    if (q.order != Qbf::Order::forall_exists)
        throw std::invalid_argument("general-p2 needs a forall-exists QBF");
    if (!std::holds_alternative<Formula>(q.matrix))
        throw std::invalid_argument("general-p2 needs a CNF matrix");

    ReductionInstance inst;
    inst.kind = ReductionKind::general_p2;
    inst.source = q;
    inst.source_answer = qbf_eval(q);

    Formula matrix = std::get<Formula>(q.matrix);
    std::vector<VarId> x_vars(q.universal.begin(), q.universal.end());

    // An unsatisfiable matrix is guarded by a fresh universal variable
    // disjoined into every clause; validity is unchanged.
    if (!satisfiable(matrix).has_value()) {
        VarId s = table.fresh("s");
        std::vector<Clause> guarded;
        for (const Clause& c : matrix) guarded.push_back(c.with(Literal(s, true)));
        matrix = Formula(std::move(guarded));
        x_vars.push_back(s);
        std::sort(x_vars.begin(), x_vars.end());
    }

    std::size_t n = x_vars.size();
    std::vector<VarId> e_vars = fresh_group(table, "e", n);
    std::vector<VarId> c_vars = fresh_group(table, "c", matrix.clause_count());
    VarId a = table.fresh("a");
    VarId b = table.fresh("b");
    VarId qv = table.fresh("q");
    VarId r = table.fresh("r");

    std::vector<Clause> guarded_matrix, relay, pairs;
    std::size_t j = 0;
    for (const Clause& fj : matrix) {
        guarded_matrix.push_back(fj.with({c_vars[j], true}).with({qv, true}));
        relay.push_back(Clause({{c_vars[j], false}, {r, true}}));
        ++j;
    }
    for (std::size_t i = 0; i < n; ++i)
        pairs.push_back(Clause({{x_vars[i], true}, {e_vars[i], true}}));

    inst.families["matrix"] = Formula(std::move(guarded_matrix));
    inst.families["relay"] = Formula(std::move(relay));
    inst.families["long"] =
        Formula({Clause({{r, false}, {a, false}, {b, true}, {qv, true}})});
    inst.families["last"] = Formula({Clause({{a, true}, {b, false}, {qv, true}})});
    inst.families["pairs"] = Formula(std::move(pairs));

    inst.formula = inst.families["matrix"]
                       .united(inst.families["relay"])
                       .united(inst.families["long"])
                       .united(inst.families["last"])
                       .united(inst.families["pairs"]);
    inst.keep.insert(x_vars.begin(), x_vars.end());
    inst.keep.insert(e_vars.begin(), e_vars.end());
    inst.keep.insert(a);
    inst.keep.insert(b);
    inst.keep.insert(qv);
    inst.bound_k = 2 * static_cast<int>(n) + 3;

    inst.var_groups["x"] = x_vars;
    inst.var_groups["e"] = e_vars;
    inst.var_groups["c"] = c_vars;
    inst.var_groups["a"] = {a};
    inst.var_groups["b"] = {b};
    inst.var_groups["q"] = {qv};
    inst.var_groups["r"] = {r};
    return inst;
}

ReductionInstance build_general_s2(const Qbf& q, VarTable& table) {
    if (q.order != Qbf::Order::exists_forall)
        throw std::invalid_argument("general-s2 needs an exists-forall QBF");
    if (!std::holds_alternative<std::vector<LiteralSet>>(q.matrix))
        throw std::invalid_argument("general-s2 needs a DNF matrix");

    ReductionInstance inst;
    inst.kind = ReductionKind::general_s2;
    inst.source = q;
    inst.source_answer = qbf_eval(q);

    const auto& terms = std::get<std::vector<LiteralSet>>(q.matrix);
    std::vector<VarId> x_vars(q.existential.begin(), q.existential.end());
    std::vector<VarId> y_vars(q.universal.begin(), q.universal.end());
    std::size_t n = x_vars.size();
    std::size_t m = terms.size();

    std::vector<VarId> o_vars = fresh_group(table, "o", n);
    std::vector<VarId> e_vars = fresh_group(table, "e", n);
    std::vector<VarId> p_vars = fresh_group(table, "p", n);
    std::vector<VarId> t_vars = fresh_group(table, "t", n);
    std::vector<VarId> d_vars = fresh_group(table, "d", m);
    std::vector<VarId> r_vars = fresh_group(table, "r", n);
    std::vector<VarId> s_vars = fresh_group(table, "s", n);
    VarId qv = table.fresh("q");

    std::vector<Clause> defs, truth, term_clauses, bridge;
    for (std::size_t i = 0; i < n; ++i) {
        defs.push_back(Clause({{x_vars[i], true}, {o_vars[i], false}}));
        defs.push_back(Clause({{o_vars[i], true}, {qv, true}}));
        defs.push_back(Clause({{e_vars[i], true}, {p_vars[i], false}}));
        defs.push_back(Clause({{p_vars[i], true}, {qv, true}}));
        truth.push_back(Clause({{x_vars[i], false}, {t_vars[i], true}}));
        truth.push_back(Clause({{e_vars[i], false}, {t_vars[i], true}}));
    }
    // Negation of each term, with negative existential literals first renamed
    // to their paired fresh variables, plus the term's indicator.
    for (std::size_t jj = 0; jj < m; ++jj) {
        std::vector<Literal> lits;
        for (Literal l : terms[jj]) {
            if (q.existential.count(l.var())) {
                std::size_t i = index_in(x_vars, l.var());
                lits.emplace_back(l.positive() ? x_vars[i] : e_vars[i], false);
            } else {
                lits.push_back(l.negated());
            }
        }
        lits.emplace_back(d_vars[jj], true);
        term_clauses.push_back(Clause(std::move(lits)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t jj = 0; jj < m; ++jj) {
            std::vector<Literal> lx;
            for (VarId t : t_vars) lx.emplace_back(t, false);
            lx.emplace_back(d_vars[jj], false);
            lx.emplace_back(x_vars[i], true);
            lx.emplace_back(r_vars[i], false);
            bridge.push_back(Clause(std::move(lx)));
            std::vector<Literal> le;
            for (VarId t : t_vars) le.emplace_back(t, false);
            le.emplace_back(d_vars[jj], false);
            le.emplace_back(e_vars[i], true);
            le.emplace_back(s_vars[i], false);
            bridge.push_back(Clause(std::move(le)));
        }
        bridge.push_back(Clause({{r_vars[i], true}, {qv, true}}));
        bridge.push_back(Clause({{s_vars[i], true}, {qv, true}}));
    }

    inst.families["defs"] = Formula(std::move(defs));
    inst.families["truth"] = Formula(std::move(truth));
    inst.families["terms"] = Formula(std::move(term_clauses));
    inst.families["bridge"] = Formula(std::move(bridge));

    inst.formula = inst.families["defs"]
                       .united(inst.families["truth"])
                       .united(inst.families["terms"])
                       .united(inst.families["bridge"]);
    inst.keep.insert(x_vars.begin(), x_vars.end());
    inst.keep.insert(e_vars.begin(), e_vars.end());
    inst.keep.insert(y_vars.begin(), y_vars.end());
    inst.keep.insert(t_vars.begin(), t_vars.end());
    inst.keep.insert(d_vars.begin(), d_vars.end());
    inst.keep.insert(r_vars.begin(), r_vars.end());
    inst.keep.insert(s_vars.begin(), s_vars.end());
    inst.keep.insert(qv);
    inst.bound_k =
        2 * static_cast<int>(n) +
        size(inst.families["truth"].united(inst.families["terms"]).united(inst.families["bridge"]));

    inst.var_groups["x"] = x_vars;
    inst.var_groups["y"] = y_vars;
    inst.var_groups["o"] = o_vars;
    inst.var_groups["e"] = e_vars;
    inst.var_groups["p"] = p_vars;
    inst.var_groups["t"] = t_vars;
    inst.var_groups["d"] = d_vars;
    inst.var_groups["r"] = r_vars;
    inst.var_groups["s"] = s_vars;
    inst.var_groups["q"] = {qv};
    return inst;
}

bool easy_branch_answer(ReductionKind kind) {
    return kind != ReductionKind::horn_conp;
}

namespace {

const Formula& family(const ReductionInstance& inst, const std::string& name) {
    static const Formula empty;
    auto it = inst.families.find(name);
    return it == inst.families.end() ? empty : it->second;
}

const std::vector<VarId>& group(const ReductionInstance& inst, const std::string& name) {
    static const std::vector<VarId> empty;
    auto it = inst.var_groups.find(name);
    return it == inst.var_groups.end() ? empty : it->second;
}

// Selection clauses x_i or e_i joined with the q literal, following a model
// over the x group.
Formula selection_clauses(const ReductionInstance& inst, const Assignment& model,
                          bool q_positive) {
    const auto& xs = group(inst, "x");
    const auto& es = group(inst, "e");
    VarId q = group(inst, "q").at(0);
    std::vector<Clause> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        bool xv = model.value(xs[i]).value_or(false);
        VarId chosen = xv ? xs[i] : es[i];
        out.push_back(Clause({{chosen, true}, {q, q_positive}}));
    }
    return Formula(std::move(out));
}

std::optional<Assignment> s2_witness_model(const Qbf& q) {
    std::vector<VarId> xs(q.existential.begin(), q.existential.end());
    std::vector<VarId> ys(q.universal.begin(), q.universal.end());
    for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << xs.size()); ++xm) {
        Assignment xa = assignment_for(xs, xm);
        bool all = true;
        for (std::uint64_t ym = 0; ym < (std::uint64_t{1} << ys.size()); ++ym)
            if (!matrix_satisfied(q.matrix, merged(xa, assignment_for(ys, ym)))) {
                all = false;
                break;
            }
        if (all) return xa;
    }
    return std::nullopt;
}

} // namespace

Formula easy_branch_candidate(const ReductionInstance& inst) {
    if (inst.source_answer != easy_branch_answer(inst.kind))
        throw std::invalid_argument("source answer is on the expensive side");

    switch (inst.kind) {
        case ReductionKind::horn_conp:
            return family(inst, "exclusive").united(family(inst, "last"));
        case ReductionKind::horn_np: {
            auto model = satisfiable(std::get<Formula>(inst.source));
            return selection_clauses(inst, *model, false)
                .united(family(inst, "truth"))
                .united(family(inst, "clause"))
                .united(family(inst, "bridge"));
        }
        case ReductionKind::general_p2:
            return family(inst, "last").united(family(inst, "pairs"));
        case ReductionKind::general_s2: {
            auto model = s2_witness_model(std::get<Qbf>(inst.source));
            return selection_clauses(inst, *model, true)
                .united(family(inst, "truth"))
                .united(family(inst, "terms"))
                .united(family(inst, "bridge"));
        }
    }
    throw error("unreachable");
}

namespace {

std::vector<Literal> forced_literals(const ReductionInstance& inst) {
    std::vector<Literal> out;
    const auto& xs = group(inst, "x");
    const auto& es = group(inst, "e");
    if (inst.kind == ReductionKind::horn_conp) {
        for (VarId x : xs) out.emplace_back(x, false);
        for (VarId e : es) out.emplace_back(e, false);
        out.emplace_back(group(inst, "a").at(0), true);
        out.emplace_back(group(inst, "b").at(0), false);
        if (inst.source_answer) {
            out.emplace_back(group(inst, "a").at(0), false);
            out.emplace_back(group(inst, "b").at(0), true);
        }
    } else if (inst.kind == ReductionKind::general_p2) {
        for (VarId x : xs) out.emplace_back(x, true);
        for (VarId e : es) out.emplace_back(e, true);
        out.emplace_back(group(inst, "a").at(0), true);
        out.emplace_back(group(inst, "b").at(0), false);
        out.emplace_back(group(inst, "q").at(0), true);
        if (!inst.source_answer) {
            out.emplace_back(group(inst, "a").at(0), false);
            out.emplace_back(group(inst, "b").at(0), true);
        }
    }
    return out;
}

} // namespace

VerifyReport verify_reduction(const ReductionInstance& inst, const VerifyOptions& options) {
    VerifyReport report;
    ForgetSpec spec{inst.formula, inst.keep};

    {
        CheckResult check{"horn-form"};
        if (inst.kind == ReductionKind::horn_conp || inst.kind == ReductionKind::horn_np) {
            check.pass = is_horn(inst.formula);
            if (!check.pass) check.detail = "generated formula is not Horn";
        } else {
            check.skipped = true;
        }
        report.checks.push_back(std::move(check));
    }

    {
        CheckResult check{"minimality"};
        Formula irr = superirredundant_clauses(inst.formula, options.minimize.closure);
        check.pass = irr == inst.formula;
        if (!check.pass) check.detail = "some clause of the generated formula is superredundant";
        report.checks.push_back(std::move(check));
    }

    {
        CheckResult check{"easy-candidate"};
        if (inst.source_answer == easy_branch_answer(inst.kind)) {
            Formula candidate = easy_branch_candidate(inst);
            bool sized = size(candidate) == inst.bound_k;
            bool expresses = expresses_forgetting(candidate, spec, options.forget);
            check.pass = sized && expresses;
            if (!sized)
                check.detail = "candidate size " + std::to_string(size(candidate)) +
                               " differs from k=" + std::to_string(inst.bound_k);
            else if (!expresses)
                check.detail = "candidate does not express the forgetting";
        } else {
            check.skipped = true;
        }
        report.checks.push_back(std::move(check));
    }

    {
        CheckResult check{"necessary-literals"};
        std::vector<Literal> expected = forced_literals(inst);
        if (expected.empty()) {
            check.skipped = true;
        } else {
            auto reports = necessary_literals(spec, options.forget);
            check.pass = true;
            for (Literal l : expected) {
                bool found = false;
                for (const auto& r : reports)
                    if (r.literal == l) {
                        found = true;
                        break;
                    }
                if (!found) {
                    check.pass = false;
                    check.detail = "a forced literal is not reported necessary";
                    break;
                }
            }
        }
        report.checks.push_back(std::move(check));
    }

    {
        CheckResult check{"hard-branch"};
        if (!options.hard_branch) {
            check.skipped = true;
        } else {
            bool strict_gap = inst.kind == ReductionKind::horn_conp ||
                              inst.kind == ReductionKind::general_p2;
            int budget = inst.bound_k + (strict_gap ? 1 : 0);
            auto result = min_forget_size_within(spec, budget, options.minimize);
            if (inst.source_answer == easy_branch_answer(inst.kind)) {
                check.pass = result.has_value() && result->size == inst.bound_k;
                if (!check.pass)
                    check.detail = "expected minimum size k=" + std::to_string(inst.bound_k);
            } else {
                check.pass = !result.has_value();
                if (!check.pass)
                    check.detail = "found size " + std::to_string(result->size) +
                                   " within budget " + std::to_string(budget);
            }
        }
        report.checks.push_back(std::move(check));
    }

    return report;
}

} // namespace cnfmin
