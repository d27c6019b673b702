#include "doctest.h"

#include "cnfmin/forgetting.hpp"
#include "cnfmin/sat.hpp"
#include "support.hpp"

using namespace cnfmin;
using support::C;
using support::F;
using support::L;
using support::V;

TEST_CASE("forgetting one variable by resolving it out") {
    VarTable t;
    Formula f = F(t, "abx -xc ac");
    VarId x = *t.find("x");
    CHECK(forget_one(f, x) == F(t, "abc ac"));
    CHECK(forget_one(F(t, "ab"), x) == F(t, "ab"));
    CHECK(forget_one(F(t, "ax b-x"), x) == F(t, "ab"));
}

TEST_CASE("forgetting a set of variables") {
    VarTable t;
    CHECK(forget_all({F(t, "abx -xc ac"), V(t, "abc")}) == F(t, "abc ac"));

    Formula f = F(t, "a b");
    CHECK(forget_all({f, V(t, "ab")}) == f);

    VarTable t2;
    CHECK(forget_all({F(t2, "x-o oq"), V(t2, "xq")}) == F(t2, "xq"));
}

TEST_CASE("forgetting by prime implicates") {
    VarTable t;
    CHECK(forget_by_prime_implicates({F(t, "abx -xc ac"), V(t, "abc")}) == F(t, "ac"));
    Formula f = F(t, "ab bc");
    CHECK(forget_by_prime_implicates({f, V(t, "abc")}) == prime_implicates(f));
    VarTable t2;
    CHECK(forget_by_prime_implicates({F(t2, "x"), {}}).empty());
}

TEST_CASE("the expressing relation") {
    VarTable t;
    ForgetSpec spec{F(t, "abx -xc ac"), V(t, "abc")};
    CHECK(expresses_forgetting(F(t, "abc ac"), spec));
    CHECK(expresses_forgetting(F(t, "ac"), spec));
    CHECK_FALSE(expresses_forgetting(F(t, "a"), spec));
    CHECK_THROWS_AS(expresses_forgetting(F(t, "ax"), spec), std::invalid_argument);
}

TEST_CASE("resolving out always expresses forgetting") {
    support::Rng rng(121);
    for (int round = 0; round < 200; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 5);
        Formula f = support::random_formula(rng, vars, 5, 3);
        VarId x = vars[static_cast<std::size_t>(rng.below(5))];
        std::set<VarId> keep;
        for (VarId v : variables(f))
            if (v != x) keep.insert(v);
        CHECK(expresses_forgetting(forget_one(f, x), {f, keep}));
    }
}

TEST_CASE("both forgetting routes agree and express the forgetting") {
    support::Rng rng(122);
    for (int round = 0; round < 150; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 5);
        Formula f = support::random_formula(rng, vars, 5, 3);
        std::set<VarId> keep;
        for (VarId v : vars)
            if (rng.flip()) keep.insert(v);
        ForgetSpec spec{f, keep};
        Formula a = forget_all(spec);
        Formula b = forget_by_prime_implicates(spec);
        CHECK(expresses_forgetting(a, spec));
        CHECK(expresses_forgetting(b, spec));
        CHECK(equivalent(a, b));
    }
}

TEST_CASE("forgetting order does not change the equivalence class") {
    support::Rng rng(123);
    for (int round = 0; round < 120; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 5);
        Formula f = support::random_formula(rng, vars, 5, 3);
        std::set<VarId> keep;
        for (VarId v : vars)
            if (rng.flip()) keep.insert(v);
        Formula ascending = forget_all({f, keep});
        Formula descending = f;
        std::vector<VarId> order = variables(f);
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (!keep.count(*it)) descending = forget_one(descending, *it);
        CHECK(equivalent(ascending, descending));

        ForgetOptions greedy;
        greedy.greedy_order = true;
        CHECK(equivalent(ascending, forget_all({f, keep}, greedy)));
    }
}

TEST_CASE("necessary literals on a small formula") {
    VarTable t;
    ForgetSpec spec{F(t, "ab"), V(t, "ab")};
    auto reports = necessary_literals(spec);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].literal == L(t, "a"));
    CHECK(reports[0].witness == LiteralSet({L(t, "a"), L(t, "-b")}));
    CHECK(reports[1].literal == L(t, "b"));
    CHECK(reports[1].witness == LiteralSet({L(t, "-a"), L(t, "b")}));
}

TEST_CASE("necessary-literal witnesses satisfy the defining conditions") {
    support::Rng rng(124);
    for (int round = 0; round < 100; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 4);
        Formula f = support::random_formula(rng, vars, 4, 3);
        std::set<VarId> keep(vars.begin(), vars.end());
        ForgetSpec spec{f, keep};
        for (const auto& report : necessary_literals(spec)) {
            CHECK(report.witness.contains(report.literal));
            CHECK(consistent_with(f, report.witness));
            CHECK_FALSE(consistent_with(f, report.witness.flipped(report.literal)));
        }
    }
}

TEST_CASE("necessary literals occur in every minimum-size witness") {
    support::Rng rng(125);
    for (int round = 0; round < 60; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 4);
        Formula f = support::random_formula(rng, vars, 4, 3);
        std::set<VarId> keep;
        for (VarId v : vars)
            if (rng.flip()) keep.insert(v);
        ForgetSpec spec{f, keep};
        auto needed = necessary_literals(spec);
        MinForgetResult r = min_forget_size(spec);
        for (const Formula& w : r.witnesses)
            for (const auto& report : needed) {
                bool found = false;
                for (const Clause& c : w)
                    if (c.contains(report.literal)) found = true;
                CHECK(found);
            }
    }
}

TEST_CASE("minimum forgetting size examples") {
    VarTable t;
    {
        MinForgetResult r = min_forget_size({F(t, "abx -xc ac"), V(t, "abc")});
        CHECK(r.size == 2);
        REQUIRE(r.witnesses.size() == 1);
        CHECK(r.witnesses[0] == F(t, "ac"));
    }
    {
        Formula f = F(t, "a b");
        MinForgetResult r = min_forget_size({f, V(t, "ab")});
        CHECK(r.size == 2);
    }
}

TEST_CASE("forgetting size is additive across disjoint alphabets") {
    VarTable t;
    ForgetSpec left{F(t, "abx -xc ac"), V(t, "abc")};
    ForgetSpec right{F(t, "d-e e"), V(t, "d")};
    ForgetSpec both{left.formula.united(right.formula), V(t, "abcd")};
    CHECK(min_forget_size(both).size ==
          min_forget_size(left).size + min_forget_size(right).size);

    support::Rng rng(126);
    for (int round = 0; round < 60; ++round) {
        VarTable tt;
        auto vars = support::letter_vars(tt, 6);
        std::vector<VarId> lhs(vars.begin(), vars.begin() + 3);
        std::vector<VarId> rhs(vars.begin() + 3, vars.end());
        Formula fl = support::random_formula(rng, lhs, 3, 2);
        Formula fr = support::random_formula(rng, rhs, 3, 2);
        // an unsatisfiable side collapses the union to the empty clause,
        // so additivity only applies to satisfiable parts
        if (!satisfiable(fl).has_value() || !satisfiable(fr).has_value()) continue;
        std::set<VarId> kl, kr, ku;
        for (VarId v : lhs)
            if (rng.flip()) {
                kl.insert(v);
                ku.insert(v);
            }
        for (VarId v : rhs)
            if (rng.flip()) {
                kr.insert(v);
                ku.insert(v);
            }
        int sum = min_forget_size({fl, kl}).size + min_forget_size({fr, kr}).size;
        CHECK(min_forget_size({fl.united(fr), ku}).size == sum);
    }
}

TEST_CASE("enumeration caps raise resource errors") {
    VarTable t;
    ForgetSpec spec{F(t, "ab cd ef"), V(t, "abcdef")};
    ForgetOptions tight;
    tight.max_enumeration = 8;
    CHECK_THROWS_AS(expresses_forgetting(F(t, "ab"), spec, tight), resource_limit_error);
    CHECK_THROWS_AS(necessary_literals(spec, tight), resource_limit_error);
}

TEST_CASE("forget_all growth cap raises a resource error") {
    VarTable t;
    // forgetting the hub of many crossing pairs blows up the clause count
    Formula f = F(t, "abx cdx ef-x gh-x ij-x");
    ForgetOptions tight;
    tight.max_clauses = 4;
    CHECK_THROWS_AS(forget_all({f, V(t, "abcdefghij")}, tight), resource_limit_error);
}
