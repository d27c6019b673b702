#include "doctest.h"

#include "cnfmin/resolution.hpp"
#include "cnfmin/sat.hpp"
#include "support.hpp"

using namespace cnfmin;
using support::C;
using support::F;
using support::L;

TEST_CASE("satisfiability with witnesses") {
    VarTable t;
    CHECK_FALSE(satisfiable(F(t, "a -a")).has_value());

    auto w = satisfiable(F(t, "ab"));
    REQUIRE(w.has_value());
    CHECK(w->satisfies(F(t, "ab")));

    auto w2 = satisfiable(F(t, "a -ab a-b"));
    REQUIRE(w2.has_value());
    CHECK(w2->value(*t.find("a")) == true);
    CHECK(w2->value(*t.find("b")) == true);
}

TEST_CASE("entailment examples") {
    VarTable t;
    CHECK(entails(F(t, "b a-b"), C(t, "a")));
    CHECK(entails(F(t, "ab"), C(t, "abc")));
    CHECK_FALSE(entails(F(t, "ab"), C(t, "a")));
    CHECK(entails(F(t, "a -a"), Clause()));
}

TEST_CASE("equivalence examples") {
    VarTable t;
    CHECK(equivalent(F(t, "a -ab a-b"), F(t, "a b")));
    CHECK_FALSE(equivalent(F(t, "a"), F(t, "b")));
    CHECK(equivalent(F(t, "-ab -bc -ca"), F(t, "-ac -cb -ba")));
}

TEST_CASE("consistency with literal sets") {
    VarTable t;
    Formula f({Clause({L(t, "-x"), L(t, "-e")})});
    CHECK_FALSE(consistent_with(f, LiteralSet({L(t, "x"), L(t, "e")})));
    CHECK(consistent_with(F(t, "ab"), LiteralSet({L(t, "-a")})));
    CHECK_FALSE(consistent_with(F(t, "a-b"), LiteralSet({L(t, "-a"), L(t, "b")})));
}

TEST_CASE("witnesses always satisfy the formula") {
    support::Rng rng(81);
    for (int round = 0; round < 300; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 5);
        Formula f = support::random_formula(rng, vars, 6, 3);
        auto w = satisfiable(f);
        CHECK(w.has_value() == support::tt_satisfiable(f));
        if (w) CHECK(w->satisfies(f));
    }
}

TEST_CASE("horn fast path agrees with the general path") {
    support::Rng rng(82);
    int horn_seen = 0;
    for (int round = 0; round < 500; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 5);
        Formula f = support::random_formula(rng, vars, 6, 3);
        if (!is_horn(f)) continue;
        ++horn_seen;
        SatOptions general;
        general.force_general = true;
        auto fast = satisfiable(f);
        auto slow = satisfiable(f, general);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) CHECK(fast->satisfies(f));
        if (slow) CHECK(slow->satisfies(f));
    }
    CHECK(horn_seen > 20);
}

TEST_CASE("entailment matches the resolution characterization") {
    support::Rng rng(83);
    for (int round = 0; round < 120; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 5);
        Formula f = support::random_formula(rng, vars, 5, 3);
        Formula closure = resolution_closure(f).closure;
        Clause c = support::random_clause(rng, vars, 3);
        bool derivable = false;
        for (const Clause& d : closure)
            if (d.subset_of(c)) {
                derivable = true;
                break;
            }
        CHECK(entails(f, c) == derivable);
    }
}

TEST_CASE("solver is deterministic per input") {
    VarTable t;
    Formula f = F(t, "ab -ac b-c");
    auto w1 = satisfiable(f);
    auto w2 = satisfiable(f);
    REQUIRE(w1.has_value());
    REQUIRE(w2.has_value());
    CHECK(w1->values() == w2->values());
}
