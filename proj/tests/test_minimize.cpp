#include "doctest.h"

#include <limits>
#include <set>

#include "cnfmin/minimize.hpp"
#include "cnfmin/redundancy.hpp"
#include "cnfmin/sat.hpp"
#include "support.hpp"

using namespace cnfmin;
using support::C;
using support::F;

TEST_CASE("minimization examples") {
    VarTable t;
    {
        MinimizationResult r = minimize(F(t, "a -ab a-b"));
        CHECK(r.min_size == 2);
        REQUIRE(r.witnesses.size() == 1);
        CHECK(r.witnesses[0] == F(t, "a b"));
    }
    {
        MinimizationResult r = minimize(F(t, "-ab -bc -ca"));
        CHECK(r.min_size == 6);
        bool input_among = false;
        for (const Formula& w : r.witnesses)
            if (w == F(t, "-ab -bc -ca")) input_among = true;
        CHECK(input_among);
    }
    {
        MinimizationResult r = minimize(F(t, "abc ac"));
        CHECK(r.min_size == 2);
        REQUIRE(r.witnesses.size() == 1);
        CHECK(r.witnesses[0] == F(t, "ac"));
    }
}

TEST_CASE("minimality decisions") {
    VarTable t;
    CHECK(is_minimal(F(t, "abx -xc ac")));
    CHECK_FALSE(is_minimal(F(t, "a -ab a-b")));
    CHECK(is_minimal(F(t, "a")));
}

TEST_CASE("every witness is equivalent, minimal-size, and made of prime implicates") {
    support::Rng rng(111);
    for (int round = 0; round < 120; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 4);
        Formula f = support::random_formula(rng, vars, 5, 3);
        Formula prime = prime_implicates(f);
        MinimizationResult r = minimize(f);
        REQUIRE(!r.witnesses.empty());
        for (const Formula& w : r.witnesses) {
            CHECK(size(w) == r.min_size);
            CHECK(support::tt_equivalent(w, f));
            for (const Clause& c : w) CHECK(prime.contains(c));
        }
    }
}

TEST_CASE("forced clauses appear in every witness") {
    support::Rng rng(112);
    for (int round = 0; round < 120; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 4);
        Formula f = support::random_formula(rng, vars, 5, 3);
        MinimizationResult r = minimize(f);
        CHECK(r.forced_clauses == superirredundant_clauses(f));
        for (const Formula& w : r.witnesses)
            for (const Clause& c : r.forced_clauses) CHECK(w.contains(c));
    }
}

TEST_CASE("all-superirredundant formulas are minimal") {
    support::Rng rng(113);
    int applied = 0;
    for (int round = 0; round < 200; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 4);
        Formula f = support::random_formula(rng, vars, 5, 3);
        if (superirredundant_clauses(f) != f) continue;
        ++applied;
        CHECK(minimize(f).min_size == size(f));
        CHECK(is_minimal(f));
    }
    CHECK(applied >= 30);
}

TEST_CASE("a superredundant clause may still be in every witness") {
    VarTable t;
    Formula f = F(t, "a -ab a-b");
    CHECK(is_superredundant(f, C(t, "a")).superredundant);
    MinimizationResult r = minimize(f);
    for (const Formula& w : r.witnesses) CHECK(w.contains(C(t, "a")));
}

TEST_CASE("minimize is syntax-insensitive") {
    support::Rng rng(114);
    for (int round = 0; round < 80; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 4);
        Formula f = support::random_formula(rng, vars, 4, 3);
        // an equivalent variant: add a derived clause or a superclause
        Formula variant = f;
        Formula closure = resolution_closure(f).closure;
        for (const Clause& c : closure)
            if (!variant.contains(c)) {
                variant = variant.with(c);
                break;
            }
        const Clause& base = *f.begin();
        for (VarId v : vars) {
            if (base.mentions(v)) continue;
            variant = variant.with(base.with(Literal(v, true)));
            break;
        }
        REQUIRE(support::tt_equivalent(f, variant));
        MinimizationResult a = minimize(f);
        MinimizationResult b = minimize(variant);
        CHECK(a.min_size == b.min_size);
        CHECK(a.witnesses == b.witnesses);
    }
}

TEST_CASE("degenerate inputs") {
    {
        MinimizationResult r = minimize(Formula{});
        CHECK(r.min_size == 0);
        REQUIRE(r.witnesses.size() == 1);
        CHECK(r.witnesses[0].empty());
    }
    {
        VarTable t;
        MinimizationResult r = minimize(F(t, "a -a"));
        CHECK(r.min_size == 0);
        REQUIRE(r.witnesses.size() == 1);
        CHECK(r.witnesses[0] == Formula({Clause()}));
    }
}

TEST_CASE("bounded search reports absence") {
    VarTable t;
    Formula f = F(t, "a b");
    CHECK_FALSE(minimize_within(f, 1).has_value());
    auto r = minimize_within(f, 2);
    REQUIRE(r.has_value());
    CHECK(r->min_size == 2);
}

TEST_CASE("candidate pool cap raises a resource error with a bracket") {
    VarTable t;
    // pairwise equivalences generate many prime implicates
    Formula f = F(t, "-ab -bc -cd -de -ea");
    MinimizeOptions opts;
    opts.max_optional = 3;
    try {
        minimize(f, opts);
        CHECK(false);
    } catch (const resource_limit_error& e) {
        std::string what = e.what();
        CHECK(what.find("lower=") != std::string::npos);
        CHECK(what.find("upper=") != std::string::npos);
    }
}

TEST_CASE("search matches exhaustive subset enumeration") {
    support::Rng rng(116);
    MinimizeOptions opts;
    opts.max_optional = 64;
    for (int round = 0; round < 120; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 3);
        Formula f = support::random_formula(rng, vars, 4, 3);
        MinimizationResult r = minimize(f, opts);

        Formula prime = prime_implicates(f);
        std::vector<Clause> pool(prime.begin(), prime.end());
        int best = std::numeric_limits<int>::max();
        std::set<Formula> best_sets;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
            std::vector<Clause> chosen;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if ((mask >> i) & 1) chosen.push_back(pool[i]);
            Formula candidate(std::move(chosen));
            if (!support::tt_equivalent(candidate, f)) continue;
            int s = size(candidate);
            if (s < best) {
                best = s;
                best_sets.clear();
            }
            if (s == best) best_sets.insert(candidate);
        }
        CHECK(r.min_size == best);
        CHECK(std::set<Formula>(r.witnesses.begin(), r.witnesses.end()) == best_sets);
    }
}

TEST_CASE("first-witness mode still finds the exact minimum") {
    support::Rng rng(115);
    for (int round = 0; round < 60; ++round) {
        VarTable t;
        auto vars = support::letter_vars(t, 4);
        Formula f = support::random_formula(rng, vars, 4, 3);
        MinimizeOptions first_only;
        first_only.all_witnesses = false;
        MinimizationResult a = minimize(f);
        MinimizationResult b = minimize(f, first_only);
        CHECK(a.min_size == b.min_size);
        REQUIRE(b.witnesses.size() == 1);
        CHECK(size(b.witnesses[0]) == b.min_size);
    }
}
