#include <benchmark/benchmark.h>

#include <random>

#include "cnfmin/forgetting.hpp"
#include "cnfmin/minimize.hpp"
#include "cnfmin/resolution.hpp"
#include "cnfmin/sat.hpp"

namespace {

using namespace cnfmin;

// Implication cycle x1 -> x2 -> ... -> xn -> x1; its closure holds every
// implication between distinct variables.
Formula implication_cycle(VarTable& table, int n) {
    std::vector<Clause> clauses;
    std::vector<VarId> vars;
    for (int i = 0; i < n; ++i) vars.push_back(table.fresh_indexed("v"));
    for (int i = 0; i < n; ++i)
        clauses.push_back(Clause({{vars[static_cast<std::size_t>(i)], false},
                                  {vars[static_cast<std::size_t>((i + 1) % n)], true}}));
    return Formula(std::move(clauses));
}

Formula random_3cnf(VarTable& table, int vars, int clauses, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<VarId> ids;
    for (int i = 0; i < vars; ++i) ids.push_back(table.fresh_indexed("w"));
    std::vector<Clause> out;
    while (static_cast<int>(out.size()) < clauses) {
        std::vector<VarId> pool = ids;
        std::vector<Literal> lits;
        for (int k = 0; k < 3; ++k) {
            std::size_t pick = rng() % pool.size();
            lits.emplace_back(pool[pick], (rng() & 1) != 0);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        out.push_back(Clause(std::move(lits)));
    }
    return Formula(std::move(out));
}

void BM_resolution_closure(benchmark::State& state) {
    VarTable table;
    Formula f = implication_cycle(table, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(resolution_closure(f).closure.clause_count());
}
BENCHMARK(BM_resolution_closure)->DenseRange(4, 8);

void BM_dpll(benchmark::State& state) {
    VarTable table;
    Formula f = random_3cnf(table, 20, static_cast<int>(state.range(0)), 7);
    SatOptions general;
    general.force_general = true;
    for (auto _ : state) benchmark::DoNotOptimize(satisfiable(f, general).has_value());
}
BENCHMARK(BM_dpll)->Arg(60)->Arg(85);

void BM_minimize(benchmark::State& state) {
    VarTable table;
    Formula f = implication_cycle(table, static_cast<int>(state.range(0)));
    MinimizeOptions opts;
    opts.max_optional = 64;
    for (auto _ : state) benchmark::DoNotOptimize(minimize(f, opts).min_size);
}
BENCHMARK(BM_minimize)->DenseRange(3, 5);

void BM_forget_by_prime_implicates(benchmark::State& state) {
    VarTable table;
    Formula f = implication_cycle(table, static_cast<int>(state.range(0)));
    std::set<VarId> keep;
    auto vars = variables(f);
    for (std::size_t i = 0; i + 2 < vars.size(); ++i) keep.insert(vars[i]);
    ForgetSpec spec{f, keep};
    for (auto _ : state)
        benchmark::DoNotOptimize(forget_by_prime_implicates(spec).clause_count());
}
BENCHMARK(BM_forget_by_prime_implicates)->DenseRange(4, 7);

} // namespace

BENCHMARK_MAIN();
