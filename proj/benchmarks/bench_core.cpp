#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "sdual/oracle.hpp"
#include "sdual/solver.hpp"

using namespace sdual;

namespace {

PrimalInstance seventeen_clue()
{
    const std::string clue = ".......1.4.........2...........5.4.7..8...3....1.9....3..4..2...5.1........8.6...";
    std::vector<Given> givens;
    for (int c = 0; c < 81; ++c)
        if (clue[static_cast<std::size_t>(c)] != '.')
            givens.push_back({c, clue[static_cast<std::size_t>(c)] - '0'});
    return make_standard_primal(9, givens);
}

void BM_GroupApply9(benchmark::State& state)
{
    const auto inst = make_standard_primal(9);
    std::mt19937 rng(1);
    std::vector<ExtInt> x;
    for (int i = 0; i < 81; ++i)
        x.emplace_back(static_cast<int>(rng() % 9) + 1);
    for (auto _ : state)
        for (int r = 0; r < 3; ++r)
            benchmark::DoNotOptimize(group_apply(inst.system(r), x));
}
BENCHMARK(BM_GroupApply9);

void BM_GroupApplyTranspose9(benchmark::State& state)
{
    const auto inst = make_standard_primal(9);
    std::mt19937 rng(2);
    std::vector<int> signs(9 * 36);
    for (auto& s : signs)
        s = rng() % 2 ? 1 : -1;
    for (auto _ : state)
        benchmark::DoNotOptimize(group_apply_transpose(inst.system(0), signs));
}
BENCHMARK(BM_GroupApplyTranspose9);

void BM_SolveSeventeenClue(benchmark::State& state)
{
    const auto inst = seventeen_clue();
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(inst));
}
BENCHMARK(BM_SolveSeventeenClue)->Unit(benchmark::kMillisecond);

void BM_SolveUncompletable4(benchmark::State& state)
{
    const auto inst = make_standard_primal(4, {{0, 1}, {1, 2}, {7, 4}, {10, 3}});
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(inst));
}
BENCHMARK(BM_SolveUncompletable4);

void BM_ExactDualValue4(benchmark::State& state)
{
    const auto inst = make_standard_primal(4, {{0, 1}, {5, 3}});
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_dual_value(inst));
}
BENCHMARK(BM_ExactDualValue4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
