#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "staircase/constructions.hpp"
#include "staircase/ideal.hpp"
#include "staircase/search.hpp"

using staircase::Exponent;
using staircase::Monomial;
using staircase::StaircaseIdeal;

namespace {

std::vector<Monomial> random_monomials(std::size_t n, Exponent max_exp) {
    std::mt19937_64 rng(0xbe9c4u);
    std::uniform_int_distribution<Exponent> dist(0, max_exp);
    std::vector<Monomial> gens(n);
    for (Monomial& g : gens)
        g = {dist(rng), dist(rng)};
    return gens;
}

void BM_minimalize(benchmark::State& state) {
    const auto gens = random_monomials(static_cast<std::size_t>(state.range(0)), 1000);
    for (auto _ : state)
        benchmark::DoNotOptimize(staircase::minimalize(gens));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_minimalize)->Range(16, 4096);

void BM_square(benchmark::State& state) {
    const StaircaseIdeal ideal =
        staircase::tiny_square_ideal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(staircase::ideal_product(ideal, ideal));
}
BENCHMARK(BM_square)->Arg(5)->Arg(10)->Arg(20)->Arg(40)->Arg(60);

void BM_power(benchmark::State& state) {
    const StaircaseIdeal ideal = staircase::tiny_square_ideal(10);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            staircase::ideal_power(ideal, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_power)->DenseRange(2, 8, 2);

void BM_min_mu_square(benchmark::State& state) {
    staircase::SearchOptions opt;
    opt.workers = 1;
    opt.oracle_stride = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(staircase::min_mu_square(
            4, static_cast<Exponent>(state.range(0)), opt));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_min_mu_square)->DenseRange(6, 14, 2);

void BM_search_kernel_m5(benchmark::State& state) {
    staircase::SearchOptions opt;
    opt.workers = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(staircase::min_mu_square(5, 8, opt));
}
BENCHMARK(BM_search_kernel_m5);

} // namespace

BENCHMARK_MAIN();
