#include <benchmark/benchmark.h>

#include "plethysm/extrema.hpp"
#include "plethysm/family.hpp"
#include "plethysm/multiplicity.hpp"
#include "plethysm/oracle.hpp"

using namespace plethysm;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

void bm_enumerate_cs(benchmark::State& state) {
    Partition mu = P("3,2");
    unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_cs(mu, k));
}
BENCHMARK(bm_enumerate_cs)->Arg(4)->Arg(6)->Arg(8);

void bm_closed_families(benchmark::State& state) {
    Partition mu = P("2,1");
    unsigned d = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_closed_families(mu, d));
}
BENCHMARK(bm_closed_families)->Arg(4)->Arg(6)->Arg(8);

void bm_tuple_count(benchmark::State& state) {
    Partition mu = P("2,1");
    Partition kappa = P("8,8");
    Partition lambda = P("4,4,4,4,3,3,3,3,3,2,2,2,2,2,1,1,1,1,1,1,1");
    for (auto _ : state) benchmark::DoNotOptimize(count_tuples_of_type(mu, kappa, lambda));
}
BENCHMARK(bm_tuple_count);

void bm_minimal_constituents(benchmark::State& state) {
    Partition mu = P("2,1");
    Partition nu(std::vector<unsigned>{static_cast<unsigned>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(minimal_constituents(mu, nu));
}
BENCHMARK(bm_minimal_constituents)->Arg(4)->Arg(5)->Arg(6);

void bm_lexmin_segments(benchmark::State& state) {
    Partition mu = P("3,1");
    unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lexmin_segments(mu, n));
}
BENCHMARK(bm_lexmin_segments)->Arg(7)->Arg(12)->Arg(20);

void bm_decomposition(benchmark::State& state) {
    Partition nu = P("4");
    Partition mu = P("3");
    for (auto _ : state) benchmark::DoNotOptimize(full_decomposition(nu, mu));
}
BENCHMARK(bm_decomposition);

void bm_coefficient(benchmark::State& state) {
    Partition nu = P("8,8");
    Partition mu = P("2,1");
    Partition lambda = P("4,4,4,4,3,3,3,3,3,2,2,2,2,2,1,1,1,1,1,1,1");
    for (auto _ : state) benchmark::DoNotOptimize(plethysm_coefficient(nu, mu, lambda));
}
BENCHMARK(bm_coefficient);

void bm_bounds(benchmark::State& state) {
    Partition mu = P("2,1");
    Partition nu = P("4,1");
    Partition lambda = P("3,3,2,2,2,1,1,1");
    for (auto _ : state) benchmark::DoNotOptimize(bounds(mu, nu, lambda));
}
BENCHMARK(bm_bounds);

} // namespace

BENCHMARK_MAIN();
