// Microbenchmarks for the hot paths of the core library: polynomial
// arithmetic, resultants, factorization, unit-disk root counting, exact
// Mahler measures, and the bounded-measure census.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "heights/census.hpp"
#include "heights/factor.hpp"
#include "heights/mahler.hpp"
#include "heights/realalg.hpp"
#include "heights/rootloc.hpp"
#include "heights/sturm.hpp"

using namespace heights;

namespace {

std::vector<IntPoly> random_polys(unsigned degree, long coeff_bound,
                                  std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
  std::vector<IntPoly> out;
  out.reserve(n);
  while (out.size() < n) {
    std::vector<Int> c(degree + 1);
    for (auto& x : c) x = Int(coeff(rng));
    if (c.back() == 0) c.back() = 1;
    out.emplace_back(std::move(c));
  }
  return out;
}

void BM_mul(benchmark::State& state) {
  auto polys = random_polys(static_cast<unsigned>(state.range(0)), 1000, 64, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    const IntPoly& p = polys[i % polys.size()];
    const IntPoly& q = polys[(i + 1) % polys.size()];
    benchmark::DoNotOptimize(mul(p, q));
    ++i;
  }
}
BENCHMARK(BM_mul)->Arg(8)->Arg(32)->Arg(128);

void BM_resultant(benchmark::State& state) {
  auto polys = random_polys(static_cast<unsigned>(state.range(0)), 50, 32, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    const IntPoly& p = polys[i % polys.size()];
    const IntPoly& q = polys[(i + 1) % polys.size()];
    benchmark::DoNotOptimize(resultant(p, q));
    ++i;
  }
}
BENCHMARK(BM_resultant)->Arg(4)->Arg(8)->Arg(16);

void BM_factor(benchmark::State& state) {
  auto polys = random_polys(static_cast<unsigned>(state.range(0)), 30, 32, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_over_Z(polys[i % polys.size()]));
    ++i;
  }
}
BENCHMARK(BM_factor)->Arg(4)->Arg(8)->Arg(12);

void BM_count_unit_disk(benchmark::State& state) {
  auto polys = random_polys(static_cast<unsigned>(state.range(0)), 30, 64, 4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_unit_disk(polys[i % polys.size()]));
    ++i;
  }
}
BENCHMARK(BM_count_unit_disk)->Arg(4)->Arg(8)->Arg(16);

void BM_isolate_real_roots(benchmark::State& state) {
  auto polys = random_polys(static_cast<unsigned>(state.range(0)), 30, 64, 5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(isolate_real_roots(polys[i % polys.size()]));
    ++i;
  }
}
BENCHMARK(BM_isolate_real_roots)->Arg(4)->Arg(8)->Arg(16);

void BM_mahler_exact(benchmark::State& state) {
  auto polys = random_polys(4, 10, 64, 6);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mahler_exact(polys[i % polys.size()]));
    ++i;
  }
}
BENCHMARK(BM_mahler_exact);

void BM_realalg_mul(benchmark::State& state) {
  RealAlgebraic a = nth_root_positive(RealAlgebraic::from_int(Int(2)), 3);
  RealAlgebraic b = nth_root_positive(RealAlgebraic::from_int(Int(5)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_realalg_mul);

void BM_census_A(benchmark::State& state) {
  const Rat hmax(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_A(1, 2, hmax, 1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_census_A)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
