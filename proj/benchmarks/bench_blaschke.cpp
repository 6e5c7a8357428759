#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "blaschke/blaschke.hpp"
#include "blaschke/moments.hpp"

using namespace blaschke;

namespace {

std::vector<Complex> fixed_disc_points(int m) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> radius(0.0, 0.85),
      angle(0.0, 2 * std::numbers::pi);
  std::vector<Complex> xs(m);
  for (Complex& x : xs) x = std::polar(radius(rng), angle(rng));
  return xs;
}

void bench_solve_blaschke(benchmark::State& state) {
  const auto xs = fixed_disc_points(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_blaschke(xs));
  }
}

void bench_equilibrium(benchmark::State& state) {
  const auto xs = fixed_disc_points(static_cast<int>(state.range(0)));
  const auto zeta = lift_critical_points(xs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_inner_equilibrium(zeta));
  }
}

void bench_polynomial_roots(benchmark::State& state) {
  const auto xs = fixed_disc_points(static_cast<int>(state.range(0)));
  const auto zeta = lift_critical_points(xs);
  const RealPolynomial p = weight_polynomial_P(zeta);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_complex_roots(p));
  }
}

void bench_nesterov_round_trip(benchmark::State& state) {
  const auto cps = CriticalPointSet::from_disc(fixed_disc_points(static_cast<int>(state.range(0))));
  const MomentVector c = inverse_nesterov(cps, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nesterov(c));
  }
}

void bench_critical_points(benchmark::State& state) {
  const auto xs = fixed_disc_points(static_cast<int>(state.range(0)));
  const BlaschkeProduct b = solve_blaschke(xs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(critical_points_of_blaschke(b));
  }
}

}  // namespace

BENCHMARK(bench_solve_blaschke)->Arg(3)->Arg(7);
BENCHMARK(bench_equilibrium)->Arg(3)->Arg(7);
BENCHMARK(bench_polynomial_roots)->Arg(3)->Arg(7);
BENCHMARK(bench_nesterov_round_trip)->Arg(3)->Arg(7);
BENCHMARK(bench_critical_points)->Arg(3)->Arg(7);

BENCHMARK_MAIN();
