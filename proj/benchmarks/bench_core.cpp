#include <benchmark/benchmark.h>

#include "minusone/banded_op.hpp"
#include "minusone/little_jacobi.hpp"
#include "minusone/susy.hpp"

using namespace minusone;

namespace {

const ParamPair kParams(Rational(1, 2), Rational(3, 2));

void BM_GenerateMonic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_monic(kParams, n));
}
BENCHMARK(BM_GenerateMonic)->Arg(10)->Arg(20)->Arg(40);

void BM_ExplicitPoly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(explicit_poly(kParams, n));
}
BENCHMARK(BM_ExplicitPoly)->Arg(10)->Arg(20);

void BM_ComposeL0Squared(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const BandedOp L0 = make_L0(kParams.alpha(), kParams.beta(), N);
  for (auto _ : state) benchmark::DoNotOptimize(compose(L0, L0));
}
BENCHMARK(BM_ComposeL0Squared)->Arg(24)->Arg(64);

void BM_Orthogonality(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto family = generate_family(kParams, N);
    const MomentFunctional m = moments(kParams, 2 * N);
    Rational acc;
    for (std::size_t n = 0; n <= N; ++n) {
      for (std::size_t k = 0; k < n; ++k) acc += inner_product(m, family[n], family[k]);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_Orthogonality)->Arg(10)->Arg(20);

void BM_WeightQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weight_moment_quadrature(kParams, 8));
}
BENCHMARK(BM_WeightQuadrature);

void BM_SusyEigenCheck(benchmark::State& state) {
  const susy::SchrodingerParams a(Rational(3, 2));
  const auto grid = susy::make_grid(200);
  for (auto _ : state) benchmark::DoNotOptimize(susy::H1_eigen_check(a, 5, grid));
}
BENCHMARK(BM_SusyEigenCheck);

}  // namespace

BENCHMARK_MAIN();
