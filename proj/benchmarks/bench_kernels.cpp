#include <benchmark/benchmark.h>

#include <optional>
#include <vector>

#include "lemlab/moebius.hpp"
#include "lemlab/potentials.hpp"
#include "lemlab/quadrature.hpp"
#include "lemlab/rng.hpp"

using namespace lemlab;

static void BM_MoebiusApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(29);
  const CPoint z = rng.ball(n, 0.9);
  const CPoint w = rng.ball(n, 0.9);
  for (auto _ : state) {
    CPoint out = moebius_apply(z, w);
    benchmark::DoNotOptimize(out.z.data());
  }
}
BENCHMARK(BM_MoebiusApply)->Arg(1)->Arg(2)->Arg(4);

static void BM_PoissonSzego(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(31);
  const CPoint z = rng.ball(n, 0.7);
  const CPoint zeta = rng.unit_sphere(n);
  for (auto _ : state) {
    double v = poisson_szego(z, zeta);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_PoissonSzego)->Arg(1)->Arg(2)->Arg(4);

static void BM_SphereMean(benchmark::State& state) {
  const int nodes = static_cast<int>(state.range(0));
  const SphereQuadrature quad = SphereQuadrature::make(2, nodes, 42);
  const PshOracle V = numeric_oracle(2, [](const CPoint& p) -> std::optional<double> {
    return 0.5 * std::log(1.0 + norm_sq(p));
  });
  const CPoint center = CPoint::zero(2);
  for (auto _ : state) {
    double m = sphere_mean(V, center, 1.5, quad);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_SphereMean)->Arg(2000)->Arg(20000);
