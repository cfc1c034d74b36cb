#include <benchmark/benchmark.h>

#include <vector>

#include "lemlab/exclusion.hpp"
#include "lemlab/potentials.hpp"
#include "lemlab/rng.hpp"

using namespace lemlab;

namespace {

struct Fixture {
  PshOracle oracle;
  std::vector<CPoint> samples;
  ExclusionParams params;

  Fixture(int atoms, int sample_count) {
    Rng rng(23);
    AtomicMeasure m;
    m.dimension = 1;
    for (int i = 0; i < atoms; ++i) {
      Atom a;
      a.location = CPoint{rng.disc(5.0)};
      a.weight = 1.0 / atoms;
      m.atoms.push_back(a);
    }
    oracle = discrete_potential(m);
    samples.reserve(sample_count);
    for (int i = 0; i < sample_count; ++i) samples.push_back(rng.ball(1, 5.0));
    params.epsilon = 0.1;
    params.alpha = 1.0;
    params.A = 10.0;
  }
};

}  // namespace

static void BM_WitnessScan(benchmark::State& state) {
  const Fixture fx(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    auto w = witness_radius_search(fx.oracle.theta, fx.samples[0], fx.params);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WitnessScan)->Arg(5)->Arg(20);

static void BM_ExclusionSweep(benchmark::State& state) {
  const Fixture fx(20, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ExclusionReport rep = exclusion_cover(fx.oracle.theta, fx.samples, fx.params, 1.0, 5.0);
    benchmark::DoNotOptimize(rep.content_sum);
  }
}
BENCHMARK(BM_ExclusionSweep)->Arg(100)->Arg(400)->Arg(1600);
