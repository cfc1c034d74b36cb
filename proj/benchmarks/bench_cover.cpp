#include <benchmark/benchmark.h>

#include <vector>

#include "lemlab/cartan.hpp"
#include "lemlab/rng.hpp"

using namespace lemlab;

namespace {

std::vector<complex> seeded_roots(int degree) {
  Rng rng(17);
  std::vector<complex> roots;
  roots.reserve(degree);
  for (int i = 0; i < degree; ++i) roots.push_back(rng.disc(2.0));
  return roots;
}

}  // namespace

static void BM_CartanCover(benchmark::State& state) {
  const std::vector<complex> roots = seeded_roots(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    BallCover cover = cartan_cover(roots, 0.1, 1.0);
    benchmark::DoNotOptimize(cover.balls.data());
  }
}
BENCHMARK(BM_CartanCover)->Arg(5)->Arg(10)->Arg(20);

static void BM_LemniscateGridAudit(benchmark::State& state) {
  const std::vector<complex> roots = seeded_roots(10);
  const BallCover cover = cartan_cover(roots, 0.1, 1.0);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LemniscateCheck chk = verify_lemniscate_cover(roots, 0.1, cover, grid, 3.0);
    benchmark::DoNotOptimize(chk.checked);
  }
}
BENCHMARK(BM_LemniscateGridAudit)->Arg(128)->Arg(256)->Arg(512);

static void BM_MinModulus(benchmark::State& state) {
  const std::vector<complex> roots = seeded_roots(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    MinModulusReport rep = min_modulus_1d(roots, 1.0, 0.2, 128);
    benchmark::DoNotOptimize(rep.radius_sum);
  }
}
BENCHMARK(BM_MinModulus)->Arg(5)->Arg(15);

BENCHMARK_MAIN();
