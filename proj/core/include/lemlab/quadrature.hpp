#pragma once

#include <cstdint>
#include <vector>

#include "lemlab/complex_point.hpp"

namespace lemlab {

// Equal-weight nodes on the unit sphere S^{2n-1}. n = 1 uses equispaced
// circle angles (trapezoid rule, spectrally accurate for our integrands);
// n >= 2 uses seeded uniform sampling so every run is reproducible.
struct SphereQuadrature {
  int dimension = 1;
  std::uint64_t seed = 42;
  std::vector<CPoint> nodes;

  static SphereQuadrature make(int n, int node_count, std::uint64_t seed = 42);
};

inline int default_node_count(int n) { return n == 1 ? 4096 : 200000; }

}  // namespace lemlab
