#include "lemlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "lemlab/rng.hpp"

namespace lemlab {

SphereQuadrature SphereQuadrature::make(int n, int node_count, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  if (node_count < 1) throw std::invalid_argument("node count must be >= 1");
  SphereQuadrature q;
  q.dimension = n;
  q.seed = seed;
  q.nodes.reserve(node_count);
  if (n == 1) {
    for (int k = 0; k < node_count; ++k) {
      double t = 2.0 * 3.14159265358979323846 * k / node_count;
      q.nodes.push_back(CPoint{complex(std::cos(t), std::sin(t))});
    }
  } else {
    Rng rng(seed);
    for (int k = 0; k < node_count; ++k) q.nodes.push_back(rng.unit_sphere(n));
  }
  return q;
}

}  // namespace lemlab
