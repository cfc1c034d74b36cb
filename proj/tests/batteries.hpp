#pragma once

// Seeded generators shared by the property suites and the acceptance runner.
// Everything here is a pure function of the Rng handed in, so batteries are
// reproducible and each test picks its own seed.

#include <vector>

#include "lemlab/green_potential.hpp"
#include "lemlab/oracle.hpp"
#include "lemlab/potentials.hpp"
#include "lemlab/rng.hpp"

namespace lemlab_test {

using lemlab::AtomicMeasure;
using lemlab::complex;
using lemlab::CPoint;
using lemlab::GreenPotentialSpec;
using lemlab::PolyFactor;
using lemlab::Rng;

inline std::vector<complex> random_roots(Rng& rng, int degree, double radius) {
  std::vector<complex> roots;
  roots.reserve(degree);
  for (int i = 0; i < degree; ++i) roots.push_back(rng.disc(radius));
  return roots;
}

inline std::vector<PolyFactor> simple_factors(const std::vector<complex>& roots) {
  std::vector<PolyFactor> f;
  f.reserve(roots.size());
  for (const complex& r : roots) f.push_back({r, 1});
  return f;
}

// Atomic measure with total mass exactly normalized to `total`. Weights are
// generic (uniform draws away from 0), so no weight ratio is an exact dyadic.
inline AtomicMeasure random_measure(Rng& rng, int max_atoms, double radius, double total = 1.0) {
  int k = 1 + static_cast<int>(rng.uniform() * max_atoms);
  if (k > max_atoms) k = max_atoms;
  std::vector<double> w(k);
  double s = 0.0;
  for (double& x : w) {
    x = 0.1 + rng.uniform();
    s += x;
  }
  AtomicMeasure m;
  m.dimension = 1;
  for (int i = 0; i < k; ++i) {
    lemlab::Atom a;
    a.location = CPoint{rng.disc(radius)};
    a.weight = total * w[i] / s;
    m.atoms.push_back(a);
  }
  return m;
}

inline GreenPotentialSpec random_green_spec(Rng& rng, int max_poles, double pole_radius,
                                            double total) {
  int k = 1 + static_cast<int>(rng.uniform() * max_poles);
  if (k > max_poles) k = max_poles;
  std::vector<double> w(k);
  double s = 0.0;
  for (double& x : w) {
    x = 0.1 + rng.uniform();
    s += x;
  }
  GreenPotentialSpec spec;
  spec.dimension = 1;
  for (int i = 0; i < k; ++i) {
    lemlab::Atom a;
    a.location = CPoint{rng.disc(pole_radius)};
    a.weight = total * w[i] / s;
    spec.poles.push_back(a);
  }
  return spec;
}

inline std::vector<CPoint> sample_ball(Rng& rng, int n, int count, double radius) {
  std::vector<CPoint> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) pts.push_back(rng.ball(n, radius));
  return pts;
}

inline std::vector<CPoint> sample_disc(Rng& rng, int count, double radius) {
  return sample_ball(rng, 1, count, radius);
}

}  // namespace lemlab_test
