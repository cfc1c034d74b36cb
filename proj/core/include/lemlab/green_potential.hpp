#pragma once

#include <cstdint>

#include "lemlab/oracle.hpp"
#include "lemlab/potentials.hpp"
#include "lemlab/quadrature.hpp"

namespace lemlab {

// Weighted poles inside the unit ball; the potential is
// V(w) = sum w_k log d(a_k, w) in the invariant distance.
struct GreenPotentialSpec {
  int dimension = 1;
  std::vector<Atom> poles;

  double total_mass() const {
    double s = 0.0;
    for (const Atom& a : poles) s += a.weight;
    return s;
  }
};

// Oracle for the Green potential of the spec. n = 1 carries the exact atomic
// counting oracle (EXACT_ATOMIC_GREEN); n >= 2 falls back to sphere means.
PshOracle green_potential(const GreenPotentialSpec& spec, int theta_nodes = 0, std::uint64_t seed = 42);

// Projective mass in the invariant geometry: theta of the pullback V o Phi_z
// at the origin. Exact atom counting whenever the oracle carries atoms at
// n = 1, sphere-mean pullback quadrature otherwise.
double invariant_theta(const PshOracle& V, const CPoint& z, double t, const SphereQuadrature& quad,
                       double log_step = 0.05);

// Poisson-Szego boundary integral of V at z over the given boundary nodes.
double poisson_szego_integral(const PshOracle& V, const CPoint& z, const SphereQuadrature& quad);

// Residual of the Jensen decomposition
//   V(z) = P_V(z) - int_0^1 theta_V(z,t) dt/t
// for V plurisubharmonic on a neighbourhood of the closed ball.
double jensen_ps_residual(const PshOracle& V, const CPoint& z, const SphereQuadrature& quad);

// Smallest Euclidean ball containing the invariant ball (exact Apollonius
// disc at n = 1, sampled hull bound at n >= 2).
MetricBall euclidean_hull(const MetricBall& invariant_ball);

}  // namespace lemlab
