#pragma once

#include "lemlab/exclusion.hpp"
#include "lemlab/green_potential.hpp"

namespace lemlab {

struct BallPrincipleReport {
  ExclusionReport exclusion;
  double kappa = 0.0;
  double c_n_estimate = 1.0;
  double s = 1.0;
  double rho = 0.0;
  double mu_ball = 0.0;
  double emitted_constant = 0.0;  // C in the guaranteed bound -log(C/eta) where applicable
  double boundary_mean = 0.0;
  int checked_good = 0;
  int lower_bound_violations = 0;
  double worst_margin = 0.0;  // min of (V - guaranteed bound) over checked good samples
  bool pass = false;
};

// Exclusion sweep for a Green potential on the unit ball: amplitude
// A = alpha c_n mu(B) eps^-alpha with eps = eta/3, invariant metric,
// expansion 3; good samples must satisfy
//   V(z) >= -theta(z,s) log(3/eta) - c_n mu(B) log(e/s).
BallPrincipleReport green_potential_min_principle(const PshOracle& V, const std::vector<CPoint>& samples,
                                                  double eta, double alpha, double s,
                                                  const SphereQuadrature& quad, double c_n = 0.0,
                                                  double tol = 0.0);

// Unit total mass specialization with s = 1: good samples must satisfy
// V(z) >= -log(C/eta) for the emitted constant C = 3 e^{c_n}; also asserts
// theta(z,1) <= 1 at every sample.
BallPrincipleReport unit_mass_min_principle(const PshOracle& V, const std::vector<CPoint>& samples,
                                            double eta, double alpha, const SphereQuadrature& quad,
                                            double c_n = 0.0, double tol = 0.0);

// Full decomposition harness for V psh and <= 0 near the closed ball:
// checks the Poisson-Szego part against kappa_n(rho) times the boundary
// mean, and the Green part through the exclusion sweep.
BallPrincipleReport ball_min_principle(const PshOracle& V, const std::vector<CPoint>& samples, double rho,
                                       double s, double eta, double alpha, const SphereQuadrature& boundary_quad,
                                       const SphereQuadrature& theta_quad, double c_n = 0.0, double tol = 1e-2);

// Comparison constant between invariant projective mass and pseudo-ball
// Riesz mass: exactly 1 at n = 1; at n >= 2 an empirical battery maximum,
// doubled for safety.
double invariant_mass_comparison_estimate(int n, int theta_nodes = 20000, std::uint64_t seed = 7);

}  // namespace lemlab
