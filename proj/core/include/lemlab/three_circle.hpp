#pragma once

#include <vector>

#include "lemlab/exclusion.hpp"
#include "lemlab/oracle.hpp"
#include "lemlab/quadrature.hpp"

namespace lemlab {

// Exponents of the three-circle inequalities on sigma < tau < 1:
// max side  rho(sigma, tau) = log(tau/sigma) / log(1/sigma),
// min side  nu(sigma, tau)  = 1 / log((1 + sigma tau) / (sigma + tau)).
double three_circle_max_exponent(double sigma, double tau);
double three_circle_min_exponent(double sigma, double tau);

struct HadamardCheck {
  double S_sigma = 0.0;
  double S_full = 0.0;
  double rho = 0.0;
  long long checked = 0;
  long long violations = 0;
  double worst_margin = 0.0;  // min of (interpolated bound - V) over samples
  bool pass = false;
};

// Convexity check: V(z) <= S_sigma + rho(sigma, |z|/R) (S_full - S_sigma)
// at every sample z with sigma R <= |z| <= tau R.
HadamardCheck hadamard_max_check(const PshOracle& V, double sigma, double tau, double R,
                                 const std::vector<CPoint>& samples, double tol = 1e-9);

struct LelongBoundCheck {
  double estimate = 0.0;        // increment-ratio density estimate at z
  double nu = 0.0;
  double pointwise_bound = 0.0; // (1 - max of u over the pseudo-ball) / log(1/r)
  double r = 0.0;               // (sigma + tau) / (1 + sigma tau)
  bool pass = false;
};

// Density bound at z in closed B_{tau R} for the normalized section
// u = (V - S_sigma) / (S_full - S_sigma): the density cannot exceed
// nu(sigma, tau), witnessed both by the direct estimate and the pseudo-ball
// max bound.
LelongBoundCheck lelong_bound_check(const PshOracle& V, const CPoint& z, double sigma, double tau,
                                    double R, double slack = 0.05);

struct ThreeCircleParams {
  double sigma = 0.1;
  double tau = 0.5;
  double nu = 0.0;     // <= 0 selects nu(sigma, tau)
  double eta = 0.3;
  double alpha = 1.0;
  double R = 1.0;
};

struct ThreeCircleMinReport {
  ThreeCircleParams params;
  double nu = 0.0;
  double r_star = 0.0;         // (1 + tau) / 2, pullback sphere radius
  double rho = 0.0;            // tau / r_star, sample radius after pullback
  double S_sigma = 0.0;
  double S_full = 0.0;
  double s = 0.0;              // density plateau radius found by the scan
  double kappa = 0.0;
  double boundary_mean = 0.0;  // mean of the shifted section on the pullback sphere
  double mass_term = 0.0;      // c_n mu(B) of the pullback section
  double theta_top = 0.0;      // max over samples of theta(z, ~1)
  double emitted_C = 0.0;
  double lower_bound_u = 0.0;  // nu log(eta / C)
  double lower_bound_V = 0.0;  // S_sigma + lower_bound_u (S_full - S_sigma)
  ExclusionReport exclusion;   // in pullback coordinates, invariant metric
  double euclid_content = 0.0;
  double euclid_bound = 0.0;   // 9^{n-1} (R e)^{2n-2+alpha} eta^alpha / alpha
  long long checked_good = 0;
  long long violations = 0;
  double violation_fraction = 0.0;
  double worst_margin = 0.0;
  bool content_pass = false;
  bool pass = false;
};

// Minimum principle across three spheres: after normalizing V between the
// sigma R and R sups and pulling the ball of radius r* R back to the unit
// ball, run the invariant exclusion sweep at eps = eta/3 and verify
//   V(z) >= S_sigma + nu log(eta / C) (S_full - S_sigma)
// at good samples (<= 0.1% tolerated violations), with the expanded cover's
// Euclidean hulls obeying the 9^{n-1} (R e)^{2n-2+alpha} eta^alpha / alpha
// content budget. Samples must lie in the closed ball of radius tau R.
ThreeCircleMinReport three_circle_min_principle(const PshOracle& V, const std::vector<CPoint>& samples,
                                                const ThreeCircleParams& params,
                                                const SphereQuadrature& quad, double c_n = 0.0,
                                                double tol = 1e-6);

struct OriginNormalizedReport {
  double V0 = 0.0;
  ThreeCircleMinReport inner;
  bool pass = false;
};

// Specialization for V psh on B_{2eR} with V(0) = 0: sigma = 1e-3,
// tau = 1/(2e), nu = 1, run on the dilated ball of radius 2eR so the sample
// ball tau (2eR) is exactly B_R.
OriginNormalizedReport origin_min_principle(const PshOracle& V, const std::vector<CPoint>& samples,
                                            double R, double eta, double alpha,
                                            const SphereQuadrature& quad, double c_n = 0.0,
                                            double tol = 1e-6);

struct EssentialLowerBound {
  double value = 0.0;
  long long removed = 0;
  double content_removed = 0.0;
  double eps = 0.0;
};

// Largest floor achievable by deleting a sample subset of
// (2n-2+alpha)-content at most eps: sort values ascending, remove the worst
// prefix whose content estimate stays within budget, report the next value.
EssentialLowerBound essential_lower_bound(const PshOracle& V, const std::vector<CPoint>& samples,
                                          double alpha, double eps);

}  // namespace lemlab
