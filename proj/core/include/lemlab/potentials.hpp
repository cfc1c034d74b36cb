#pragma once

#include <cstdint>
#include <vector>

#include "lemlab/oracle.hpp"
#include "lemlab/quadrature.hpp"

namespace lemlab {

struct PolyFactor {
  complex root;
  int multiplicity = 1;
};

// V = sum w_k log|z - a_k|. Exact counting oracle at n = 1; numeric
// sphere-mean oracle otherwise (nodes/seed configure its quadrature).
PshOracle discrete_potential(const AtomicMeasure& measure, int theta_nodes = 0, std::uint64_t seed = 42);

// V = (1/d) log|P| from a factored polynomial (d = total degree) when
// normalize is true, else log|P| itself. Exact atomic oracle, n = 1.
PshOracle log_poly_potential(const std::vector<PolyFactor>& factors, complex lead, bool normalize = true);

// Numeric oracle around an arbitrary evaluation callback.
PshOracle numeric_oracle(int dimension, std::function<std::optional<double>(const CPoint&)> eval,
                         int theta_nodes = 0, std::uint64_t seed = 42, double log_step = 0.05);

// Equal-weight average over the sphere |w - center| = r. Throws if more than
// 1% of nodes land on the -infinity sentinel.
double sphere_mean(const PshOracle& V, const CPoint& center, double r, const SphereQuadrature& quad);

// Projective mass via the log-derivative of sphere means,
// (m(t e^h) - m(t e^-h)) / (2h). Exact oracles take precedence.
double theta_from_sphere_means(const PshOracle& V, const CPoint& z, double t, const SphereQuadrature& quad,
                               double log_step = 0.05);

// Sampled sup of V over the sphere |w - center| = r (4096 angles plus local
// refinement at n = 1, 1e5 sampled directions at n >= 2).
double sup_on_sphere(const PshOracle& V, const CPoint& center, double r);
double sup_on_sphere(const PshOracle& V, const CPoint& center, double r, int node_count, std::uint64_t seed);

struct LelongEstimate {
  double value = 0.0;            // increment ratio over the two smallest radii
  std::vector<double> ratios;    // max/log r per radius, for convergence inspection
  std::vector<double> radii;
};

// Density of the Riesz mass at a: lim max_{|w-a|=r} V / log r. r_seq must be
// decreasing, inside (0,1), length >= 3.
LelongEstimate lelong_number(const PshOracle& V, const CPoint& a, const std::vector<double>& r_seq);

// m(R) - log R at the largest probe radius (default probes 1e2, 1e3, 1e4).
double robin_mean(const PshOracle& V, const SphereQuadrature& quad,
                  const std::vector<double>& R_seq = {1e2, 1e3, 1e4});

struct NormalizedOracle {
  PshOracle oracle;
  double shift = 0.0;  // value subtracted from V
};

// Shift V by -robin_mean(V) so the shifted potential has Robin mean zero.
NormalizedOracle normalize_log_class(const PshOracle& V, const SphereQuadrature& quad);

// | [m(R) - m(r)] - int_r^R theta(0,t) dt/t |, exact for atomic oracles,
// adaptive log-trapezoid otherwise.
double poisson_jensen_residual(const PshOracle& V, double r, double R, const SphereQuadrature& quad);

// Absolute gap between eval(z) and the Stieltjes reconstruction
// m_z(R) - theta(z,R) log R + int_0^R log t d theta(z,t).
double representation_residual(const PshOracle& V, const CPoint& z, double R, const SphereQuadrature& quad);

// Adaptive trapezoid of f(t) dt/t over [a,b] in the log variable.
double log_integral(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-6,
                    int max_doublings = 12);

}  // namespace lemlab
