#pragma once

#include "lemlab/complex_point.hpp"

namespace lemlab {

// Automorphism of the unit ball of C^n swapping z and 0:
//   Phi_z(w) = (z - P_z w - s_z Q_z w) / (1 - <w,z>),
// P_z the projection onto the span of z, Q_z = Id - P_z, s_z = sqrt(1-|z|^2).
// The base point z = 0 maps to the identity.
struct MoebiusMap {
  CPoint base;
  explicit MoebiusMap(CPoint z);
  CPoint operator()(const CPoint& w) const;
};

CPoint moebius_apply(const CPoint& z, const CPoint& w);

// d(z,w) = |Phi_z(w)|, the pseudo-hyperbolic distance of the unit ball.
double invariant_distance(const CPoint& z, const CPoint& w);

// log d(z,w): the invariant Green function with pole at z.
// Coincident arguments give the sentinel "minus infinity" via -HUGE_VAL guard
// at call sites; here the raw log is returned (finite for z != w).
double green_value(const CPoint& z, const CPoint& w);

// Poisson-Szego kernel (1-|z|^2)^n / |1-<z,w>|^{2n} for |w| = 1.
double poisson_szego(const CPoint& z, const CPoint& boundary_point);

// Sup of the Poisson-Szego kernel over |z| <= rho: ((1+rho)/(1-rho))^n.
double poisson_szego_sup_bound(double rho, int n);

}  // namespace lemlab
