#include "lemlab/moebius.hpp"

#include <cmath>
#include <stdexcept>

namespace lemlab {

MoebiusMap::MoebiusMap(CPoint z) : base(std::move(z)) {
  if (norm_sq(base) >= 1.0) throw std::invalid_argument("moebius base point must lie in the open unit ball");
}

CPoint MoebiusMap::operator()(const CPoint& w) const {
  double a2 = norm_sq(base);
  if (a2 < 1e-300) return w;
  complex ip = inner(w, base);  // <w,z>
  complex den = complex(1.0, 0.0) - ip;
  if (std::abs(den) < 1e-300) throw std::domain_error("moebius map evaluated at a singular pair");
  double s = std::sqrt(1.0 - a2);
  complex coef = ip / a2;
  CPoint r = w;
  for (int i = 0; i < r.dim(); ++i) {
    complex proj = coef * base.z[i];
    complex orth = w.z[i] - proj;
    r.z[i] = (base.z[i] - proj - s * orth) / den;
  }
  return r;
}

CPoint moebius_apply(const CPoint& z, const CPoint& w) { return MoebiusMap(z)(w); }

double invariant_distance(const CPoint& z, const CPoint& w) {
  double d = norm(moebius_apply(z, w));
  return d < 1.0 ? d : 1.0;
}

double green_value(const CPoint& z, const CPoint& w) {
  return std::log(invariant_distance(z, w));
}

double poisson_szego(const CPoint& z, const CPoint& boundary_point) {
  double num = 1.0 - norm_sq(z);
  double den = std::norm(complex(1.0, 0.0) - inner(z, boundary_point));
  int n = z.dim();
  return std::pow(num, n) / std::pow(den, n);
}

double poisson_szego_sup_bound(double rho, int n) {
  if (rho < 0.0 || rho >= 1.0) throw std::invalid_argument("rho must lie in [0,1)");
  return std::pow((1.0 + rho) / (1.0 - rho), n);
}

}  // namespace lemlab
