#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace lemlab {

typedef std::complex<double> complex;

// Point of C^n. n is small (1..3 in practice) so value semantics are fine.
struct CPoint {
  std::vector<complex> z;

  CPoint() = default;
  explicit CPoint(std::vector<complex> c) : z(std::move(c)) {}
  CPoint(std::initializer_list<complex> c) : z(c) {}
  static CPoint zero(int n) { return CPoint(std::vector<complex>(n, complex(0.0, 0.0))); }

  int dim() const { return static_cast<int>(z.size()); }
  complex& operator[](int i) { return z[i]; }
  const complex& operator[](int i) const { return z[i]; }
};

// Hermitian inner product <z,w> = sum z_k * conj(w_k).
inline complex inner(const CPoint& a, const CPoint& b) {
  complex s(0.0, 0.0);
  for (int i = 0; i < a.dim(); ++i) s += a.z[i] * std::conj(b.z[i]);
  return s;
}

inline double norm_sq(const CPoint& a) {
  double s = 0.0;
  for (const complex& c : a.z) s += std::norm(c);
  return s;
}

inline double norm(const CPoint& a) { return std::sqrt(norm_sq(a)); }

inline CPoint operator+(const CPoint& a, const CPoint& b) {
  CPoint r = a;
  for (int i = 0; i < r.dim(); ++i) r.z[i] += b.z[i];
  return r;
}

inline CPoint operator-(const CPoint& a, const CPoint& b) {
  CPoint r = a;
  for (int i = 0; i < r.dim(); ++i) r.z[i] -= b.z[i];
  return r;
}

inline CPoint operator*(const complex& s, const CPoint& a) {
  CPoint r = a;
  for (complex& c : r.z) c *= s;
  return r;
}

inline CPoint operator*(double s, const CPoint& a) { return complex(s, 0.0) * a; }

inline double euclidean_distance(const CPoint& a, const CPoint& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return norm(a - b);
}

// Volume of the unit ball of R^{2n-2}: pi^{n-1}/(n-1)!. Used by the
// projective-mass / ball-mass conversion; the 0-dimensional value is 1.
inline double ball_volume_2n_minus_2(int n) {
  double v = 1.0;
  for (int k = 1; k < n; ++k) v *= 3.14159265358979323846 / k;
  return v;
}

}  // namespace lemlab
