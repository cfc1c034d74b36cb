#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "lemlab/complex_point.hpp"

namespace lemlab {

// Deterministic RNG. mt19937_64 output is pinned by the standard; the
// distribution transforms are written out explicitly so node sequences are
// reproducible across standard libraries, which the replay audit relies on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0,1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  std::uint64_t next_u64() { return eng_(); }

  // Box-Muller; one deviate per call, no state carried.
  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  complex unit_circle() {
    double t = 2.0 * 3.14159265358979323846 * uniform();
    return complex(std::cos(t), std::sin(t));
  }

  // Uniform on the unit sphere S^{2n-1} of C^n.
  CPoint unit_sphere(int n) {
    CPoint p = CPoint::zero(n);
    double s = 0.0;
    do {
      for (int i = 0; i < n; ++i) {
        p.z[i] = complex(gaussian(), gaussian());
      }
      s = norm_sq(p);
    } while (s <= 1e-300);
    double inv = 1.0 / std::sqrt(s);
    for (complex& c : p.z) c *= inv;
    return p;
  }

  // Uniform w.r.t. Lebesgue measure in the ball of radius r of C^n.
  CPoint ball(int n, double r) {
    CPoint dir = unit_sphere(n);
    double u = uniform();
    double rad = r * std::pow(u, 1.0 / (2.0 * n));
    return rad * dir;
  }

  complex disc(double r) {
    CPoint p = ball(1, r);
    return p.z[0];
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace lemlab
