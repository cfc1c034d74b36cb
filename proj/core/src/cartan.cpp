#include "lemlab/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lemlab/hausdorff.hpp"
#include "lemlab/parallel.hpp"
#include "lemlab/potentials.hpp"

namespace lemlab {

double min_modulus_constant(double eta) {
  if (!(eta > 0.0) || !(eta <= 1.0)) throw std::invalid_argument("min_modulus_constant: eta must lie in (0, 1]");
  return std::log(3.0 * std::exp(3.0) / (2.0 * eta));
}

namespace {

// Candidate centers for the decision "does some disc of radius q cover >= p
// of the remaining points": the points themselves plus, for every pair within
// distance 2q, the two intersections of the radius-q circles around them. A
// disc position maximizing the cover count can always be slid to one of these.
std::vector<complex> candidate_centers(const std::vector<complex>& pts, double q) {
  std::vector<complex> cand = pts;
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const complex mid = 0.5 * (pts[i] + pts[j]);
      const double d = std::abs(pts[j] - pts[i]);
      if (d < 1e-300 || d > 2.0 * q) continue;
      const double h2 = q * q - 0.25 * d * d;
      const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
      const complex dir = (pts[j] - pts[i]) / d;
      const complex normal(-dir.imag(), dir.real());
      cand.push_back(mid + h * normal);
      cand.push_back(mid - h * normal);
    }
  }
  return cand;
}

std::vector<std::size_t> covered_indices(const std::vector<complex>& pts, const complex& c, double q) {
  std::vector<std::size_t> idx;
  const double limit = q * (1.0 + 1e-12) + 1e-300;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (std::abs(pts[i] - c) <= limit) idx.push_back(i);
  }
  return idx;
}

}  // namespace

BallCover cartan_cover(const std::vector<complex>& roots, double eps, double alpha) {
  if (roots.empty()) throw std::invalid_argument("cartan_cover: empty root set");
  if (!(eps > 0.0)) throw std::invalid_argument("cartan_cover: eps must be positive");
  if (!(alpha > 0.0) || !(alpha <= 2.0)) throw std::invalid_argument("cartan_cover: alpha must lie in (0, 2]");

  const double d = static_cast<double>(roots.size());
  const double lambda = eps * std::pow(std::exp(1.0) / d, 1.0 / alpha);

  std::vector<complex> remaining = roots;
  BallCover cover;

  while (!remaining.empty()) {
    const std::size_t m = remaining.size();
    std::size_t best_p = 0;
    std::vector<std::size_t> best_group;
    // Largest p first: the first p admitting a radius-q_p disc with >= p
    // points is the stage multiplicity.
    for (std::size_t p = m; p >= 1; --p) {
      const double q = lambda * std::pow(static_cast<double>(p), 1.0 / alpha);
      std::vector<std::size_t> group;
      for (const complex& c : candidate_centers(remaining, q)) {
        std::vector<std::size_t> idx = covered_indices(remaining, c, q);
        if (idx.size() > group.size()) group = std::move(idx);
        if (group.size() >= m) break;
      }
      if (group.size() >= p) {
        best_p = p;
        best_group = std::move(group);
        break;
      }
    }
    if (best_p == 0) throw std::logic_error("cartan_cover: stage selection failed");

    const double q = lambda * std::pow(static_cast<double>(best_p), 1.0 / alpha);
    std::vector<complex> group_pts;
    group_pts.reserve(best_group.size());
    for (std::size_t i : best_group) group_pts.push_back(remaining[i]);
    complex center;
    double rho = 0.0;
    min_enclosing_disc(group_pts, center, rho);

    CPoint c = CPoint::zero(1);
    c.z[0] = center;
    cover.balls.emplace_back(c, q + rho, Metric::EUCLIDEAN);

    std::vector<complex> next;
    next.reserve(m - best_group.size());
    std::vector<char> drop(m, 0);
    for (std::size_t i : best_group) drop[i] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (!drop[i]) next.push_back(remaining[i]);
    }
    remaining = std::move(next);
  }
  return cover;
}

LemniscateCheck verify_lemniscate_cover(const std::vector<complex>& roots, double eps,
                                        const BallCover& cover, int grid_resolution, double extent) {
  if (roots.empty()) throw std::invalid_argument("verify_lemniscate_cover: empty root set");
  if (grid_resolution < 2) throw std::invalid_argument("verify_lemniscate_cover: grid too coarse");
  LemniscateCheck out;
  out.min_margin = std::numeric_limits<double>::infinity();
  const double d = static_cast<double>(roots.size());
  const double threshold = d * std::log(eps);
  const double step = 2.0 * extent / (grid_resolution - 1);
  std::vector<long> row_checked(grid_resolution, 0), row_violations(grid_resolution, 0);
  std::vector<double> row_margin(grid_resolution, std::numeric_limits<double>::infinity());
  parallel_for(grid_resolution, [&](int iy) {
    for (int ix = 0; ix < grid_resolution; ++ix) {
      const complex z(-extent + step * ix, -extent + step * iy);
      if (std::abs(z) > extent) continue;
      bool covered = false;
      for (const MetricBall& b : cover.balls) {
        if (std::abs(z - b.center.z[0]) <= b.radius * (1.0 + 1e-12)) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      double log_abs = 0.0;
      bool at_root = false;
      for (const complex& a : roots) {
        const double dist = std::abs(z - a);
        if (dist < 1e-300) {
          at_root = true;
          break;
        }
        log_abs += std::log(dist);
      }
      ++row_checked[iy];
      const double margin = at_root ? -std::numeric_limits<double>::infinity() : log_abs - threshold;
      if (margin < 0.0) ++row_violations[iy];
      row_margin[iy] = std::min(row_margin[iy], margin);
    }
  });
  for (int iy = 0; iy < grid_resolution; ++iy) {
    out.checked += row_checked[iy];
    out.violations += row_violations[iy];
    out.min_margin = std::min(out.min_margin, row_margin[iy]);
  }
  out.pass = out.checked > 0 && out.violations == 0;
  return out;
}

MinModulusReport min_modulus_1d(const std::vector<complex>& zeros, double R, double eta,
                                int grid_resolution) {
  if (!(R > 0.0)) throw std::invalid_argument("min_modulus_1d: R must be positive");
  if (!(eta > 0.0) || !(eta < 1.0)) throw std::invalid_argument("min_modulus_1d: eta must lie in (0, 1)");
  for (const complex& a : zeros) {
    if (std::abs(a) < 1e-300) throw std::invalid_argument("min_modulus_1d: zeros must avoid the origin (f(0) = 1)");
  }

  MinModulusReport out;
  out.H = min_modulus_constant(eta);

  // log|f| for f(z) = prod (1 - z/a_k), as an atomic logarithmic potential
  // with unit weights and shift -sum log|a_k|.
  std::vector<PolyFactor> factors;
  for (const complex& a : zeros) factors.push_back({a, 1});
  PshOracle logf;
  double shift = 0.0;
  if (!zeros.empty()) {
    logf = log_poly_potential(factors, 1.0, false);
    for (const complex& a : zeros) shift -= std::log(std::abs(a));
  }
  auto eval_logf = [&](const complex& z) -> double {
    if (zeros.empty()) return 0.0;
    CPoint p = CPoint::zero(1);
    p.z[0] = z;
    auto v = logf.eval(p);
    if (!v) return -std::numeric_limits<double>::infinity();
    return *v + shift;
  };

  // Exceptional discs from the zeros within |z| <= 2R, at eps = eta R / e, so
  // the total radius is at most 2 e eps = 2 eta R.
  std::vector<complex> inner;
  for (const complex& a : zeros) {
    if (std::abs(a) <= 2.0 * R) inner.push_back(a);
  }
  if (!inner.empty()) {
    out.cover = cartan_cover(inner, eta * R / std::exp(1.0), 1.0);
  }
  for (const MetricBall& b : out.cover.balls) out.radius_sum += b.radius;

  // Max modulus on |z| = 2eR by dense angular sampling with local refinement.
  const double bigR = 2.0 * std::exp(1.0) * R;
  {
    const int nang = 4096;
    double best = -std::numeric_limits<double>::infinity();
    double best_t = 0.0;
    for (int k = 0; k < nang; ++k) {
      const double t = 2.0 * M_PI * k / nang;
      const double v = eval_logf(std::polar(bigR, t));
      if (v > best) {
        best = v;
        best_t = t;
      }
    }
    double lo = best_t - 2.0 * M_PI / nang, hi = best_t + 2.0 * M_PI / nang;
    for (int it = 0; it < 60; ++it) {
      const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (eval_logf(std::polar(bigR, m1)) < eval_logf(std::polar(bigR, m2))) {
        lo = m1;
      } else {
        hi = m2;
      }
    }
    out.log_max = std::max(best, eval_logf(std::polar(bigR, 0.5 * (lo + hi))));
  }

  const double floor_value = -out.H * out.log_max;
  out.min_margin = std::numeric_limits<double>::infinity();
  const double step = 2.0 * R / (grid_resolution - 1);
  std::vector<long> row_checked(grid_resolution, 0), row_violations(grid_resolution, 0);
  std::vector<double> row_margin(grid_resolution, std::numeric_limits<double>::infinity());
  parallel_for(grid_resolution, [&](int iy) {
    for (int ix = 0; ix < grid_resolution; ++ix) {
      const complex z(-R + step * ix, -R + step * iy);
      if (std::abs(z) > R) continue;
      bool covered = false;
      for (const MetricBall& b : out.cover.balls) {
        if (std::abs(z - b.center.z[0]) <= b.radius * (1.0 + 1e-12)) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      ++row_checked[iy];
      // Zero margin only occurs in the degenerate zero-free case f == 1,
      // where both sides vanish; count genuine undershoot only.
      const double margin = eval_logf(z) - floor_value;
      if (margin < 0.0) ++row_violations[iy];
      row_margin[iy] = std::min(row_margin[iy], margin);
    }
  });
  for (int iy = 0; iy < grid_resolution; ++iy) {
    out.checked += row_checked[iy];
    out.violations += row_violations[iy];
    out.min_margin = std::min(out.min_margin, row_margin[iy]);
  }
  out.pass = out.violations == 0 && out.radius_sum <= 2.0 * eta * R * (1.0 + 1e-9);
  return out;
}

}  // namespace lemlab
