#include "lemlab/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lemlab {

CapacityEstimate capacity_disc(double radius) {
  if (!(radius >= 0.0)) throw std::invalid_argument("capacity_disc: radius must be nonnegative");
  CapacityEstimate out;
  out.value = radius;
  out.raw = radius;
  return out;
}

CapacityEstimate capacity_segment(double length) {
  if (!(length >= 0.0)) throw std::invalid_argument("capacity_segment: length must be nonnegative");
  CapacityEstimate out;
  out.value = length / 4.0;
  out.raw = out.value;
  return out;
}

namespace {

constexpr double kLogZero = -1e300;

double pair_log(const complex& a, const complex& b) {
  const double d = std::abs(a - b);
  return d < 1e-300 ? kLogZero : std::log(d);
}

// Greedy Fekete subset of size k, polished by single-point exchanges.
std::vector<std::size_t> fekete_subset(const std::vector<complex>& pts, std::size_t k) {
  const std::size_t m = pts.size();
  std::vector<std::size_t> sel;

  std::size_t bi = 0, bj = 1;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d = std::abs(pts[i] - pts[j]);
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  }
  sel = {bi, bj};

  std::vector<char> used(m, 0);
  used[bi] = used[bj] = 1;
  // gain[i] = sum of log-distances from pts[i] to the current subset
  std::vector<double> gain(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) gain[i] = pair_log(pts[i], pts[bi]) + pair_log(pts[i], pts[bj]);

  while (sel.size() < k) {
    std::size_t pick = m;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (!used[i] && gain[i] > best_gain) {
        best_gain = gain[i];
        pick = i;
      }
    }
    if (pick == m || best_gain <= kLogZero) break;  // only duplicates left
    used[pick] = 1;
    sel.push_back(pick);
    for (std::size_t i = 0; i < m; ++i) gain[i] += pair_log(pts[i], pts[pick]);
  }

  // Exchange polish: replace one selected point by one outside point whenever
  // that raises the pairwise log-energy.
  for (int pass = 0; pass < 20; ++pass) {
    bool improved = false;
    for (std::size_t s = 0; s < sel.size(); ++s) {
      double keep = 0.0;
      for (std::size_t t = 0; t < sel.size(); ++t) {
        if (t != s) keep += pair_log(pts[sel[s]], pts[sel[t]]);
      }
      double best_delta = 1e-12;
      std::size_t best_cand = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (used[i]) continue;
        double cand = 0.0;
        for (std::size_t t = 0; t < sel.size(); ++t) {
          if (t != s) cand += pair_log(pts[i], pts[sel[t]]);
        }
        if (cand - keep > best_delta) {
          best_delta = cand - keep;
          best_cand = i;
        }
      }
      if (best_cand != m) {
        used[sel[s]] = 0;
        used[best_cand] = 1;
        sel[s] = best_cand;
        improved = true;
      }
    }
    if (!improved) break;
  }
  std::sort(sel.begin(), sel.end());
  return sel;
}

// log d_k = (2 / k(k-1)) sum_{i<j} log|p_i - p_j| over the Fekete subset.
double log_dk(const std::vector<complex>& pts, std::size_t k, std::size_t& k_used) {
  std::vector<std::size_t> sel = fekete_subset(pts, k);
  k_used = sel.size();
  if (k_used < 2) return kLogZero;
  double e = 0.0;
  for (std::size_t i = 0; i < k_used; ++i) {
    for (std::size_t j = i + 1; j < k_used; ++j) {
      const double l = pair_log(pts[sel[i]], pts[sel[j]]);
      if (l <= kLogZero) return kLogZero;
      e += l;
    }
  }
  return 2.0 * e / (static_cast<double>(k_used) * (k_used - 1));
}

}  // namespace

CapacityEstimate capacity_cloud(const std::vector<complex>& points, int k_max) {
  if (points.empty()) throw std::invalid_argument("capacity_cloud: empty cloud");
  if (k_max < 2) throw std::invalid_argument("capacity_cloud: k_max must be at least 2");
  CapacityEstimate out;
  out.method = CapacityMethod::FEKETE;
  if (points.size() < 2) return out;  // a point has capacity zero

  const std::size_t k = std::min<std::size_t>(points.size(), static_cast<std::size_t>(k_max));
  std::size_t k_used = 0, k_half_used = 0;
  const double t_k = log_dk(points, k, k_used);
  if (t_k <= kLogZero || k_used < 2) return out;  // all points coincide
  out.nodes = static_cast<int>(k_used);
  out.raw = std::exp(t_k);

  // d_k drifts above the capacity like cap * exp(c log k / (k-1)); fit the
  // drift coefficient from the k and k/2 values and remove it. For a circle
  // cloud c = 1 exactly and the extrapolation is exact.
  const std::size_t k_half = std::max<std::size_t>(2, k_used / 2);
  if (k_half >= k_used) {
    out.value = out.raw;
    out.uncertainty = out.raw;
    return out;
  }
  const double t_h = log_dk(points, k_half, k_half_used);
  const double u_k = std::log(static_cast<double>(k_used)) / (k_used - 1);
  const double u_h = std::log(static_cast<double>(k_half_used)) / (k_half_used - 1);
  const double c_fit = (t_h - t_k) / (u_h - u_k);
  const double t_inf = t_k - c_fit * u_k;
  out.value = std::exp(t_inf);
  out.uncertainty = out.value * (std::abs(c_fit - 1.0) * u_k + u_k * u_k);
  return out;
}

ContentCapacityComparison content_capacity_comparison(const std::vector<complex>& points,
                                                      double alpha, int k_max) {
  if (!(alpha > 0.0) || !(alpha <= 2.0)) throw std::invalid_argument("content_capacity_comparison: alpha must lie in (0, 2]");
  ContentCapacityComparison out;
  std::vector<CPoint> cloud;
  cloud.reserve(points.size());
  for (const complex& z : points) {
    CPoint p = CPoint::zero(1);
    p.z[0] = z;
    cloud.push_back(p);
  }
  out.content_upper = hausdorff_content_upper(cloud, alpha, 0.0, Metric::EUCLIDEAN, k_max).value;
  out.capacity = capacity_cloud(points, k_max).value;
  out.capacity_bound = std::pow(5.0 * std::exp(1.0) * out.capacity, alpha) / alpha;
  out.flag = out.content_upper <= out.capacity_bound ? ComparisonFlag::HOLDS : ComparisonFlag::INCONCLUSIVE;
  return out;
}

}  // namespace lemlab
