#include "lemlab/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lemlab {

namespace {

struct Disc {
  complex c;
  double r = 0.0;
};

bool in_disc(const Disc& d, const complex& p) { return std::abs(p - d.c) <= d.r * (1.0 + 1e-12) + 1e-14; }

Disc disc2(const complex& a, const complex& b) {
  Disc d;
  d.c = 0.5 * (a + b);
  d.r = 0.5 * std::abs(a - b);
  return d;
}

Disc disc3(const complex& a, const complex& b, const complex& c) {
  double ax = a.real(), ay = a.imag();
  double bx = b.real(), by = b.imag();
  double cx = c.real(), cy = c.imag();
  double det = 2.0 * ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
  if (std::abs(det) < 1e-14 * (std::norm(b - a) + std::norm(c - a))) {
    // Collinear: the farthest pair spans the disc.
    Disc d = disc2(a, b);
    Disc e = disc2(a, c);
    Disc f = disc2(b, c);
    if (e.r > d.r) d = e;
    if (f.r > d.r) d = f;
    return d;
  }
  double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  double ux = ((b2 - a2) * (cy - ay) - (c2 - a2) * (by - ay)) / det;
  double uy = ((c2 - a2) * (bx - ax) - (b2 - a2) * (cx - ax)) / det;
  Disc d;
  d.c = complex(ux, uy);
  d.r = std::max({std::abs(a - d.c), std::abs(b - d.c), std::abs(c - d.c)});
  return d;
}

Disc trivial_disc(const std::vector<complex>& support) {
  switch (support.size()) {
    case 0:
      return Disc{complex(0, 0), 0.0};
    case 1:
      return Disc{support[0], 0.0};
    case 2:
      return disc2(support[0], support[1]);
    default:
      return disc3(support[0], support[1], support[2]);
  }
}

Disc welzl(std::vector<complex>& pts, size_t limit, std::vector<complex> support) {
  if (limit == 0 || support.size() == 3) return trivial_disc(support);
  Disc d = welzl(pts, limit - 1, support);
  const complex p = pts[limit - 1];
  if (in_disc(d, p)) return d;
  support.push_back(p);
  d = welzl(pts, limit - 1, support);
  // Move-to-front keeps the recursion shallow on structured inputs.
  std::rotate(pts.begin(), pts.begin() + (limit - 1), pts.begin() + limit);
  return d;
}

}  // namespace

void min_enclosing_disc(const std::vector<complex>& pts, complex& center, double& radius) {
  std::vector<complex> work = pts;
  Disc d = welzl(work, work.size(), {});
  // One tightening pass: the arithmetic above can undershoot by rounding.
  double r = d.r;
  for (const complex& p : pts) r = std::max(r, std::abs(p - d.c));
  center = d.c;
  radius = r;
}

namespace {

// Cluster center minimizing the max metric distance, over the allowed
// candidate set: exact enclosing center in the planar Euclidean case, best
// member point otherwise.
void cluster_ball(const std::vector<CPoint>& pts, const std::vector<int>& idx, Metric metric,
                  CPoint& center, double& radius) {
  if (metric == Metric::EUCLIDEAN && pts[idx[0]].dim() == 1) {
    std::vector<complex> flat;
    flat.reserve(idx.size());
    for (int i : idx) flat.push_back(pts[i].z[0]);
    complex c;
    double r;
    min_enclosing_disc(flat, c, r);
    center = CPoint{c};
    radius = r;
    return;
  }
  double best = std::numeric_limits<double>::infinity();
  int best_i = idx[0];
  for (int i : idx) {
    double worst = 0.0;
    for (int j : idx) worst = std::max(worst, metric_distance(pts[i], pts[j], metric));
    if (worst < best) {
      best = worst;
      best_i = i;
    }
  }
  center = pts[best_i];
  radius = best;
}

}  // namespace

ContentEstimate hausdorff_content_upper(const std::vector<CPoint>& points, double power,
                                        double delta_cap, Metric metric, int max_balls) {
  if (points.empty()) throw std::invalid_argument("content estimate needs at least one point");
  if (!(power > 0.0)) throw std::invalid_argument("content power must be positive");
  const int n = static_cast<int>(points.size());
  const bool capped = delta_cap > 0.0;
  const double floor_r = capped ? std::min(kRadiusFloor, delta_cap) : kRadiusFloor;

  ContentEstimate best;
  best.value = std::numeric_limits<double>::infinity();

  const int kmax = std::min(max_balls, n);
  std::vector<int> seeds;
  std::vector<double> dist_to_seeds(n, std::numeric_limits<double>::infinity());
  seeds.reserve(kmax);

  for (int k = 1; k <= kmax; ++k) {
    if (k == 1) {
      seeds.push_back(0);
    } else {
      int far = -1;
      double fd = -1.0;
      for (int i = 0; i < n; ++i) {
        if (dist_to_seeds[i] > fd) {
          fd = dist_to_seeds[i];
          far = i;
        }
      }
      seeds.push_back(far);
    }
    int s = seeds.back();
    for (int i = 0; i < n; ++i) {
      dist_to_seeds[i] = std::min(dist_to_seeds[i], metric_distance(points[i], points[s], metric));
    }

    std::vector<std::vector<int>> clusters(k);
    for (int i = 0; i < n; ++i) {
      int nearest = 0;
      double nd = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        double d = metric_distance(points[i], points[seeds[c]], metric);
        if (d < nd) {
          nd = d;
          nearest = c;
        }
      }
      clusters[nearest].push_back(i);
    }

    bool feasible = true;
    double value = 0.0;
    BallCover cover;
    std::vector<size_t> sizes;
    for (const std::vector<int>& cl : clusters) {
      if (cl.empty()) continue;
      CPoint c;
      double r;
      cluster_ball(points, cl, metric, c, r);
      r = std::max(r, floor_r);
      if (capped && r > delta_cap) {
        feasible = false;
        break;
      }
      cover.balls.emplace_back(c, r, metric);
      sizes.push_back(cl.size());
      value += std::pow(r, power);
    }
    if (!feasible) continue;

    // Largest cluster first in the reported cover.
    std::vector<int> order(cover.balls.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sizes[a] > sizes[b]; });
    BallCover sorted;
    for (int i : order) sorted.balls.push_back(cover.balls[i]);

    if (value < best.value) {
      best.value = value;
      best.cover = std::move(sorted);
    }
  }

  if (!std::isfinite(best.value)) {
    // Cap tighter than every multi-ball cover: fall back to singletons.
    best.value = 0.0;
    best.cover.balls.clear();
    for (const CPoint& p : points) {
      best.cover.balls.emplace_back(p, floor_r, metric);
      best.value += std::pow(floor_r, power);
    }
  }
  return best;
}

}  // namespace lemlab
