#include "lemlab/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "lemlab/rng.hpp"

namespace lemlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::optional<double> atomic_eval(const AtomicMeasure& m, double shift, const CPoint& p) {
  double s = shift;
  for (const Atom& a : m.atoms) {
    double d = euclidean_distance(p, a.location);
    if (d < 1e-300) return std::nullopt;
    s += a.weight * std::log(d);
  }
  return s;
}

double atomic_theta(const AtomicMeasure& m, const CPoint& z, double t) {
  double s = 0.0;
  for (const Atom& a : m.atoms) {
    if (euclidean_distance(z, a.location) <= t) s += a.weight;
  }
  return s;
}

double atomic_mass(const AtomicMeasure& m, const MetricBall& b) {
  double s = 0.0;
  for (const Atom& a : m.atoms) {
    if (ball_contains(b, a.location)) s += a.weight;
  }
  return s;
}

// Closed-form circle mean of an atomic potential: the mean of log|w - a| over
// |w - c| = r is log max(r, |a - c|).
double atomic_circle_mean(const AtomicMeasure& m, double shift, const CPoint& c, double r) {
  double s = shift;
  for (const Atom& a : m.atoms) s += a.weight * std::log(std::max(r, euclidean_distance(c, a.location)));
  return s;
}

struct NumericTheta {
  std::function<std::optional<double>(const CPoint&)> eval;
  std::shared_ptr<SphereQuadrature> quad;
  double h = 0.05;

  double mean(const CPoint& c, double r) const {
    double s = 0.0;
    int finite = 0, poles = 0;
    for (const CPoint& node : quad->nodes) {
      std::optional<double> v = eval(c + r * node);
      if (v) {
        s += *v;
        ++finite;
      } else {
        ++poles;
      }
    }
    if (poles * 100 > static_cast<int>(quad->nodes.size()) || finite == 0) {
      throw std::domain_error("sphere mean: too many nodes on the pole sentinel");
    }
    return s / finite;
  }

  double operator()(const CPoint& z, double t) const {
    return (mean(z, t * std::exp(h)) - mean(z, t * std::exp(-h))) / (2.0 * h);
  }
};

}  // namespace

PshOracle discrete_potential(const AtomicMeasure& measure, int theta_nodes, std::uint64_t seed) {
  if (measure.atoms.empty()) throw std::invalid_argument("measure needs at least one atom");
  for (const Atom& a : measure.atoms) {
    if (a.location.dim() != measure.dimension) throw std::invalid_argument("atom dimension mismatch");
    if (!(a.weight > 0.0)) throw std::invalid_argument("atom weights must be positive");
  }
  PshOracle V;
  V.dimension = measure.dimension;
  V.atoms = measure;
  AtomicMeasure m = measure;
  V.eval = [m](const CPoint& p) { return atomic_eval(m, 0.0, p); };
  if (measure.dimension == 1) {
    V.provenance = Provenance::EXACT_ATOMIC_1D;
    V.theta = [m](const CPoint& z, double t) { return atomic_theta(m, z, t); };
    V.mass = [m](const MetricBall& b) { return atomic_mass(m, b); };
  } else {
    V.provenance = Provenance::NUMERIC_SPHERE_MEAN;
    int nodes = theta_nodes > 0 ? theta_nodes : default_node_count(measure.dimension);
    NumericTheta nt{V.eval, std::make_shared<SphereQuadrature>(SphereQuadrature::make(measure.dimension, nodes, seed)), 0.05};
    V.theta = nt;
    int n = measure.dimension;
    auto theta = V.theta;
    V.mass = [theta, n](const MetricBall& b) {
      if (b.metric != Metric::EUCLIDEAN) throw std::domain_error("numeric mass defined for Euclidean balls only");
      return ball_volume_2n_minus_2(n) * std::pow(b.radius, 2 * n - 2) * theta(b.center, b.radius);
    };
  }
  return V;
}

PshOracle log_poly_potential(const std::vector<PolyFactor>& factors, complex lead, bool normalize) {
  if (factors.empty()) throw std::invalid_argument("polynomial needs at least one factor");
  if (std::abs(lead) < 1e-300) throw std::invalid_argument("lead coefficient must be nonzero");
  int d = 0;
  for (const PolyFactor& f : factors) {
    if (f.multiplicity < 1) throw std::invalid_argument("multiplicities must be >= 1");
    d += f.multiplicity;
  }
  double scale = normalize ? 1.0 / d : 1.0;
  AtomicMeasure m;
  m.dimension = 1;
  for (const PolyFactor& f : factors) m.atoms.push_back({CPoint{f.root}, scale * f.multiplicity});
  PshOracle V = discrete_potential(m);
  double shift = scale * std::log(std::abs(lead));
  V.additive_shift = shift;
  AtomicMeasure mm = m;
  V.eval = [mm, shift](const CPoint& p) { return atomic_eval(mm, shift, p); };
  return V;
}

PshOracle numeric_oracle(int dimension, std::function<std::optional<double>(const CPoint&)> eval,
                         int theta_nodes, std::uint64_t seed, double log_step) {
  PshOracle V;
  V.dimension = dimension;
  V.provenance = Provenance::NUMERIC_SPHERE_MEAN;
  V.eval = std::move(eval);
  int nodes = theta_nodes > 0 ? theta_nodes : default_node_count(dimension);
  NumericTheta nt{V.eval, std::make_shared<SphereQuadrature>(SphereQuadrature::make(dimension, nodes, seed)), log_step};
  V.theta = nt;
  auto theta = V.theta;
  V.mass = [theta, dimension](const MetricBall& b) {
    if (b.metric != Metric::EUCLIDEAN) throw std::domain_error("numeric mass defined for Euclidean balls only");
    return ball_volume_2n_minus_2(dimension) * std::pow(b.radius, 2 * dimension - 2) * theta(b.center, b.radius);
  };
  return V;
}

double sphere_mean(const PshOracle& V, const CPoint& center, double r, const SphereQuadrature& quad) {
  if (quad.dimension != V.dimension) throw std::invalid_argument("quadrature dimension mismatch");
  if (!(r > 0.0)) throw std::invalid_argument("sphere radius must be positive");
  double s = 0.0;
  int finite = 0, poles = 0;
  for (const CPoint& node : quad.nodes) {
    std::optional<double> v = V.eval(center + r * node);
    if (v) {
      s += *v;
      ++finite;
    } else {
      ++poles;
    }
  }
  if (poles * 100 > static_cast<int>(quad.nodes.size()) || finite == 0) {
    throw std::domain_error("sphere mean: too many nodes on the pole sentinel");
  }
  return s / finite;
}

double theta_from_sphere_means(const PshOracle& V, const CPoint& z, double t, const SphereQuadrature& quad,
                               double log_step) {
  if (!(t > 0.0)) throw std::invalid_argument("theta radius must be positive");
  if (V.provenance != Provenance::NUMERIC_SPHERE_MEAN && V.theta) return V.theta(z, t);
  double up = sphere_mean(V, z, t * std::exp(log_step), quad);
  double dn = sphere_mean(V, z, t * std::exp(-log_step), quad);
  return (up - dn) / (2.0 * log_step);
}

namespace {

double golden_max(const std::function<double(double)>& f, double a, double b, int iters = 80) {
  const double phi = 0.6180339887498949;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

double sup_on_sphere(const PshOracle& V, const CPoint& center, double r, int node_count, std::uint64_t seed) {
  const double kNegHuge = -1e300;
  if (V.dimension == 1) {
    auto at = [&](double t) {
      CPoint p = center + CPoint{r * complex(std::cos(t), std::sin(t))};
      std::optional<double> v = V.eval(p);
      return v ? *v : kNegHuge;
    };
    int n = node_count;
    double best = kNegHuge;
    int best_i = 0;
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) {
      vals[i] = at(2.0 * kPi * i / n);
      if (vals[i] > best) {
        best = vals[i];
        best_i = i;
      }
    }
    if (best == kNegHuge) throw std::domain_error("sphere sup: all samples on the pole sentinel");
    // Refine around the best few samples; psh maxima are smooth in practice.
    std::vector<int> cand = {best_i};
    for (int i = 0; i < n; ++i) {
      if (i != best_i && vals[i] > best - 0.5 * std::abs(best * 1e-2 + 1e-2)) cand.push_back(i);
      if (cand.size() >= 6) break;
    }
    double h = 2.0 * kPi / n;
    for (int i : cand) {
      double t0 = 2.0 * kPi * i / n;
      best = std::max(best, golden_max(at, t0 - h, t0 + h));
    }
    return best;
  }
  Rng rng(seed);
  double best = kNegHuge;
  for (int i = 0; i < node_count; ++i) {
    CPoint p = center + r * rng.unit_sphere(V.dimension);
    std::optional<double> v = V.eval(p);
    if (v && *v > best) best = *v;
  }
  if (best == kNegHuge) throw std::domain_error("sphere sup: all samples on the pole sentinel");
  return best;
}

double sup_on_sphere(const PshOracle& V, const CPoint& center, double r) {
  return sup_on_sphere(V, center, r, V.dimension == 1 ? 4096 : 100000, 987);
}

LelongEstimate lelong_number(const PshOracle& V, const CPoint& a, const std::vector<double>& r_seq) {
  if (r_seq.size() < 3) throw std::invalid_argument("lelong estimate needs at least three radii");
  for (size_t i = 0; i < r_seq.size(); ++i) {
    if (!(r_seq[i] > 0.0 && r_seq[i] < 1.0)) throw std::invalid_argument("radii must lie in (0,1)");
    if (i > 0 && !(r_seq[i] < r_seq[i - 1])) throw std::invalid_argument("radii must decrease");
  }
  LelongEstimate est;
  std::vector<double> maxima;
  for (double r : r_seq) {
    double m = sup_on_sphere(V, a, r);
    maxima.push_back(m);
    est.radii.push_back(r);
    est.ratios.push_back(m / std::log(r));
  }
  size_t k = r_seq.size();
  est.value = (maxima[k - 1] - maxima[k - 2]) / (std::log(r_seq[k - 1]) - std::log(r_seq[k - 2]));
  return est;
}

double robin_mean(const PshOracle& V, const SphereQuadrature& quad, const std::vector<double>& R_seq) {
  if (R_seq.empty()) throw std::invalid_argument("robin mean needs probe radii");
  double R = *std::max_element(R_seq.begin(), R_seq.end());
  if (V.atoms && V.dimension == 1) {
    return atomic_circle_mean(*V.atoms, V.additive_shift, CPoint::zero(1), R) - std::log(R);
  }
  return sphere_mean(V, CPoint::zero(V.dimension), R, quad) - std::log(R);
}

NormalizedOracle normalize_log_class(const PshOracle& V, const SphereQuadrature& quad) {
  double shift = robin_mean(V, quad);
  NormalizedOracle out;
  out.shift = shift;
  out.oracle = V;
  out.oracle.additive_shift = V.additive_shift - shift;
  auto base = V.eval;
  out.oracle.eval = [base, shift](const CPoint& p) -> std::optional<double> {
    std::optional<double> v = base(p);
    if (!v) return std::nullopt;
    return *v - shift;
  };
  return out;
}

double log_integral(const std::function<double(double)>& f, double a, double b, double rel_tol,
                    int max_doublings) {
  if (!(0.0 < a && a < b)) throw std::invalid_argument("log integral needs 0 < a < b");
  double ua = std::log(a), ub = std::log(b);
  int panels = 16;
  auto trap = [&](int m) {
    double h = (ub - ua) / m;
    double s = 0.5 * (f(a) + f(b));
    for (int i = 1; i < m; ++i) s += f(std::exp(ua + i * h));
    return s * h;
  };
  double prev = trap(panels);
  for (int k = 0; k < max_doublings; ++k) {
    panels *= 2;
    double cur = trap(panels);
    if (std::abs(cur - prev) <= rel_tol * (1.0 + std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

double poisson_jensen_residual(const PshOracle& V, double r, double R, const SphereQuadrature& quad) {
  if (!(0.0 < r && r < R)) throw std::invalid_argument("need 0 < r < R");
  CPoint o = CPoint::zero(V.dimension);
  if (V.atoms && V.dimension == 1) {
    double lhs = atomic_circle_mean(*V.atoms, V.additive_shift, o, R) -
                 atomic_circle_mean(*V.atoms, V.additive_shift, o, r);
    double rhs = 0.0;
    for (const Atom& a : V.atoms->atoms) {
      double d = euclidean_distance(o, a.location);
      if (d <= R) rhs += a.weight * std::log(R / std::max(r, d));
    }
    return std::abs(lhs - rhs);
  }
  double lhs = sphere_mean(V, o, R, quad) - sphere_mean(V, o, r, quad);
  auto th = [&](double t) { return theta_from_sphere_means(V, o, t, quad); };
  double rhs = log_integral(th, r, R, 1e-5);
  return std::abs(lhs - rhs);
}

double representation_residual(const PshOracle& V, const CPoint& z, double R, const SphereQuadrature& quad) {
  if (!(R > 0.0)) throw std::invalid_argument("R must be positive");
  std::optional<double> vz = V.eval(z);
  if (!vz) throw std::invalid_argument("representation residual undefined at a pole");
  if (V.atoms && V.dimension == 1) {
    double rec = atomic_circle_mean(*V.atoms, V.additive_shift, z, R);
    double th_R = 0.0, jumps = 0.0;
    for (const Atom& a : V.atoms->atoms) {
      double d = euclidean_distance(z, a.location);
      if (d <= R) {
        th_R += a.weight;
        jumps += a.weight * std::log(d);
      }
    }
    rec += -th_R * std::log(R) + jumps;
    return std::abs(rec - *vz);
  }
  // Numeric route: m_z(R) - int_0^R theta dt/t, the sub-1e-6 R tail of a
  // locally bounded potential contributes O(t^2) and is dropped.
  double m = sphere_mean(V, z, R, quad);
  auto th = [&](double t) { return theta_from_sphere_means(V, z, t, quad); };
  double integral = log_integral(th, R * 1e-6, R, 1e-5);
  return std::abs(m - integral - *vz);
}

}  // namespace lemlab
