#include "lemlab/green_potential.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "lemlab/moebius.hpp"
#include "lemlab/rng.hpp"

namespace lemlab {

PshOracle green_potential(const GreenPotentialSpec& spec, int theta_nodes, std::uint64_t seed) {
  if (spec.poles.empty()) {
    // Zero potential: legitimate vacuous member (mass-free), exact oracles.
    PshOracle zero;
    zero.dimension = spec.dimension;
    zero.provenance = Provenance::EXACT_ATOMIC_GREEN;
    AtomicMeasure none;
    none.dimension = spec.dimension;
    zero.atoms = none;
    zero.eval = [](const CPoint&) -> std::optional<double> { return 0.0; };
    zero.theta = [](const CPoint&, double) { return 0.0; };
    zero.mass = [](const MetricBall&) { return 0.0; };
    return zero;
  }
  for (const Atom& a : spec.poles) {
    if (a.location.dim() != spec.dimension) throw std::invalid_argument("pole dimension mismatch");
    if (norm_sq(a.location) >= 1.0) throw std::invalid_argument("poles must lie in the open unit ball");
    if (!(a.weight > 0.0)) throw std::invalid_argument("pole weights must be positive");
  }
  AtomicMeasure m;
  m.dimension = spec.dimension;
  m.atoms = spec.poles;

  PshOracle V;
  V.dimension = spec.dimension;
  V.atoms = m;
  V.eval = [m](const CPoint& p) -> std::optional<double> {
    double s = 0.0;
    for (const Atom& a : m.atoms) {
      double d = invariant_distance(a.location, p);
      if (d < 1e-300) return std::nullopt;
      s += a.weight * std::log(d);
    }
    return s;
  };
  if (spec.dimension == 1) {
    V.provenance = Provenance::EXACT_ATOMIC_GREEN;
    // The Riesz measure is the pole set itself, so both the Euclidean theta
    // and arbitrary-metric ball masses reduce to weighted counting.
    V.theta = [m](const CPoint& z, double t) {
      double s = 0.0;
      for (const Atom& a : m.atoms) {
        if (euclidean_distance(z, a.location) <= t) s += a.weight;
      }
      return s;
    };
    V.mass = [m](const MetricBall& b) {
      double s = 0.0;
      for (const Atom& a : m.atoms) {
        if (ball_contains(b, a.location)) s += a.weight;
      }
      return s;
    };
    return V;
  }
  PshOracle numeric = numeric_oracle(spec.dimension, V.eval, theta_nodes, seed);
  numeric.atoms = m;
  return numeric;
}

double invariant_theta(const PshOracle& V, const CPoint& z, double t, const SphereQuadrature& quad,
                       double log_step) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("invariant radius must lie in (0,1)");
  if (V.atoms && V.dimension == 1) {
    double s = 0.0;
    for (const Atom& a : V.atoms->atoms) {
      if (norm_sq(a.location) < 1.0 && invariant_distance(z, a.location) <= t) s += a.weight;
    }
    return s;
  }
  MoebiusMap phi(z);
  auto base = V.eval;
  auto pulled = [&phi, &base](const CPoint& w) { return base(phi(w)); };
  auto mean = [&](double r) {
    double s = 0.0;
    int finite = 0, poles = 0;
    for (const CPoint& node : quad.nodes) {
      std::optional<double> v = pulled(r * node);
      if (v) {
        s += *v;
        ++finite;
      } else {
        ++poles;
      }
    }
    if (poles * 100 > static_cast<int>(quad.nodes.size()) || finite == 0) {
      throw std::domain_error("invariant theta: too many pole nodes");
    }
    return s / finite;
  };
  double up = std::min(t * std::exp(log_step), 0.5 * (1.0 + t));
  double dn = t * std::exp(-log_step);
  return (mean(up) - mean(dn)) / (std::log(up) - std::log(dn));
}

double poisson_szego_integral(const PshOracle& V, const CPoint& z, const SphereQuadrature& quad) {
  if (quad.dimension != V.dimension) throw std::invalid_argument("quadrature dimension mismatch");
  double s = 0.0;
  int finite = 0, poles = 0;
  for (const CPoint& node : quad.nodes) {
    std::optional<double> v = V.eval(node);
    if (v) {
      s += *v * poisson_szego(z, node);
      ++finite;
    } else {
      ++poles;
    }
  }
  if (poles * 100 > static_cast<int>(quad.nodes.size()) || finite == 0) {
    throw std::domain_error("poisson-szego integral: too many pole nodes");
  }
  return s / finite;
}

double jensen_ps_residual(const PshOracle& V, const CPoint& z, const SphereQuadrature& quad) {
  if (norm_sq(z) >= 1.0) throw std::invalid_argument("z must lie in the open unit ball");
  std::optional<double> vz = V.eval(z);
  if (!vz) throw std::invalid_argument("jensen residual undefined at a pole");
  double pv = poisson_szego_integral(V, z, quad);
  double green;
  if (V.atoms && V.dimension == 1) {
    green = 0.0;
    for (const Atom& a : V.atoms->atoms) green += a.weight * std::log(invariant_distance(z, a.location));
  } else {
    auto th = [&](double t) { return invariant_theta(V, z, t, quad); };
    green = -log_integral(th, 1e-6, 1.0 - 1e-9, 1e-5);
  }
  return std::abs(*vz - pv - green);
}

MetricBall euclidean_hull(const MetricBall& invariant_ball) {
  if (invariant_ball.metric != Metric::INVARIANT) throw std::invalid_argument("expected an invariant ball");
  const CPoint& c = invariant_ball.center;
  double r = invariant_ball.radius;
  double c2 = norm_sq(c);
  double den = 1.0 - r * r * c2;
  CPoint center = ((1.0 - r * r) / den) * c;
  if (invariant_ball.center.dim() == 1) {
    double radius = r * (1.0 - c2) / den;
    return MetricBall(center, radius, Metric::EUCLIDEAN);
  }
  // Sampled hull: push sphere points of radius r through the involution.
  MoebiusMap phi(c);
  Rng rng(20240229);
  double radius = 0.0;
  for (int i = 0; i < 512; ++i) {
    CPoint b = phi(r * rng.unit_sphere(c.dim()));
    radius = std::max(radius, euclidean_distance(center, b));
  }
  return MetricBall(center, radius * (1.0 + 1e-9), Metric::EUCLIDEAN);
}

}  // namespace lemlab
