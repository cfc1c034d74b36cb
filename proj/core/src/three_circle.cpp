#include "lemlab/three_circle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lemlab/green_potential.hpp"
#include "lemlab/hausdorff.hpp"
#include "lemlab/moebius.hpp"
#include "lemlab/potentials.hpp"
#include "lemlab/rng.hpp"

namespace lemlab {

double three_circle_max_exponent(double sigma, double tau) {
  if (!(sigma > 0.0 && sigma <= tau && tau < 1.0)) {
    throw std::invalid_argument("three-circle exponents need 0 < sigma <= tau < 1");
  }
  return std::log(tau / sigma) / std::log(1.0 / sigma);
}

double three_circle_min_exponent(double sigma, double tau) {
  if (!(sigma >= 0.0 && sigma <= tau && tau > 0.0 && tau < 1.0)) {
    throw std::invalid_argument("three-circle exponents need 0 <= sigma <= tau < 1, tau > 0");
  }
  return 1.0 / std::log((1.0 + sigma * tau) / (sigma + tau));
}

HadamardCheck hadamard_max_check(const PshOracle& V, double sigma, double tau, double R,
                                 const std::vector<CPoint>& samples, double tol) {
  if (!(sigma > 0.0 && sigma < tau && tau < 1.0) || !(R > 0.0)) {
    throw std::invalid_argument("hadamard_max_check: need 0 < sigma < tau < 1 and R > 0");
  }
  HadamardCheck out;
  CPoint origin = CPoint::zero(V.dimension);
  out.S_sigma = sup_on_sphere(V, origin, sigma * R);
  out.S_full = sup_on_sphere(V, origin, R);
  out.rho = three_circle_max_exponent(sigma, tau);
  out.worst_margin = std::numeric_limits<double>::infinity();
  for (const CPoint& z : samples) {
    const double t = euclidean_distance(z, origin) / R;
    if (t > tau * (1.0 + 1e-12)) throw std::invalid_argument("hadamard_max_check: sample outside B_{tau R}");
    auto v = V.eval(z);
    ++out.checked;
    if (!v) continue;  // a pole trivially satisfies the upper bound
    const double rho_t = t <= sigma ? 0.0 : three_circle_max_exponent(sigma, t);
    const double bound = out.S_sigma + rho_t * (out.S_full - out.S_sigma);
    const double margin = bound - *v;
    if (margin < -tol) ++out.violations;
    out.worst_margin = std::min(out.worst_margin, margin);
  }
  out.pass = out.checked > 0 && out.violations == 0;
  return out;
}

namespace {

// Max of V over the image of the pseudo-sphere of radius r about zeta0,
// scaled back by R: points R * Phi_zeta0(r xi).
double pseudo_sphere_max(const PshOracle& V, const CPoint& zeta0, double r, double R) {
  MoebiusMap phi(zeta0);
  double best = -std::numeric_limits<double>::infinity();
  if (V.dimension == 1) {
    const int nang = 4096;
    for (int k = 0; k < nang; ++k) {
      CPoint xi = CPoint::zero(1);
      xi.z[0] = std::polar(1.0, 2.0 * M_PI * k / nang);
      auto v = V.eval(R * phi(r * xi));
      if (v && *v > best) best = *v;
    }
    return best;
  }
  Rng rng(424243);
  for (int k = 0; k < 20000; ++k) {
    auto v = V.eval(R * phi(r * rng.unit_sphere(V.dimension)));
    if (v && *v > best) best = *v;
  }
  return best;
}

struct NormalizedSection {
  double S_sigma = 0.0;
  double S_full = 0.0;
  double den = 0.0;
};

NormalizedSection normalize_section(const PshOracle& V, double sigma, double R) {
  NormalizedSection s;
  CPoint origin = CPoint::zero(V.dimension);
  s.S_sigma = sup_on_sphere(V, origin, sigma * R);
  s.S_full = sup_on_sphere(V, origin, R);
  s.den = s.S_full - s.S_sigma;
  if (!(s.den > 1e-12)) throw std::invalid_argument("three-circle normalization: sup gap is degenerate");
  return s;
}

// Mean of V over the circle |w| = r, exact for planar atomic oracles
// (mean of log|w - a| over the circle is log max(r, |a|)).
double origin_circle_mean(const PshOracle& V, double r, const SphereQuadrature& quad) {
  if (V.atoms && V.dimension == 1) {
    double s = V.additive_shift;
    CPoint origin = CPoint::zero(1);
    for (const Atom& a : V.atoms->atoms) {
      s += a.weight * std::log(std::max(r, euclidean_distance(origin, a.location)));
    }
    return s;
  }
  return sphere_mean(V, CPoint::zero(V.dimension), r, quad);
}

}  // namespace

LelongBoundCheck lelong_bound_check(const PshOracle& V, const CPoint& z, double sigma, double tau,
                                    double R, double slack) {
  if (!(sigma > 0.0 && sigma < tau && tau < 1.0) || !(R > 0.0)) {
    throw std::invalid_argument("lelong_bound_check: need 0 < sigma < tau < 1 and R > 0");
  }
  CPoint origin = CPoint::zero(V.dimension);
  if (euclidean_distance(z, origin) > tau * R * (1.0 + 1e-12)) {
    throw std::invalid_argument("lelong_bound_check: z must lie in closed B_{tau R}");
  }
  NormalizedSection ns = normalize_section(V, sigma, R);

  LelongBoundCheck out;
  out.nu = three_circle_min_exponent(sigma, tau);
  out.r = (sigma + tau) / (1.0 + sigma * tau);
  // Density of the normalized section = density of V over the sup gap; the
  // increment ratio cancels the constant shift.
  out.estimate = lelong_number(V, z, {1e-2, 1e-3, 1e-4, 1e-5}).value / ns.den;
  const double u_max = (pseudo_sphere_max(V, (1.0 / R) * z, out.r, R) - ns.S_sigma) / ns.den;
  out.pointwise_bound = (1.0 - u_max) / std::log(1.0 / out.r);
  out.pass = out.estimate <= out.nu + slack && out.estimate <= out.pointwise_bound + slack;
  return out;
}

ThreeCircleMinReport three_circle_min_principle(const PshOracle& V, const std::vector<CPoint>& samples,
                                                const ThreeCircleParams& params,
                                                const SphereQuadrature& quad, double c_n,
                                                double tol) {
  const double sigma = params.sigma, tau = params.tau, eta = params.eta, alpha = params.alpha, R = params.R;
  if (!(sigma > 0.0 && sigma < tau && tau < 1.0)) {
    throw std::invalid_argument("three_circle_min_principle: need 0 < sigma < tau < 1");
  }
  if (!(R > 0.0)) throw std::invalid_argument("three_circle_min_principle: R must be positive");
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("three_circle_min_principle: eta must lie in (0, 1)");
  if (samples.empty()) throw std::invalid_argument("three_circle_min_principle: no samples");
  const int n = V.dimension;

  ThreeCircleMinReport out;
  out.params = params;
  out.nu = params.nu > 0.0 ? params.nu : three_circle_min_exponent(sigma, tau);
  if (out.nu < three_circle_min_exponent(sigma, tau) - 1e-12) {
    throw std::invalid_argument("three_circle_min_principle: nu below the three-circle exponent");
  }
  out.r_star = 0.5 * (1.0 + tau);
  out.rho = tau / out.r_star;
  const double scale = R * out.r_star;

  NormalizedSection ns = normalize_section(V, sigma, R);
  out.S_sigma = ns.S_sigma;
  out.S_full = ns.S_full;

  // Pullback of the normalized section to the unit ball, shifted to be <= 0:
  // W(zeta) = (V(scale zeta) - S_sigma) / den - 1.
  PshOracle W;
  W.dimension = n;
  {
    auto base = V.eval;
    const double Ssig = ns.S_sigma, den = ns.den, sc = scale;
    W.eval = [base, Ssig, den, sc](const CPoint& p) -> std::optional<double> {
      auto v = base(sc * p);
      if (!v) return std::nullopt;
      return (*v - Ssig) / den - 1.0;
    };
  }
  double mu = 0.0;
  if (V.atoms && n == 1) {
    AtomicMeasure mapped;
    mapped.dimension = 1;
    for (const Atom& a : V.atoms->atoms) {
      mapped.atoms.push_back({(1.0 / scale) * a.location, a.weight / ns.den});
      if (euclidean_distance(a.location, CPoint::zero(1)) < scale) mu += a.weight / ns.den;
    }
    W.provenance = Provenance::EXACT_ATOMIC_1D;
    W.atoms = mapped;
  } else {
    // Riesz mass of W over the unit ball from the log-derivative of its
    // sphere means just inside the domain, inflated for safety: a low mass
    // estimate would overstate the emitted floor.
    const double h = std::min(0.05, 0.5 * std::log(1.0 / out.r_star));
    const double up = sphere_mean(W, CPoint::zero(n), std::exp(h), quad);
    const double dn = sphere_mean(W, CPoint::zero(n), std::exp(-h), quad);
    mu = 1.25 * ball_volume_2n_minus_2(n) * std::max(0.0, (up - dn) / (2.0 * h));
  }
  out.mass_term = (c_n > 0.0 ? c_n : (n == 1 ? 1.0 : 2.0)) * mu;
  out.theta_top = out.mass_term;

  // Pull the samples back; they must sit inside B_{tau R}.
  std::vector<CPoint> pulled;
  pulled.reserve(samples.size());
  CPoint origin = CPoint::zero(n);
  for (const CPoint& z : samples) {
    if (euclidean_distance(z, origin) > tau * R * (1.0 + 1e-12)) {
      throw std::invalid_argument("three_circle_min_principle: sample outside B_{tau R}");
    }
    pulled.push_back((1.0 / scale) * z);
  }

  // Plateau scan: the largest s with every sample's invariant density at
  // scale s strictly below nu. The emitted constant needs s >= eta / 3.
  const double s_min = eta / 3.0;
  std::vector<double> s_grid;
  for (double s = 0.9; s > s_min + 1e-12; s -= 0.05) s_grid.push_back(s);
  s_grid.push_back(s_min);
  out.s = 0.0;
  for (double s : s_grid) {
    double worst = 0.0;
    for (const CPoint& zeta : pulled) {
      worst = std::max(worst, invariant_theta(W, zeta, s, quad));
      if (worst >= out.nu) break;
    }
    if (worst < out.nu) {
      out.s = s;
      break;
    }
  }
  if (out.s == 0.0) return out;  // no density plateau below nu: report failure

  out.kappa = poisson_szego_sup_bound(out.rho, n);
  out.boundary_mean = (origin_circle_mean(V, scale, quad) - ns.S_sigma) / ns.den - 1.0;

  ExclusionParams ep;
  ep.epsilon = eta / 3.0;
  ep.alpha = alpha;
  ep.A = alpha * std::max(out.mass_term, 1e-12) * std::pow(ep.epsilon, -alpha);
  ep.metric = Metric::INVARIANT;
  ep.expansion = 3.0;

  auto theta = [&](const CPoint& zeta, double t) { return invariant_theta(W, zeta, t, quad); };
  if (out.mass_term < 1e-9) {
    // Mass-free section (harmonic case): the sweep is vacuous, and scanning
    // anyway would compare quadrature noise against a near-zero amplitude.
    out.exclusion.dimension = n;
    out.exclusion.params = ep;
    out.exclusion.good_points = pulled;
    out.exclusion.paper_bound = exclusion_paper_bound(ep, n, 1.0, 1.0);
    out.exclusion.pass = true;
  } else {
    out.exclusion = exclusion_cover(theta, pulled, ep, 1.0, 1.0);
  }

  // Emitted constant: combining the Poisson floor, the density plateau and
  // the mass tail gives, at good samples,
  //   u(z) >= 1 + kappa m - cm (1 + log(1/s)) - nu log(3s/eta) = nu log(eta/C).
  const double cm = out.mass_term;
  out.emitted_C = 3.0 * out.s *
                  std::exp((-1.0 - out.kappa * out.boundary_mean + cm * (1.0 + std::log(1.0 / out.s))) / out.nu);
  out.lower_bound_u = out.nu * std::log(eta / out.emitted_C);
  out.lower_bound_V = ns.S_sigma + out.lower_bound_u * ns.den;

  out.worst_margin = std::numeric_limits<double>::infinity();
  // The bad list preserves sample order, so one forward pass aligns it.
  std::vector<char> is_bad(samples.size(), 0);
  {
    std::size_t bi = 0;
    for (std::size_t i = 0; i < pulled.size() && bi < out.exclusion.bad_points.size(); ++i) {
      const CPoint& bp = out.exclusion.bad_points[bi].point;
      if (euclidean_distance(bp, pulled[i]) < 1e-15) {
        is_bad[i] = 1;
        ++bi;
      }
    }
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (is_bad[i]) continue;
    ++out.checked_good;
    auto v = V.eval(samples[i]);
    const double value = v ? *v : -std::numeric_limits<double>::infinity();
    const double margin = value - out.lower_bound_V;
    if (margin < -tol * std::max(1.0, std::abs(out.lower_bound_V))) ++out.violations;
    out.worst_margin = std::min(out.worst_margin, margin);
  }
  out.violation_fraction = out.checked_good > 0
                               ? static_cast<double>(out.violations) / static_cast<double>(out.checked_good)
                               : 0.0;

  // Euclidean accounting: hulls of the expanded pseudo-balls, scaled back to
  // the original coordinates.
  const double power = 2.0 * n - 2.0 + alpha;
  for (const MetricBall& b : out.exclusion.expanded_cover.balls) {
    MetricBall hull = euclidean_hull(b);
    out.euclid_content += std::pow(hull.radius * scale, power);
  }
  out.euclid_bound = std::pow(9.0, n - 1) * std::pow(R * std::exp(1.0), power) * std::pow(eta, alpha) / alpha;
  out.content_pass = out.euclid_content < out.euclid_bound;
  out.pass = out.exclusion.pass && out.content_pass && out.violation_fraction <= 1e-3;
  return out;
}

OriginNormalizedReport origin_min_principle(const PshOracle& V, const std::vector<CPoint>& samples,
                                            double R, double eta, double alpha,
                                            const SphereQuadrature& quad, double c_n, double tol) {
  OriginNormalizedReport out;
  auto v0 = V.eval(CPoint::zero(V.dimension));
  if (!v0) throw std::invalid_argument("origin_min_principle: V has a pole at the origin");
  out.V0 = *v0;
  if (std::abs(out.V0) > 1e-7) {
    throw std::invalid_argument("origin_min_principle: V(0) must vanish");
  }
  ThreeCircleParams p;
  p.sigma = 1e-3;
  p.tau = 1.0 / (2.0 * std::exp(1.0));
  p.nu = 1.0;
  p.eta = eta;
  p.alpha = alpha;
  p.R = 2.0 * std::exp(1.0) * R;  // tau * (2eR) = R: samples live in B_R

  // V == 0 has a degenerate sup gap; the lower bound is an identity, so the
  // report is a vacuous pass instead of the nonconstant-only error path.
  const double s_full = sup_on_sphere(V, CPoint::zero(V.dimension), p.R);
  const double s_sigma = sup_on_sphere(V, CPoint::zero(V.dimension), p.sigma * p.R);
  if (std::abs(s_full - s_sigma) <= 1e-12 && std::abs(s_full) <= 1e-12) {
    out.inner.params = p;
    out.inner.nu = 1.0;
    out.inner.checked_good = static_cast<long long>(samples.size());
    out.inner.content_pass = true;
    out.inner.pass = true;
    out.pass = true;
    return out;
  }

  out.inner = three_circle_min_principle(V, samples, p, quad, c_n, tol);
  out.pass = out.inner.pass;
  return out;
}

EssentialLowerBound essential_lower_bound(const PshOracle& V, const std::vector<CPoint>& samples,
                                          double alpha, double eps) {
  if (samples.empty()) throw std::invalid_argument("essential_lower_bound: no samples");
  if (!(eps >= 0.0)) throw std::invalid_argument("essential_lower_bound: eps must be nonnegative");
  const int n = V.dimension;
  const double power = 2.0 * n - 2.0 + alpha;

  std::vector<double> values(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    auto v = V.eval(samples[i]);
    values[i] = v ? *v : -std::numeric_limits<double>::infinity();
  }
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  auto content_of_prefix = [&](std::size_t k) -> double {
    if (k == 0) return 0.0;
    std::vector<CPoint> pts;
    pts.reserve(k);
    for (std::size_t i = 0; i < k; ++i) pts.push_back(samples[order[i]]);
    return hausdorff_content_upper(pts, power).value;
  };

  if (samples.size() > 1 && content_of_prefix(samples.size()) <= eps) {
    throw std::invalid_argument("essential lower bound: eps removes every sample");
  }

  const std::size_t max_removable = samples.size() - 1;
  std::size_t lo = 0, hi = 0;
  // Doubling probe, then bisection on the (effectively monotone) content.
  std::size_t step = 1;
  while (lo < max_removable) {
    std::size_t cand = std::min(max_removable, lo + step);
    if (content_of_prefix(cand) <= eps) {
      lo = cand;
      step *= 2;
    } else {
      hi = cand;
      break;
    }
  }
  if (hi > lo + 1) {
    std::size_t a = lo, b = hi;  // content(a) <= eps < content(b)
    while (b - a > 1) {
      std::size_t mid = a + (b - a) / 2;
      if (content_of_prefix(mid) <= eps) {
        a = mid;
      } else {
        b = mid;
      }
    }
    lo = a;
  }

  EssentialLowerBound out;
  out.eps = eps;
  out.removed = static_cast<long long>(lo);
  out.content_removed = content_of_prefix(lo);
  out.value = values[order[lo]];
  return out;
}

}  // namespace lemlab
