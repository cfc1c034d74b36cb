#include "lemlab/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "lemlab/rng.hpp"
#include "lemlab/serialize.hpp"

namespace lemlab {

namespace {

namespace fs = std::filesystem;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct ArtifactSink {
  const RunConfig* cfg = nullptr;
  bool enabled = false;
  std::vector<std::string> files;

  void write_text(const std::string& name, const std::string& content) {
    if (!enabled) return;
    fs::path p = fs::path(cfg->out_dir) / name;
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write artifact: " + p.string());
    out << content;
    files.push_back(p.string());
  }
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

std::vector<CPoint> draw_ball_samples(int n, int count, double radius, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(rng.ball(n, radius));
  return out;
}

// Payload envelope shared by every harness: params, constants, counts,
// content_sum, paper_bound, pass or inconclusive, seed, plus the full report.
json envelope(json params, json constants, json counts, double content_sum, double paper_bound,
              bool pass, bool inconclusive, std::uint64_t seed, json detail) {
  json j{{"params", std::move(params)},
         {"constants", std::move(constants)},
         {"counts", std::move(counts)},
         {"content_sum", content_sum},
         {"paper_bound", paper_bound},
         {"seed", seed},
         {"report", std::move(detail)}};
  if (inconclusive) {
    j["inconclusive"] = true;
  } else {
    j["pass"] = pass;
  }
  return j;
}

std::string grid_csv(const std::function<double(const complex&)>& value,
                     const std::function<bool(const complex&)>& exceptional, double extent, int grid) {
  std::string csv = "x,y,value,in_exceptional\n";
  const double step = 2.0 * extent / (grid - 1);
  for (int iy = 0; iy < grid; ++iy) {
    for (int ix = 0; ix < grid; ++ix) {
      const complex z(-extent + step * ix, -extent + step * iy);
      if (std::abs(z) > extent) continue;
      const double v = value(z);
      csv += fmt(z.real());
      csv += ',';
      csv += fmt(z.imag());
      csv += ',';
      csv += std::isfinite(v) ? fmt(v) : std::string("-inf");
      csv += ',';
      csv += exceptional(z) ? '1' : '0';
      csv += '\n';
    }
  }
  return csv;
}

std::string cover_svg(const BallCover& cover, const std::vector<CPoint>& marks, double extent) {
  const int size = 640;
  const double scale = size / (2.0 * extent);
  auto X = [&](double x) { return (x + extent) * scale; };
  auto Y = [&](double y) { return (extent - y) * scale; };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  svg << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"#ffffff\"/>\n";
  const bool invariant_cover =
      !cover.balls.empty() && cover.balls.front().metric == Metric::INVARIANT;
  if (invariant_cover) {
    svg << "<circle cx=\"" << X(0) << "\" cy=\"" << Y(0) << "\" r=\"" << scale
        << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  }
  for (const MetricBall& b : cover.balls) {
    const complex c = b.center.z[0];
    if (b.metric == Metric::EUCLIDEAN) {
      svg << "<circle cx=\"" << X(c.real()) << "\" cy=\"" << Y(c.imag()) << "\" r=\"" << b.radius * scale
          << "\" fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" class=\"euclidean\"/>\n";
    } else {
      // Invariant discs are drawn through their Euclidean hulls.
      MetricBall hull = euclidean_hull(b);
      const complex hc = hull.center.z[0];
      svg << "<circle cx=\"" << X(hc.real()) << "\" cy=\"" << Y(hc.imag()) << "\" r=\"" << hull.radius * scale
          << "\" fill=\"none\" stroke=\"#b23a1f\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\" class=\"invariant\"/>\n";
    }
  }
  for (const CPoint& p : marks) {
    const complex c = p.z[0];
    svg << "<circle cx=\"" << X(c.real()) << "\" cy=\"" << Y(c.imag())
        << "\" r=\"2\" fill=\"#222222\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<CPoint> roots_as_points(const std::vector<complex>& roots) {
  std::vector<CPoint> pts;
  pts.reserve(roots.size());
  for (const complex& r : roots) {
    CPoint p = CPoint::zero(1);
    p.z[0] = r;
    pts.push_back(p);
  }
  return pts;
}

double max_root_abs(const std::vector<complex>& roots) {
  double m = 0.0;
  for (const complex& r : roots) m = std::max(m, std::abs(r));
  return m;
}

json run_cartan(const RunConfig& cfg, const ParsedInput& in, ArtifactSink& sink) {
  if (in.kind != InputKind::POLY) throw std::invalid_argument("cartan needs a polynomial input");
  const double eps = cfg.require("eps");
  const double alpha = cfg.get("alpha", 1.0);
  const double extent = cfg.get("extent", max_root_abs(in.roots) + 1.0);

  BallCover cover = cartan_cover(in.roots, eps, alpha);
  LemniscateCheck check = verify_lemniscate_cover(in.roots, eps, cover, cfg.grid, extent);
  double sum_alpha = 0.0, sum_r = 0.0;
  for (const MetricBall& b : cover.balls) {
    sum_alpha += std::pow(b.radius, alpha);
    sum_r += b.radius;
  }
  const double budget = std::exp(1.0) * std::pow(2.0 * eps, alpha);
  const bool pass = check.pass && sum_alpha <= budget * (1.0 + 1e-9);

  auto value = [&](const complex& z) {
    double s = 0.0;
    for (const complex& a : in.roots) {
      const double d = std::abs(z - a);
      if (d < 1e-300) return -std::numeric_limits<double>::infinity();
      s += std::log(d);
    }
    return s;
  };
  auto covered = [&](const complex& z) {
    for (const MetricBall& b : cover.balls) {
      if (std::abs(z - b.center.z[0]) <= b.radius * (1.0 + 1e-12)) return true;
    }
    return false;
  };
  sink.write_text(cfg.command + "-grid.csv", grid_csv(value, covered, extent, cfg.grid));
  sink.write_text(cfg.command + "-cover.svg", cover_svg(cover, roots_as_points(in.roots), extent));

  return envelope(json{{"eps", eps}, {"alpha", alpha}, {"extent", extent}, {"grid", cfg.grid}},
                  json{{"radius_power_sum", sum_alpha}, {"radius_sum", sum_r}, {"budget", budget}},
                  json{{"discs", cover.balls.size()}, {"checked", check.checked}, {"violations", check.violations}},
                  sum_alpha, budget, pass, false, cfg.seed,
                  json{{"cover", cover}, {"grid_check", check}});
}

json run_minmod(const RunConfig& cfg, const ParsedInput& in, ArtifactSink& sink) {
  if (in.kind != InputKind::POLY) throw std::invalid_argument("minmod needs a polynomial input");
  const double R = cfg.get("R", 1.0);
  const double eta = cfg.require("eta");
  MinModulusReport rep = min_modulus_1d(in.roots, R, eta, cfg.grid);

  auto value = [&](const complex& z) {
    double s = 0.0;
    for (const complex& a : in.roots) {
      const double d = std::abs(z - a);
      if (d < 1e-300) return -std::numeric_limits<double>::infinity();
      s += std::log(d) - std::log(std::abs(a));
    }
    return s;
  };
  auto covered = [&](const complex& z) {
    for (const MetricBall& b : rep.cover.balls) {
      if (std::abs(z - b.center.z[0]) <= b.radius * (1.0 + 1e-12)) return true;
    }
    return false;
  };
  sink.write_text(cfg.command + "-grid.csv", grid_csv(value, covered, R, cfg.grid));
  sink.write_text(cfg.command + "-cover.svg", cover_svg(rep.cover, roots_as_points(in.roots), 2.0 * R));

  return envelope(json{{"R", R}, {"eta", eta}, {"grid", cfg.grid}},
                  json{{"H", rep.H}, {"log_max", rep.log_max}, {"radius_sum", rep.radius_sum},
                       {"radius_budget", 2.0 * eta * R}},
                  json{{"discs", rep.cover.balls.size()}, {"checked", rep.checked}, {"violations", rep.violations}},
                  rep.radius_sum, 2.0 * eta * R, rep.pass, false, cfg.seed, rep);
}

json run_log_lb(const RunConfig& cfg, const ParsedInput& in, ArtifactSink& sink) {
  if (in.kind == InputKind::GREEN) throw std::invalid_argument("log-lb expects a logarithmic-class input");
  const int n = in.dimension;
  SphereQuadrature quad = SphereQuadrature::make(n, cfg.quad_nodes > 0 ? cfg.quad_nodes : default_node_count(n));
  NormalizedOracle norm = normalize_log_class(in.oracle, quad);

  const double eta = cfg.get("eta", 0.5);
  const double alpha = cfg.get("alpha", 1.0);
  const double R = cfg.get("R", 5.0);
  const int count = static_cast<int>(cfg.get("samples", 2000));
  const double tol = cfg.get("tol", n == 1 ? 0.0 : 1e-2);
  std::vector<CPoint> samples = draw_ball_samples(n, count, R, cfg.seed);

  LogMinPrincipleReport rep = log_potential_min_principle(norm.oracle, samples, eta, alpha, R, quad, tol);
  sink.write_text(cfg.command + "-cover.svg",
                  cover_svg(rep.exclusion.expanded_cover, {}, R + 5.0 * eta));
  return envelope(json{{"eta", eta}, {"alpha", alpha}, {"R", R}, {"samples", count}, {"tol", tol}},
                  json{{"robin_shift", norm.shift}, {"lower_bound", rep.lower_bound}},
                  json{{"good", rep.checked_good},
                       {"bad", rep.exclusion.bad_points.size()},
                       {"violations", rep.violations}},
                  rep.exclusion.content_sum, rep.exclusion.paper_bound, rep.pass, false, cfg.seed, rep);
}

json run_lemniscate(const RunConfig& cfg, const ParsedInput& in, ArtifactSink& sink) {
  if (in.kind == InputKind::GREEN) throw std::invalid_argument("lemniscate expects a logarithmic-class input");
  if (in.dimension != 1) throw std::invalid_argument("lemniscate grids are planar (dimension 1)");
  SphereQuadrature quad = SphereQuadrature::make(1, cfg.quad_nodes > 0 ? cfg.quad_nodes : default_node_count(1));
  NormalizedOracle norm = normalize_log_class(in.oracle, quad);

  const double eps = cfg.require("eps");
  const double alpha = cfg.get("alpha", 1.0);
  const double R = cfg.get("R", 1.0);
  LemniscateContentReport rep = lemniscate_content_bound(norm.oracle, eps, alpha, R, cfg.grid, quad);

  auto value = [&](const complex& z) {
    CPoint p = CPoint::zero(1);
    p.z[0] = z;
    auto v = norm.oracle.eval(p);
    return v ? *v : -std::numeric_limits<double>::infinity();
  };
  auto covered = [&](const complex& z) {
    CPoint p = CPoint::zero(1);
    p.z[0] = z;
    for (const MetricBall& b : rep.exclusion.expanded_cover.balls) {
      if (ball_contains(b, p, 1e-12)) return true;
    }
    return false;
  };
  sink.write_text(cfg.command + "-grid.csv", grid_csv(value, covered, R, cfg.grid));
  sink.write_text(cfg.command + "-cover.svg", cover_svg(rep.exclusion.expanded_cover, {}, R));
  return envelope(json{{"eps", eps}, {"alpha", alpha}, {"R", R}, {"grid", cfg.grid}},
                  json{{"eta", rep.eta}},
                  json{{"grid_points", rep.grid_points},
                       {"sublevel", rep.sublevel_count},
                       {"uncovered", rep.uncovered}},
                  rep.exclusion.content_sum, rep.content_bound, rep.pass, false, cfg.seed, rep);
}

std::vector<complex> shape_to_cloud(const ShapeInput& sh) {
  if (sh.kind == ShapeInput::Kind::CLOUD) return sh.points;
  std::vector<complex> pts;
  if (sh.kind == ShapeInput::Kind::DISC) {
    for (int k = 0; k < 512; ++k) pts.push_back(std::polar(sh.param, 2.0 * M_PI * k / 512));
  } else {
    for (int k = 0; k <= 512; ++k) {
      pts.push_back(complex(-0.5 * sh.param + sh.param * k / 512.0, 0.0));
    }
  }
  return pts;
}

json run_capacity(const RunConfig& cfg, const json& input) {
  ShapeInput sh = parse_shape(input);
  CapacityEstimate est;
  std::string shape;
  if (sh.kind == ShapeInput::Kind::DISC) {
    est = capacity_disc(sh.param);
    shape = "disc";
  } else if (sh.kind == ShapeInput::Kind::SEGMENT) {
    est = capacity_segment(sh.param);
    shape = "segment";
  } else {
    est = capacity_cloud(sh.points, static_cast<int>(cfg.get("k", 64)));
    shape = "cloud";
  }
  return envelope(json{{"shape", shape}, {"k", cfg.get("k", 64)}},
                  json{{"value", est.value}, {"raw", est.raw}, {"uncertainty", est.uncertainty}},
                  json{{"nodes", est.nodes}}, 0.0, 0.0, true, false, cfg.seed, est);
}

json run_capcompare(const RunConfig& cfg, const json& input) {
  ShapeInput sh = parse_shape(input);
  std::vector<complex> cloud = shape_to_cloud(sh);
  const double alpha = cfg.get("alpha", 1.0);
  ContentCapacityComparison cmp = content_capacity_comparison(cloud, alpha, static_cast<int>(cfg.get("k", 64)));
  const bool inconclusive = cmp.flag == ComparisonFlag::INCONCLUSIVE;
  return envelope(json{{"alpha", alpha}, {"points", cloud.size()}},
                  json{{"capacity", cmp.capacity}},
                  json{{"points", cloud.size()}}, cmp.content_upper, cmp.capacity_bound,
                  !inconclusive, inconclusive, cfg.seed, cmp);
}

json ball_payload(const RunConfig& cfg, const BallPrincipleReport& rep, json params, ArtifactSink& sink) {
  sink.write_text(cfg.command + "-cover.svg", cover_svg(rep.exclusion.expanded_cover, {}, 1.05));
  return envelope(std::move(params),
                  json{{"kappa", rep.kappa},
                       {"c_n", rep.c_n_estimate},
                       {"s", rep.s},
                       {"mu_ball", rep.mu_ball},
                       {"emitted_constant", rep.emitted_constant},
                       {"boundary_mean", rep.boundary_mean}},
                  json{{"good", rep.checked_good},
                       {"bad", rep.exclusion.bad_points.size()},
                       {"violations", rep.lower_bound_violations}},
                  rep.exclusion.content_sum, rep.exclusion.paper_bound, rep.pass, false, cfg.seed, rep);
}

json run_green_lb(const RunConfig& cfg, const ParsedInput& in, ArtifactSink& sink, int mode) {
  if (in.kind != InputKind::GREEN) throw std::invalid_argument(cfg.command + " needs a unit-ball pole input");
  const int n = in.dimension;
  SphereQuadrature quad = SphereQuadrature::make(n, cfg.quad_nodes > 0 ? cfg.quad_nodes : default_node_count(n));
  const double eta = cfg.get("eta", 0.3);
  const double alpha = cfg.get("alpha", 1.0);
  const double tol = cfg.get("tol", n == 1 ? 0.0 : 1e-2);
  const int count = static_cast<int>(cfg.get("samples", 1500));
  const double rho = cfg.get("rho", 0.5);
  const double sample_radius = cfg.get("sample_radius", mode == 2 ? rho : 0.9);
  std::vector<CPoint> samples = draw_ball_samples(n, count, sample_radius, cfg.seed);

  BallPrincipleReport rep;
  json params{{"eta", eta}, {"alpha", alpha}, {"samples", count}, {"tol", tol},
              {"sample_radius", sample_radius}};
  if (mode == 0) {
    const double s = cfg.get("s", 0.5);
    params["s"] = s;
    rep = green_potential_min_principle(in.oracle, samples, eta, alpha, s, quad, 0.0, tol);
  } else if (mode == 1) {
    rep = unit_mass_min_principle(in.oracle, samples, eta, alpha, quad, 0.0, tol);
  } else {
    const double s = cfg.get("s", 0.5);
    params["s"] = s;
    params["rho"] = rho;
    rep = ball_min_principle(in.oracle, samples, rho, s, eta, alpha, quad, quad, 0.0,
                             cfg.get("tol", 1e-2));
  }
  return ball_payload(cfg, rep, std::move(params), sink);
}

json run_tc_min(const RunConfig& cfg, const ParsedInput& in, ArtifactSink& sink) {
  const int n = in.dimension;
  SphereQuadrature quad = SphereQuadrature::make(n, cfg.quad_nodes > 0 ? cfg.quad_nodes : default_node_count(n));
  ThreeCircleParams p;
  p.sigma = cfg.get("sigma", 0.1);
  p.tau = cfg.get("tau", 0.5);
  p.nu = cfg.get("nu", 0.0);
  p.eta = cfg.get("eta", 0.3);
  p.alpha = cfg.get("alpha", 1.0);
  p.R = cfg.get("R", 1.0);
  const int count = static_cast<int>(cfg.get("samples", 2000));
  std::vector<CPoint> samples = draw_ball_samples(n, count, p.tau * p.R, cfg.seed);
  ThreeCircleMinReport rep = three_circle_min_principle(in.oracle, samples, p, quad, 0.0,
                                                        cfg.get("tol", 1e-6));
  sink.write_text(cfg.command + "-cover.svg", cover_svg(rep.exclusion.expanded_cover, {}, 1.05));
  return envelope(json{{"sigma", p.sigma}, {"tau", p.tau}, {"nu", rep.nu}, {"eta", p.eta},
                       {"alpha", p.alpha}, {"R", p.R}, {"samples", count}},
                  json{{"S_sigma", rep.S_sigma}, {"S_full", rep.S_full}, {"s", rep.s},
                       {"kappa", rep.kappa}, {"emitted_C", rep.emitted_C},
                       {"lower_bound_V", rep.lower_bound_V}},
                  json{{"good", rep.checked_good}, {"violations", rep.violations},
                       {"bad", rep.exclusion.bad_points.size()}},
                  rep.euclid_content, rep.euclid_bound, rep.pass, false, cfg.seed, rep);
}

json run_tc_max(const RunConfig& cfg, const ParsedInput& in) {
  const double sigma = cfg.get("sigma", 0.1);
  const double tau = cfg.get("tau", 0.5);
  const double R = cfg.get("R", 1.0);
  const int count = static_cast<int>(cfg.get("samples", 2000));
  std::vector<CPoint> samples = draw_ball_samples(in.dimension, count, tau * R, cfg.seed);
  HadamardCheck rep = hadamard_max_check(in.oracle, sigma, tau, R, samples, cfg.get("tol", 1e-9));
  return envelope(json{{"sigma", sigma}, {"tau", tau}, {"R", R}, {"samples", count}},
                  json{{"S_sigma", rep.S_sigma}, {"S_full", rep.S_full}, {"rho", rep.rho}},
                  json{{"checked", rep.checked}, {"violations", rep.violations}}, 0.0, 0.0,
                  rep.pass, false, cfg.seed, rep);
}

CPoint point_param(const RunConfig& cfg, int n) {
  CPoint z = CPoint::zero(n);
  z.z[0] = complex(cfg.get("zre", 0.0), cfg.get("zim", 0.0));
  return z;
}

json run_lelong_bound(const RunConfig& cfg, const ParsedInput& in) {
  const double sigma = cfg.get("sigma", 0.1);
  const double tau = cfg.get("tau", 0.5);
  const double R = cfg.get("R", 1.0);
  CPoint z = point_param(cfg, in.dimension);
  LelongBoundCheck rep = lelong_bound_check(in.oracle, z, sigma, tau, R, cfg.get("slack", 0.05));
  return envelope(json{{"sigma", sigma}, {"tau", tau}, {"R", R},
                       {"zre", cfg.get("zre", 0.0)}, {"zim", cfg.get("zim", 0.0)}},
                  json{{"estimate", rep.estimate}, {"nu", rep.nu}, {"pointwise_bound", rep.pointwise_bound}},
                  json{}, 0.0, 0.0, rep.pass, false, cfg.seed, rep);
}

// Copy of the oracle with a constant added to its values; the underlying
// measure is unchanged.
PshOracle shift_oracle(const PshOracle& V, double c) {
  PshOracle out = V;
  auto base = V.eval;
  out.eval = [base, c](const CPoint& p) -> std::optional<double> {
    auto v = base(p);
    if (!v) return std::nullopt;
    return *v + c;
  };
  out.additive_shift = V.additive_shift + c;
  return out;
}

json run_origin_lb(const RunConfig& cfg, const ParsedInput& in, ArtifactSink& sink) {
  if (in.kind == InputKind::GREEN) throw std::invalid_argument("origin-lb expects a logarithmic-class input");
  const int n = in.dimension;
  auto v0 = in.oracle.eval(CPoint::zero(n));
  if (!v0) throw std::invalid_argument("origin-lb: the potential has a pole at the origin");
  PshOracle V = shift_oracle(in.oracle, -*v0);

  SphereQuadrature quad = SphereQuadrature::make(n, cfg.quad_nodes > 0 ? cfg.quad_nodes : default_node_count(n));
  const double R = cfg.get("R", 1.0);
  const double eta = cfg.get("eta", 0.3);
  const double alpha = cfg.get("alpha", 1.0);
  const int count = static_cast<int>(cfg.get("samples", 1500));
  std::vector<CPoint> samples = draw_ball_samples(n, count, R, cfg.seed);
  OriginNormalizedReport rep = origin_min_principle(V, samples, R, eta, alpha, quad, 0.0,
                                                    cfg.get("tol", 1e-6));
  sink.write_text(cfg.command + "-cover.svg", cover_svg(rep.inner.exclusion.expanded_cover, {}, 1.05));
  return envelope(json{{"R", R}, {"eta", eta}, {"alpha", alpha}, {"samples", count}},
                  json{{"origin_shift", -*v0}, {"emitted_C", rep.inner.emitted_C},
                       {"lower_bound_V", rep.inner.lower_bound_V}},
                  json{{"good", rep.inner.checked_good}, {"violations", rep.inner.violations}},
                  rep.inner.euclid_content, rep.inner.euclid_bound, rep.pass, false, cfg.seed, rep);
}

json run_essential_lb(const RunConfig& cfg, const ParsedInput& in) {
  const int n = in.dimension;
  double region = cfg.get("R", in.kind == InputKind::GREEN ? 0.9 : 1.0);
  const double alpha = cfg.get("alpha", 1.0);
  const double eps = cfg.require("eps");
  const int count = static_cast<int>(cfg.get("samples", 2048));
  std::vector<CPoint> samples = draw_ball_samples(n, count, region, cfg.seed);
  EssentialLowerBound rep = essential_lower_bound(in.oracle, samples, alpha, eps);
  return envelope(json{{"R", region}, {"alpha", alpha}, {"eps", eps}, {"samples", count}},
                  json{{"value", std::isfinite(rep.value) ? json(rep.value) : json("-inf")}},
                  json{{"removed", rep.removed}, {"samples", count}}, rep.content_removed, eps,
                  true, false, cfg.seed, rep);
}

json run_verify(const RunConfig& cfg, const ParsedInput& in, ArtifactSink& sink) {
  const int n = in.dimension;
  SphereQuadrature quad = SphereQuadrature::make(n, cfg.quad_nodes > 0 ? cfg.quad_nodes : default_node_count(n));
  const std::string& check = cfg.check;
  double value = 0.0;
  bool pass = false;
  json detail;
  double tol = 0.0;

  if (check == "pj") {
    tol = cfg.get("tol", n == 1 ? 1e-8 : 5e-3);
    value = poisson_jensen_residual(in.oracle, cfg.get("r", 0.5), cfg.get("R", 10.0), quad);
    pass = value <= tol;
  } else if (check == "representation") {
    tol = cfg.get("tol", n == 1 ? 1e-8 : 5e-3);
    value = representation_residual(in.oracle, point_param(cfg, n), cfg.get("R", 5.0), quad);
    pass = value <= tol;
  } else if (check == "jensen") {
    tol = cfg.get("tol", n == 1 ? 1e-9 : 5e-3);
    value = jensen_ps_residual(in.oracle, point_param(cfg, n), quad);
    pass = value <= tol;
  } else if (check == "robin") {
    tol = cfg.get("tol", 1e-6);
    value = robin_mean(in.oracle, quad);
    pass = std::abs(value) <= tol;
  } else if (check == "lelong") {
    tol = cfg.get("tol", 0.0);
    LelongEstimate est = lelong_number(in.oracle, point_param(cfg, n), {1e-2, 1e-3, 1e-4, 1e-5});
    value = est.value;
    pass = true;
    detail = est;
    std::string csv = "radius,ratio\n";
    for (std::size_t i = 0; i < est.radii.size(); ++i) {
      csv += fmt(est.radii[i]);
      csv += ',';
      csv += fmt(est.ratios[i]);
      csv += '\n';
    }
    sink.write_text("lelong-curve.csv", csv);
  } else {
    throw std::invalid_argument("unknown verify check: " + check);
  }
  return envelope(json{{"check", check}, {"tol", tol}, {"zre", cfg.get("zre", 0.0)},
                       {"zim", cfg.get("zim", 0.0)}},
                  json{{"value", value}}, json{}, 0.0, 0.0, pass, false, cfg.seed, detail);
}

json run_payload(const RunConfig& cfg, ArtifactSink& sink) {
  if (cfg.command == "capacity" || cfg.command == "capcompare") {
    json input = load_json_file(cfg.input_path);
    return cfg.command == "capacity" ? run_capacity(cfg, input) : run_capcompare(cfg, input);
  }
  ParsedInput in = parse_input(load_json_file(cfg.input_path), cfg.quad_nodes, 42);
  if (cfg.command == "cartan") return run_cartan(cfg, in, sink);
  if (cfg.command == "minmod") return run_minmod(cfg, in, sink);
  if (cfg.command == "log-lb") return run_log_lb(cfg, in, sink);
  if (cfg.command == "lemniscate") return run_lemniscate(cfg, in, sink);
  if (cfg.command == "green-lb") return run_green_lb(cfg, in, sink, 0);
  if (cfg.command == "unit-lb") return run_green_lb(cfg, in, sink, 1);
  if (cfg.command == "ball-lb") return run_green_lb(cfg, in, sink, 2);
  if (cfg.command == "tc-min") return run_tc_min(cfg, in, sink);
  if (cfg.command == "tc-max") return run_tc_max(cfg, in);
  if (cfg.command == "lelong-bound") return run_lelong_bound(cfg, in);
  if (cfg.command == "origin-lb") return run_origin_lb(cfg, in, sink);
  if (cfg.command == "essential-lb") return run_essential_lb(cfg, in);
  if (cfg.command == "verify") return run_verify(cfg, in, sink);
  throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace

double RunConfig::get(const std::string& name, double fallback) const {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

double RunConfig::require(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw std::invalid_argument("missing required parameter: " + name);
  return it->second;
}

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> cmds = {
      "cartan",  "minmod",   "log-lb",      "lemniscate", "capacity",     "capcompare", "green-lb",
      "unit-lb", "ball-lb",  "tc-min",      "tc-max",     "lelong-bound", "origin-lb",  "essential-lb",
      "verify"};
  return cmds;
}

RunConfig config_from_json(const json& j) {
  RunConfig cfg;
  cfg.command = j.at("command").get<std::string>();
  cfg.input_path = j.at("input").get<std::string>();
  cfg.check = j.value("check", "");
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.seed_set = true;
  cfg.grid = j.value("grid", 256);
  cfg.quad_nodes = j.value("quad_nodes", 0);
  cfg.out_dir = j.value("out", ".");
  if (j.contains("params")) {
    for (auto& [k, v] : j["params"].items()) cfg.params[k] = v.get<double>();
  }
  return cfg;
}

json config_to_json(const RunConfig& c) {
  json p = json::object();
  for (const auto& [k, v] : c.params) p[k] = v;
  return json{{"command", c.command}, {"input", c.input_path}, {"check", c.check},
              {"seed", c.seed},       {"grid", c.grid},        {"quad_nodes", c.quad_nodes},
              {"out", c.out_dir},     {"params", p}};
}

RunResult run(const RunConfig& config) {
  if (!config.seed_set) throw std::invalid_argument("seed is mandatory");
  bool known = false;
  for (const std::string& c : known_commands()) known = known || c == config.command;
  if (!known) throw std::invalid_argument("unknown command: " + config.command);

  // Absolute input path in the echo keeps reports replayable from any cwd.
  RunConfig cfg = config;
  cfg.input_path = fs::weakly_canonical(fs::absolute(cfg.input_path)).string();

  ArtifactSink sink;
  sink.cfg = &cfg;
  sink.enabled = cfg.emit_artifacts;

  const auto start = std::chrono::steady_clock::now();
  json payload = run_payload(cfg, sink);
  const auto stop = std::chrono::steady_clock::now();
  const double wall_ms =
      std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count() / 1000.0;

  RunResult res;
  res.report = json{{"schema_version", kSchemaVersion},
                    {"config", config_to_json(cfg)},
                    {"payload", payload},
                    {"wall_ms", wall_ms},
                    {"artifacts", sink.files}};
  fs::create_directories(cfg.out_dir);
  fs::path rp = fs::path(cfg.out_dir) / ("report-" + cfg.command + ".json");
  {
    std::ofstream out(rp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write report: " + rp.string());
    out << res.report.dump(2) << "\n";
  }
  res.report_path = rp.string();
  if (payload.contains("inconclusive") && payload["inconclusive"].get<bool>()) {
    res.exit_code = 0;
  } else {
    res.exit_code = payload.value("pass", false) ? 0 : 2;
  }
  return res;
}

RunResult replay(const std::string& report_path, const std::string& out_dir) {
  json rep = load_json_file(report_path);
  if (!rep.contains("schema_version") || rep["schema_version"].get<std::string>() != kSchemaVersion) {
    throw std::invalid_argument("replay refused: schema version mismatch");
  }
  RunConfig cfg = config_from_json(rep.at("config"));
  cfg.out_dir = out_dir;
  cfg.emit_artifacts = false;

  ArtifactSink sink;
  sink.cfg = &cfg;
  sink.enabled = false;
  json fresh = run_payload(cfg, sink);
  const std::string got = fresh.dump();
  const std::string want = rep.at("payload").dump();
  if (got != want) {
    throw std::runtime_error("replay mismatch: payload differs from the recorded run");
  }

  RunResult res;
  res.report = json{{"schema_version", kSchemaVersion},
                    {"config", config_to_json(cfg)},
                    {"payload", fresh},
                    {"replay_of", report_path},
                    {"match", true}};
  fs::create_directories(out_dir);
  fs::path rp = fs::path(out_dir) / "report-replay.json";
  {
    std::ofstream out(rp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write report: " + rp.string());
    out << res.report.dump(2) << "\n";
  }
  res.report_path = rp.string();
  res.exit_code = 0;
  return res;
}

}  // namespace lemlab
