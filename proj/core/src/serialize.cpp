#include "lemlab/serialize.hpp"

#include <cmath>
#include <stdexcept>

#include "lemlab/potentials.hpp"

namespace lemlab {

namespace {

json finite_or_string(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

const char* metric_name(Metric m) { return m == Metric::EUCLIDEAN ? "euclidean" : "invariant"; }

}  // namespace

void to_json(json& j, const CPoint& p) {
  j = json::array();
  for (const complex& c : p.z) j.push_back(json::array({c.real(), c.imag()}));
}

void to_json(json& j, const MetricBall& b) {
  j = json{{"center", b.center}, {"radius", b.radius}, {"metric", metric_name(b.metric)}};
}

void to_json(json& j, const BallCover& c) { j = json{{"balls", c.balls}}; }

void to_json(json& j, const BadPoint& b) { j = json{{"point", b.point}, {"witness", b.witness}}; }

void to_json(json& j, const ExclusionParams& p) {
  j = json{{"epsilon", p.epsilon}, {"alpha", p.alpha},       {"A", p.A},
           {"metric", metric_name(p.metric)}, {"scan_depth", p.scan_depth}, {"expansion", p.expansion},
           {"patches", p.patches}};
}

void to_json(json& j, const ExclusionReport& r) {
  j = json{{"params", r.params},
           {"dimension", r.dimension},
           {"good_count", r.good_points.size()},
           {"bad_points", r.bad_points},
           {"selected_disjoint", r.selected_disjoint},
           {"expanded_cover", r.expanded_cover},
           {"content_sum", r.content_sum},
           {"paper_bound", r.paper_bound},
           {"pass", r.pass}};
}

void to_json(json& j, const ContentEstimate& c) { j = json{{"value", c.value}, {"cover", c.cover}}; }

void to_json(json& j, const LemniscateCheck& r) {
  j = json{{"checked", r.checked},
           {"violations", r.violations},
           {"min_margin", finite_or_string(r.min_margin)},
           {"pass", r.pass}};
}

void to_json(json& j, const MinModulusReport& r) {
  j = json{{"H", r.H},
           {"log_max", r.log_max},
           {"cover", r.cover},
           {"radius_sum", r.radius_sum},
           {"checked", r.checked},
           {"violations", r.violations},
           {"min_margin", finite_or_string(r.min_margin)},
           {"pass", r.pass}};
}

void to_json(json& j, const LogMinPrincipleReport& r) {
  j = json{{"robin", r.robin},
           {"eta", r.eta},
           {"lower_bound", r.lower_bound},
           {"exclusion", r.exclusion},
           {"checked_good", r.checked_good},
           {"violations", r.violations},
           {"worst_margin", finite_or_string(r.worst_margin)},
           {"pass", r.pass}};
}

void to_json(json& j, const LemniscateContentReport& r) {
  j = json{{"eps", r.eps},
           {"eta", r.eta},
           {"content_bound", r.content_bound},
           {"exclusion", r.exclusion},
           {"grid_points", r.grid_points},
           {"sublevel_count", r.sublevel_count},
           {"uncovered", r.uncovered},
           {"pass", r.pass}};
}

void to_json(json& j, const CapacityEstimate& c) {
  j = json{{"value", c.value},
           {"method", c.method == CapacityMethod::CLOSED_FORM ? "closed-form" : "fekete"},
           {"nodes", c.nodes},
           {"raw", c.raw},
           {"uncertainty", c.uncertainty}};
}

void to_json(json& j, const ContentCapacityComparison& c) {
  j = json{{"content_upper", c.content_upper},
           {"capacity", c.capacity},
           {"capacity_bound", c.capacity_bound},
           {"flag", c.flag == ComparisonFlag::HOLDS ? "holds" : "inconclusive"}};
}

void to_json(json& j, const BallPrincipleReport& r) {
  j = json{{"exclusion", r.exclusion},
           {"kappa", r.kappa},
           {"c_n_estimate", r.c_n_estimate},
           {"s", r.s},
           {"rho", r.rho},
           {"mu_ball", r.mu_ball},
           {"emitted_constant", r.emitted_constant},
           {"boundary_mean", r.boundary_mean},
           {"checked_good", r.checked_good},
           {"lower_bound_violations", r.lower_bound_violations},
           {"worst_margin", finite_or_string(r.worst_margin)},
           {"pass", r.pass}};
}

void to_json(json& j, const HadamardCheck& r) {
  j = json{{"S_sigma", r.S_sigma},
           {"S_full", r.S_full},
           {"rho", r.rho},
           {"checked", r.checked},
           {"violations", r.violations},
           {"worst_margin", finite_or_string(r.worst_margin)},
           {"pass", r.pass}};
}

void to_json(json& j, const LelongBoundCheck& r) {
  j = json{{"estimate", r.estimate},
           {"nu", r.nu},
           {"pointwise_bound", r.pointwise_bound},
           {"r", r.r},
           {"pass", r.pass}};
}

void to_json(json& j, const ThreeCircleParams& p) {
  j = json{{"sigma", p.sigma}, {"tau", p.tau}, {"nu", p.nu},
           {"eta", p.eta},     {"alpha", p.alpha}, {"R", p.R}};
}

void to_json(json& j, const ThreeCircleMinReport& r) {
  j = json{{"params", r.params},
           {"nu", r.nu},
           {"r_star", r.r_star},
           {"rho", r.rho},
           {"S_sigma", r.S_sigma},
           {"S_full", r.S_full},
           {"s", r.s},
           {"kappa", r.kappa},
           {"boundary_mean", r.boundary_mean},
           {"mass_term", r.mass_term},
           {"emitted_C", r.emitted_C},
           {"lower_bound_u", r.lower_bound_u},
           {"lower_bound_V", r.lower_bound_V},
           {"exclusion", r.exclusion},
           {"euclid_content", r.euclid_content},
           {"euclid_bound", r.euclid_bound},
           {"checked_good", r.checked_good},
           {"violations", r.violations},
           {"violation_fraction", r.violation_fraction},
           {"worst_margin", finite_or_string(r.worst_margin)},
           {"content_pass", r.content_pass},
           {"pass", r.pass}};
}

void to_json(json& j, const OriginNormalizedReport& r) {
  j = json{{"V0", r.V0}, {"inner", r.inner}, {"pass", r.pass}};
}

void to_json(json& j, const EssentialLowerBound& r) {
  j = json{{"value", finite_or_string(r.value)},
           {"removed", r.removed},
           {"content_removed", r.content_removed},
           {"eps", r.eps}};
}

void to_json(json& j, const LelongEstimate& e) {
  j = json{{"value", e.value}, {"ratios", e.ratios}, {"radii", e.radii}};
}

complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("expected a complex number as [re, im]");
  }
  return complex(j[0].get<double>(), j[1].get<double>());
}

CPoint point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a point as [[re, im], ...]");
  CPoint p = CPoint::zero(static_cast<int>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) p.z[k] = complex_from_json(j[k]);
  return p;
}

namespace {

AtomicMeasure atoms_from_json(const json& arr, int dimension) {
  AtomicMeasure m;
  m.dimension = dimension;
  for (const json& a : arr) {
    if (!a.contains("location") || !a.contains("weight")) {
      throw std::invalid_argument("atom entries need location and weight");
    }
    Atom atom;
    atom.location = point_from_json(a["location"]);
    atom.weight = a["weight"].get<double>();
    if (atom.location.dim() != dimension) throw std::invalid_argument("atom dimension mismatch");
    m.atoms.push_back(std::move(atom));
  }
  return m;
}

}  // namespace

ParsedInput parse_input(const json& j, int theta_nodes, std::uint64_t seed) {
  if (!j.is_object()) throw std::invalid_argument("input spec must be a JSON object");
  ParsedInput out;
  out.dimension = j.value("dimension", 1);
  if (out.dimension < 1 || out.dimension > 8) throw std::invalid_argument("dimension must lie in [1, 8]");

  if (j.contains("poly")) {
    if (out.dimension != 1) throw std::invalid_argument("polynomial inputs are planar (dimension 1)");
    const json& p = j["poly"];
    if (!p.contains("factors")) throw std::invalid_argument("poly spec needs factors");
    std::vector<PolyFactor> factors;
    for (const json& f : p["factors"]) {
      PolyFactor pf;
      pf.root = complex_from_json(f.at("root"));
      pf.multiplicity = f.value("multiplicity", 1);
      factors.push_back(pf);
      for (int k = 0; k < pf.multiplicity; ++k) out.roots.push_back(pf.root);
    }
    complex lead = p.contains("lead") ? complex_from_json(p["lead"]) : complex(1.0, 0.0);
    bool normalize = p.value("normalize", true);
    out.kind = InputKind::POLY;
    out.oracle = log_poly_potential(factors, lead, normalize);
    out.measure = *out.oracle.atoms;
    return out;
  }

  if (j.contains("poles")) {
    if (j.value("domain", "unit-ball") != std::string("unit-ball")) {
      throw std::invalid_argument("pole inputs require domain \"unit-ball\"");
    }
    out.kind = InputKind::GREEN;
    out.green.dimension = out.dimension;
    out.green.poles = atoms_from_json(j["poles"], out.dimension).atoms;
    out.oracle = green_potential(out.green, theta_nodes, seed);
    return out;
  }

  if (j.contains("atoms")) {
    out.kind = InputKind::MEASURE;
    out.measure = atoms_from_json(j["atoms"], out.dimension);
    out.oracle = discrete_potential(out.measure, theta_nodes, seed);
    return out;
  }

  throw std::invalid_argument("input spec needs one of: poly, atoms, poles");
}

ShapeInput parse_shape(const json& j) {
  if (!j.is_object() || !j.contains("shape")) throw std::invalid_argument("shape spec needs a shape field");
  ShapeInput out;
  const std::string kind = j["shape"].get<std::string>();
  if (kind == "disc") {
    out.kind = ShapeInput::Kind::DISC;
    out.param = j.at("radius").get<double>();
  } else if (kind == "segment") {
    out.kind = ShapeInput::Kind::SEGMENT;
    out.param = j.at("length").get<double>();
  } else if (kind == "cloud") {
    out.kind = ShapeInput::Kind::CLOUD;
    for (const json& p : j.at("points")) out.points.push_back(complex_from_json(p));
    if (out.points.empty()) throw std::invalid_argument("cloud shape needs points");
  } else {
    throw std::invalid_argument("unknown shape: " + kind);
  }
  return out;
}

}  // namespace lemlab
