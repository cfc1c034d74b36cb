#pragma once

#include <json.hpp>

#include "lemlab/ball_harness.hpp"
#include "lemlab/capacity.hpp"
#include "lemlab/cartan.hpp"
#include "lemlab/green_potential.hpp"
#include "lemlab/hausdorff.hpp"
#include "lemlab/log_min_principle.hpp"
#include "lemlab/three_circle.hpp"

namespace lemlab {

using nlohmann::json;

// ADL hooks so nlohmann::json can serialize the report types directly.
void to_json(json& j, const CPoint& p);
void to_json(json& j, const MetricBall& b);
void to_json(json& j, const BallCover& c);
void to_json(json& j, const BadPoint& b);
void to_json(json& j, const ExclusionParams& p);
void to_json(json& j, const ExclusionReport& r);
void to_json(json& j, const ContentEstimate& c);
void to_json(json& j, const LemniscateCheck& r);
void to_json(json& j, const MinModulusReport& r);
void to_json(json& j, const LogMinPrincipleReport& r);
void to_json(json& j, const LemniscateContentReport& r);
void to_json(json& j, const CapacityEstimate& c);
void to_json(json& j, const ContentCapacityComparison& c);
void to_json(json& j, const BallPrincipleReport& r);
void to_json(json& j, const HadamardCheck& r);
void to_json(json& j, const LelongBoundCheck& r);
void to_json(json& j, const ThreeCircleParams& p);
void to_json(json& j, const ThreeCircleMinReport& r);
void to_json(json& j, const OriginNormalizedReport& r);
void to_json(json& j, const EssentialLowerBound& r);
void to_json(json& j, const LelongEstimate& e);

complex complex_from_json(const json& j);
CPoint point_from_json(const json& j);

// Input descriptions accepted by the CLI: a factored polynomial, an atomic
// measure, or a unit-ball pole list.
enum class InputKind { POLY, MEASURE, GREEN };

struct ParsedInput {
  InputKind kind = InputKind::MEASURE;
  int dimension = 1;
  PshOracle oracle;
  AtomicMeasure measure;          // MEASURE / POLY (the underlying Riesz atoms)
  GreenPotentialSpec green;       // GREEN
  std::vector<complex> roots;     // POLY convenience: roots with multiplicity
};

ParsedInput parse_input(const json& j, int theta_nodes = 0, std::uint64_t seed = 42);

struct ShapeInput {
  enum class Kind { DISC, SEGMENT, CLOUD } kind = Kind::CLOUD;
  double param = 0.0;             // radius or length
  std::vector<complex> points;
};

ShapeInput parse_shape(const json& j);

}  // namespace lemlab
