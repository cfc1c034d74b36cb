#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lemlab/balls.hpp"
#include "lemlab/complex_point.hpp"

namespace lemlab {

struct Atom {
  CPoint location;
  double weight = 0.0;
};

struct AtomicMeasure {
  int dimension = 1;
  std::vector<Atom> atoms;

  double total_mass() const {
    double s = 0.0;
    for (const Atom& a : atoms) s += a.weight;
    return s;
  }
};

enum class Provenance { EXACT_ATOMIC_1D, EXACT_ATOMIC_GREEN, NUMERIC_SPHERE_MEAN };

// Evaluation bundle for a plurisubharmonic function. eval returns nullopt at
// logarithmic poles (the explicit "minus infinity" sentinel; raw -inf doubles
// never enter arithmetic). theta(z,t) is the projective mass of the closed
// Euclidean ball B(z,t); mass(ball) its Riesz mass. Exact closed forms back
// the two atomic provenances, sphere-mean quadrature backs the numeric one.
struct PshOracle {
  int dimension = 1;
  Provenance provenance = Provenance::NUMERIC_SPHERE_MEAN;
  std::function<std::optional<double>(const CPoint&)> eval;
  std::function<double(const CPoint&, double)> theta;
  std::function<double(const MetricBall&)> mass;
  std::optional<AtomicMeasure> atoms;  // populated for the exact provenances
  double additive_shift = 0.0;
};

}  // namespace lemlab
