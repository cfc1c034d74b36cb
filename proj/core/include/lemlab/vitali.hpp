#pragma once

#include <vector>

#include "lemlab/balls.hpp"

namespace lemlab {

struct VitaliSelection {
  std::vector<int> selected;  // indices into the input family
  BallCover disjoint;
  BallCover expanded;
};

// Greedy Vitali selection: walk the family by decreasing radius (ties by
// lower index), keep a ball iff it is disjoint from everything kept so far.
// Every input ball then meets a kept ball of radius at least its own, so the
// kept balls expanded by `expansion` (5 Euclidean / 3 invariant by the
// triangle inequality) cover all input centers.
VitaliSelection vitali_select(const std::vector<MetricBall>& balls, double expansion);

}  // namespace lemlab
