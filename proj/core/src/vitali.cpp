#include "lemlab/vitali.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lemlab {

VitaliSelection vitali_select(const std::vector<MetricBall>& balls, double expansion) {
  if (expansion < 1.0) throw std::invalid_argument("expansion must be >= 1");
  std::vector<int> order(balls.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return balls[a].radius > balls[b].radius; });

  VitaliSelection sel;
  for (int i : order) {
    bool disjoint = true;
    for (int k : sel.selected) {
      if (balls_intersect(balls[i], balls[k])) {
        disjoint = false;
        break;
      }
    }
    if (disjoint) {
      sel.selected.push_back(i);
      sel.disjoint.balls.push_back(balls[i]);
      MetricBall e = balls[i];
      double r = e.radius * expansion;
      if (e.metric == Metric::INVARIANT && r >= 1.0) {
        throw std::domain_error("expanded invariant ball leaves the unit ball; radius too large");
      }
      e.radius = r;
      sel.expanded.balls.push_back(e);
    }
  }
  return sel;
}

}  // namespace lemlab
