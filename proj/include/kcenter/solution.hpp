#pragma once

#include <vector>

#include "kcenter/graph.hpp"

namespace kcenter {

/// Answer of a k-center engine at query time. `radius_bound` is the
/// certified coverage bound (kInf when infeasible); the true coverage
/// radius of `centers` never exceeds it. `level` is the grid index that
/// answered, -1 where the notion does not apply.
struct Solution {
  bool feasible = false;
  std::vector<VertexId> centers;  // ascending
  double radius_bound = kInf;
  int level = -1;
};

}  // namespace kcenter
