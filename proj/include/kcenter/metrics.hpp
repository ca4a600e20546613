#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcenter/graph.hpp"

namespace kcenter {

/// One CSV row per query event. Optional fields render empty: the oracle
/// pair only appears when oracle checking is on, wall time only when timing
/// is requested (timing would break byte-for-byte reproducibility).
struct MetricsRow {
  std::uint64_t epoch = 0;
  std::string mode;
  int k = 0;
  double eps = 0.0;
  double radius_bound = kInf;
  std::optional<double> oracle_r_star;
  std::optional<double> approx_ratio;
  std::vector<VertexId> centers;
  std::uint64_t recourse_total = 0;
  std::uint64_t sssp_restarts_total = 0;
  int level_answered = -1;  // -1 renders empty
  std::optional<std::uint64_t> wall_time_us;
};

std::string metrics_header();
std::string metrics_row(const MetricsRow& row);

// Stable decimal rendering; infinities render as "inf".
std::string format_double(double x);

}  // namespace kcenter
