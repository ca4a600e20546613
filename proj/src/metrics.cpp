#include "kcenter/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace kcenter {

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string metrics_header() {
  return "step_epoch,mode,k,eps,radius_bound,oracle_R_star,approx_ratio,"
         "centers,recourse_total,sssp_restarts_total,level_answered,"
         "wall_time_us";
}

std::string metrics_row(const MetricsRow& row) {
  std::ostringstream out;
  out << row.epoch << ',' << row.mode << ',' << row.k << ','
      << format_double(row.eps) << ',' << format_double(row.radius_bound)
      << ',';
  if (row.oracle_r_star) out << format_double(*row.oracle_r_star);
  out << ',';
  if (row.approx_ratio) out << format_double(*row.approx_ratio);
  out << ',';
  for (std::size_t i = 0; i < row.centers.size(); ++i) {
    if (i) out << ';';
    out << row.centers[i];
  }
  out << ',' << row.recourse_total << ',' << row.sssp_restarts_total << ',';
  if (row.level_answered >= 0) out << row.level_answered;
  out << ',';
  if (row.wall_time_us) out << *row.wall_time_us;
  return out.str();
}

}  // namespace kcenter
