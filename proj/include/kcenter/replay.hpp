#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kcenter/trace.hpp"

namespace kcenter {

enum class RunMode { incr, decr, full };

std::string mode_name(RunMode mode);
RunMode parse_mode(const std::string& name);  // bad_argument on junk

/// Replay of one trace against one engine. The trace drives the graph; the
/// engine answers at every Q event, producing one CSV row. Oracle checking
/// computes the exact optimum at each query and flags bound violations:
///   incr:  coverage <= (4+eps)  * optimum at feasible queries
///   decr:  coverage <= (2+eps)  * optimum, and infeasible exactly when the
///          graph has more than k components
///   full:  coverage <= 2*(1+eps) * optimum (the exact distance engine in
///          fact keeps it within 2*optimum)
struct RunOptions {
  RunMode mode = RunMode::full;
  int k = 1;
  double eps = 0.5;
  std::uint64_t seed = 0;
  bool oracle = false;
  double wmax = 0.0;  // 0: derive from the trace's largest weight
  double super_link_weight = 0.0;  // full mode: 0 or 1
  int threads = 1;                 // incr mode: level fan-out
  bool timing = false;
  std::optional<std::size_t> n_override;
};

struct RunReport {
  std::string csv;
  std::uint64_t violations = 0;
  std::size_t queries = 0;
};

RunReport replay_trace(const Trace& trace, const RunOptions& opt);

/// Deterministic trace generation. The generator and the engines draw from
/// seed streams derived separately from the master seed, so updates are
/// oblivious to the algorithm's randomness.
///   incr:  insertions building a density-target graph
///   decr:  a build prefix of insertions, then deletions down to empty
///   full:  `ops` mixed insertions/deletions hovering near the density target
/// Q events appear every `query_every` updates and once at the end.
struct GenOptions {
  RunMode mode = RunMode::full;
  std::size_t n = 32;
  int k_hint = 2;
  double density = 0.3;
  std::uint64_t seed = 0;
  double wmax = 8.0;
  std::size_t ops = 300;
  std::size_t query_every = 25;
};

Trace generate_trace(const GenOptions& opt);

// Seed-stream tags (see prng.hpp): one for trace generation, one for
// algorithm randomness.
inline constexpr std::uint64_t kTraceStream = 0x74726163650a5eedULL;
inline constexpr std::uint64_t kAlgoStream = 0x616c676f0a5eed01ULL;

}  // namespace kcenter
