#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kcenter/graph.hpp"

namespace kcenter {

/// A parsed update trace. Events carry running epochs (structural updates
/// only; queries keep the epoch of the update before them). `n` comes from
/// an optional leading `# n <count>` comment; without one it defaults to
/// max vertex id + 1 across the file.
struct Trace {
  std::size_t n = 0;
  std::vector<UpdateEvent> events;
};

Trace parse_trace(std::istream& in);
Trace load_trace(const std::string& path);

// One event in trace syntax: "I u v w", "D u v" or "Q" (no newline).
std::string format_event(const UpdateEvent& e);

void save_trace(const Trace& trace, const std::string& path,
                const std::string& header_comment = "");

}  // namespace kcenter
