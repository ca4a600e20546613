#include "kcenter/trace.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace kcenter {

namespace {

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
  fail(Errc::parse_error, "trace line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

Trace parse_trace(std::istream& in) {
  Trace trace;
  bool n_declared = false;
  VertexId max_id = 0;
  bool saw_vertex = false;
  std::uint64_t epoch = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank
    if (tok[0] == '#') {
      // `# n <count>` pins the vertex-set size; all other comments are noise.
      std::string key;
      std::size_t val;
      if (!n_declared && ls >> key >> val && key == "n" && val > 0) {
        trace.n = val;
        n_declared = true;
      }
      continue;
    }
    UpdateEvent e;
    if (tok == "I") {
      e.kind = UpdateEvent::Kind::insert;
      if (!(ls >> e.u >> e.v >> e.w)) parse_fail(line_no, "expected I u v w");
    } else if (tok == "D") {
      e.kind = UpdateEvent::Kind::erase;
      if (!(ls >> e.u >> e.v)) parse_fail(line_no, "expected D u v");
    } else if (tok == "Q") {
      e.kind = UpdateEvent::Kind::query;
    } else {
      parse_fail(line_no, "unknown event '" + tok + "'");
    }
    std::string rest;
    if (ls >> rest && rest[0] != '#')
      parse_fail(line_no, "trailing token '" + rest + "'");
    if (e.kind != UpdateEvent::Kind::query) {
      ++epoch;
      max_id = std::max(max_id, std::max(e.u, e.v));
      saw_vertex = true;
    }
    e.epoch = epoch;
    trace.events.push_back(e);
  }
  if (!n_declared) trace.n = saw_vertex ? static_cast<std::size_t>(max_id) + 1 : 1;
  if (saw_vertex && static_cast<std::size_t>(max_id) >= trace.n)
    fail(Errc::parse_error, "trace references vertex " + std::to_string(max_id) +
                                " but declares n=" + std::to_string(trace.n));
  return trace;
}

Trace load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_argument, "cannot open trace file " + path);
  return parse_trace(in);
}

std::string format_event(const UpdateEvent& e) {
  switch (e.kind) {
    case UpdateEvent::Kind::insert:
      return "I " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
             format_weight(e.w);
    case UpdateEvent::Kind::erase:
      return "D " + std::to_string(e.u) + " " + std::to_string(e.v);
    case UpdateEvent::Kind::query:
      return "Q";
  }
  return "";
}

void save_trace(const Trace& trace, const std::string& path,
                const std::string& header_comment) {
  std::ofstream out(path);
  if (!out) fail(Errc::bad_argument, "cannot write trace file " + path);
  out << "# n " << trace.n << "\n";
  if (!header_comment.empty()) out << "# " << header_comment << "\n";
  for (const UpdateEvent& e : trace.events) out << format_event(e) << "\n";
}

}  // namespace kcenter
