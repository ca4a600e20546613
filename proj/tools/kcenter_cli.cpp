// Command-line driver: generate update traces, replay them through one of the
// dynamic k-center engines (CSV metrics per query), or print the exact
// optimum for the graph a trace builds.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "kcenter/oracle.hpp"
#include "kcenter/replay.hpp"
#include "kcenter/trace.hpp"

namespace {

int cmd_gen(const kcenter::GenOptions& opt, const std::string& out_path,
            const std::string& mode_str) {
  kcenter::Trace t = kcenter::generate_trace(opt);
  std::string header = "generated: mode=" + mode_str +
                       " n=" + std::to_string(opt.n) +
                       " density=" + std::to_string(opt.density) +
                       " wmax=" + std::to_string(opt.wmax) +
                       " seed=" + std::to_string(opt.seed);
  kcenter::save_trace(t, out_path, header);
  std::cerr << "wrote " << t.events.size() << " events to " << out_path
            << "\n";
  return 0;
}

int cmd_run(const kcenter::RunOptions& opt, const std::string& trace_path,
            const std::string& out_path) {
  kcenter::Trace t = kcenter::load_trace(trace_path);
  kcenter::RunReport report = kcenter::replay_trace(t, opt);
  if (out_path.empty()) {
    std::cout << report.csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) kcenter::fail(kcenter::Errc::bad_argument,
                            "cannot open output file " + out_path);
    out << report.csv;
  }
  if (report.violations > 0) {
    std::cerr << report.violations << " of " << report.queries
              << " queries violated the oracle bound\n";
    return 1;
  }
  return 0;
}

int cmd_oracle(const std::string& trace_path, int k,
               std::optional<std::uint64_t> at_epoch,
               std::optional<std::size_t> n_override, double wmax_flag) {
  kcenter::Trace t = kcenter::load_trace(trace_path);
  const std::size_t n = n_override.value_or(t.n);
  double wmax = wmax_flag;
  if (wmax <= 0.0) {
    wmax = 1.0;
    for (const auto& e : t.events)
      if (e.kind == kcenter::UpdateEvent::Kind::insert && e.w > wmax)
        wmax = e.w;
  }
  kcenter::DynamicGraph g(n, wmax);
  for (const auto& e : t.events) {
    if (at_epoch && e.epoch > *at_epoch) break;
    if (e.kind == kcenter::UpdateEvent::Kind::insert)
      g.insert_edge(e.u, e.v, e.w);
    else if (e.kind == kcenter::UpdateEvent::Kind::erase)
      g.delete_edge(e.u, e.v);
  }
  const kcenter::ExactKCenter ex =
      kcenter::exact_kcenter(g, static_cast<std::size_t>(k));
  std::cout << "epoch " << (at_epoch ? *at_epoch : g.epoch()) << "  R* = ";
  if (std::isinf(ex.radius))
    std::cout << "inf";
  else
    std::cout << ex.radius;
  std::cout << "  centers =";
  for (kcenter::VertexId c : ex.centers) std::cout << ' ' << c;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic k-center engines over edge-update traces"};
  app.require_subcommand(1);

  // gen-trace
  auto* gen = app.add_subcommand("gen-trace",
                                 "generate a deterministic update trace");
  kcenter::GenOptions gopt;
  std::string gen_mode = "mixed";
  std::string gen_out;
  std::size_t gen_n = 32;
  gen->add_option("--mode", gen_mode, "incr, decr, or mixed")
      ->check(CLI::IsMember({"incr", "decr", "mixed"}));
  gen->add_option("--n", gen_n, "vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--k-hint", gopt.k_hint, "intended k (recorded only)");
  gen->add_option("--density", gopt.density, "target edge density in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gopt.seed, "trace seed");
  gen->add_option("--wmax", gopt.wmax, "max integer edge weight")
      ->check(CLI::PositiveNumber);
  gen->add_option("--ops", gopt.ops, "update count (mixed mode)");
  gen->add_option("--query-every", gopt.query_every,
                  "emit a query every this many updates");
  gen->add_option("--out", gen_out, "output trace file")->required();

  // run
  auto* run = app.add_subcommand(
      "run", "replay a trace through an engine; CSV metrics per query");
  kcenter::RunOptions ropt;
  std::string run_mode;
  std::string run_trace;
  std::string run_out;
  std::size_t run_n = 0;
  int link_weight = 0;
  run->add_option("--mode", run_mode, "incr, decr, or full")
      ->required()
      ->check(CLI::IsMember({"incr", "decr", "full"}));
  run->add_option("--k", ropt.k, "number of centers")
      ->required()
      ->check(CLI::PositiveNumber);
  run->add_option("--eps", ropt.eps, "approximation slack")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", ropt.seed, "master seed (algorithm stream)");
  run->add_option("--trace", run_trace, "trace file to replay")->required();
  run->add_flag("--oracle", ropt.oracle,
                "check every query against the exact optimum");
  run->add_option("--wmax", ropt.wmax,
                  "max edge weight (default: derived from trace)");
  run->add_option("--super-edge-weight", link_weight,
                  "super-source link weight in full mode (0 or 1)")
      ->check(CLI::Range(0, 1));
  run->add_option("--threads", ropt.threads,
                  "worker threads across radius levels (incr mode)")
      ->check(CLI::PositiveNumber);
  run->add_flag("--timing", ropt.timing,
                "emit wall_time_us (breaks byte-reproducibility)");
  run->add_option("--n", run_n, "override vertex count");
  run->add_option("--out", run_out, "write CSV here instead of stdout");

  // oracle
  auto* orc = app.add_subcommand(
      "oracle", "exact optimum of the graph a trace builds");
  std::string orc_trace;
  int orc_k = 1;
  std::uint64_t orc_at = 0;
  bool orc_has_at = false;
  std::size_t orc_n = 0;
  double orc_wmax = 0.0;
  orc->add_option("--trace", orc_trace, "trace file")->required();
  orc->add_option("--k", orc_k, "number of centers")
      ->required()
      ->check(CLI::PositiveNumber);
  orc->add_option("--at", orc_at, "stop after this epoch (default: end)")
      ->each([&](const std::string&) { orc_has_at = true; });
  orc->add_option("--n", orc_n, "override vertex count");
  orc->add_option("--wmax", orc_wmax, "max edge weight");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      gopt.n = gen_n;
      gopt.mode = gen_mode == "mixed" ? kcenter::RunMode::full
                                      : kcenter::parse_mode(gen_mode);
      return cmd_gen(gopt, gen_out, gen_mode);
    }
    if (run->parsed()) {
      ropt.mode = kcenter::parse_mode(run_mode);
      ropt.super_link_weight = static_cast<double>(link_weight);
      if (run_n > 0) ropt.n_override = run_n;
      return cmd_run(ropt, run_trace, run_out);
    }
    return cmd_oracle(orc_trace, orc_k,
                      orc_has_at ? std::optional<std::uint64_t>(orc_at)
                                 : std::nullopt,
                      orc_n > 0 ? std::optional<std::size_t>(orc_n)
                                : std::nullopt,
                      orc_wmax);
  } catch (const kcenter::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
