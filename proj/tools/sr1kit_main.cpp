#include "sr1kit/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

std::string bound_default(const sr1kit::Int& v) { return sr1kit::to_string(v); }

}  // namespace

int main(int argc, char** argv) {
  using sr1kit::cli::Command;

  CLI::App app{"Exact decision toolkit for stable-range-1, clean and exchange 2x2 matrices"};
  app.require_subcommand(1);

  Command cmd;
  std::string bound_str = "-1";
  std::string clean_bound_str = "100";
  std::string exchange_bound_str = "6";

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--pretty", cmd.pretty, "indented human-oriented output");
    sub->add_option("--jobs", cmd.jobs, "worker threads (default: SR1KIT_JOBS or all cores)");
  };

  CLI::App* smith = app.add_subcommand("smith", "Smith normal form with unimodular transforms");
  smith->add_option("matrix", cmd.matrix, "matrix literal \"a,b;c,d\"")->required();
  add_common(smith);

  CLI::App* sr1 = app.add_subcommand("sr1", "stable-range-1 classification");
  sr1->add_option("matrix", cmd.matrix, "matrix literal")->required();
  sr1->add_option("--ring", cmd.ring, "\"int\" (default) or \"zmod:N\", N <= 6");
  add_common(sr1);

  CLI::App* unitizer = app.add_subcommand("unitizer", "construct a unitizer certificate");
  unitizer->add_option("--matrix", cmd.matrix, "matrix literal")->required();
  unitizer->add_option("--x", cmd.x_literal, "X literal (default 0,0;0,0)");
  unitizer->add_option("--method", cmd.method, "pipeline (default) | search | table");
  unitizer->add_option("--bound", bound_str, "search bound (method=search, default 5)");
  unitizer->add_flag("--alt", cmd.alt_table, "second table unitizer for c = 1 (mod 3)");
  add_common(unitizer);

  CLI::App* clean = app.add_subcommand("clean", "clean decomposition decision");
  clean->add_option("matrix", cmd.matrix, "matrix literal")->required();
  clean->add_option("--bound", bound_str, "conic fallback bound (default 100)");
  add_common(clean);

  CLI::App* exchange = app.add_subcommand("exchange", "bounded exchange witness search");
  exchange->add_option("matrix", cmd.matrix, "matrix literal")->required();
  exchange->add_option("--bound", bound_str, "witness entry bound (default 6)");
  add_common(exchange);

  CLI::App* scan = app.add_subcommand("scan", "density scan over a bounded matrix grid");
  scan->add_option("--entry-bound", cmd.entry_bound, "grid bound (default 9)");
  scan->add_option("--clean-bound", clean_bound_str, "conic fallback bound (default 100)");
  scan->add_option("--exchange-bound", exchange_bound_str, "exchange witness bound (default 6)");
  scan->add_option("--json", cmd.json_path, "resumable chunk file (one JSON record per block)");
  add_common(scan);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--ring", cmd.ring, "\"int\" (default) or \"zmod:N\", N <= 6");
  verify->add_flag("--exhaustive", cmd.exhaustive, "widen sampled loops to full ranges");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (smith->parsed()) cmd.kind = Command::Kind::Smith;
  if (sr1->parsed()) cmd.kind = Command::Kind::Sr1;
  if (unitizer->parsed()) cmd.kind = Command::Kind::Unitizer;
  if (clean->parsed()) cmd.kind = Command::Kind::Clean;
  if (exchange->parsed()) cmd.kind = Command::Kind::Exchange;
  if (scan->parsed()) cmd.kind = Command::Kind::Scan;
  if (verify->parsed()) cmd.kind = Command::Kind::Verify;

  try {
    cmd.bound = sr1kit::Int(bound_str);
    cmd.clean_bound = sr1kit::Int(clean_bound_str);
    cmd.exchange_bound = sr1kit::Int(exchange_bound_str);
  } catch (const std::exception&) {
    std::cerr << "bounds must be integers (got --bound " << bound_str << ")\n";
    return 1;
  }
  (void)bound_default;

  return sr1kit::cli::run(cmd, std::cout, std::cerr);
}
