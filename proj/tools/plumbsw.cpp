// plumbsw: Seiberg-Witten invariants of negative definite plumbing trees,
// computed by three independent exact routes and cross-checked.

#include "plumbsw/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Seiberg-Witten invariants of negative definite plumbed 3-manifolds"};
  app.require_subcommand(1);

  std::string path;
  plumbsw::CliOptions opt;
  if (const char* env = std::getenv("PLUMBSW_CAP")) opt.cap = std::atol(env);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("graph", path, "graph file (text, or JSON with .json extension)")->required();
    sub->add_option("--cap", opt.cap, "stabilization cap (levels / pc blocks)");
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a plumbing graph");
  add_common(validate);

  CLI::App* sw = app.add_subcommand("sw", "compute the Seiberg-Witten table");
  add_common(sw);
  sw->add_option("--method", opt.method, "series | latcoh | surgery | all")
      ->check(CLI::IsMember({"series", "latcoh", "surgery", "all"}));
  sw->add_flag("--json", opt.json, "machine-readable output");
  sw->add_flag("--parallel", opt.parallel, "compute classes in parallel");
  sw->add_option("--dump-series", opt.dump_series_path, "write the coefficient table as CSV");
  sw->add_option("--dump-bound", opt.dump_bound, "per-vertex bound for --dump-series");

  CLI::App* check = app.add_subcommand("check", "run the full identity cross-check suite");
  add_common(check);
  check->add_flag("--parallel", opt.parallel, "compute classes in parallel");
  check->add_flag("--with-blowup", opt.with_blowup, "also check blow-up invariance");

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return plumbsw::cmd_validate(path, std::cout, std::cerr);
  if (sw->parsed()) return plumbsw::cmd_sw(path, opt, std::cout, std::cerr);
  return plumbsw::cmd_check(path, opt, std::cout, std::cerr);
}
