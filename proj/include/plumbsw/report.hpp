// Command-line orchestration, kept here (not in the binary) so the exit-code
// and report logic is testable in-process.
//
// Exit codes: 0 ok, 1 invalid input, 2 mathematical disagreement or
// non-convergence.

#pragma once

#include "plumbsw/latcoh.hpp"
#include "plumbsw/surgery.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace plumbsw {

struct ClassRow {
  ClassId cls;
  std::optional<Rat> sw_series, sw_latcoh, sw_surgery;
  std::optional<Rat> d_invariant, eu;
  bool agree = true;
};

struct RunReport {
  int s = 0;
  Int d;
  Rat k_squared;
  std::vector<std::int64_t> invariant_factors;
  std::vector<ClassRow> rows;
  std::vector<std::pair<std::string, bool>> checks;
  double elapsed_ms = 0;  // human output only; never serialized

  bool all_agree() const;
};

struct CliOptions {
  std::string method = "all";  // series | latcoh | surgery | all
  bool json = false;
  bool parallel = false;
  long cap = 0;  // 0 = defaults; otherwise latcoh level cap and pc block cap
  bool with_blowup = false;
  std::string dump_series_path;  // optional CSV dump of the coefficient table
  long dump_bound = 6;
};

/// Byte-deterministic for a fixed input and version: stable class order,
/// exact fraction strings, no timing.
std::string report_json(const RunReport& rep);

RunReport compute_report(const LatticeContext& ctx, const CliOptions& opt);

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_sw(const std::string& path, const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& path, const CliOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace plumbsw
