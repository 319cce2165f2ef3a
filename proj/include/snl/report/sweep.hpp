#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snl/io/json_io.hpp"

namespace snl {

/// Cardinalities of earlier strongest-nonlocal constructions, for comparison.
///   prior_a: prod d_i - prod (d_i - 1), any party count
///   prior_b: d2 d3 + d1 - 1 (three parties) or d^3 + d - 1 (four equal dims)
long prior_a(const std::vector<int>& dims);
std::optional<long> prior_b(const std::vector<int>& dims);

struct SweepOptions {
  int min = 2;
  int max = 4;
  bool verify = false;
  bool replay = true;
  bool timing = true;
  VerifyOptions verify_opts;
};

struct SweepRow {
  Construction construction = Construction::T1;
  /// Builder arguments as requested.
  std::vector<int> args;
  /// "built", "redirected" or "skipped"
  std::string status;
  std::string note;
  std::vector<int> dims;
  std::size_t cardinality = 0;
  std::size_t lower_bound = 0;
  std::optional<long> prior_a;
  std::optional<long> prior_b;
  /// "-" when not run
  std::string numeric = "-";
  std::string replay = "-";
  double verify_seconds = 0.0;
  double replay_seconds = 0.0;
};

/// Builder argument tuples for a sweep: {d} for t1/t3, nondecreasing dims in
/// [min, max] for t2/t4, one empty tuple for ex1.
std::vector<std::vector<int>> sweep_tuples(Construction c, int min, int max);

SweepRow sweep_row(Construction c, const std::vector<int>& args, const SweepOptions& opts);
std::vector<SweepRow> run_sweep(Construction c, const SweepOptions& opts);

/// Fixed header; timing columns are left empty when timing is off so that
/// repeated runs are byte-identical.
std::string sweep_csv_header();
std::string sweep_csv_line(const SweepRow& row, bool timing);
std::string sweep_csv(const std::vector<SweepRow>& rows, bool timing);

/// Per-complement wall times for assemble / decomposition / replay.
Json bench(const StateSet& s, const VerifyOptions& opts, bool with_replay);

}  // namespace snl
