// snl: build state sets, certify OPLM triviality numerically and
// symbolically, and produce sweep / benchmark tables.
//
// Exit status: 0 Trivial / ProvedTrivial, 1 NonTrivial, 2 Incomplete /
// Inconclusive, 3 usage error, 4 validation error, 5 size limit.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "snl/constructions/builders.hpp"
#include "snl/io/json_io.hpp"
#include "snl/io/render.hpp"
#include "snl/report/sweep.hpp"
#include "snl/verifier/constraints.hpp"

using namespace snl;

namespace {

constexpr int kExitNonTrivial = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitUsage = 3;
constexpr int kExitValidation = 4;
constexpr int kExitSize = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Selector {
  std::string construction;
  std::optional<int> d;
  std::vector<int> dims;
  std::string input;
  std::vector<int> measured;
};

struct Common {
  double rel_tol = kDefaultRelTol;
  std::string method = "auto";
  int threads = 0;
};

int default_threads() {
  if (const char* env = std::getenv("SNL_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("SNL_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void add_selector(CLI::App* cmd, Selector& sel, bool with_measured = true) {
  cmd->add_option("construction", sel.construction, "t1 | t2 | ex1 | t3 | t4");
  cmd->add_option("--d", sel.d, "local dimension for t1 / t3");
  cmd->add_option("--dims", sel.dims, "dimensions for t2 (3) / t4 (4), comma separated")
      ->delimiter(',');
  cmd->add_option("--input", sel.input, "StateSet JSON file instead of a construction");
  if (with_measured) {
    cmd->add_option("--measured", sel.measured,
                    "measured parties (0-based, comma separated); default: every single-party "
                    "complement")
        ->delimiter(',');
  }
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--rel-tol", c.rel_tol, "relative singular value threshold, in (0, 1)");
  cmd->add_option("--method", c.method, "auto | svd | gram");
  cmd->add_option("--threads", c.threads, "worker threads (default: $SNL_THREADS or all cores)");
}

VerifyOptions verify_options(const Common& c) {
  if (!(c.rel_tol > 0.0 && c.rel_tol < 1.0)) throw UsageError("--rel-tol must lie in (0, 1)");
  VerifyOptions o;
  o.rel_tol = c.rel_tol;
  try {
    o.method = parse_solver_method(c.method);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  if (c.threads < 0) throw UsageError("--threads must be positive");
  o.threads = c.threads > 0 ? c.threads : default_threads();
  return o;
}

Construction construction_arg(const std::string& name) {
  try {
    Construction c = parse_construction(name);
    if (c == Construction::Custom) throw UsageError("custom sets are read with --input");
    return c;
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
}

StateSet select_set(const Selector& sel) {
  if (!sel.input.empty()) {
    if (!sel.construction.empty() || sel.d || !sel.dims.empty()) {
      throw UsageError("--input excludes a construction selector");
    }
    return load_stateset(sel.input);
  }
  if (sel.construction.empty()) throw UsageError("give a construction or --input");
  Construction c = construction_arg(sel.construction);
  std::vector<int> args;
  switch (c) {
    case Construction::T1:
    case Construction::T3:
      if (!sel.d || !sel.dims.empty()) throw UsageError(sel.construction + " takes --d");
      args = {*sel.d};
      break;
    case Construction::T2:
    case Construction::T4: {
      std::size_t want = c == Construction::T2 ? 3 : 4;
      if (sel.d || sel.dims.size() != want) {
        throw UsageError(sel.construction + " takes --dims with " + std::to_string(want) +
                         " entries");
      }
      args = sel.dims;
      break;
    }
    case Construction::EX1:
      if (sel.d || !sel.dims.empty()) throw UsageError("ex1 takes no dimensions");
      break;
    case Construction::Custom: break;
  }
  return build(c, args);
}

std::vector<MeasuredSet> measured_sets(const Selector& sel, const StateSet& s) {
  if (!sel.measured.empty()) return {MeasuredSet(sel.measured, s.dims)};
  std::vector<MeasuredSet> out;
  for (std::size_t p = 0; p < s.dims.parties(); ++p) {
    out.push_back(MeasuredSet::complement_of(static_cast<int>(p), s.dims));
  }
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return 0;
    case Verdict::NonTrivial: return kExitNonTrivial;
    case Verdict::Inconclusive: break;
  }
  return kExitIncomplete;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build strongest-nonlocal state sets and certify that every OPLM on a "
               "single-party complement is trivial."};
  app.require_subcommand(1);

  Selector sel;
  Common common;

  auto* gen = app.add_subcommand("generate", "build a set and write its JSON");
  add_selector(gen, sel);
  std::string gen_out = "-";
  std::string grid_path;
  std::string grid_csv_path;
  gen->add_option("-o,--output", gen_out, "JSON output ('-' for stdout)");
  gen->add_option("--grid", grid_path, "write the owner grid as text ('-' for stdout)");
  gen->add_option("--grid-csv", grid_csv_path, "write the owner grid as CSV");

  auto* ver = app.add_subcommand("verify", "numerical nullspace certificate");
  add_selector(ver, sel);
  add_common(ver, common);
  std::string ver_out;
  bool ver_json = false;
  ver->add_option("-o,--output", ver_out, "report JSON file");
  ver->add_flag("--json", ver_json, "print the JSON report instead of the table");

  auto* rep = app.add_subcommand("replay", "exact symbolic proof replay");
  add_selector(rep, sel);
  add_common(rep, common);
  std::string mode_name = "fixpoint";
  std::string rep_out;
  std::string rep_text;
  bool show = false;
  bool diff_appendix = false;
  rep->add_option("--mode", mode_name, "fixpoint | paper-order");
  rep->add_option("-o,--output", rep_out, "trace JSON file");
  rep->add_option("--text", rep_text, "text rendering of the trace ('-' for stdout)");
  rep->add_flag("--show", show, "print the text rendering");
  rep->add_flag("--diff-appendix", diff_appendix,
                "annotate staged blocks with the families they draw on");

  auto* swp = app.add_subcommand("sweep", "cardinality and verdict table over a dims range");
  std::string swp_construction;
  SweepOptions sweep_opts;
  std::string swp_out = "-";
  bool no_replay = false;
  bool no_timing = false;
  swp->add_option("construction", swp_construction, "t1 | t2 | ex1 | t3 | t4")->required();
  swp->add_option("--min", sweep_opts.min, "smallest local dimension");
  swp->add_option("--max", sweep_opts.max, "largest local dimension");
  swp->add_flag("--verify", sweep_opts.verify, "also run the numerical oracle");
  swp->add_flag("--no-replay", no_replay, "skip the symbolic oracle");
  swp->add_flag("--no-timing", no_timing, "leave timing columns empty");
  swp->add_option("-o,--output", swp_out, "CSV output ('-' for stdout)");
  add_common(swp, common);

  auto* bch = app.add_subcommand("bench", "per-complement wall times as JSON");
  add_selector(bch, sel, false);
  add_common(bch, common);
  std::string bch_out = "-";
  bool bch_no_replay = false;
  bch->add_option("-o,--output", bch_out, "JSON output ('-' for stdout)");
  bch->add_flag("--no-replay", bch_no_replay, "time the numerical oracle only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      StateSet s = select_set(sel);
      if (!s.notice.empty()) std::cerr << "notice: " << s.notice << "\n";
      emit(gen_out, to_json(s).dump(1) + "\n");
      MeasuredSet m = sel.measured.empty() ? MeasuredSet::complement_of(0, s.dims)
                                           : MeasuredSet(sel.measured, s.dims);
      if (!grid_path.empty()) emit(grid_path, render_grid(s, m));
      if (!grid_csv_path.empty()) emit(grid_csv_path, grid_csv(s, m));
      if (gen_out != "-") {
        std::cout << s.describe() << ": " << s.size() << " states, lower bound "
                  << lower_bound(s.dims) << " -> " << gen_out << "\n";
      }
      return 0;
    }

    if (ver->parsed()) {
      VerifyOptions opts = verify_options(common);
      StateSet s = select_set(sel);
      StrongestReport r;
      if (sel.measured.empty()) {
        r = verify_strongest(s, opts);
      } else {
        r.set = s.describe();
        r.dims = s.dims;
        r.parties.push_back(check_triviality(s, MeasuredSet(sel.measured, s.dims), opts));
        r.overall = r.parties.front().verdict;
        r.wall_seconds = r.parties.front().wall_seconds;
      }
      if (ver_json) {
        std::cout << to_json(r).dump(1) << "\n";
      } else {
        std::cout << render_report(r, s);
      }
      if (!ver_out.empty()) write_file(ver_out, to_json(r).dump(1) + "\n");
      return verdict_exit(r.overall);
    }

    if (rep->parsed()) {
      VerifyOptions opts = verify_options(common);
      ReplayMode mode;
      try {
        mode = parse_replay_mode(mode_name);
      } catch (const ValidationError& e) {
        throw UsageError(e.what());
      }
      StateSet s = select_set(sel);
      Json results = Json::array();
      std::string text;
      bool all = true;
      for (const auto& m : measured_sets(sel, s)) {
        ReplayResult r = replay(s, m, mode, opts.threads);
        all = all && r.verdict == ProofVerdict::ProvedTrivial;
        std::cout << m.to_string() << " " << proof_verdict_name(r.verdict) << "  zeros "
                  << r.zero_entries << "/" << r.off_diagonal_total << ", diagonal rank "
                  << r.diagonal_rank << "/" << r.dim - 1 << ", " << r.trace.steps.size()
                  << " steps";
        if (!r.note.empty()) std::cout << "  (" << r.note << ")";
        std::cout << "\n";
        text += render_trace(r, s, diff_appendix) + "\n";
        results.push_back(to_json(r));
      }
      if (show) std::cout << "\n" << text;
      if (!rep_text.empty()) emit(rep_text, text);
      if (!rep_out.empty()) {
        Json doc{{"schema", kTraceSchema},
                 {"version", kSchemaVersion},
                 {"set", s.describe()},
                 {"dims", s.dims.values()},
                 {"mode", replay_mode_name(mode)},
                 {"results", results}};
        write_file(rep_out, doc.dump(1) + "\n");
      }
      return all ? 0 : kExitIncomplete;
    }

    if (swp->parsed()) {
      sweep_opts.verify_opts = verify_options(common);
      sweep_opts.replay = !no_replay;
      sweep_opts.timing = !no_timing;
      if (sweep_opts.min < 2 || sweep_opts.max < sweep_opts.min) {
        throw UsageError("sweep needs 2 <= --min <= --max");
      }
      auto rows = run_sweep(construction_arg(swp_construction), sweep_opts);
      emit(swp_out, sweep_csv(rows, sweep_opts.timing));
      int rc = 0;
      for (const auto& r : rows) {
        if (r.numeric == "NonTrivial") rc = std::max(rc, kExitNonTrivial);
        if (r.numeric == "Inconclusive" || r.replay == "Incomplete") rc = kExitIncomplete;
      }
      return rc;
    }

    if (bch->parsed()) {
      VerifyOptions opts = verify_options(common);
      StateSet s = select_set(sel);
      emit(bch_out, bench(s, opts, !bch_no_replay).dump(1) + "\n");
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kExitSize;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const HypothesisNotEstablished& e) {
    std::cerr << "replay: " << e.what() << "\n";
    return kExitIncomplete;
  }
  return kExitUsage;
}
