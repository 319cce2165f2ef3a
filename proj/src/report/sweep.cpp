#include "snl/report/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "snl/constructions/builders.hpp"

namespace snl {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string optional_number(const std::optional<long>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string fixed(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

}  // namespace

long prior_a(const std::vector<int>& dims) {
  long all = 1;
  long core = 1;
  for (int d : dims) {
    all *= d;
    core *= d - 1;
  }
  return all - core;
}

std::optional<long> prior_b(const std::vector<int>& dims) {
  std::vector<int> d = dims;
  std::sort(d.begin(), d.end());
  if (d.size() == 3) return static_cast<long>(d[1]) * d[2] + d[0] - 1;
  if (d.size() == 4 && d.front() == d.back()) {
    long x = d[0];
    return x * x * x + x - 1;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> sweep_tuples(Construction c, int min, int max) {
  if (min < 2 || max < min) throw ValidationError("sweep range needs 2 <= min <= max");
  std::vector<std::vector<int>> out;
  std::function<void(std::vector<int>&, std::size_t)> rec = [&](std::vector<int>& cur,
                                                                std::size_t len) {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (int d = cur.empty() ? min : cur.back(); d <= max; ++d) {
      cur.push_back(d);
      rec(cur, len);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  switch (c) {
    case Construction::T1:
    case Construction::T3:
      for (int d = min; d <= max; ++d) out.push_back({d});
      break;
    case Construction::T2: rec(cur, 3); break;
    case Construction::T4: rec(cur, 4); break;
    case Construction::EX1: out.push_back({}); break;
    case Construction::Custom: throw ValidationError("custom sets cannot be swept");
  }
  return out;
}

SweepRow sweep_row(Construction c, const std::vector<int>& args, const SweepOptions& opts) {
  SweepRow row;
  row.construction = c;
  row.args = args;
  StateSet s;
  try {
    s = build(c, args);
  } catch (const IndexOutOfRange& e) {
    row.status = "skipped";
    const std::size_t bad = e.offenders().size();
    row.note = std::to_string(bad) + (bad == 1 ? " label" : " labels") + " out of range";
    return row;
  } catch (const ValidationError& e) {
    row.status = "skipped";
    row.note = e.what();
    return row;
  }
  row.status = s.notice.empty() ? "built" : "redirected";
  row.note = s.notice;
  row.dims = s.dims.values();
  row.cardinality = s.size();
  row.lower_bound = lower_bound(s.dims);
  row.prior_a = prior_a(row.dims);
  row.prior_b = prior_b(row.dims);
  if (opts.verify) {
    auto t0 = std::chrono::steady_clock::now();
    row.numeric = verdict_name(verify_strongest(s, opts.verify_opts).overall);
    row.verify_seconds = seconds_since(t0);
  }
  if (opts.replay) {
    auto t0 = std::chrono::steady_clock::now();
    bool all = true;
    for (std::size_t p = 0; p < s.dims.parties(); ++p) {
      auto r = replay(s, MeasuredSet::complement_of(static_cast<int>(p), s.dims),
                      ReplayMode::Fixpoint, opts.verify_opts.threads);
      all = all && r.verdict == ProofVerdict::ProvedTrivial;
    }
    row.replay = proof_verdict_name(all ? ProofVerdict::ProvedTrivial : ProofVerdict::Incomplete);
    row.replay_seconds = seconds_since(t0);
  }
  return row;
}

std::vector<SweepRow> run_sweep(Construction c, const SweepOptions& opts) {
  std::vector<SweepRow> rows;
  for (const auto& args : sweep_tuples(c, opts.min, opts.max)) rows.push_back(sweep_row(c, args, opts));
  return rows;
}

std::string sweep_csv_header() {
  return "construction,args,status,note,dims,cardinality,lower_bound,prior_a,prior_b,"
         "delta_b,numeric_verdict,replay_verdict,verify_seconds,replay_seconds";
}

std::string sweep_csv_line(const SweepRow& row, bool timing) {
  std::ostringstream os;
  const bool built = row.status != "skipped";
  std::optional<long> delta;
  if (built && row.prior_b) delta = *row.prior_b - static_cast<long>(row.cardinality);
  os << construction_name(row.construction) << ',' << join(row.args, ' ') << ',' << row.status
     << ',' << csv_field(row.note) << ',' << join(row.dims, 'x') << ','
     << (built ? std::to_string(row.cardinality) : "") << ','
     << (built ? std::to_string(row.lower_bound) : "") << ',' << optional_number(row.prior_a)
     << ',' << optional_number(row.prior_b) << ',' << optional_number(delta) << ','
     << row.numeric << ',' << row.replay << ',';
  if (timing && row.numeric != "-") os << fixed(row.verify_seconds);
  os << ',';
  if (timing && row.replay != "-") os << fixed(row.replay_seconds);
  return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool timing) {
  std::string out = sweep_csv_header() + "\n";
  for (const auto& r : rows) out += sweep_csv_line(r, timing) + "\n";
  return out;
}

Json bench(const StateSet& s, const VerifyOptions& opts, bool with_replay) {
  Json entries = Json::array();
  double total = 0.0;
  for (std::size_t p = 0; p < s.dims.parties(); ++p) {
    MeasuredSet m = MeasuredSet::complement_of(static_cast<int>(p), s.dims);
    TrivialityVerdict v = check_triviality(s, m, opts);
    Json e{{"measured", m.parties()},
           {"dim", v.dim},
           {"unknowns", v.dim * v.dim},
           {"method", solver_method_name(v.method)},
           {"verdict", verdict_name(v.verdict)},
           {"assemble_seconds", v.assemble_seconds},
           {"decomposition_seconds", v.solve_seconds + v.hermitian_seconds},
           {"verify_seconds", v.wall_seconds}};
    total += v.wall_seconds;
    if (with_replay) {
      ReplayResult r = replay(s, m, ReplayMode::Fixpoint, opts.threads);
      e["replay_verdict"] = proof_verdict_name(r.verdict);
      e["replay_seconds"] = r.wall_seconds;
      total += r.wall_seconds;
    }
    entries.push_back(std::move(e));
  }
  return Json{{"schema", "snl.bench"},
              {"version", kSchemaVersion},
              {"set", s.describe()},
              {"dims", s.dims.values()},
              {"states", s.size()},
              {"threads", opts.threads},
              {"complements", entries},
              {"total_seconds", total}};
}

}  // namespace snl
