#include "snl/verifier/triviality.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <limits>

namespace snl {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "Trivial";
    case Verdict::NonTrivial: return "NonTrivial";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double overlap_with_identity(const Eigen::MatrixXcd& basis, std::size_t D) {
  Complex acc(0.0, 0.0);
  for (std::size_t a = 0; a < D; ++a) acc += basis(static_cast<Eigen::Index>(a * D + a), 0);
  return std::norm(acc) / static_cast<double>(D);
}

}  // namespace

TrivialityVerdict check_triviality(const StateSet& s, const MeasuredSet& m,
                                   const VerifyOptions& opts) {
  auto t0 = Clock::now();
  TrivialityVerdict v;
  v.measured = m;
  ConstraintSystem c = assemble(s, m, opts.threads);
  v.assemble_seconds = seconds_since(t0);
  v.states = c.states;
  v.dim = c.dim;
  v.identity_residual = identity_residual(c);

  auto t1 = Clock::now();
  NullspaceResult ns = solution_space(c, opts.rel_tol, opts.method);
  v.solve_seconds = seconds_since(t1);
  v.method = ns.method;
  v.nullspace_dim = ns.dim();
  v.spectral_gap = ns.gap();
  v.sigma_max = ns.sigma_max;
  for (std::size_t k = 0; k < std::min<std::size_t>(8, ns.singular_values.size()); ++k) {
    v.singular_tail.push_back(ns.singular_values[ns.singular_values.size() - 1 - k]);
  }
  v.identity_overlap = v.nullspace_dim == 1 ? overlap_with_identity(ns.basis, c.dim)
                                            : std::numeric_limits<double>::quiet_NaN();

  auto t2 = Clock::now();
  std::vector<double> h = hermitian_system(c);
  const std::size_t h_rows = c.rows();
  c.matrix.clear();
  c.matrix.shrink_to_fit();
  NullspaceResult hs = real_solution_space(h, h_rows, c.cols(), opts.rel_tol, opts.method);
  v.hermitian_seconds = seconds_since(t2);
  v.hermitian_nullspace_dim = hs.dim();
  v.hermitian_gap = hs.gap();

  if (v.nullspace_dim == 0 || v.spectral_gap < kGapThreshold || v.hermitian_gap < kGapThreshold ||
      v.nullspace_dim != v.hermitian_nullspace_dim) {
    v.verdict = Verdict::Inconclusive;
  } else if (v.nullspace_dim == 1 && v.identity_overlap >= 1.0 - kOverlapTolerance) {
    v.verdict = Verdict::Trivial;
  } else {
    v.verdict = Verdict::NonTrivial;
  }
  v.wall_seconds = seconds_since(t0);
  return v;
}

TrivialityVerdict check_single_party(const StateSet& s, int party, const VerifyOptions& opts) {
  return check_triviality(s, MeasuredSet({party}, s.dims), opts);
}

Verdict combine(const std::vector<Verdict>& verdicts) {
  bool all_trivial = !verdicts.empty();
  for (Verdict v : verdicts) {
    if (v == Verdict::NonTrivial) return Verdict::NonTrivial;
    if (v != Verdict::Trivial) all_trivial = false;
  }
  return all_trivial ? Verdict::Trivial : Verdict::Inconclusive;
}

StrongestReport verify_strongest(const StateSet& s, const VerifyOptions& opts) {
  auto t0 = Clock::now();
  StrongestReport report{s.describe(), s.dims, {}, Verdict::Inconclusive, 0.0};
  const int parties = static_cast<int>(s.dims.parties());
  const int workers = std::max(1, std::min(opts.threads, parties));
  VerifyOptions inner = opts;
  inner.threads = std::max(1, opts.threads / workers);

  report.parties.resize(static_cast<std::size_t>(parties));
  for (int base = 0; base < parties; base += workers) {
    std::vector<std::future<TrivialityVerdict>> batch;
    for (int p = base; p < std::min(parties, base + workers); ++p) {
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, [&, p] {
        return check_triviality(s, MeasuredSet::complement_of(p, s.dims), inner);
      }));
    }
    for (int p = base; p < std::min(parties, base + workers); ++p) {
      report.parties[static_cast<std::size_t>(p)] = batch[static_cast<std::size_t>(p - base)].get();
    }
  }
  std::vector<Verdict> all;
  for (const auto& v : report.parties) all.push_back(v.verdict);
  report.overall = combine(all);
  report.wall_seconds = seconds_since(t0);
  return report;
}

}  // namespace snl
