#pragma once

#include <string>
#include <vector>

#include "snl/verifier/nullspace.hpp"

namespace snl {

enum class Verdict { Trivial, NonTrivial, Inconclusive };
std::string verdict_name(Verdict v);

inline constexpr double kDefaultRelTol = 1e-9;
inline constexpr double kGapThreshold = 1e3;
inline constexpr double kOverlapTolerance = 1e-8;

struct VerifyOptions {
  double rel_tol = kDefaultRelTol;
  SolverMethod method = SolverMethod::Auto;
  int threads = 1;
};

struct TrivialityVerdict {
  MeasuredSet measured;
  std::size_t states = 0;
  std::size_t dim = 0;
  std::size_t nullspace_dim = 0;
  std::size_t hermitian_nullspace_dim = 0;
  /// |<v, vec(I)/sqrt(D)>|^2 when nullspace_dim == 1, NaN otherwise.
  double identity_overlap = 0.0;
  double identity_residual = 0.0;
  double spectral_gap = 0.0;
  double hermitian_gap = 0.0;
  double sigma_max = 0.0;
  /// Smallest singular values, ascending, at most 8.
  std::vector<double> singular_tail;
  SolverMethod method = SolverMethod::Svd;
  Verdict verdict = Verdict::Inconclusive;
  double assemble_seconds = 0.0;
  double solve_seconds = 0.0;
  double hermitian_seconds = 0.0;
  double wall_seconds = 0.0;
};

TrivialityVerdict check_triviality(const StateSet& s, const MeasuredSet& m,
                                   const VerifyOptions& opts = {});

TrivialityVerdict check_single_party(const StateSet& s, int party,
                                     const VerifyOptions& opts = {});

struct StrongestReport {
  std::string set;
  Dims dims;
  std::vector<TrivialityVerdict> parties;  // complement of party p at index p
  Verdict overall = Verdict::Inconclusive;
  double wall_seconds = 0.0;
};

/// Overall Trivial iff every complement is Trivial; NonTrivial if any is
/// NonTrivial; Inconclusive otherwise.
Verdict combine(const std::vector<Verdict>& verdicts);

/// One check per single-party complement, run on up to opts.threads workers.
StrongestReport verify_strongest(const StateSet& s, const VerifyOptions& opts = {});

}  // namespace snl
