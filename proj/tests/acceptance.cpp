// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "oracle.hpp"
#include "snl/constructions/builders.hpp"
#include "snl/proof/replay.hpp"
#include "snl/report/sweep.hpp"
#include "snl/verifier/triviality.hpp"

using namespace snl;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Case {
  Construction c;
  std::vector<int> args;
  std::size_t expected;  // published cardinality
  StateSet set;
  double build_seconds = 0.0;
};

std::vector<Case> criterion_sets() {
  std::vector<Case> out;
  for (int d = 2; d <= 6; ++d) out.push_back({Construction::T1, {d}, std::size_t(d * d + 1), {}});
  for (auto t : std::vector<std::vector<int>>{{2, 3, 3}, {2, 3, 4}, {3, 4, 4}, {3, 4, 5}})
    out.push_back({Construction::T2, t, std::size_t(t[1] * t[2] + 1), {}});
  out.push_back({Construction::EX1, {}, 28, {}});
  for (int d = 2; d <= 4; ++d) out.push_back({Construction::T3, {d}, std::size_t(d * d * d + 1), {}});
  for (auto t : std::vector<std::vector<int>>{{2, 3, 3, 3}, {2, 3, 3, 4}, {2, 3, 4, 5}})
    out.push_back({Construction::T4, t, std::size_t(t[1] * t[2] * t[3] + 1), {}});
  return out;
}

std::string name_of(const Case& k) {
  std::ostringstream os;
  os << construction_name(k.c);
  for (std::size_t i = 0; i < k.args.size(); ++i) os << (i ? "," : " ") << k.args[i];
  return os.str();
}

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Detail lines for a failing sub-check.
void detail(const std::string& msg) { std::printf("    %s\n", msg.c_str()); }

StateSet identity_of(const Dims& dims, std::vector<Ket> psis) {
  StateSet s;
  s.dims = dims;
  s.mixing = Mixing::Identity;
  s.psis = std::move(psis);
  return s;
}

/// Every bipartition {S, complement} with party 0 on the kept side, as the
/// measured party list.
std::vector<std::vector<int>> bipartitions(std::size_t parties) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << parties); ++mask) {
    if (mask & 1u) continue;
    std::vector<int> m;
    for (std::size_t p = 0; p < parties; ++p)
      if (mask & (1u << p)) m.push_back(static_cast<int>(p));
    out.push_back(m);
  }
  return out;
}

}  // namespace

int main() {
  const int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  VerifyOptions opts;
  opts.threads = threads;

  std::vector<Case> cases = criterion_sets();

  // 1: cardinality equals the lower bound
  {
    bool ok = true;
    for (auto& k : cases) {
      auto t0 = Clock::now();
      k.set = build(k.c, k.args);
      k.build_seconds = since(t0);
      const bool good = k.set.size() == k.expected && k.set.size() == lower_bound(k.set.dims) &&
                        k.build_seconds < 1.0;
      if (!good) {
        detail(name_of(k) + ": " + std::to_string(k.set.size()) + " states (want " +
               std::to_string(k.expected) + "), " + std::to_string(k.build_seconds) + " s");
      }
      ok = ok && good;
    }
    report(1, ok, "cardinality d^2+1 / d2d3+1 / 28 / d^3+1 / d2d3d4+1 on " +
                      std::to_string(cases.size()) + " sets, each built in < 1 s");
  }

  // 2: exact alpha orthonormality, float psi orthogonality
  {
    bool ok = true;
    double worst = 0.0;
    for (const auto& k : cases) {
      const auto& a = k.set.alphas;
      for (std::size_t x = 0; x < a.size(); ++x) {
        auto self = exact_inner(a[x].ket, a[x].ket).as_rational();
        if (!self || *self != 1) {
          ok = false;
          detail(name_of(k) + ": alpha " + std::to_string(x) + " not unit");
        }
        for (std::size_t y = x + 1; y < a.size(); ++y) {
          if (!exact_inner(a[x].ket, a[y].ket).certainly_zero()) {
            ok = false;
            detail(name_of(k) + ": alphas " + std::to_string(x) + "," + std::to_string(y));
          }
        }
      }
      const auto& p = k.set.psis;
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) worst = std::max(worst, std::abs(inner(p[i], p[j])));
      }
    }
    ok = ok && worst <= 1e-12;
    std::ostringstream os;
    os << "alphas exactly orthonormal; max |<psi_i|psi_j>| = " << worst << " (<= 1e-12)";
    report(2, ok, os.str());
  }

  // 3: numerical oracle on every single-party complement
  std::vector<StrongestReport> numeric(cases.size());
  {
    bool ok = true;
    double slowest_three = 0.0, slowest_four = 0.0;
    for (std::size_t n = 0; n < cases.size(); ++n) {
      const auto& k = cases[n];
      numeric[n] = verify_strongest(k.set, opts);
      const double wall = numeric[n].wall_seconds;
      const bool four = k.set.dims.parties() == 4;
      (four ? slowest_four : slowest_three) = std::max(four ? slowest_four : slowest_three, wall);
      bool good = wall <= (four ? 600.0 : 60.0);
      for (const auto& v : numeric[n].parties) {
        good = good && v.verdict == Verdict::Trivial && v.nullspace_dim == 1 &&
               v.identity_overlap >= 1.0 - 1e-8 && v.spectral_gap >= 1e3;
      }
      std::ostringstream os;
      os << name_of(k) << ": " << verdict_name(numeric[n].overall) << " in " << wall << " s, gaps";
      for (const auto& v : numeric[n].parties) os << ' ' << v.spectral_gap;
      detail(os.str());
      ok = ok && good;
    }
    std::ostringstream os;
    os << "Trivial, nullspace 1, overlap >= 1-1e-8, gap >= 1e3 on every complement; slowest "
       << slowest_three << " s (3 parties, <= 60), " << slowest_four << " s (4 parties, <= 600)";
    report(3, ok, os.str());
  }

  // 4: symbolic replay in both modes agrees with the numerical oracle
  {
    bool ok = true;
    std::size_t pairs = 0;
    for (std::size_t n = 0; n < cases.size(); ++n) {
      const auto& k = cases[n];
      for (std::size_t p = 0; p < k.set.dims.parties(); ++p) {
        MeasuredSet m = MeasuredSet::complement_of(static_cast<int>(p), k.set.dims);
        for (ReplayMode mode : {ReplayMode::Fixpoint, ReplayMode::PaperOrder}) {
          ReplayResult r = replay(k.set, m, mode, threads);
          const bool proved = r.verdict == ProofVerdict::ProvedTrivial;
          const bool agree = proved == (numeric[n].parties[p].verdict == Verdict::Trivial);
          if (!proved || !agree || !r.trace.well_founded()) {
            ok = false;
            detail(name_of(k) + " " + m.to_string() + " " + replay_mode_name(mode) + ": " +
                   proof_verdict_name(r.verdict) + " " + r.note);
          }
        }
        ++pairs;
      }
    }
    report(4, ok, "ProvedTrivial in fixpoint and paper-order on " + std::to_string(pairs) +
                      " (set, complement) pairs, matching the numerical verdicts");
  }

  // 5: negative controls
  {
    Dims dims({2, 2, 2});
    std::vector<Ket> basis;
    for (std::size_t x = 0; x < dims.total(); ++x) basis.push_back(Ket::basis(dims, decode(x, dims)));
    StateSet product = identity_of(dims, basis);
    StateSet pair = identity_of(dims, {basis[0], basis[7]});
    bool ok = true;
    std::ostringstream os;
    for (const auto* s : {&product, &pair}) {
      for (int p = 0; p < 3; ++p) {
        MeasuredSet m = MeasuredSet::complement_of(p, dims);
        TrivialityVerdict v = check_triviality(*s, m, opts);
        std::size_t brute = oracle::null_dim(
            oracle::brute_constraints(oracle::dense(s->psis), dims.values(), m.parties()));
        ReplayResult r = replay(*s, m, ReplayMode::Fixpoint);
        ok = ok && v.verdict == Verdict::NonTrivial && v.nullspace_dim == brute &&
             r.verdict == ProofVerdict::Incomplete;
        if (p == 0) {
          os << (s == &product ? "" : "; ") << (s == &product ? "product basis" : "pair")
             << " nullspace " << v.nullspace_dim << " (brute force " << brute << ", replay "
             << proof_verdict_name(r.verdict) << ")";
        }
      }
    }
    ok = ok && check_triviality(product, MeasuredSet::complement_of(0, dims)).nullspace_dim == 4;
    report(5, ok, os.str() + "; NonTrivial on every complement");
  }

  // 6: four-partite symmetric sets beat d^3+d-1 by d-2
  {
    bool ok = true;
    std::ostringstream os;
    SweepOptions so;
    so.verify = false;
    so.replay = false;
    so.timing = false;
    for (int d = 2; d <= 4; ++d) {
      SweepRow row = sweep_row(Construction::T3, {d}, so);
      const long prior = static_cast<long>(d) * d * d + d - 1;
      const bool good = row.prior_b && *row.prior_b == prior &&
                        prior - static_cast<long>(row.cardinality) == d - 2;
      os << " d=" << d << ": " << row.cardinality << " vs " << prior;
      ok = ok && good;
    }
    report(6, ok, "improvement d-2 over d^3+d-1:" + os.str());
  }

  // 7: one product state, the rest genuinely entangled, no stopper state
  {
    bool ok = true;
    for (const auto& k : cases) {
      const Dims& dims = k.set.dims;
      std::vector<MeasuredSet> cuts;
      for (const auto& b : bipartitions(dims.parties())) cuts.emplace_back(b, dims);
      Ket stopper = stopper_state(dims);
      std::size_t products = 0;
      for (const auto& psi : k.set.psis) {
        int min_rank = 1 << 30, max_rank = 0;
        for (const auto& m : cuts) {
          int r = schmidt_rank(psi, m);
          min_rank = std::min(min_rank, r);
          max_rank = std::max(max_rank, r);
        }
        if (max_rank == 1) {
          ++products;
        } else if (min_rank < 2) {
          ok = false;
          detail(name_of(k) + ": a state is neither product nor genuinely entangled");
        }
        if (std::abs(inner(stopper, psi)) > 1.0 - 1e-9) {
          ok = false;
          detail(name_of(k) + ": a state equals the stopper state");
        }
      }
      if (products != 1) {
        ok = false;
        detail(name_of(k) + ": " + std::to_string(products) + " product states");
      }
    }
    report(7, ok, "exactly one product state per set, Schmidt rank >= 2 elsewhere on every "
                  "bipartition, stopper state absent");
  }

  // 8: every deletion from t1 (d = 2, 3) breaks triviality somewhere
  {
    bool ok = true;
    std::size_t probes = 0;
    for (int d : {2, 3}) {
      StateSet full = build_theorem1(d);
      for (std::size_t drop = 1; drop < full.size(); ++drop) {
        std::vector<Ket> kept;
        for (std::size_t i = 0; i < full.size(); ++i)
          if (i != drop) kept.push_back(full.psis[i]);
        StateSet s = identity_of(full.dims, kept);
        std::size_t worst = 0;
        for (int p = 0; p < 3; ++p) worst = std::max(worst, check_triviality(s, MeasuredSet::complement_of(p, s.dims), opts).nullspace_dim);
        if (worst <= 1) {
          ok = false;
          detail("t1 " + std::to_string(d) + " without psi_" + std::to_string(drop) +
                 " stays trivial");
        }
        ++probes;
      }
    }
    report(8, ok, std::to_string(probes) + " single-state deletions each raise some complement's "
                                           "nullspace above 1");
  }

  // 9: random global phases and party permutations
  {
    oracle::Rng rng(20240601);
    std::vector<std::size_t> eligible;
    for (std::size_t n = 0; n < cases.size(); ++n) {
      std::size_t worst = 0;
      for (std::size_t p = 0; p < cases[n].set.dims.parties(); ++p)
        worst = std::max(worst, MeasuredSet::complement_of(static_cast<int>(p), cases[n].set.dims).measured_dim());
      if (worst * worst <= kAutoSvdUnknowns) eligible.push_back(n);
    }
    bool ok = true;
    std::ostringstream os;
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t n = eligible[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(eligible.size()) - 1))];
      const StateSet& s = cases[n].set;
      std::vector<int> perm(s.dims.parties());
      for (std::size_t p = 0; p < perm.size(); ++p) perm[p] = static_cast<int>(p);
      rng.shuffle(perm);
      std::vector<Ket> psis;
      for (const auto& psi : s.psis) {
        const int order = rng.uniform(1, 12);
        psis.push_back(psi.with_phase(ExactScalar::root_of_unity(order, rng.uniform(0, order - 1)))
                           .permute_parties(perm));
      }
      StateSet t = identity_of(permute_dims(s.dims, perm), psis);
      StrongestReport r = verify_strongest(t, opts);
      for (std::size_t p = 0; p < perm.size(); ++p) {
        const auto& before = numeric[n].parties[p];
        const auto& after = r.parties[static_cast<std::size_t>(perm[p])];
        if (before.verdict != after.verdict || before.nullspace_dim != after.nullspace_dim) {
          ok = false;
          detail(name_of(cases[n]) + " trial " + std::to_string(trial) + ": party " +
                 std::to_string(p) + " changed verdict");
        }
      }
      os << (trial ? ", " : " ") << name_of(cases[n]);
    }
    report(9, ok, "verdicts unchanged under 10 random phase + permutation trials:" + os.str());
  }

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
