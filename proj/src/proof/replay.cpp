#include "snl/proof/replay.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <thread>

namespace snl {

std::string replay_mode_name(ReplayMode m) {
  return m == ReplayMode::Fixpoint ? "fixpoint" : "paper-order";
}

ReplayMode parse_replay_mode(const std::string& name) {
  if (name == "fixpoint") return ReplayMode::Fixpoint;
  if (name == "paper-order" || name == "paper_order") return ReplayMode::PaperOrder;
  throw ValidationError("unknown replay mode '" + name + "' (fixpoint | paper-order)");
}

std::string proof_verdict_name(ProofVerdict v) {
  return v == ProofVerdict::ProvedTrivial ? "ProvedTrivial" : "Incomplete";
}

ReplayContext::ReplayContext(const StateSet& s, const MeasuredSet& m, int threads)
    : set_(s), measured_(m) {
  if (!(s.dims == m.dims())) {
    throw ValidationError("measured set built for " + m.dims().to_string() + ", set is " +
                          s.dims.to_string());
  }
  if (s.mixing == Mixing::Identity) {
    alphas_ = s.psis;
  } else {
    for (const auto& a : s.alphas) alphas_.push_back(a.ket);
  }
  const std::size_t n = alphas_.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& t : alphas_[j].terms()) {
      if (!owner_.emplace(t.index, j).second) disjoint_ = false;
    }
  }

  pairs_.resize(n * n);
  diagonals_.resize(n);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n));
  auto work = [&](std::size_t w) {
    for (std::size_t x = w; x < n; x += workers) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) {
          diagonals_[x] = expand(alphas_[x], alphas_[x], m);
        } else {
          pairs_[x * n + y] = expand(alphas_[x], alphas_[y], m);
          pairs_[x * n + y].provenance = alpha_fact(x, y);
        }
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
}

long ReplayContext::owner(std::size_t index) const {
  if (!disjoint_) return -1;
  auto it = owner_.find(index);
  return it == owner_.end() ? -1 : static_cast<long>(it->second);
}

namespace {

std::string list_name(const std::string& prefix, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return "{}";
  bool contiguous = true;
  for (std::size_t k = 1; k < idx.size(); ++k) contiguous = contiguous && idx[k] == idx[k - 1] + 1;
  if (idx.size() == 1) return prefix + std::to_string(idx[0]);
  if (contiguous) {
    return prefix + std::to_string(idx.front()) + ".." + prefix + std::to_string(idx.back());
  }
  std::string out = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ",";
    out += prefix + std::to_string(idx[k]);
  }
  return out + "}";
}

/// Rows: psis, columns: positions in S. Exact coefficients of each psi over
/// the alphas of S; throws when a psi leaves span(S).
std::vector<std::vector<ExactScalar>> coefficients(const ReplayContext& ctx,
                                                   const std::vector<std::size_t>& S,
                                                   const std::vector<std::size_t>& psis) {
  if (!ctx.disjoint_supports()) {
    throw HypothesisNotEstablished("alpha supports overlap; span checks need disjoint supports");
  }
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < S.size(); ++k) pos[S[k]] = k;
  std::vector<std::vector<ExactScalar>> M;
  for (std::size_t i : psis) {
    const Ket& psi = ctx.set().psis.at(i);
    std::vector<ExactScalar> row(S.size());
    std::vector<std::size_t> hits(S.size(), 0);
    for (const auto& t : psi.terms()) {
      long o = ctx.owner(t.index);
      auto it = o < 0 ? pos.end() : pos.find(static_cast<std::size_t>(o));
      if (it == pos.end()) {
        throw HypothesisNotEstablished("psi_" + std::to_string(i) + " has support outside " +
                                       list_name("a", S));
      }
      ExactScalar ratio = t.amplitude / ctx.alphas()[it->first].amplitude(t.index);
      if (hits[it->second]++ == 0) {
        row[it->second] = ratio;
      } else if (!(row[it->second] == ratio)) {
        throw HypothesisNotEstablished("psi_" + std::to_string(i) + " is not a combination of " +
                                       list_name("a", S));
      }
    }
    for (std::size_t k = 0; k < S.size(); ++k) {
      if (hits[k] != 0 && hits[k] != ctx.alphas()[S[k]].support_size()) {
        throw HypothesisNotEstablished("psi_" + std::to_string(i) + " covers only part of a" +
                                       std::to_string(S[k]));
      }
    }
    M.push_back(std::move(row));
  }
  return M;
}

/// Each row is c_r * (w_s^{f_r c})_c / sqrt(s) with distinct f_r, which makes
/// M unitary with no zero entry.
void require_dft_rows(const std::vector<std::vector<ExactScalar>>& M, const std::string& what) {
  const auto s = static_cast<std::int64_t>(M.size());
  const Rational inv_s(1, static_cast<unsigned long>(s));
  std::set<std::int64_t> freqs;
  for (std::size_t r = 0; r < M.size(); ++r) {
    const auto& row = M[r];
    if (static_cast<std::int64_t>(row.size()) != s) {
      throw HypothesisNotEstablished(what + ": mixing matrix is not square");
    }
    for (const auto& v : row) {
      if (v.is_zero()) throw HypothesisNotEstablished(what + ": mixing matrix has a zero entry");
    }
    if (row[0].abs2() != inv_s) {
      throw HypothesisNotEstablished(what + ": mixing row " + std::to_string(r) +
                                     " is not normalized");
    }
    std::int64_t f = 0;
    if (s > 1) {
      ExactScalar step = row[1] / row[0];
      if (step.rational() != 1 || step.inv_sqrt_arg() != 1 || s % step.phase_order() != 0) {
        throw HypothesisNotEstablished(what + ": mixing row " + std::to_string(r) +
                                       " is not a Fourier row");
      }
      f = step.phase_power() * (s / step.phase_order());
    }
    for (std::int64_t c = 0; c < s; ++c) {
      if (!(row[c] / row[0] == ExactScalar::root_of_unity(s, (f * c) % s))) {
        throw HypothesisNotEstablished(what + ": mixing row " + std::to_string(r) +
                                       " is not a Fourier row");
      }
    }
    if (!freqs.insert(f).second) {
      throw HypothesisNotEstablished(what + ": two mixing rows share a frequency");
    }
  }
}

bool pair_known_zero(const Knowledge& know, const Relation& r) {
  return std::all_of(r.terms.begin(), r.terms.end(),
                     [&](const RelationTerm& t) { return know.is_zero(t.entry); });
}

bool pivot_ready(const Knowledge& know, const ReplayContext& ctx,
                 const std::vector<std::size_t>& S, std::size_t x) {
  for (std::size_t y : S) {
    if (y != x && !pair_known_zero(know, ctx.pair(x, y))) return false;
  }
  return true;
}

std::string pair_key(std::size_t x, std::size_t y) {
  return "pair:" + std::to_string(x) + ":" + std::to_string(y);
}

}  // namespace

void apply_block_zeros(Knowledge& know, const ReplayContext& ctx, const std::vector<std::size_t>& S,
                       const std::vector<std::size_t>& T, const std::vector<std::size_t>& psis_S,
                       const std::vector<std::size_t>& psis_T, const std::string& stage) {
  if (S.empty() || T.empty()) throw ValidationError("block zeros needs two nonempty blocks");
  for (std::size_t x : S) {
    if (std::find(T.begin(), T.end(), x) != T.end()) {
      throw ValidationError("block zeros: a" + std::to_string(x) + " is in both blocks");
    }
  }
  if (psis_S.size() != S.size() || psis_T.size() != T.size()) {
    throw HypothesisNotEstablished("block zeros: psi groups and alpha blocks differ in size");
  }
  require_dft_rows(coefficients(ctx, S, psis_S), "block " + list_name("a", S));
  require_dft_rows(coefficients(ctx, T, psis_T), "block " + list_name("a", T));

  TraceStep step{stage, "block-zeros",
                 {"given:<psi_i|I(x)E|psi_j>=0 for psi_i in " + list_name("psi_", psis_S) +
                      ", psi_j in " + list_name("psi_", psis_T),
                  "computed:span(" + list_name("psi_", psis_S) + ")=span(" + list_name("a", S) + ")",
                  "computed:span(" + list_name("psi_", psis_T) + ")=span(" + list_name("a", T) + ")"},
                 {}};
  for (std::size_t x : S) {
    for (std::size_t y : T) {
      step.produced.push_back(alpha_fact(x, y));
      step.produced.push_back(alpha_fact(y, x));
    }
  }
  know.record(std::move(step));
  for (std::size_t x : S) {
    for (std::size_t y : T) {
      know.release(ctx.pair(x, y), pair_key(x, y));
      know.release(ctx.pair(y, x), pair_key(y, x));
    }
  }
}

std::vector<std::pair<std::string, Relation>> block_trivial_relations(
    Knowledge& know, const ReplayContext& ctx, const std::vector<std::size_t>& S, std::size_t x,
    const std::vector<std::size_t>& psis, const std::string& stage) {
  if (std::find(S.begin(), S.end(), x) == S.end()) {
    throw ValidationError("block trivial: pivot a" + std::to_string(x) + " is not in the block");
  }
  if (S.size() == 1) return {};
  for (std::size_t y : S) {
    if (y != x && !pair_known_zero(know, ctx.pair(x, y))) {
      throw HypothesisNotEstablished("block trivial: " + alpha_fact(x, y) +
                                     " is not derivable yet");
    }
  }
  if (psis.size() != S.size()) {
    throw HypothesisNotEstablished("block trivial: psi group and alpha block differ in size");
  }
  require_dft_rows(coefficients(ctx, S, psis), "block " + list_name("a", S));

  TraceStep hyp{stage, "pivot-row", {}, {}};
  std::set<std::string> seen;
  for (std::size_t y : S) {
    if (y == x) continue;
    for (const auto& t : ctx.pair(x, y).terms) {
      std::string f = know.zero_fact(t.entry);
      if (seen.insert(f).second) hyp.consumed.push_back(f);
    }
    hyp.produced.push_back(alpha_fact(x, y));
  }
  TraceStep lemma{stage, "block-trivial", hyp.produced, {}};
  lemma.consumed.push_back("given:<psi_i|I(x)E|psi_j>=0 for i!=j in " + list_name("psi_", psis));
  lemma.consumed.push_back("computed:mixing of " + list_name("psi_", psis) + " over " +
                           list_name("a", S) + " is a Fourier matrix");
  lemma.consumed.push_back("computed:<a" + std::to_string(x) + "|psi_j>!=0 for psi_j in " +
                           list_name("psi_", psis));

  std::vector<std::pair<std::string, Relation>> out;
  for (std::size_t y : S) {
    for (std::size_t z : S) {
      if (y == z) continue;
      lemma.produced.push_back(alpha_fact(y, z));
      out.emplace_back(pair_key(y, z), ctx.pair(y, z));
    }
  }
  for (std::size_t y : S) {
    if (y == x) continue;
    std::string fact = alpha_diag_fact(y, x);
    lemma.produced.push_back(fact);
    out.emplace_back("eq:" + std::to_string(y) + ":" + std::to_string(x),
                     equality(ctx.diagonal(y), ctx.diagonal(x), fact));
  }
  know.record(std::move(hyp));
  know.record(std::move(lemma));
  return out;
}

void apply_block_trivial(Knowledge& know, const ReplayContext& ctx,
                         const std::vector<std::size_t>& S, std::size_t x,
                         const std::vector<std::size_t>& psis, const std::string& stage) {
  for (auto& [key, rel] : block_trivial_relations(know, ctx, S, x, psis, stage)) {
    know.release(std::move(rel), key);
  }
}

int paper_stage_count(const StateSet& s) {
  switch (s.construction) {
    case Construction::T1:
    case Construction::T3: return s.params.at(0);
    case Construction::EX1: return 3;
    case Construction::T2:
    case Construction::T4: return s.params.at(0) + 2;
    case Construction::Custom: break;
  }
  return 1;
}

int paper_stage(const FamilyTag& tag, const StateSet& s) {
  const int last = paper_stage_count(s);
  if (tag.is_origin() || tag.family == 1) return 1;
  auto p = [&](std::size_t k) { return tag.params.at(k); };
  int stage = last;
  switch (s.construction) {
    case Construction::T1:
      stage = tag.family <= 3 ? p(0) : last;
      break;
    case Construction::T2:
      if (tag.family <= 3) {
        stage = p(0);
      } else if (tag.family <= 5) {
        stage = s.params.at(0) + 1;
      }
      break;
    case Construction::EX1:
    case Construction::T3:
      if (tag.family <= 4) {
        stage = p(1);
      } else if (tag.family <= 7) {
        stage = p(0);
      }
      break;
    case Construction::T4: {
      const int d1 = s.params.at(0);
      const int f = tag.family;
      if (f == 2 || f == 6 || f == 9) {
        stage = p(1) <= d1 ? p(1) : d1 + 1;
      } else if (f >= 12 && f <= 14) {
        stage = p(0);
      } else if (f <= 17) {
        stage = d1 + 1;
      }
      break;
    }
    case Construction::Custom: return 1;
  }
  return std::clamp(stage, 1, last);
}

ReplayResult replay(const StateSet& s, const MeasuredSet& m, ReplayMode mode, int threads) {
  const auto start = std::chrono::steady_clock::now();
  ReplayContext ctx(s, m, threads);
  Knowledge know(m);
  ReplayResult out;
  out.mode = mode;
  out.measured = m;
  out.dim = know.dim();

  const std::size_t n = ctx.size();
  if (s.mixing == Mixing::Identity) {
    out.note = "no alpha decomposition; only the pairwise orthogonality relations are used";
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        Relation r = ctx.pair(x, y);
        r.provenance = "given:<psi" + std::to_string(x) + "|I(x)E|psi" + std::to_string(y) + ">=0";
        know.release(std::move(r), pair_key(x, y));
      }
    }
    know.propagate("Propagation");
  } else {
    std::vector<std::size_t> block;
    for (std::size_t j = 1; j < n; ++j) block.push_back(j);
    try {
      apply_block_zeros(know, ctx, {0}, block, {0}, block, "Lemma 1");
      know.propagate("Lemma 1");

      long pivot = -1;
      if (!block.empty()) {
        for (std::size_t x : block) {
          if (pivot_ready(know, ctx, block, x)) {
            pivot = static_cast<long>(x);
            break;
          }
        }
        if (pivot < 0) {
          throw HypothesisNotEstablished(
              "block trivial: no alpha in the block has every <ax|E'|ay>=0 derivable");
        }
      }
      out.pivot = pivot;
      std::vector<std::pair<std::string, Relation>> licensed;
      if (pivot >= 0) {
        licensed = block_trivial_relations(know, ctx, block, static_cast<std::size_t>(pivot),
                                           block, "Lemma 2");
      }

      if (mode == ReplayMode::Fixpoint) {
        for (auto& [key, rel] : licensed) know.release(std::move(rel), key);
        know.propagate("Propagation");
      } else {
        const int S = paper_stage_count(s);
        std::vector<int> stage(n, 1);
        for (std::size_t j = 0; j < n; ++j) stage[j] = paper_stage(s.alphas[j].tag, s);
        std::map<int, std::vector<std::size_t>> off, diag;
        for (std::size_t k = 0; k < licensed.size(); ++k) {
          const std::string& key = licensed[k].first;
          std::size_t a = key.find(':');
          std::size_t b = key.find(':', a + 1);
          std::size_t y = std::stoul(key.substr(a + 1, b - a - 1));
          std::size_t z = std::stoul(key.substr(b + 1));
          if (key.rfind("pair:", 0) == 0) {
            off[std::min(stage[y], stage[z])].push_back(k);
          } else {
            diag[stage[y]].push_back(k);
          }
        }
        for (int st = 1; st <= S; ++st) {
          for (std::size_t k : off[st]) know.release(std::move(licensed[k].second), licensed[k].first);
          know.propagate("Off-diagonal Step " + std::to_string(st));
        }
        for (int st = 1; st <= S; ++st) {
          for (std::size_t k : diag[st]) know.release(std::move(licensed[k].second), licensed[k].first);
          know.propagate("Diagonal Step " + std::to_string(st));
        }
        know.propagate("Closure");
      }
    } catch (const HypothesisNotEstablished& e) {
      out.note = e.what();
      know.record({"Lemma", "hypothesis-not-established", {}, {e.what()}});
    }
  }

  const bool proved = know.all_off_diagonal_zero() && know.diagonal_rank() + 1 == know.dim() &&
                      know.one_diagonal_class();
  out.verdict = proved ? ProofVerdict::ProvedTrivial : ProofVerdict::Incomplete;
  out.zero_entries = know.zero_count();
  out.off_diagonal_total = know.off_diagonal_total();
  out.diagonal_rank = know.diagonal_rank();
  out.diagonal_classes = know.diagonal_classes().size();
  out.trace = know.trace();
  out.zero_bitmap.resize(std::size_t{know.dim()} * know.dim());
  for (std::uint32_t r = 0; r < know.dim(); ++r) {
    for (std::uint32_t c = 0; c < know.dim(); ++c) {
      out.zero_bitmap[std::size_t{r} * know.dim() + c] = know.is_zero({r, c}) ? 1 : 0;
    }
  }
  // pivot order, so that equal row spaces compare equal
  out.diagonal_rows = know.diagonal_rows();
  auto lead = [](const std::vector<Rational>& row) {
    return std::find_if(row.begin(), row.end(), [](const Rational& q) { return sgn(q) != 0; }) -
           row.begin();
  };
  std::sort(out.diagonal_rows.begin(), out.diagonal_rows.end(),
            [&](const auto& a, const auto& b) { return lead(a) < lead(b); });
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace snl
