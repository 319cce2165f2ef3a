#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "snl/constructions/state_set.hpp"
#include "snl/proof/knowledge.hpp"

namespace snl {

/// A lemma's hypothesis could not be derived from what is known. This says
/// nothing about whether the hypothesis is false.
class HypothesisNotEstablished : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReplayMode { Fixpoint, PaperOrder };
std::string replay_mode_name(ReplayMode m);
ReplayMode parse_replay_mode(const std::string& name);

enum class ProofVerdict { ProvedTrivial, Incomplete };
std::string proof_verdict_name(ProofVerdict v);

/// Alpha-level relations of one (set, measured set) pair, expanded once.
class ReplayContext {
 public:
  ReplayContext(const StateSet& s, const MeasuredSet& m, int threads = 1);

  const StateSet& set() const { return set_; }
  const MeasuredSet& measured() const { return measured_; }
  /// Alpha states; the psis themselves for identity-mixed sets.
  const std::vector<Ket>& alphas() const { return alphas_; }
  std::size_t size() const { return alphas_.size(); }
  /// <a_x|E'|a_y> for x != y
  const Relation& pair(std::size_t x, std::size_t y) const { return pairs_[x * size() + y]; }
  /// diagonal form of <a_x|E'|a_x>
  const Relation& diagonal(std::size_t x) const { return diagonals_[x]; }
  /// Alpha whose support holds this flat index, or -1 (also -1 when the
  /// supports overlap, which rules out the block lemmas).
  long owner(std::size_t index) const;
  bool disjoint_supports() const { return disjoint_; }

 private:
  const StateSet& set_;
  MeasuredSet measured_;
  std::vector<Ket> alphas_;
  std::vector<Relation> pairs_;
  std::vector<Relation> diagonals_;
  std::unordered_map<std::size_t, std::size_t> owner_;
  bool disjoint_ = true;
};

/// Block zeros: psis_S lie in span(alphas S), psis_T in span(alphas T), the
/// mixing on each block is invertible and all cross constraints between the
/// two psi groups hold, so <a_x|E'|a_y> = <a_y|E'|a_x> = 0 for x in S, y in T.
/// Releases those relations into `know`.
void apply_block_zeros(Knowledge& know, const ReplayContext& ctx, const std::vector<std::size_t>& S,
                       const std::vector<std::size_t>& T, const std::vector<std::size_t>& psis_S,
                       const std::vector<std::size_t>& psis_T, const std::string& stage);

/// Block trivial with pivot x: requires <a_x|E'|a_y> = 0 derivable for every
/// other y in S, <a_x|psi_j> != 0 exactly for every psi in the block, and a
/// unitary mixing. Returns the relations it licenses (pairwise zeros and
/// diagonal equalities against x) without releasing them.
std::vector<std::pair<std::string, Relation>> block_trivial_relations(
    Knowledge& know, const ReplayContext& ctx, const std::vector<std::size_t>& S, std::size_t x,
    const std::vector<std::size_t>& psis, const std::string& stage);

/// block_trivial_relations followed by release of everything it returns.
void apply_block_trivial(Knowledge& know, const ReplayContext& ctx,
                         const std::vector<std::size_t>& S, std::size_t x,
                         const std::vector<std::size_t>& psis, const std::string& stage);

/// Stage in the published step order for an alpha with this tag (1-based),
/// and the number of stages for the set.
int paper_stage(const FamilyTag& tag, const StateSet& s);
int paper_stage_count(const StateSet& s);

struct ReplayResult {
  ProofVerdict verdict = ProofVerdict::Incomplete;
  ReplayMode mode = ReplayMode::Fixpoint;
  MeasuredSet measured;
  std::size_t dim = 0;
  std::size_t zero_entries = 0;
  std::size_t off_diagonal_total = 0;
  std::size_t diagonal_rank = 0;
  std::size_t diagonal_classes = 0;
  /// Alpha used as the block-trivial pivot, or -1.
  long pivot = -1;
  std::string note;
  ProofTrace trace;
  /// Final knowledge, kept for cross-checks against the numerical oracle.
  std::vector<char> zero_bitmap;
  std::vector<std::vector<Rational>> diagonal_rows;
  double wall_seconds = 0.0;
};

ReplayResult replay(const StateSet& s, const MeasuredSet& m, ReplayMode mode,
                    int threads = 1);

}  // namespace snl
