#pragma once

#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "snl/proof/relation.hpp"

namespace snl {

struct TraceStep {
  std::string stage;
  std::string rule;
  std::vector<std::string> consumed;
  std::vector<std::string> produced;
};

/// Ordered record of lemma applications and propagation firings. Consumed
/// facts starting with "given:" or "computed:" are axioms of the run.
struct ProofTrace {
  std::vector<TraceStep> steps;

  /// Every consumed fact is an axiom or was produced by an earlier step.
  bool well_founded(std::string* first_gap = nullptr) const;
};

/// Facts about a measured-subsystem operator E derived so far: entries known
/// to vanish, and exact linear relations among the diagonal entries. Facts
/// are only ever added.
class Knowledge {
 public:
  explicit Knowledge(const MeasuredSet& m);

  const MeasuredSet& measured() const { return measured_; }
  std::uint32_t dim() const { return dim_; }

  bool is_zero(EntryId e) const { return zero_[flat(e)] != 0; }
  std::size_t zero_count() const { return zero_count_; }
  std::size_t off_diagonal_total() const { return std::size_t{dim_} * dim_ - dim_; }
  bool all_off_diagonal_zero() const;
  std::size_t diagonal_rank() const { return pivots_.size(); }
  /// rank D - 1 with the all-equal vector in the kernel
  bool one_diagonal_class() const;
  std::vector<std::vector<std::uint32_t>> diagonal_classes() const;
  std::size_t merged_pairs() const { return merged_pairs_; }
  /// Reduced row echelon rows over the diagonal entries.
  const std::vector<std::vector<Rational>>& diagonal_rows() const { return rows_; }

  /// Queues a relation. A key already released is ignored, so lemma
  /// applications can overlap without duplicating work.
  void release(Relation r, const std::string& key);
  bool released(const std::string& key) const { return keys_.count(key) != 0; }

  /// Runs every queued relation to a fixpoint:
  ///   a ZeroSum with exactly one term not known zero forces that entry,
  ///   an Equality whose cross terms are all zero enters the elimination.
  void propagate(const std::string& stage);

  void record(TraceStep step) { trace_.steps.push_back(std::move(step)); }
  const ProofTrace& trace() const { return trace_; }

  std::string entry_name(EntryId e) const;
  std::string zero_fact(EntryId e) const { return entry_name(e) + "=0"; }

 private:
  std::size_t flat(EntryId e) const { return std::size_t{e.row} * dim_ + e.col; }
  void set_zero(EntryId e, std::size_t because, const std::string& stage);
  bool insert_row(std::vector<Rational> v);
  void reduce_diagonal(std::size_t rel, const std::string& stage);
  void refresh_classes(std::vector<std::string>& produced);
  std::uint32_t find(std::uint32_t a);

  MeasuredSet measured_;
  std::uint32_t dim_;
  std::vector<char> zero_;
  std::size_t zero_count_ = 0;

  std::vector<Relation> relations_;
  std::vector<std::size_t> unknown_;
  std::vector<char> done_;
  std::vector<std::vector<std::size_t>> watch_;
  std::deque<std::size_t> queue_;
  std::set<std::string> keys_;

  std::vector<std::vector<Rational>> rows_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::uint32_t> parent_;
  std::size_t merged_pairs_ = 0;

  ProofTrace trace_;
};

}  // namespace snl
