#include "snl/proof/knowledge.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace snl {

bool ProofTrace::well_founded(std::string* first_gap) const {
  std::set<std::string> known;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    for (const auto& fact : steps[k].consumed) {
      if (fact.rfind("given:", 0) == 0 || fact.rfind("computed:", 0) == 0) continue;
      if (!known.count(fact)) {
        if (first_gap) *first_gap = "step " + std::to_string(k) + " consumes " + fact;
        return false;
      }
    }
    known.insert(steps[k].produced.begin(), steps[k].produced.end());
  }
  return true;
}

Knowledge::Knowledge(const MeasuredSet& m)
    : measured_(m), dim_(static_cast<std::uint32_t>(m.measured_dim())) {
  const std::size_t cells = std::size_t{dim_} * dim_;
  zero_.assign(cells, 0);
  watch_.resize(cells);
  parent_.resize(dim_);
  std::iota(parent_.begin(), parent_.end(), 0u);
}

std::string Knowledge::entry_name(EntryId e) const {
  return "<" + measured_.measured_label(e.row).to_string() + "|E|" +
         measured_.measured_label(e.col).to_string() + ">";
}

bool Knowledge::all_off_diagonal_zero() const { return zero_count_ >= off_diagonal_total(); }

bool Knowledge::one_diagonal_class() const { return diagonal_classes().size() == 1; }

std::vector<std::vector<std::uint32_t>> Knowledge::diagonal_classes() const {
  auto root = [&](std::uint32_t a) {
    while (parent_[a] != a) a = parent_[a];
    return a;
  };
  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (std::uint32_t a = 0; a < dim_; ++a) groups[root(a)].push_back(a);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [r, members] : groups) out.push_back(std::move(members));
  return out;
}

std::uint32_t Knowledge::find(std::uint32_t a) {
  while (parent_[a] != a) {
    parent_[a] = parent_[parent_[a]];
    a = parent_[a];
  }
  return a;
}

void Knowledge::release(Relation r, const std::string& key) {
  if (!keys_.insert(key).second) return;
  const std::size_t idx = relations_.size();
  std::size_t unknown = 0;
  for (const auto& t : r.terms) {
    if (!is_zero(t.entry)) {
      ++unknown;
      watch_[flat(t.entry)].push_back(idx);
    }
  }
  const bool ready = r.kind == RelationKind::ZeroSum ? unknown == 1 : unknown == 0;
  relations_.push_back(std::move(r));
  unknown_.push_back(unknown);
  done_.push_back(0);
  if (ready) queue_.push_back(idx);
}

void Knowledge::propagate(const std::string& stage) {
  while (!queue_.empty()) {
    const std::size_t idx = queue_.front();
    queue_.pop_front();
    if (done_[idx]) continue;
    const Relation& r = relations_[idx];
    if (r.kind == RelationKind::ZeroSum) {
      if (unknown_[idx] != 1) {
        if (unknown_[idx] == 0) done_[idx] = 1;
        continue;
      }
      auto it = std::find_if(r.terms.begin(), r.terms.end(),
                             [&](const RelationTerm& t) { return !is_zero(t.entry); });
      if (!it->certain) continue;
      done_[idx] = 1;
      set_zero(it->entry, idx, stage);
    } else {
      if (unknown_[idx] != 0) continue;
      done_[idx] = 1;
      reduce_diagonal(idx, stage);
    }
  }
}

void Knowledge::set_zero(EntryId e, std::size_t because, const std::string& stage) {
  zero_[flat(e)] = 1;
  ++zero_count_;
  TraceStep step{stage, "single-unknown", {relations_[because].provenance}, {zero_fact(e)}};
  for (const auto& t : relations_[because].terms) {
    if (!(t.entry == e)) step.consumed.push_back(zero_fact(t.entry));
  }
  if (e.diagonal()) {
    std::vector<Rational> v(dim_, Rational(0));
    v[e.row] = 1;
    if (insert_row(std::move(v))) refresh_classes(step.produced);
  }
  record(std::move(step));
  for (std::size_t w : watch_[flat(e)]) {
    if (done_[w]) continue;
    std::size_t left = --unknown_[w];
    const bool ready = relations_[w].kind == RelationKind::ZeroSum ? left == 1 : left == 0;
    if (ready) queue_.push_back(w);
  }
}

namespace {

std::string weighted_sum(const Relation& r, const Knowledge& k) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, w] : r.diagonal) {
    Rational mag = abs(w);
    os << (sgn(w) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1) os << mag.get_str() << '*';
    os << k.entry_name({idx, idx});
    first = false;
  }
  os << " = 0";
  return os.str();
}

}  // namespace

bool Knowledge::insert_row(std::vector<Rational> v) {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint32_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    Rational f = v[p];
    for (std::uint32_t c = 0; c < dim_; ++c) {
      if (sgn(rows_[k][c]) != 0) v[c] -= f * rows_[k][c];
    }
  }
  std::uint32_t q = 0;
  while (q < dim_ && sgn(v[q]) == 0) ++q;
  if (q == dim_) return false;
  Rational lead = v[q];
  for (auto& x : v) x /= lead;
  for (auto& row : rows_) {
    if (sgn(row[q]) == 0) continue;
    Rational f = row[q];
    for (std::uint32_t c = 0; c < dim_; ++c) {
      if (sgn(v[c]) != 0) row[c] -= f * v[c];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(q);
  return true;
}

void Knowledge::reduce_diagonal(std::size_t rel, const std::string& stage) {
  const Relation& r = relations_[rel];
  std::vector<Rational> v(dim_, Rational(0));
  for (const auto& [idx, w] : r.diagonal) v[idx] += w;
  if (!insert_row(std::move(v))) return;  // implied by what is already known
  TraceStep step{stage, "diagonal-elimination", {r.provenance}, {weighted_sum(r, *this)}};
  for (const auto& t : r.terms) step.consumed.push_back(zero_fact(t.entry));
  refresh_classes(step.produced);
  record(std::move(step));
}

void Knowledge::refresh_classes(std::vector<std::string>& produced) {
  std::vector<char> is_pivot(dim_, 0);
  std::vector<std::size_t> row_of(dim_, 0);
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    is_pivot[pivots_[k]] = 1;
    row_of[pivots_[k]] = k;
  }
  std::vector<std::uint32_t> free_cols;
  for (std::uint32_t c = 0; c < dim_; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  // Two diagonal entries are forced equal iff they agree on every kernel
  // basis vector.
  std::map<std::vector<Rational>, std::vector<std::uint32_t>> groups;
  for (std::uint32_t a = 0; a < dim_; ++a) {
    std::vector<Rational> key(free_cols.size(), Rational(0));
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
      if (is_pivot[a]) {
        key[f] = -rows_[row_of[a]][free_cols[f]];
      } else {
        key[f] = free_cols[f] == a ? 1 : 0;
      }
    }
    groups[key].push_back(a);
  }
  for (const auto& [key, members] : groups) {
    for (std::size_t k = 1; k < members.size(); ++k) {
      std::uint32_t ra = find(members[0]);
      std::uint32_t rb = find(members[k]);
      if (ra == rb) continue;
      parent_[rb] = ra;
      ++merged_pairs_;
      produced.push_back(entry_name({members[0], members[0]}) + "=" +
                         entry_name({members[k], members[k]}));
    }
  }
}

}  // namespace snl
