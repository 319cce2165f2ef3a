#include "snl/proof/relation.hpp"

#include <map>

namespace snl {

namespace {

struct Split {
  std::size_t kept;
  std::uint32_t measured;
  const ExactScalar* amplitude;
};

std::vector<Split> split(const Ket& k, const MeasuredSet& m) {
  std::vector<Split> out;
  out.reserve(k.terms().size());
  for (const auto& t : k.terms()) {
    out.push_back({m.kept_index(t.index), static_cast<std::uint32_t>(m.measured_index(t.index)),
                   &t.amplitude});
  }
  return out;
}

bool same_ket(const Ket& a, const Ket& b) {
  if (a.terms().size() != b.terms().size()) return false;
  for (std::size_t k = 0; k < a.terms().size(); ++k) {
    if (a.terms()[k].index != b.terms()[k].index) return false;
    if (!(a.terms()[k].amplitude == b.terms()[k].amplitude)) return false;
  }
  return true;
}

struct Accumulator {
  std::map<EntryId, std::pair<ExactSum, std::size_t>> sums;

  void add(EntryId e, const ExactScalar& v) {
    auto& slot = sums[e];
    slot.first.add(v);
    ++slot.second;
  }

  void emit(Relation& r) const {
    for (const auto& [entry, slot] : sums) {
      const auto& [sum, count] = slot;
      r.collisions += count - 1;
      if (sum.certainly_zero()) continue;
      if (auto single = sum.as_scalar()) {
        r.terms.push_back({entry, *single, true});
      } else {
        r.terms.push_back({entry, sum.dominant(), false});
      }
    }
  }
};

}  // namespace

std::string alpha_fact(std::size_t x, std::size_t y) {
  return "<a" + std::to_string(x) + "|E'|a" + std::to_string(y) + ">=0";
}

std::string alpha_diag_fact(std::size_t y, std::size_t x) {
  return "<a" + std::to_string(y) + "|E'|a" + std::to_string(y) + ">=<a" + std::to_string(x) +
         "|E'|a" + std::to_string(x) + ">";
}

Relation expand(const Ket& alpha_x, const Ket& alpha_y, const MeasuredSet& m) {
  if (!(alpha_x.dims() == m.dims()) || !(alpha_y.dims() == m.dims())) {
    throw ValidationError("expand: kets and measured set disagree on dimensions");
  }
  const auto xs = split(alpha_x, m);
  const auto ys = split(alpha_y, m);
  Relation r;
  Accumulator acc;
  if (same_ket(alpha_x, alpha_y)) {
    r.kind = RelationKind::Equality;
    std::map<std::uint32_t, Rational> weights;
    for (std::size_t a = 0; a < xs.size(); ++a) {
      weights[xs[a].measured] += xs[a].amplitude->abs2();
      for (std::size_t b = 0; b < xs.size(); ++b) {
        if (a == b || xs[a].kept != xs[b].kept) continue;
        acc.add({xs[a].measured, xs[b].measured}, xs[a].amplitude->conj() * *xs[b].amplitude);
      }
    }
    for (auto& [idx, w] : weights) {
      w.canonicalize();
      if (sgn(w) != 0) r.diagonal.emplace_back(idx, w);
    }
  } else {
    r.kind = RelationKind::ZeroSum;
    for (const auto& s : xs) {
      for (const auto& t : ys) {
        if (s.kept != t.kept) continue;
        acc.add({s.measured, t.measured}, s.amplitude->conj() * *t.amplitude);
      }
    }
  }
  acc.emit(r);
  return r;
}

Relation equality(const Relation& form_y, const Relation& form_x, std::string provenance) {
  Relation r;
  r.kind = RelationKind::Equality;
  r.provenance = std::move(provenance);
  std::map<EntryId, RelationTerm> cross;
  for (const auto* form : {&form_y, &form_x}) {
    for (const auto& t : form->terms) cross.emplace(t.entry, t);
  }
  for (auto& [entry, t] : cross) r.terms.push_back(t);
  std::map<std::uint32_t, Rational> w;
  for (const auto& [idx, v] : form_y.diagonal) w[idx] += v;
  for (const auto& [idx, v] : form_x.diagonal) w[idx] -= v;
  for (auto& [idx, v] : w) {
    v.canonicalize();
    if (sgn(v) != 0) r.diagonal.emplace_back(idx, v);
  }
  return r;
}

}  // namespace snl
