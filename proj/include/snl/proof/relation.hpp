#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "snl/tensor/ket.hpp"

namespace snl {

/// Operator entry <row|E|col> over the measured subsystem, by measured index.
struct EntryId {
  std::uint32_t row = 0;
  std::uint32_t col = 0;

  bool diagonal() const { return row == col; }
  bool operator==(const EntryId&) const = default;
  auto operator<=>(const EntryId&) const = default;
};

enum class RelationKind {
  ZeroSum,   // sum_t coeff_t * E[t] = 0
  Equality,  // once every cross term is zero: sum_a w_a * E[a,a] = 0
};

struct RelationTerm {
  EntryId entry;
  ExactScalar coeff;
  /// False when several label pairs landed on the same entry and their
  /// coefficients could not be summed into a single exact scalar; such a
  /// term is never used to force its entry to zero.
  bool certain = true;
};

struct Relation {
  RelationKind kind = RelationKind::ZeroSum;
  /// ZeroSum: every term. Equality: off-diagonal cross terms that must be
  /// known zero before the diagonal part can be used.
  std::vector<RelationTerm> terms;
  /// Equality only: rational weights on diagonal entries, by measured index.
  std::vector<std::pair<std::uint32_t, Rational>> diagonal;
  /// The fact this relation encodes, e.g. "<a3|E'|a7>=0".
  std::string provenance;
  /// Label pairs that shared an entry with an earlier pair during expansion.
  std::size_t collisions = 0;
};

/// <x| I (x) E |y> written over the entries of E. For distinct x, y this is a
/// ZeroSum over kept-matched label pairs. For x == y (same ket) it is the
/// Equality-ready diagonal form: weights |amplitude|^2 on diagonal entries
/// plus the off-diagonal cross terms.
Relation expand(const Ket& alpha_x, const Ket& alpha_y, const MeasuredSet& m);

/// <y|E'|y> - <x|E'|x> from two diagonal forms.
Relation equality(const Relation& form_y, const Relation& form_x, std::string provenance);

std::string alpha_fact(std::size_t x, std::size_t y);
std::string alpha_diag_fact(std::size_t y, std::size_t x);

}  // namespace snl
