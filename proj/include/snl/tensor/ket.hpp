#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "snl/tensor/dims.hpp"
#include "snl/tensor/exact_scalar.hpp"

namespace snl {

using Complex = std::complex<double>;

/// A unit vector with exact amplitudes over computational basis labels.
///
/// Terms are stored sorted by flat index with structurally nonzero
/// coefficients. The dense float rendering is built once in the constructor,
/// so a Ket is immutable and can be shared between threads freely.
class Ket {
 public:
  struct Term {
    std::size_t index;
    ExactScalar amplitude;
  };

  Ket() = default;
  /// Throws ValidationError on invalid labels, duplicate labels, or a squared
  /// norm other than exactly 1.
  Ket(Dims dims, const std::vector<std::pair<BasisLabel, ExactScalar>>& amplitudes);
  Ket(Dims dims, std::vector<Term> terms);

  /// The computational basis vector |label>.
  static Ket basis(const Dims& dims, const BasisLabel& label);

  const Dims& dims() const { return dims_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  /// Zero when the label is not in the support.
  ExactScalar amplitude(std::size_t index) const;
  ExactScalar amplitude(const BasisLabel& label) const { return amplitude(encode(label, dims_)); }
  const std::vector<Complex>& dense() const { return dense_; }

  /// Global phase times this ket (phase must have unit modulus).
  Ket with_phase(const ExactScalar& phase) const;
  /// Relabels parties: party p of this ket becomes party perm[p] of the result.
  Ket permute_parties(const std::vector<int>& perm) const;

  std::string to_string() const;

 private:
  void finish();

  Dims dims_;
  std::vector<Term> terms_;
  std::vector<Complex> dense_;
};

/// <a|b>, conjugate-linear in a.
Complex inner(const Ket& a, const Ket& b);
/// <a|b> as a formal sum (see ExactSum::certainly_zero for limits).
ExactSum exact_inner(const Ket& a, const Ket& b);

/// Party permutation applied to a Dims, matching Ket::permute_parties.
Dims permute_dims(const Dims& dims, const std::vector<int>& perm);

/// Kept parties index rows, measured parties index columns, each in
/// mixed-radix order.
Eigen::MatrixXcd reshape(const Ket& k, const MeasuredSet& m);

/// Number of singular values of reshape(k, m) above tol times the largest.
int schmidt_rank(const Ket& k, const MeasuredSet& m, double tol = 1e-9);

}  // namespace snl
