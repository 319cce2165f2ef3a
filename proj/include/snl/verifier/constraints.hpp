#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "snl/constructions/state_set.hpp"

namespace snl {

/// The linear system exceeds the dense-solver budget.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest number of operator entries (D^2) the dense solvers accept.
inline constexpr std::size_t kMaxUnknowns = 8192;

/// Linear constraints <psi_i| I (x) E |psi_j> = 0 over the entries of E.
///
/// Row r corresponds to the r-th ordered pair (i, j), i != j, in
/// lexicographic order. Column a * D + b is the entry <a|E|b> of the
/// measured-subsystem operator. Stored dense and row-major.
struct ConstraintSystem {
  MeasuredSet measured;
  std::size_t states = 0;
  std::size_t dim = 0;  // D
  std::vector<Complex> matrix;

  std::size_t rows() const { return states * (states - 1); }
  std::size_t cols() const { return dim * dim; }
  const Complex* row(std::size_t r) const { return matrix.data() + r * cols(); }
  std::pair<std::size_t, std::size_t> row_pair(std::size_t r) const;
};

/// Throws SizeLimitError when D^2 > kMaxUnknowns, ValidationError when the
/// set has fewer than two states or the measured set does not fit.
ConstraintSystem assemble(const StateSet& s, const MeasuredSet& m, int threads = 1);

/// Same system restricted to Hermitian E, over D^2 real parameters:
/// the D diagonal entries, then Re and Im of <a|E|b> for a < b (row-major
/// pair order). Uses only pairs i < j; each contributes its real and
/// imaginary part as two rows. Row-major, n(n-1) x D^2.
std::vector<double> hermitian_system(const ConstraintSystem& c);

/// || C vec(I) / sqrt(D) ||_2
double identity_residual(const ConstraintSystem& c);

}  // namespace snl
