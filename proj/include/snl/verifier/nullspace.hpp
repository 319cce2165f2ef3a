#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "snl/verifier/constraints.hpp"

namespace snl {

enum class SolverMethod {
  Svd,   // dense singular value decomposition of the constraint matrix
  Gram,  // eigen-decomposition of C^H C, null vectors refined as ||C v||
  Auto,  // Svd up to kAutoSvdUnknowns, Gram above
};

inline constexpr std::size_t kAutoSvdUnknowns = 1296;

std::string solver_method_name(SolverMethod m);
SolverMethod parse_solver_method(const std::string& name);

struct NullspaceResult {
  /// Orthonormal columns spanning the numerical nullspace.
  Eigen::MatrixXcd basis;
  /// All singular values, descending. Rows < cols pads with exact zeros.
  std::vector<double> singular_values;
  double sigma_max = 0.0;
  /// Smallest singular value above the threshold (0 if none).
  double smallest_kept = 0.0;
  /// Largest singular value at or below the threshold (0 if none).
  double largest_discarded = 0.0;
  SolverMethod method = SolverMethod::Svd;

  std::size_t dim() const { return static_cast<std::size_t>(basis.cols()); }
  /// smallest_kept / max(largest_discarded, 1e-30 * sigma_max); infinite
  /// when no singular value is kept.
  double gap() const;
};

/// Singular vectors with sigma <= rel_tol * sigma_max (all of them for a
/// zero matrix).
NullspaceResult solution_space(const ConstraintSystem& c, double rel_tol,
                               SolverMethod method = SolverMethod::Auto);

/// Same decision rule over a real row-major matrix; basis is real-valued.
NullspaceResult real_solution_space(const std::vector<double>& matrix, std::size_t rows,
                                    std::size_t cols, double rel_tol,
                                    SolverMethod method = SolverMethod::Auto);

}  // namespace snl
