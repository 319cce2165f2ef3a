#include <limits>
#include "snl/verifier/nullspace.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <type_traits>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <cblas.h>

namespace snl {

std::string solver_method_name(SolverMethod m) {
  switch (m) {
    case SolverMethod::Svd: return "svd";
    case SolverMethod::Gram: return "gram";
    case SolverMethod::Auto: return "auto";
  }
  return "auto";
}

SolverMethod parse_solver_method(const std::string& name) {
  if (name == "svd") return SolverMethod::Svd;
  if (name == "gram") return SolverMethod::Gram;
  if (name == "auto") return SolverMethod::Auto;
  throw ValidationError("unknown solver method '" + name + "' (expected svd, gram, auto)");
}

double NullspaceResult::gap() const {
  // Nothing kept (zero matrix, or every direction null): no ambiguity.
  if (sigma_max <= 0.0 || smallest_kept <= 0.0) return std::numeric_limits<double>::infinity();
  double floor = std::max(largest_discarded, 1e-30 * sigma_max);
  return smallest_kept / floor;
}

namespace {

// The row-major rows x cols constraint matrix is handed to LAPACK as the
// column-major cols x rows matrix B = A^T. Right singular vectors of A are
// then conj(left singular vectors of B), and A^H A = conj(B B^H).

template <typename T>
constexpr bool kComplex = !std::is_same_v<T, double>;

template <typename T>
T conj_if(T v) {
  if constexpr (kComplex<T>) {
    return std::conj(v);
  } else {
    return v;
  }
}

void check_info(lapack_int info, const char* routine) {
  if (info != 0) {
    throw std::runtime_error(std::string(routine) + " failed with info " + std::to_string(info));
  }
}

struct Candidate {
  double sigma;
  std::size_t column;
};

template <typename T>
void finish(NullspaceResult& out, const std::vector<Candidate>& cands,
            const std::vector<std::vector<T>>& vectors, std::size_t cols, double rel_tol) {
  const double threshold = rel_tol * out.sigma_max;
  std::size_t null_count = 0;
  for (const auto& c : cands) {
    if (c.sigma <= threshold) {
      ++null_count;
      out.largest_discarded = std::max(out.largest_discarded, c.sigma);
    } else if (out.smallest_kept == 0.0 || c.sigma < out.smallest_kept) {
      out.smallest_kept = c.sigma;
    }
  }
  out.basis.resize(static_cast<Eigen::Index>(cols), static_cast<Eigen::Index>(null_count));
  Eigen::Index col = 0;
  for (const auto& c : cands) {
    if (c.sigma > threshold) continue;
    for (std::size_t r = 0; r < cols; ++r) {
      out.basis(static_cast<Eigen::Index>(r), col) = Complex(vectors[c.column][r]);
    }
    ++col;
  }
}

template <typename T>
NullspaceResult svd_route(const T* data, std::size_t rows, std::size_t cols, double rel_tol) {
  std::vector<T> b(data, data + rows * cols);
  const auto m = static_cast<lapack_int>(cols);
  const auto n = static_cast<lapack_int>(rows);
  const std::size_t k = std::min(rows, cols);
  char jobz = cols > rows ? 'A' : 'S';
  std::vector<double> s(k);
  std::vector<T> u(cols * cols);
  const std::size_t vt_rows = jobz == 'A' ? rows : k;
  std::vector<T> vt(std::max<std::size_t>(1, vt_rows * rows));
  lapack_int info;
  if constexpr (kComplex<T>) {
    info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, jobz, m, n, b.data(), m, s.data(), u.data(), m,
                          vt.data(), static_cast<lapack_int>(vt_rows));
  } else {
    info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, jobz, m, n, b.data(), m, s.data(), u.data(), m,
                          vt.data(), static_cast<lapack_int>(vt_rows));
  }
  check_info(info, "gesdd");

  NullspaceResult out;
  out.method = SolverMethod::Svd;
  out.singular_values.assign(s.begin(), s.end());
  out.singular_values.resize(cols, 0.0);
  out.sigma_max = out.singular_values.empty() ? 0.0 : out.singular_values.front();

  std::vector<Candidate> cands;
  std::vector<std::vector<T>> vectors(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    cands.push_back({out.singular_values[j], j});
    vectors[j].resize(cols);
    for (std::size_t r = 0; r < cols; ++r) vectors[j][r] = conj_if(u[j * cols + r]);
  }
  finish(out, cands, vectors, cols, rel_tol);
  return out;
}

template <typename T>
NullspaceResult gram_route(const T* data, std::size_t rows, std::size_t cols, double rel_tol) {
  const auto n = static_cast<lapack_int>(cols);
  const auto k = static_cast<lapack_int>(rows);
  std::vector<T> g(cols * cols);
  if constexpr (kComplex<T>) {
    cblas_zherk(CblasColMajor, CblasUpper, CblasNoTrans, n, k, 1.0, data, n, 0.0, g.data(), n);
  } else {
    cblas_dsyrk(CblasColMajor, CblasUpper, CblasNoTrans, n, k, 1.0, data, n, 0.0, g.data(), n);
  }
  std::vector<double> d(cols), e(cols > 1 ? cols - 1 : 1);
  std::vector<T> tau(cols > 1 ? cols - 1 : 1);
  lapack_int info;
  if constexpr (kComplex<T>) {
    info = LAPACKE_zhetrd(LAPACK_COL_MAJOR, 'U', n, g.data(), n, d.data(), e.data(), tau.data());
  } else {
    info = LAPACKE_dsytrd(LAPACK_COL_MAJOR, 'U', n, g.data(), n, d.data(), e.data(), tau.data());
  }
  check_info(info, "hetrd");

  std::vector<double> lambda = d;
  std::vector<double> e_copy = e;
  check_info(LAPACKE_dsterf(n, lambda.data(), e_copy.data()), "sterf");  // ascending

  NullspaceResult out;
  out.method = SolverMethod::Gram;
  out.singular_values.resize(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    out.singular_values[j] = std::sqrt(std::max(0.0, lambda[cols - 1 - j]));
  }
  out.sigma_max = out.singular_values.front();
  if (out.sigma_max == 0.0) {
    out.basis = Eigen::MatrixXcd::Identity(n, n);
    return out;
  }

  // Gram eigenvalues resolve sigma only down to ~sqrt(eps) * sigma_max, so
  // every eigenvalue in that zone is a candidate and gets re-measured as
  // ||A v|| from its eigenvector.
  const double lambda_max = lambda.back();
  std::size_t want = 0;
  while (want < cols && lambda[want] <= 1e-10 * lambda_max) ++want;
  want = std::min(cols, std::max<std::size_t>(want + 1, 2));

  std::vector<Candidate> cands;
  std::vector<std::vector<T>> vectors;
  while (true) {
    lapack_int found = 0, nsplit = 0;
    std::vector<double> w(cols);
    std::vector<lapack_int> iblock(cols), isplit(cols);
    check_info(LAPACKE_dstebz('I', 'B', n, 0.0, 0.0, 1, static_cast<lapack_int>(want), 0.0,
                              d.data(), e.data(), &found, &nsplit, w.data(), iblock.data(),
                              isplit.data()),
               "stebz");
    std::vector<T> z(cols * static_cast<std::size_t>(found));
    std::vector<lapack_int> ifail(static_cast<std::size_t>(found));
    if constexpr (kComplex<T>) {
      check_info(LAPACKE_zstein(LAPACK_COL_MAJOR, n, d.data(), e.data(), found, w.data(),
                                iblock.data(), isplit.data(), z.data(), n, ifail.data()),
                 "stein");
      check_info(LAPACKE_zunmtr(LAPACK_COL_MAJOR, 'L', 'U', 'N', n, found, g.data(), n,
                                tau.data(), z.data(), n),
                 "unmtr");
    } else {
      check_info(LAPACKE_dstein(LAPACK_COL_MAJOR, n, d.data(), e.data(), found, w.data(),
                                iblock.data(), isplit.data(), z.data(), n, ifail.data()),
                 "stein");
      check_info(LAPACKE_dormtr(LAPACK_COL_MAJOR, 'L', 'U', 'N', n, found, g.data(), n,
                                tau.data(), z.data(), n),
                 "ormtr");
    }
    cands.clear();
    vectors.clear();
    std::vector<T> y(rows);
    for (lapack_int j = 0; j < found; ++j) {
      std::vector<T> v(cols);
      double norm = 0.0;
      for (std::size_t r = 0; r < cols; ++r) {
        v[r] = conj_if(z[static_cast<std::size_t>(j) * cols + r]);
        norm += std::norm(v[r]);
      }
      norm = std::sqrt(norm);
      for (auto& x : v) x /= norm;
      if constexpr (kComplex<T>) {
        const T one(1.0), zero(0.0);
        cblas_zgemv(CblasColMajor, CblasTrans, n, k, &one, data, n, v.data(), 1, &zero, y.data(),
                    1);
      } else {
        cblas_dgemv(CblasColMajor, CblasTrans, n, k, 1.0, data, n, v.data(), 1, 0.0, y.data(), 1);
      }
      double sigma = 0.0;
      for (const auto& x : y) sigma += std::norm(x);
      cands.push_back({std::sqrt(sigma), vectors.size()});
      vectors.push_back(std::move(v));
    }
    bool all_null = std::all_of(cands.begin(), cands.end(), [&](const Candidate& c) {
      return c.sigma < rel_tol * out.sigma_max;
    });
    if (!all_null || want >= cols) break;
    want = std::min(cols, want * 2);
  }

  std::vector<double> refined;
  for (const auto& c : cands) refined.push_back(c.sigma);
  std::sort(refined.begin(), refined.end(), std::greater<>());
  std::copy(refined.begin(), refined.end(), out.singular_values.end() - refined.size());
  std::sort(out.singular_values.begin(), out.singular_values.end(), std::greater<>());
  finish(out, cands, vectors, cols, rel_tol);
  return out;
}

template <typename T>
NullspaceResult solve(const T* data, std::size_t rows, std::size_t cols, double rel_tol,
                      SolverMethod method) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw ValidationError("rel_tol must lie in (0, 1)");
  if (rows == 0) throw ValidationError("constraint matrix has no rows");
  if (cols > kMaxUnknowns) {
    throw SizeLimitError(std::to_string(cols) + " unknowns exceed the dense limit of " +
                         std::to_string(kMaxUnknowns));
  }
  if (method == SolverMethod::Auto) {
    method = cols <= kAutoSvdUnknowns ? SolverMethod::Svd : SolverMethod::Gram;
  }
  return method == SolverMethod::Svd ? svd_route(data, rows, cols, rel_tol)
                                     : gram_route(data, rows, cols, rel_tol);
}

}  // namespace

NullspaceResult solution_space(const ConstraintSystem& c, double rel_tol, SolverMethod method) {
  return solve(c.matrix.data(), c.rows(), c.cols(), rel_tol, method);
}

NullspaceResult real_solution_space(const std::vector<double>& matrix, std::size_t rows,
                                    std::size_t cols, double rel_tol, SolverMethod method) {
  if (matrix.size() != rows * cols) throw ValidationError("matrix size does not match shape");
  return solve(matrix.data(), rows, cols, rel_tol, method);
}

}  // namespace snl
