#include "snl/verifier/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "snl/kernels/kernels.hpp"

namespace snl {

std::pair<std::size_t, std::size_t> ConstraintSystem::row_pair(std::size_t r) const {
  std::size_t i = r / (states - 1);
  std::size_t j = r % (states - 1);
  if (j >= i) ++j;
  return {i, j};
}

namespace {

// Nonzero amplitudes of one state, grouped by kept index.
struct Rows {
  struct Entry {
    std::size_t measured;
    Complex value;
  };
  std::vector<std::vector<Entry>> by_kept;
  // Dense kept x D rendering, row-major.
  std::vector<Complex> dense;
};

Rows split(const Ket& k, const MeasuredSet& m) {
  Rows out;
  out.by_kept.resize(m.kept_dim());
  out.dense.assign(m.kept_dim() * m.measured_dim(), Complex(0.0, 0.0));
  for (const auto& t : k.terms()) {
    std::size_t r = m.kept_index(t.index);
    std::size_t c = m.measured_index(t.index);
    Complex v = k.dense()[t.index];
    out.by_kept[r].push_back({c, v});
    out.dense[r * m.measured_dim() + c] = v;
  }
  return out;
}

template <typename F>
void parallel_for(std::size_t count, int threads, F&& body) {
  auto workers = static_cast<std::size_t>(std::max(1, threads));
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += workers) body(k);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

ConstraintSystem assemble(const StateSet& s, const MeasuredSet& m, int threads) {
  if (!(m.dims() == s.dims)) {
    throw ValidationError("measured set " + m.to_string() + " was built for " +
                          m.dims().to_string() + ", the set lives in " + s.dims.to_string());
  }
  if (s.psis.size() < 2) throw ValidationError("need at least two states to form constraints");
  const std::size_t D = m.measured_dim();
  if (D * D > kMaxUnknowns) {
    throw SizeLimitError("measured dimension " + std::to_string(D) + " gives " +
                         std::to_string(D * D) + " unknowns; the dense limit is " +
                         std::to_string(kMaxUnknowns));
  }
  ConstraintSystem c{m, s.psis.size(), D, {}};
  c.matrix.assign(c.rows() * c.cols(), Complex(0.0, 0.0));

  std::vector<Rows> parts;
  parts.reserve(s.psis.size());
  for (const auto& psi : s.psis) parts.push_back(split(psi, m));

  const auto& k = kernels::active();
  parallel_for(c.rows(), threads, [&](std::size_t r) {
    auto [i, j] = c.row_pair(r);
    Complex* out = c.matrix.data() + r * c.cols();
    const Rows& left = parts[i];
    const Rows& right = parts[j];
    for (std::size_t kept = 0; kept < left.by_kept.size(); ++kept) {
      if (right.by_kept[kept].empty()) continue;
      const Complex* rhs = right.dense.data() + kept * D;
      for (const auto& e : left.by_kept[kept]) {
        k.caxpy(D, std::conj(e.value), rhs, out + e.measured * D);
      }
    }
  });
  return c;
}

std::vector<double> hermitian_system(const ConstraintSystem& c) {
  const std::size_t D = c.dim;
  const std::size_t cols = D * D;
  const std::size_t pairs = c.states * (c.states - 1) / 2;
  std::vector<double> out(2 * pairs * cols, 0.0);
  std::size_t out_row = 0;
  for (std::size_t r = 0; r < c.rows(); ++r) {
    auto [i, j] = c.row_pair(r);
    if (i > j) continue;
    const Complex* row = c.row(r);
    double* re = out.data() + out_row * cols;
    double* im = re + cols;
    out_row += 2;
    // E_aa = z_a; E_ab = x + i y, E_ba = x - i y (a < b)
    std::size_t col = 0;
    for (std::size_t a = 0; a < D; ++a, ++col) {
      Complex v = row[a * D + a];
      re[col] = v.real();
      im[col] = v.imag();
    }
    for (std::size_t a = 0; a < D; ++a) {
      for (std::size_t b = a + 1; b < D; ++b) {
        Complex cab = row[a * D + b];
        Complex cba = row[b * D + a];
        Complex x = cab + cba;
        Complex y = Complex(0.0, 1.0) * (cab - cba);
        re[col] = x.real();
        im[col] = x.imag();
        ++col;
        re[col] = y.real();
        im[col] = y.imag();
        ++col;
      }
    }
  }
  return out;
}

double identity_residual(const ConstraintSystem& c) {
  const std::size_t D = c.dim;
  const double scale = 1.0 / std::sqrt(static_cast<double>(D));
  double acc = 0.0;
  for (std::size_t r = 0; r < c.rows(); ++r) {
    Complex v(0.0, 0.0);
    for (std::size_t a = 0; a < D; ++a) v += c.row(r)[a * D + a];
    acc += std::norm(v * scale);
  }
  return std::sqrt(acc);
}

}  // namespace snl
