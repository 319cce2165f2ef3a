#include "snl/tensor/ket.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <Eigen/SVD>

namespace snl {

Ket::Ket(Dims dims, const std::vector<std::pair<BasisLabel, ExactScalar>>& amplitudes)
    : dims_(std::move(dims)) {
  terms_.reserve(amplitudes.size());
  for (const auto& [label, amp] : amplitudes) {
    if (amp.is_zero()) continue;
    terms_.push_back({encode(label, dims_), amp});
  }
  finish();
}

Ket::Ket(Dims dims, std::vector<Term> terms) : dims_(std::move(dims)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const Term& t) { return t.amplitude.is_zero(); });
  for (const auto& t : terms_) {
    if (t.index >= dims_.total()) {
      throw ValidationError("flat index " + std::to_string(t.index) + " out of range for " +
                            dims_.to_string());
    }
  }
  finish();
}

void Ket::finish() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.index < b.index; });
  for (std::size_t k = 1; k < terms_.size(); ++k) {
    if (terms_[k].index == terms_[k - 1].index) {
      throw ValidationError("basis label " + decode(terms_[k].index, dims_).to_string() +
                            " appears twice");
    }
  }
  Rational norm(0);
  for (const auto& t : terms_) norm += t.amplitude.abs2();
  norm.canonicalize();
  if (norm != 1) {
    throw ValidationError("ket is not normalized: squared norm " + norm.get_str());
  }
  dense_.assign(dims_.total(), Complex(0.0, 0.0));
  for (const auto& t : terms_) dense_[t.index] = t.amplitude.to_complex();
}

Ket Ket::basis(const Dims& dims, const BasisLabel& label) {
  return Ket(dims, {{label, ExactScalar::one()}});
}

ExactScalar Ket::amplitude(std::size_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.index < i; });
  if (it == terms_.end() || it->index != index) return ExactScalar();
  return it->amplitude;
}

Ket Ket::with_phase(const ExactScalar& phase) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.amplitude = phase * t.amplitude;
  return Ket(dims_, std::move(out));
}

Dims permute_dims(const Dims& dims, const std::vector<int>& perm) {
  if (perm.size() != dims.parties()) throw ValidationError("permutation has wrong length");
  std::vector<int> seen(perm.size(), 0);
  std::vector<int> out(perm.size());
  for (std::size_t p = 0; p < perm.size(); ++p) {
    int q = perm[p];
    if (q < 0 || static_cast<std::size_t>(q) >= perm.size() || seen[q]++) {
      throw ValidationError("not a permutation of the parties");
    }
    out[q] = dims[p];
  }
  return Dims(out);
}

Ket Ket::permute_parties(const std::vector<int>& perm) const {
  Dims target = permute_dims(dims_, perm);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    BasisLabel from = decode(t.index, dims_);
    BasisLabel to;
    to.digits.resize(from.digits.size());
    for (std::size_t p = 0; p < perm.size(); ++p) to.digits[perm[p]] = from.digits[p];
    out.push_back({encode(to, target), t.amplitude});
  }
  return Ket(target, std::move(out));
}

std::string Ket::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) os << " + ";
    os << terms_[k].amplitude.to_string() << "|" << decode(terms_[k].index, dims_).to_string()
       << ">";
  }
  return os.str();
}

namespace {

void require_same_dims(const Ket& a, const Ket& b) {
  if (!(a.dims() == b.dims())) {
    throw ValidationError("dimension mismatch: " + a.dims().to_string() + " vs " +
                          b.dims().to_string());
  }
}

template <typename F>
void for_common_support(const Ket& a, const Ket& b, F&& f) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->index < ib->index) {
      ++ia;
    } else if (ib->index < ia->index) {
      ++ib;
    } else {
      f(*ia, *ib);
      ++ia;
      ++ib;
    }
  }
}

}  // namespace

Complex inner(const Ket& a, const Ket& b) {
  require_same_dims(a, b);
  Complex out(0.0, 0.0);
  for_common_support(a, b, [&](const Ket::Term& x, const Ket::Term& y) {
    out += std::conj(a.dense()[x.index]) * b.dense()[y.index];
  });
  return out;
}

ExactSum exact_inner(const Ket& a, const Ket& b) {
  require_same_dims(a, b);
  ExactSum out;
  for_common_support(a, b, [&](const Ket::Term& x, const Ket::Term& y) {
    out.add(x.amplitude.conj() * y.amplitude);
  });
  return out;
}

Eigen::MatrixXcd reshape(const Ket& k, const MeasuredSet& m) {
  if (!(k.dims() == m.dims())) {
    throw ValidationError("measured set built for " + m.dims().to_string() + ", ket is " +
                          k.dims().to_string());
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(m.kept_dim()),
                                                static_cast<Eigen::Index>(m.measured_dim()));
  for (const auto& t : k.terms()) {
    out(static_cast<Eigen::Index>(m.kept_index(t.index)),
        static_cast<Eigen::Index>(m.measured_index(t.index))) = k.dense()[t.index];
  }
  return out;
}

int schmidt_rank(const Ket& k, const MeasuredSet& m, double tol) {
  if (!(tol > 0)) throw ValidationError("tolerance must be positive");
  Eigen::MatrixXcd mat = reshape(k, m);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(mat);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * s(0)) ++rank;
  }
  return rank;
}

}  // namespace snl
