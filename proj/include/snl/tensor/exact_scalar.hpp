#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include <gmpxx.h>

namespace snl {

using Rational = mpq_class;

/// An exact amplitude of the form (p/q) * (1/sqrt(r)) * w_n^k, where
/// w_n = exp(2 pi i / n).
///
/// Values are kept canonical so that structural equality is value equality:
///   - p/q >= 0 (a negative sign is folded into the phase as w_2),
///   - r is squarefree (square factors move into p/q),
///   - 0 <= k < n with gcd(k, n) = 1, or (n, k) = (1, 0),
///   - zero is (0/1, 1, 1, 0).
/// Products, conjugates and quotients stay inside the representation; sums
/// generally do not (see ExactSum).
class ExactScalar {
 public:
  ExactScalar() : ExactScalar(Rational(0)) {}
  explicit ExactScalar(Rational rational, std::int64_t inv_sqrt = 1, std::int64_t phase_order = 1,
                       std::int64_t phase_power = 0);

  static ExactScalar one() { return ExactScalar(Rational(1)); }
  static ExactScalar inv_sqrt(std::int64_t r) { return ExactScalar(Rational(1), r); }
  static ExactScalar root_of_unity(std::int64_t n, std::int64_t k) {
    return ExactScalar(Rational(1), 1, n, k);
  }

  const Rational& rational() const { return rational_; }
  std::int64_t inv_sqrt_arg() const { return inv_sqrt_; }
  std::int64_t phase_order() const { return phase_order_; }
  std::int64_t phase_power() const { return phase_power_; }

  bool is_zero() const { return sgn(rational_) == 0; }

  /// |value|^2 = p^2 / (q^2 r), always rational.
  Rational abs2() const;
  ExactScalar conj() const;
  ExactScalar operator-() const;
  ExactScalar inverse() const;

  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    return a * b.inverse();
  }
  bool operator==(const ExactScalar& other) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  void canonicalize();

  Rational rational_;
  std::int64_t inv_sqrt_ = 1;
  std::int64_t phase_order_ = 1;
  std::int64_t phase_power_ = 0;
};

/// A formal sum of ExactScalars grouped by their (r, n, k) class, with w and
/// -w in the same class. Terms in the same class add rationally. `certainly_zero` is sound but not complete:
/// cancellations between distinct roots of unity (1 + w_3 + w_3^2) are not
/// detected.
class ExactSum {
 public:
  void add(const ExactScalar& term);

  bool certainly_zero() const;
  /// Value when the sum is a plain rational (only the r = 1, n = 1 class).
  std::optional<Rational> as_rational() const;
  std::complex<double> to_complex() const;
  std::size_t classes() const { return terms_.size(); }
  /// The value when exactly one class survives.
  std::optional<ExactScalar> as_scalar() const;
  /// The surviving class with the largest rational part (zero when empty).
  ExactScalar dominant() const;

 private:
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Rational> terms_;
};

}  // namespace snl
