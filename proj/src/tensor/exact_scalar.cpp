#include "snl/tensor/exact_scalar.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "snl/tensor/dims.hpp"

namespace snl {

namespace {

std::int64_t positive_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

ExactScalar::ExactScalar(Rational rational, std::int64_t inv_sqrt, std::int64_t phase_order,
                         std::int64_t phase_power)
    : rational_(std::move(rational)),
      inv_sqrt_(inv_sqrt),
      phase_order_(phase_order),
      phase_power_(phase_power) {
  if (inv_sqrt_ < 1) throw ValidationError("radical argument must be >= 1");
  if (phase_order_ < 1) throw ValidationError("phase order must be >= 1");
  canonicalize();
}

void ExactScalar::canonicalize() {
  rational_.canonicalize();
  if (sgn(rational_) == 0) {
    inv_sqrt_ = 1;
    phase_order_ = 1;
    phase_power_ = 0;
    return;
  }
  if (sgn(rational_) < 0) {
    rational_ = -rational_;
    if (phase_order_ % 2 != 0) {
      phase_power_ *= 2;
      phase_order_ *= 2;
    }
    phase_power_ += phase_order_ / 2;
  }
  // 1/sqrt(s^2 t) = (1/s) * 1/sqrt(t)
  for (std::int64_t f = 2; f * f <= inv_sqrt_; ++f) {
    while (inv_sqrt_ % (f * f) == 0) {
      inv_sqrt_ /= f * f;
      rational_ /= f;
    }
  }
  phase_power_ = positive_mod(phase_power_, phase_order_);
  std::int64_t g = std::gcd(phase_power_, phase_order_);
  if (phase_power_ == 0) {
    phase_order_ = 1;
  } else {
    phase_power_ /= g;
    phase_order_ /= g;
  }
}

Rational ExactScalar::abs2() const {
  Rational out = rational_ * rational_;
  out /= Rational(static_cast<long>(inv_sqrt_));
  out.canonicalize();
  return out;
}

ExactScalar ExactScalar::conj() const {
  return ExactScalar(rational_, inv_sqrt_, phase_order_, -phase_power_);
}

ExactScalar ExactScalar::operator-() const {
  return ExactScalar(-rational_, inv_sqrt_, phase_order_, phase_power_);
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw ValidationError("division by an exact zero");
  // 1 / ((p/q) r^{-1/2} w^k) = (q r / p) r^{-1/2} w^{-k}
  Rational inv = Rational(static_cast<long>(inv_sqrt_)) / rational_;
  return ExactScalar(inv, inv_sqrt_, phase_order_, -phase_power_);
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero() || b.is_zero()) return ExactScalar();
  std::int64_t n = std::lcm(a.phase_order_, b.phase_order_);
  std::int64_t k = a.phase_power_ * (n / a.phase_order_) + b.phase_power_ * (n / b.phase_order_);
  return ExactScalar(a.rational_ * b.rational_, a.inv_sqrt_ * b.inv_sqrt_, n, k);
}

bool ExactScalar::operator==(const ExactScalar& other) const {
  return rational_ == other.rational_ && inv_sqrt_ == other.inv_sqrt_ &&
         phase_order_ == other.phase_order_ && phase_power_ == other.phase_power_;
}

std::complex<double> ExactScalar::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  long double magnitude = static_cast<long double>(rational_.get_d());
  if (inv_sqrt_ != 1) magnitude /= std::sqrt(static_cast<long double>(inv_sqrt_));
  // Quarter turns render exactly.
  const std::int64_t n = phase_order_;
  const std::int64_t k = phase_power_;
  if (4 % n == 0) {
    std::int64_t quarter = k * (4 / n);
    auto m = static_cast<double>(magnitude);
    switch (quarter) {
      case 0: return {m, 0.0};
      case 1: return {0.0, m};
      case 2: return {-m, 0.0};
      default: return {0.0, -m};
    }
  }
  long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                      static_cast<long double>(n);
  return {static_cast<double>(magnitude * std::cos(angle)),
          static_cast<double>(magnitude * std::sin(angle))};
}

std::string ExactScalar::to_string() const {
  std::ostringstream os;
  os << rational_.get_str();
  if (inv_sqrt_ != 1) os << "/sqrt(" << inv_sqrt_ << ')';
  if (phase_power_ != 0) os << "*w" << phase_order_ << '^' << phase_power_;
  return os.str();
}

void ExactSum::add(const ExactScalar& term) {
  if (term.is_zero()) return;
  // w and -w share a class: the key is the phase with angle in [0, pi).
  std::int64_t n = term.phase_order();
  std::int64_t k = term.phase_power();
  Rational value = term.rational();
  if (2 * k >= n) {
    k = 2 * k - n;
    n *= 2;
    value = -value;
    std::int64_t g = std::gcd(k, n);
    if (k == 0) {
      n = 1;
    } else {
      k /= g;
      n /= g;
    }
  }
  auto key = std::make_tuple(term.inv_sqrt_arg(), n, k);
  Rational& slot = terms_[key];
  slot += value;
  slot.canonicalize();
  if (sgn(slot) == 0) terms_.erase(key);
}

bool ExactSum::certainly_zero() const { return terms_.empty(); }

std::optional<Rational> ExactSum::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [key, value] = *terms_.begin();
  auto [r, n, k] = key;
  if (r != 1 || n != 1) return std::nullopt;
  return value;
}

std::optional<ExactScalar> ExactSum::as_scalar() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [key, value] = *terms_.begin();
  auto [r, n, k] = key;
  return ExactScalar(value, r, n, k);
}

ExactScalar ExactSum::dominant() const {
  ExactScalar best;
  for (const auto& [key, value] : terms_) {
    if (best.is_zero() || abs(value) > best.rational()) {
      auto [r, n, k] = key;
      best = ExactScalar(value, r, n, k);
    }
  }
  return best;
}

std::complex<double> ExactSum::to_complex() const {
  std::complex<double> out{0.0, 0.0};
  for (const auto& [key, value] : terms_) {
    auto [r, n, k] = key;
    out += ExactScalar(value, r, n, k).to_complex();
  }
  return out;
}

}  // namespace snl
