#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace snl {

/// Raised for malformed inputs: bad dimensions, out-of-range digits,
/// inconsistent measured sets, non-normalized states.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Local dimensions d_1..d_N of a multipartite space. Every entry is at
/// least 2 and there are at least two parties.
class Dims {
 public:
  Dims() = default;
  explicit Dims(std::vector<int> party_dims);

  std::size_t parties() const { return dims_.size(); }
  int operator[](std::size_t party) const { return dims_[party]; }
  const std::vector<int>& values() const { return dims_; }
  std::size_t total() const { return total_; }

  /// Product of the dimensions of the listed parties.
  std::size_t product_over(const std::vector<int>& parties) const;

  bool operator==(const Dims& other) const { return dims_ == other.dims_; }

  /// "3x3x3"
  std::string to_string() const;

 private:
  std::vector<int> dims_;
  std::size_t total_ = 0;
};

/// One digit per party, most significant party first.
struct BasisLabel {
  std::vector<int> digits;

  bool operator==(const BasisLabel&) const = default;
  auto operator<=>(const BasisLabel&) const = default;

  /// Concatenated digits ("0021") when every digit is a single character,
  /// comma separated otherwise.
  std::string to_string() const;
  static BasisLabel parse(const std::string& text);
};

/// Throws ValidationError naming the offending party and digit.
void validate_label(const BasisLabel& label, const Dims& dims);

/// Mixed-radix encoding, party 0 most significant.
std::size_t encode(const BasisLabel& label, const Dims& dims);
BasisLabel decode(std::size_t index, const Dims& dims);

/// The parties a joint measurement acts on; `kept` is the complement.
class MeasuredSet {
 public:
  MeasuredSet() = default;
  MeasuredSet(std::vector<int> parties, const Dims& dims);

  /// All parties except `party`.
  static MeasuredSet complement_of(int party, const Dims& dims);

  const std::vector<int>& parties() const { return measured_; }
  const std::vector<int>& kept() const { return kept_; }
  /// Measured dimension D.
  std::size_t measured_dim() const { return measured_dim_; }
  std::size_t kept_dim() const { return kept_dim_; }
  const Dims& dims() const { return dims_; }

  /// Row (kept) and column (measured) indices of a full flat index.
  std::size_t kept_index(std::size_t flat) const;
  std::size_t measured_index(std::size_t flat) const;
  std::size_t join(std::size_t kept_index, std::size_t measured_index) const;

  /// Sub-labels over the measured (resp. kept) parties, in party order.
  BasisLabel measured_label(std::size_t measured_index) const;
  BasisLabel kept_label(std::size_t kept_index) const;

  bool operator==(const MeasuredSet& other) const {
    return measured_ == other.measured_ && dims_ == other.dims_;
  }

  std::string to_string() const;

 private:
  Dims dims_;
  std::vector<int> measured_;
  std::vector<int> kept_;
  std::size_t measured_dim_ = 1;
  std::size_t kept_dim_ = 1;
};

}  // namespace snl
