#include "snl/tensor/dims.hpp"

#include <algorithm>
#include <sstream>

namespace snl {

Dims::Dims(std::vector<int> party_dims) : dims_(std::move(party_dims)) {
  if (dims_.size() < 2) {
    throw ValidationError("need at least two parties, got " + std::to_string(dims_.size()));
  }
  total_ = 1;
  for (std::size_t p = 0; p < dims_.size(); ++p) {
    if (dims_[p] < 2) {
      throw ValidationError("party " + std::to_string(p) + " has dimension " +
                            std::to_string(dims_[p]) + " (must be >= 2)");
    }
    total_ *= static_cast<std::size_t>(dims_[p]);
  }
}

std::size_t Dims::product_over(const std::vector<int>& parties) const {
  std::size_t out = 1;
  for (int p : parties) out *= static_cast<std::size_t>(dims_.at(static_cast<std::size_t>(p)));
  return out;
}

std::string Dims::to_string() const {
  std::ostringstream os;
  for (std::size_t p = 0; p < dims_.size(); ++p) {
    if (p) os << 'x';
    os << dims_[p];
  }
  return os.str();
}

std::string BasisLabel::to_string() const {
  bool single = std::all_of(digits.begin(), digits.end(), [](int d) { return d >= 0 && d < 10; });
  std::ostringstream os;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (!single && k) os << ',';
    os << digits[k];
  }
  return os.str();
}

BasisLabel BasisLabel::parse(const std::string& text) {
  BasisLabel out;
  if (text.empty()) throw ValidationError("empty basis label");
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
      if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) {
        throw ValidationError("malformed basis label '" + text + "'");
      }
      out.digits.push_back(std::stoi(part));
    }
    return out;
  }
  for (char c : text) {
    if (c < '0' || c > '9') throw ValidationError("malformed basis label '" + text + "'");
    out.digits.push_back(c - '0');
  }
  return out;
}

void validate_label(const BasisLabel& label, const Dims& dims) {
  if (label.digits.size() != dims.parties()) {
    throw ValidationError("label " + label.to_string() + " has " +
                          std::to_string(label.digits.size()) + " digits, expected " +
                          std::to_string(dims.parties()));
  }
  for (std::size_t p = 0; p < dims.parties(); ++p) {
    int digit = label.digits[p];
    if (digit < 0 || digit >= dims[p]) {
      throw ValidationError("label " + label.to_string() + ": digit " + std::to_string(digit) +
                            " out of range for party " + std::to_string(p) + " (dimension " +
                            std::to_string(dims[p]) + ")");
    }
  }
}

std::size_t encode(const BasisLabel& label, const Dims& dims) {
  validate_label(label, dims);
  std::size_t index = 0;
  for (std::size_t p = 0; p < dims.parties(); ++p) {
    index = index * static_cast<std::size_t>(dims[p]) + static_cast<std::size_t>(label.digits[p]);
  }
  return index;
}

BasisLabel decode(std::size_t index, const Dims& dims) {
  if (index >= dims.total()) {
    throw ValidationError("flat index " + std::to_string(index) + " out of range for " +
                          dims.to_string());
  }
  BasisLabel out;
  out.digits.resize(dims.parties());
  for (std::size_t p = dims.parties(); p-- > 0;) {
    auto d = static_cast<std::size_t>(dims[p]);
    out.digits[p] = static_cast<int>(index % d);
    index /= d;
  }
  return out;
}

MeasuredSet::MeasuredSet(std::vector<int> parties, const Dims& dims)
    : dims_(dims), measured_(std::move(parties)) {
  std::sort(measured_.begin(), measured_.end());
  if (measured_.empty()) throw ValidationError("measured set is empty");
  if (std::adjacent_find(measured_.begin(), measured_.end()) != measured_.end()) {
    throw ValidationError("measured set lists a party twice");
  }
  for (int p : measured_) {
    if (p < 0 || static_cast<std::size_t>(p) >= dims.parties()) {
      throw ValidationError("measured party " + std::to_string(p) + " does not exist in " +
                            dims.to_string());
    }
  }
  if (measured_.size() == dims.parties()) {
    throw ValidationError("measured set covers every party; nothing is kept");
  }
  for (int p = 0; p < static_cast<int>(dims.parties()); ++p) {
    if (!std::binary_search(measured_.begin(), measured_.end(), p)) kept_.push_back(p);
  }
  measured_dim_ = dims.product_over(measured_);
  kept_dim_ = dims.product_over(kept_);
}

MeasuredSet MeasuredSet::complement_of(int party, const Dims& dims) {
  std::vector<int> parties;
  for (int p = 0; p < static_cast<int>(dims.parties()); ++p) {
    if (p != party) parties.push_back(p);
  }
  if (parties.size() == dims.parties()) {
    throw ValidationError("party " + std::to_string(party) + " does not exist");
  }
  return MeasuredSet(std::move(parties), dims);
}

std::size_t MeasuredSet::kept_index(std::size_t flat) const {
  BasisLabel label = decode(flat, dims_);
  std::size_t out = 0;
  for (int p : kept_) out = out * static_cast<std::size_t>(dims_[p]) + label.digits[p];
  return out;
}

std::size_t MeasuredSet::measured_index(std::size_t flat) const {
  BasisLabel label = decode(flat, dims_);
  std::size_t out = 0;
  for (int p : measured_) out = out * static_cast<std::size_t>(dims_[p]) + label.digits[p];
  return out;
}

std::size_t MeasuredSet::join(std::size_t kept_index, std::size_t measured_index) const {
  BasisLabel label;
  label.digits.assign(dims_.parties(), 0);
  for (std::size_t k = kept_.size(); k-- > 0;) {
    auto d = static_cast<std::size_t>(dims_[kept_[k]]);
    label.digits[kept_[k]] = static_cast<int>(kept_index % d);
    kept_index /= d;
  }
  for (std::size_t k = measured_.size(); k-- > 0;) {
    auto d = static_cast<std::size_t>(dims_[measured_[k]]);
    label.digits[measured_[k]] = static_cast<int>(measured_index % d);
    measured_index /= d;
  }
  return encode(label, dims_);
}

namespace {
BasisLabel sub_label(std::size_t index, const Dims& dims, const std::vector<int>& parties) {
  BasisLabel out;
  out.digits.resize(parties.size());
  for (std::size_t k = parties.size(); k-- > 0;) {
    auto d = static_cast<std::size_t>(dims[parties[k]]);
    out.digits[k] = static_cast<int>(index % d);
    index /= d;
  }
  return out;
}
}  // namespace

BasisLabel MeasuredSet::measured_label(std::size_t measured_index) const {
  return sub_label(measured_index, dims_, measured_);
}

BasisLabel MeasuredSet::kept_label(std::size_t kept_index) const {
  return sub_label(kept_index, dims_, kept_);
}

std::string MeasuredSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < measured_.size(); ++k) {
    if (k) os << ',';
    os << measured_[k];
  }
  os << '}';
  return os.str();
}

}  // namespace snl
