#pragma once

#include <map>
#include <vector>

#include "snl/constructions/state_set.hpp"

namespace snl {

/// A builder produced basis labels outside the requested dimensions.
class IndexOutOfRange : public ValidationError {
 public:
  struct Offender {
    FamilyTag tag;
    BasisLabel label;
  };
  IndexOutOfRange(const Dims& dims, std::vector<Offender> offenders);
  const std::vector<Offender>& offenders() const { return offenders_; }

 private:
  std::vector<Offender> offenders_;
};

/// (product of dims) / (smallest dim) + 1
std::size_t lower_bound(const Dims& dims);

/// psi_0 = alpha_0; psi_i = n^{-1/2} sum_{j=1..n} w_n^{ij} alpha_j.
/// The alphas must have pairwise disjoint supports, which makes them
/// orthonormal and keeps every psi amplitude a single exact product.
std::vector<Ket> fourier_mix(const std::vector<Ket>& alphas);

StateSet build_theorem1(int d);
StateSet build_theorem2(int d1, int d2, int d3);
StateSet build_example1();
StateSet build_theorem3(int d);
StateSet build_theorem4(int d1, int d2, int d3, int d4);

/// Dispatch by construction; `args` is {d} for T1/T3, the dims for T2/T4,
/// empty for EX1.
StateSet build(Construction c, const std::vector<int>& args);

/// Alpha states wrapped into a Fourier-mixed set (used for custom inputs
/// that supply alphas).
StateSet assemble_fourier_set(Dims dims, std::vector<Alpha> alphas, Construction c,
                              std::vector<int> params);

/// Family number -> count, excluding the origin.
std::map<int, int> family_counts(const StateSet& s);

/// Normalized uniform product state over all parties.
Ket stopper_state(const Dims& dims);

}  // namespace snl
