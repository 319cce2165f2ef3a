#pragma once

#include <map>
#include <string>
#include <vector>

#include "snl/tensor/dims.hpp"
#include "snl/tensor/ket.hpp"

namespace snl {

enum class Construction { T1, T2, EX1, T3, T4, Custom };

std::string construction_name(Construction c);
Construction parse_construction(const std::string& name);

/// Which family an alpha state came from. family == 0 is the origin state.
struct FamilyTag {
  Construction construction = Construction::Custom;
  int family = 0;
  std::vector<int> params;

  bool is_origin() const { return family == 0; }
  /// "ORIGIN", "B5(1,2)", "B1"
  std::string to_string() const;
  bool operator==(const FamilyTag&) const = default;
};

struct Alpha {
  Ket ket;
  FamilyTag tag;
};

/// How the psi states relate to the alpha states.
///   Fourier:  psi_0 ~ alpha_0, psi_1..n are phase-adjusted DFT rows over alpha_1..n
///   Identity: no alpha decomposition; psi_i stand alone (custom inputs)
enum class Mixing { Fourier, Identity };

struct StateSet {
  Dims dims;
  Construction construction = Construction::Custom;
  /// Builder arguments as given ({d} or the dims list); empty for EX1.
  std::vector<int> params;
  /// Set when the request was redirected to another builder.
  std::string notice;
  Mixing mixing = Mixing::Identity;
  std::vector<Alpha> alphas;
  std::vector<Ket> psis;

  std::size_t size() const { return psis.size(); }
  /// "t2 2,3,4", "ex1", "custom 2x2x2"
  std::string describe() const;
};

}  // namespace snl
