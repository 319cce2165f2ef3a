#include "snl/constructions/state_set.hpp"

#include <sstream>

namespace snl {

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::T1: return "t1";
    case Construction::T2: return "t2";
    case Construction::EX1: return "ex1";
    case Construction::T3: return "t3";
    case Construction::T4: return "t4";
    case Construction::Custom: return "custom";
  }
  return "custom";
}

Construction parse_construction(const std::string& name) {
  if (name == "t1") return Construction::T1;
  if (name == "t2") return Construction::T2;
  if (name == "ex1") return Construction::EX1;
  if (name == "t3") return Construction::T3;
  if (name == "t4") return Construction::T4;
  if (name == "custom") return Construction::Custom;
  throw ValidationError("unknown construction '" + name + "' (expected t1, t2, ex1, t3, t4)");
}

std::string FamilyTag::to_string() const {
  if (is_origin()) return "ORIGIN";
  std::ostringstream os;
  os << 'B' << family;
  if (!params.empty()) {
    os << '(';
    for (std::size_t k = 0; k < params.size(); ++k) os << (k ? "," : "") << params[k];
    os << ')';
  }
  return os.str();
}

std::string StateSet::describe() const {
  std::ostringstream os;
  os << construction_name(construction);
  if (construction == Construction::Custom) {
    os << ' ' << dims.to_string();
  } else if (!params.empty()) {
    os << ' ';
    for (std::size_t k = 0; k < params.size(); ++k) os << (k ? "," : "") << params[k];
  }
  return os.str();
}

}  // namespace snl
