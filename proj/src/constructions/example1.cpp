#include <algorithm>
#include <map>

#include "snl/constructions/builders.hpp"

namespace snl {

namespace {

// alpha_1 .. alpha_27 in their published order.
const std::vector<std::vector<const char*>> kExample1 = {
    {"1000"},
    {"0001"},
    {"0010"},
    {"0100"},
    {"0110", "1001"},
    {"0101", "1010"},
    {"0011", "1100"},
    {"0120", "2001"},
    {"0201", "2010"},
    {"0021", "2100"},
    {"0002", "1110"},
    {"0020", "1101"},
    {"0200", "1011"},
    {"0210", "1002"},
    {"0102", "1020"},
    {"0012", "1200"},
    {"0220", "2002"},
    {"0202", "2020"},
    {"0022", "2200"},
    {"0111", "2000"},
    {"0112", "1120", "1201", "2011"},
    {"0121", "1210", "2101", "1012"},
    {"0122", "1220", "2201", "2012"},
    {"0211", "2110", "1102", "1021"},
    {"0212", "2120", "1202", "2021"},
    {"0221", "2210", "2102", "1022"},
    {"0222", "2220", "2202", "2022"},
};

std::vector<std::size_t> support_of(const Ket& k) {
  std::vector<std::size_t> out;
  for (const auto& t : k.terms()) out.push_back(t.index);
  return out;
}

}  // namespace

StateSet build_example1() {
  Dims dims({3, 3, 3, 3});
  // Family tags come from the d = 3 symmetric construction, which contains
  // the same states in a different order.
  StateSet reference = build_theorem3(3);
  std::map<std::vector<std::size_t>, FamilyTag> tag_of;
  for (const auto& a : reference.alphas) tag_of[support_of(a.ket)] = a.tag;

  std::vector<Alpha> alphas;
  alphas.push_back(reference.alphas.front());
  alphas.front().tag.construction = Construction::EX1;
  for (const auto& labels : kExample1) {
    ExactScalar amp = ExactScalar::inv_sqrt(static_cast<std::int64_t>(labels.size()));
    std::vector<std::pair<BasisLabel, ExactScalar>> terms;
    for (const char* l : labels) terms.emplace_back(BasisLabel::parse(l), amp);
    Ket ket(dims, terms);
    auto it = tag_of.find(support_of(ket));
    if (it == tag_of.end()) throw ValidationError("example state has no family: " + ket.to_string());
    FamilyTag tag = it->second;
    tag.construction = Construction::EX1;
    alphas.push_back({std::move(ket), std::move(tag)});
  }
  return assemble_fourier_set(dims, std::move(alphas), Construction::EX1, {});
}

}  // namespace snl
