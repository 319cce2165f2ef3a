#include "snl/constructions/builders.hpp"

#include <algorithm>
#include <unordered_map>

namespace snl {

IndexOutOfRange::IndexOutOfRange(const Dims& dims, std::vector<Offender> offenders)
    : ValidationError([&] {
        std::string msg = "labels out of range for " + dims.to_string() + ":";
        for (const auto& o : offenders) msg += " " + o.tag.to_string() + "|" + o.label.to_string() + ">";
        return msg;
      }()),
      offenders_(std::move(offenders)) {}

std::size_t lower_bound(const Dims& dims) {
  int smallest = *std::min_element(dims.values().begin(), dims.values().end());
  return dims.total() / static_cast<std::size_t>(smallest) + 1;
}

std::vector<Ket> fourier_mix(const std::vector<Ket>& alphas) {
  if (alphas.empty()) throw ValidationError("fourier_mix needs at least the origin state");
  const Dims& dims = alphas.front().dims();
  std::unordered_map<std::size_t, std::size_t> owner;
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    if (!(alphas[j].dims() == dims)) throw ValidationError("alpha states disagree on dimensions");
    for (const auto& t : alphas[j].terms()) {
      auto [it, fresh] = owner.emplace(t.index, j);
      if (!fresh) {
        throw ValidationError("alpha states " + std::to_string(it->second) + " and " +
                              std::to_string(j) + " share basis label " +
                              decode(t.index, dims).to_string() +
                              "; disjoint supports are required");
      }
    }
  }
  const auto n = static_cast<std::int64_t>(alphas.size() - 1);
  std::vector<Ket> out;
  out.reserve(alphas.size());
  out.push_back(alphas.front());
  for (std::int64_t i = 1; i <= n; ++i) {
    std::vector<Ket::Term> terms;
    for (std::int64_t j = 1; j <= n; ++j) {
      ExactScalar coeff(Rational(1), n, n, (i * j) % n);
      for (const auto& t : alphas[static_cast<std::size_t>(j)].terms()) {
        terms.push_back({t.index, coeff * t.amplitude});
      }
    }
    out.emplace_back(dims, std::move(terms));
  }
  return out;
}

namespace {

class Builder {
 public:
  Builder(Dims dims, Construction c) : dims_(std::move(dims)), construction_(c) {}

  void add(int family, std::vector<int> params, std::vector<std::vector<int>> labels) {
    Spec spec{FamilyTag{construction_, family, std::move(params)}, {}};
    for (auto& l : labels) spec.labels.push_back(BasisLabel{std::move(l)});
    specs_.push_back(std::move(spec));
  }

  StateSet finish(std::vector<int> params, std::string notice = {}) {
    std::vector<IndexOutOfRange::Offender> bad;
    for (const auto& s : specs_) {
      for (const auto& l : s.labels) {
        for (std::size_t p = 0; p < dims_.parties(); ++p) {
          if (l.digits[p] >= dims_[p]) {
            bad.push_back({s.tag, l});
            break;
          }
        }
      }
    }
    if (!bad.empty()) throw IndexOutOfRange(dims_, std::move(bad));

    std::vector<Alpha> alphas;
    BasisLabel origin{std::vector<int>(dims_.parties(), 0)};
    alphas.push_back({Ket::basis(dims_, origin), FamilyTag{construction_, 0, {}}});
    for (const auto& s : specs_) {
      auto m = static_cast<std::int64_t>(s.labels.size());
      ExactScalar amp = ExactScalar::inv_sqrt(m);
      std::vector<std::pair<BasisLabel, ExactScalar>> terms;
      for (const auto& l : s.labels) terms.emplace_back(l, amp);
      alphas.push_back({Ket(dims_, terms), s.tag});
    }
    return assemble_fourier_set(dims_, std::move(alphas), construction_, std::move(params),
                                std::move(notice));
  }

  static StateSet assemble_fourier_set(Dims dims, std::vector<Alpha> alphas, Construction c,
                                       std::vector<int> params, std::string notice) {
    std::vector<Ket> kets;
    kets.reserve(alphas.size());
    for (const auto& a : alphas) kets.push_back(a.ket);
    StateSet out;
    out.dims = std::move(dims);
    out.construction = c;
    out.params = std::move(params);
    out.notice = std::move(notice);
    out.mixing = Mixing::Fourier;
    out.psis = fourier_mix(kets);
    out.alphas = std::move(alphas);
    return out;
  }

 private:
  struct Spec {
    FamilyTag tag;
    std::vector<BasisLabel> labels;
  };
  Dims dims_;
  Construction construction_;
  std::vector<Spec> specs_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

}  // namespace

StateSet assemble_fourier_set(Dims dims, std::vector<Alpha> alphas, Construction c,
                              std::vector<int> params) {
  return Builder::assemble_fourier_set(std::move(dims), std::move(alphas), c, std::move(params),
                                       {});
}

StateSet build_theorem1(int d) {
  require(d >= 2, "t1 needs d >= 2");
  Builder b(Dims({d, d, d}), Construction::T1);
  b.add(1, {}, {{1, 0, 0}});
  b.add(1, {}, {{0, 0, 1}});
  b.add(1, {}, {{0, 1, 0}});
  for (int i = 2; i <= d - 1; ++i) b.add(2, {i}, {{0, 0, i}, {i - 1, i - 1, 0}});
  for (int i = 2; i <= d - 1; ++i) b.add(3, {i}, {{0, i, 0}, {i - 1, 0, i - 1}});
  for (int i = 2; i <= d - 1; ++i) b.add(4, {i}, {{0, i - 1, i - 1}, {i, 0, 0}});
  for (int i = 1; i <= d - 1; ++i) {
    for (int j = 1; j <= d - 1; ++j) {
      if (i == j && i <= d - 2) continue;
      b.add(5, {i, j}, {{0, i, j}, {i, j, 0}, {j, 0, i}});
    }
  }
  return b.finish({d});
}

StateSet build_theorem2(int d1, int d2, int d3) {
  require(d1 >= 2 && d1 <= d2 && d2 <= d3, "t2 needs 2 <= d1 <= d2 <= d3");
  if (d1 == d3) {
    StateSet s = build_theorem1(d1);
    s.notice = "dims " + std::to_string(d1) + "," + std::to_string(d2) + "," +
               std::to_string(d3) + " are all equal; built t1 with d = " + std::to_string(d1);
    return s;
  }
  Builder b(Dims({d1, d2, d3}), Construction::T2);
  b.add(1, {}, {{1, 0, 0}});
  b.add(1, {}, {{0, 0, 1}});
  b.add(1, {}, {{0, 1, 0}});
  for (int i = 2; i <= d1; ++i) b.add(2, {i}, {{0, 0, i}, {i - 1, i - 1, 0}});
  for (int i = 2; i <= d1; ++i) b.add(3, {i}, {{0, i, 0}, {i - 1, 0, i - 1}});
  for (int i = d1 + 1; i <= d3 - 1; ++i) b.add(4, {i}, {{0, 0, i}});
  for (int i = d1 + 1; i <= d2 - 1; ++i) b.add(5, {i}, {{0, i, 0}});
  for (int i = 2; i <= d1 - 1; ++i) b.add(6, {i}, {{0, i - 1, i - 1}, {i, 0, 0}});
  for (int i = d1; i <= d2; ++i) b.add(7, {i}, {{0, i - 1, i - 1}});
  for (int i = 1; i <= d1 - 1; ++i) {
    for (int j = 1; j <= d1 - 1; ++j) {
      if (i == j) continue;
      b.add(8, {i, j}, {{0, i, j}, {i, j, 0}, {j, 0, i}});
    }
  }
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = d1; j <= d2 - 1; ++j) b.add(9, {i, j}, {{0, i, j}, {i, j, 0}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = d1; j <= d2 - 1; ++j) b.add(10, {i, j}, {{0, j, i}, {i, 0, j}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = d2; j <= d3 - 1; ++j) b.add(11, {i, j}, {{0, i, j}, {i, 0, j}});
  for (int i = d1; i <= d2 - 1; ++i)
    for (int j = d2; j <= d3 - 1; ++j) b.add(12, {i, j}, {{0, i, j}});
  for (int i = d1; i <= d2 - 1; ++i) {
    for (int j = d1; j <= d2 - 1; ++j) {
      if (i == j) continue;
      b.add(13, {i, j}, {{0, i, j}});
    }
  }
  return b.finish({d1, d2, d3});
}

StateSet build_theorem3(int d) {
  require(d >= 2, "t3 needs d >= 2");
  Builder b(Dims({d, d, d, d}), Construction::T3);
  b.add(1, {}, {{1, 0, 0, 0}});
  b.add(1, {}, {{0, 0, 0, 1}});
  b.add(1, {}, {{0, 0, 1, 0}});
  b.add(1, {}, {{0, 1, 0, 0}});
  for (int i = 1; i <= d - 1; ++i)
    for (int j = 1; j <= d - 1; ++j) b.add(2, {i, j}, {{0, j, i, 0}, {i, 0, 0, j}});
  for (int i = 1; i <= d - 1; ++i)
    for (int j = 1; j <= d - 1; ++j) b.add(3, {i, j}, {{0, i, 0, j}, {i, 0, j, 0}});
  for (int i = 1; i <= d - 1; ++i)
    for (int j = 1; j <= d - 1; ++j) b.add(4, {i, j}, {{0, 0, i, j}, {i, j, 0, 0}});
  for (int i = 2; i <= d - 1; ++i) b.add(5, {i}, {{0, 0, 0, i}, {i - 1, i - 1, i - 1, 0}});
  for (int i = 2; i <= d - 1; ++i) b.add(6, {i}, {{0, 0, i, 0}, {i - 1, i - 1, 0, i - 1}});
  for (int i = 2; i <= d - 1; ++i) b.add(7, {i}, {{0, i, 0, 0}, {i - 1, 0, i - 1, i - 1}});
  for (int i = 2; i <= d - 1; ++i) b.add(8, {i}, {{0, i - 1, i - 1, i - 1}, {i, 0, 0, 0}});
  for (int i = 1; i <= d - 1; ++i) {
    for (int j = 1; j <= d - 1; ++j) {
      for (int k = 1; k <= d - 1; ++k) {
        if (i == j && j == k && i <= d - 2) continue;
        b.add(9, {i, j, k}, {{0, i, j, k}, {i, j, k, 0}, {j, k, 0, i}, {k, 0, i, j}});
      }
    }
  }
  return b.finish({d});
}

StateSet build_theorem4(int d1, int d2, int d3, int d4) {
  require(d1 >= 2 && d1 <= d2 && d2 <= d3 && d3 <= d4, "t4 needs 2 <= d1 <= d2 <= d3 <= d4");
  if (d1 == d4) {
    StateSet s = build_theorem3(d1);
    s.notice = "dims are all equal to " + std::to_string(d1) + "; built t3 with d = " +
               std::to_string(d1);
    return s;
  }
  Builder b(Dims({d1, d2, d3, d4}), Construction::T4);
  b.add(1, {}, {{1, 0, 0, 0}});
  b.add(1, {}, {{0, 0, 0, 1}});
  b.add(1, {}, {{0, 0, 1, 0}});
  b.add(1, {}, {{0, 1, 0, 0}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = 1; j <= d2 - 1; ++j) b.add(2, {i, j}, {{0, j, i, 0}, {i, 0, 0, j}});
  for (int i = d1; i <= d2 - 1; ++i)
    for (int j = 1; j <= d2 - 1; ++j) b.add(3, {i, j}, {{0, j, i, 0}});
  for (int i = d2; i <= d3 - 1; ++i)
    for (int j = d1; j <= d2 - 1; ++j) b.add(4, {i, j}, {{0, j, i, 0}});
  for (int i = d2; i <= d3 - 1; ++i)
    for (int j = 1; j <= d1 - 1; ++j) b.add(5, {i, j}, {{0, j, i, 0}, {j, 0, 0, i}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = 1; j <= d3 - 1; ++j) b.add(6, {i, j}, {{0, i, 0, j}, {i, 0, j, 0}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = d3; j <= d4 - 1; ++j) b.add(7, {i, j}, {{0, i, 0, j}});
  for (int i = d1; i <= d2 - 1; ++i)
    for (int j = 1; j <= d4 - 1; ++j) b.add(8, {i, j}, {{0, i, 0, j}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = 1; j <= d2 - 1; ++j) b.add(9, {i, j}, {{0, 0, i, j}, {i, j, 0, 0}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = d2; j <= d4 - 1; ++j) b.add(10, {i, j}, {{0, 0, i, j}});
  for (int i = d1; i <= d3 - 1; ++i)
    for (int j = 1; j <= d4 - 1; ++j) b.add(11, {i, j}, {{0, 0, i, j}});
  for (int i = 2; i <= d1; ++i) b.add(12, {i}, {{0, 0, 0, i}, {i - 1, i - 1, i - 1, 0}});
  for (int i = 2; i <= d1; ++i) b.add(13, {i}, {{0, 0, i, 0}, {i - 1, i - 1, 0, i - 1}});
  for (int i = 2; i <= d1; ++i) b.add(14, {i}, {{0, i, 0, 0}, {i - 1, 0, i - 1, i - 1}});
  for (int i = d1 + 1; i <= d4 - 1; ++i) b.add(15, {i}, {{0, 0, 0, i}});
  for (int i = d1 + 1; i <= d3 - 1; ++i) b.add(16, {i}, {{0, 0, i, 0}});
  for (int i = d1 + 1; i <= d2 - 1; ++i) b.add(17, {i}, {{0, i, 0, 0}});
  for (int i = 2; i <= d1 - 1; ++i) b.add(18, {i}, {{0, i - 1, i - 1, i - 1}, {i, 0, 0, 0}});
  for (int i = d1; i <= d2; ++i) b.add(19, {i}, {{0, i - 1, i - 1, i - 1}});
  for (int i = 1; i <= d1 - 1; ++i) {
    for (int j = 1; j <= d1 - 1; ++j) {
      for (int k = 1; k <= d1 - 1; ++k) {
        if (i == j && j == k) continue;
        b.add(20, {i, j, k}, {{0, i, j, k}, {i, j, k, 0}, {j, k, 0, i}, {k, 0, i, j}});
      }
    }
  }
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = 1; j <= d1 - 1; ++j)
      for (int k = d1; k <= d2 - 1; ++k)
        b.add(21, {i, j, k}, {{0, i, j, k}, {i, j, k, 0}, {j, k, 0, i}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = d1; j <= d2 - 1; ++j)
      for (int k = 1; k <= d1 - 1; ++k)
        b.add(22, {i, j, k}, {{0, i, j, k}, {i, j, k, 0}, {k, 0, i, j}});
  for (int i = d1; i <= d2 - 1; ++i)
    for (int j = 1; j <= d1 - 1; ++j)
      for (int k = 1; k <= d1 - 1; ++k)
        b.add(23, {i, j, k}, {{0, i, j, k}, {j, k, 0, i}, {k, 0, i, j}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = 1; j <= d1 - 1; ++j)
      for (int k = d2; k <= d3 - 1; ++k)
        b.add(24, {i, j, k}, {{0, i, j, k}, {i, j, k, 0}, {i, 0, k, j}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = d2; j <= d3 - 1; ++j)
      for (int k = 1; k <= d1 - 1; ++k)
        b.add(25, {i, j, k}, {{0, i, j, k}, {k, 0, i, j}, {i, k, 0, j}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = 1; j <= d1 - 1; ++j)
      for (int k = d3; k <= d4 - 1; ++k)
        b.add(26, {i, j, k}, {{0, i, j, k}, {j, 0, i, k}, {i, j, 0, k}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = d1; j <= d2 - 1; ++j)
      for (int k = d3; k <= d4 - 1; ++k)
        b.add(27, {i, j, k}, {{0, i, j, k}, {i, 0, j, k}, {i, j, 0, k}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = d1; j <= d2 - 1; ++j)
      for (int k = d1; k <= d3 - 1; ++k) b.add(28, {i, j, k}, {{0, i, j, k}, {i, j, k, 0}});
  for (int i = d1; i <= d2 - 1; ++i)
    for (int j = d1; j <= d3 - 1; ++j)
      for (int k = 1; k <= d1 - 1; ++k) b.add(29, {i, j, k}, {{0, i, j, k}, {k, 0, i, j}});
  for (int i = d1; i <= d2 - 1; ++i)
    for (int j = 1; j <= d1 - 1; ++j)
      for (int k = d1; k <= d2 - 1; ++k) b.add(30, {i, j, k}, {{0, i, j, k}, {j, k, 0, i}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = d2; j <= d3 - 1; ++j)
      for (int k = d1; k <= d4 - 1; ++k) b.add(31, {i, j, k}, {{0, i, j, k}, {i, 0, j, k}});
  for (int i = d1; i <= d2 - 1; ++i)
    for (int j = 1; j <= d1 - 1; ++j)
      for (int k = d2; k <= d3 - 1; ++k) b.add(32, {i, j, k}, {{0, i, j, k}, {j, i, 0, k}});
  for (int i = 1; i <= d1 - 1; ++i)
    for (int j = d3; j <= d4 - 1; ++j) b.add(33, {i, j}, {{0, d2 - 1, i, j}, {i, 0, 0, j}});
  for (int i = d1; i <= d2 - 1; ++i)
    for (int j = d2; j <= d3 - 1; ++j)
      for (int k = d1; k <= d4 - 1; ++k) b.add(34, {i, j, k}, {{0, i, j, k}});
  for (int i = d1; i <= d2 - 2; ++i)
    for (int j = 1; j <= d1 - 1; ++j)
      for (int k = d3; k <= d4 - 1; ++k) b.add(35, {i, j, k}, {{0, i, j, k}});
  // k runs to d4 - 1 rather than d2 - 1; the narrower range leaves |0ijk>
  // with k >= d2 uncovered and the set one short per such label.
  for (int i = d1; i <= d2 - 1; ++i) {
    for (int j = d1; j <= d2 - 1; ++j) {
      for (int k = d1; k <= d4 - 1; ++k) {
        if (i == j && j == k) continue;
        b.add(36, {i, j, k}, {{0, i, j, k}});
      }
    }
  }
  return b.finish({d1, d2, d3, d4});
}

StateSet build(Construction c, const std::vector<int>& args) {
  auto arity = [&](std::size_t n) {
    if (args.size() != n) {
      throw ValidationError(construction_name(c) + " takes " + std::to_string(n) +
                            " parameter(s), got " + std::to_string(args.size()));
    }
  };
  switch (c) {
    case Construction::T1: arity(1); return build_theorem1(args[0]);
    case Construction::T2: arity(3); return build_theorem2(args[0], args[1], args[2]);
    case Construction::EX1: arity(0); return build_example1();
    case Construction::T3: arity(1); return build_theorem3(args[0]);
    case Construction::T4: arity(4); return build_theorem4(args[0], args[1], args[2], args[3]);
    case Construction::Custom: break;
  }
  throw ValidationError("custom sets are loaded from a file, not built");
}

std::map<int, int> family_counts(const StateSet& s) {
  std::map<int, int> out;
  for (const auto& a : s.alphas) {
    if (!a.tag.is_origin()) ++out[a.tag.family];
  }
  return out;
}

Ket stopper_state(const Dims& dims) {
  ExactScalar amp = ExactScalar::inv_sqrt(static_cast<std::int64_t>(dims.total()));
  std::vector<Ket::Term> terms;
  terms.reserve(dims.total());
  for (std::size_t k = 0; k < dims.total(); ++k) terms.push_back({k, amp});
  return Ket(dims, std::move(terms));
}

}  // namespace snl
