#include <gtest/gtest.h>

#include "oracle.hpp"
#include "snl/constructions/builders.hpp"
#include "snl/tensor/ket.hpp"

using namespace snl;

TEST(Dims, RejectsBadShapes) {
  EXPECT_THROW(Dims({3}), ValidationError);
  EXPECT_THROW(Dims({2, 1}), ValidationError);
  EXPECT_EQ(Dims({2, 3, 4}).total(), 24u);
  EXPECT_EQ(Dims({2, 3, 4}).to_string(), "2x3x4");
}

TEST(Dims, EncodeKnownValues) {
  // 3*16 + 3*4 + 1
  EXPECT_EQ(encode(BasisLabel{{3, 3, 1}}, Dims({4, 4, 4})), 61u);
  // 1*12 + 2*4 + 3
  EXPECT_EQ(encode(BasisLabel{{1, 2, 3}}, Dims({2, 3, 4})), 23u);
  EXPECT_EQ(decode(23, Dims({2, 3, 4})), (BasisLabel{{1, 2, 3}}));
  EXPECT_THROW(encode(BasisLabel{{2, 0, 0}}, Dims({2, 3, 4})), ValidationError);
  EXPECT_THROW(encode(BasisLabel{{0, 0}}, Dims({2, 3, 4})), ValidationError);
}

TEST(Dims, LabelText) {
  EXPECT_EQ(BasisLabel::parse("0021"), (BasisLabel{{0, 0, 2, 1}}));
  EXPECT_EQ((BasisLabel{{0, 11, 2}}).to_string(), "0,11,2");
  EXPECT_EQ(BasisLabel::parse("0,11,2"), (BasisLabel{{0, 11, 2}}));
  EXPECT_THROW(BasisLabel::parse("0a1"), ValidationError);
}

TEST(MeasuredSet, SplitsAndJoins) {
  Dims dims({2, 3, 4});
  MeasuredSet m({0, 2}, dims);
  EXPECT_EQ(m.measured_dim(), 8u);
  EXPECT_EQ(m.kept_dim(), 3u);
  EXPECT_EQ(m.kept(), std::vector<int>{1});
  EXPECT_EQ(m.kept_index(23), 2u);
  EXPECT_EQ(m.measured_index(23), 7u);
  EXPECT_EQ(m.join(2, 7), 23u);
  EXPECT_EQ(m.measured_label(7), (BasisLabel{{1, 3}}));
  EXPECT_EQ(MeasuredSet::complement_of(1, dims), m);
  EXPECT_THROW(MeasuredSet({0, 0}, dims), ValidationError);
  EXPECT_THROW(MeasuredSet({3}, dims), ValidationError);
}

TEST(MeasuredSet, PropertyRoundTrip) {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> d(static_cast<std::size_t>(rng.uniform(2, 4)));
    for (auto& x : d) x = rng.uniform(2, 5);
    Dims dims(d);
    std::vector<int> parties;
    for (int p = 0; p < static_cast<int>(d.size()); ++p) {
      if (rng.uniform(0, 1)) parties.push_back(p);
    }
    if (parties.empty() || parties.size() == d.size()) parties = {0};
    MeasuredSet m(parties, dims);
    std::size_t flat = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(dims.total()) - 1));
    auto digits = oracle::digits_of(flat, d);
    EXPECT_EQ(decode(flat, dims).digits, digits);
    EXPECT_EQ(encode(decode(flat, dims), dims), flat);
    EXPECT_EQ(m.measured_index(flat), oracle::sub_index(digits, d, parties));
    EXPECT_EQ(m.kept_index(flat), oracle::sub_index(digits, d, m.kept()));
    EXPECT_EQ(m.join(m.kept_index(flat), m.measured_index(flat)), flat);
  }
}

TEST(ExactScalar, Canonical) {
  ExactScalar neg(Rational(-1, 2));
  EXPECT_EQ(neg.rational(), Rational(1, 2));
  EXPECT_EQ(neg.phase_order(), 2);
  EXPECT_EQ(neg.phase_power(), 1);

  ExactScalar r8 = ExactScalar::inv_sqrt(8);
  EXPECT_EQ(r8.rational(), Rational(1, 2));
  EXPECT_EQ(r8.inv_sqrt_arg(), 2);

  EXPECT_EQ(ExactScalar::root_of_unity(4, 2), ExactScalar::root_of_unity(2, 1));
  EXPECT_EQ(ExactScalar::root_of_unity(6, 3), ExactScalar(Rational(-1)));
  EXPECT_EQ(ExactScalar::root_of_unity(4, 4), ExactScalar::one());
  EXPECT_EQ(ExactScalar::root_of_unity(5, -1), ExactScalar::root_of_unity(5, 4));
  EXPECT_TRUE(ExactScalar().is_zero());
  EXPECT_THROW(ExactScalar(Rational(1), 0), ValidationError);
  EXPECT_THROW(ExactScalar(Rational(1), 1, 0), ValidationError);
}

TEST(ExactScalar, Arithmetic) {
  ExactScalar a(Rational(3, 5), 7, 5, 2);
  EXPECT_EQ(a * a.inverse(), ExactScalar::one());
  EXPECT_EQ(a.abs2(), Rational(9, 175));
  EXPECT_EQ(a * a.conj(), ExactScalar(a.abs2()));
  EXPECT_EQ(ExactScalar::inv_sqrt(2) * ExactScalar::inv_sqrt(2), ExactScalar(Rational(1, 2)));
  EXPECT_EQ(ExactScalar::inv_sqrt(2) * ExactScalar::inv_sqrt(3), ExactScalar::inv_sqrt(6));
  EXPECT_EQ(ExactScalar::root_of_unity(4, 1).to_complex(), std::complex<double>(0.0, 1.0));
  EXPECT_EQ((-ExactScalar::one()).to_complex(), std::complex<double>(-1.0, 0.0));
  EXPECT_EQ(ExactScalar(Rational(1, 2), 3, 4, 1).to_string(), "1/2/sqrt(3)*w4^1");
}

TEST(ExactScalar, PropertyMatchesComplexArithmetic) {
  oracle::Rng rng(5);
  auto random_scalar = [&] {
    return ExactScalar(Rational(rng.uniform(-9, 9), static_cast<unsigned long>(rng.uniform(1, 9))),
                       rng.uniform(1, 12), rng.uniform(1, 12), rng.uniform(-20, 20));
  };
  for (int trial = 0; trial < 300; ++trial) {
    ExactScalar a = random_scalar();
    ExactScalar b = random_scalar();
    auto ca = a.to_complex();
    auto cb = b.to_complex();
    EXPECT_NEAR(std::abs((a * b).to_complex() - ca * cb), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(a.conj().to_complex() - std::conj(ca)), 0.0, 1e-12);
    EXPECT_NEAR(a.abs2().get_d(), std::norm(ca), 1e-12);
    // canonical form is unique: rebuilding from the parts gives equality
    EXPECT_EQ(a, ExactScalar(a.rational(), a.inv_sqrt_arg(), a.phase_order(), a.phase_power()));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
      EXPECT_NEAR(std::abs((a / b).to_complex() - ca / cb), 0.0, 1e-9 * (1.0 + std::abs(ca / cb)));
    }
  }
}

TEST(ExactSum, ClassesAndLimits) {
  ExactSum s;
  s.add(ExactScalar::one());
  s.add(ExactScalar::root_of_unity(2, 1));
  EXPECT_TRUE(s.certainly_zero());

  ExactSum t;
  t.add(ExactScalar::inv_sqrt(2));
  t.add(ExactScalar::inv_sqrt(2));
  ASSERT_TRUE(t.as_scalar().has_value());
  EXPECT_EQ(*t.as_scalar(), ExactScalar(Rational(2), 2));
  EXPECT_FALSE(t.as_rational().has_value());

  // 1 + w3 + w3^2 = 0 is a cancellation across classes: not detected.
  ExactSum u;
  for (int k = 0; k < 3; ++k) u.add(ExactScalar::root_of_unity(3, k));
  EXPECT_FALSE(u.certainly_zero());
  EXPECT_EQ(u.classes(), 3u);
  EXPECT_NEAR(std::abs(u.to_complex()), 0.0, 1e-15);
  EXPECT_FALSE(u.as_scalar().has_value());

  ExactSum r;
  r.add(ExactScalar(Rational(3, 4)));
  r.add(ExactScalar(Rational(-1, 4)));
  EXPECT_EQ(*r.as_rational(), Rational(1, 2));
}

TEST(Ket, Validation) {
  Dims dims({2, 2});
  EXPECT_THROW(Ket(dims, {{BasisLabel{{0, 0}}, ExactScalar::inv_sqrt(2)}}), ValidationError);
  EXPECT_THROW(Ket(dims, {{BasisLabel{{0, 0}}, ExactScalar::inv_sqrt(2)},
                          {BasisLabel{{0, 0}}, ExactScalar::inv_sqrt(2)}}),
               ValidationError);
  EXPECT_THROW(Ket(dims, {{BasisLabel{{0, 2}}, ExactScalar::one()}}), ValidationError);
  Ket k(dims, {{BasisLabel{{1, 1}}, ExactScalar::inv_sqrt(2)},
               {BasisLabel{{0, 0}}, ExactScalar::inv_sqrt(2)}});
  EXPECT_EQ(k.terms().front().index, 0u);
  EXPECT_EQ(k.amplitude(BasisLabel{{1, 1}}), ExactScalar::inv_sqrt(2));
  EXPECT_TRUE(k.amplitude(BasisLabel{{0, 1}}).is_zero());
}

TEST(Ket, SchmidtRank) {
  Dims two({2, 2});
  Ket bell(two, {{BasisLabel{{0, 0}}, ExactScalar::inv_sqrt(2)},
                 {BasisLabel{{1, 1}}, ExactScalar::inv_sqrt(2)}});
  EXPECT_EQ(schmidt_rank(bell, MeasuredSet({1}, two)), 2);
  Ket prod(two, {{BasisLabel{{0, 0}}, ExactScalar::inv_sqrt(2)},
                 {BasisLabel{{0, 1}}, ExactScalar::inv_sqrt(2)}});
  EXPECT_EQ(schmidt_rank(prod, MeasuredSet({1}, two)), 1);

  Dims three({2, 2, 2});
  Ket ghz(three, {{BasisLabel{{0, 0, 0}}, ExactScalar::inv_sqrt(2)},
                  {BasisLabel{{1, 1, 1}}, ExactScalar::inv_sqrt(2)}});
  for (int p = 0; p < 3; ++p) EXPECT_EQ(schmidt_rank(ghz, MeasuredSet::complement_of(p, three)), 2);
  EXPECT_EQ(reshape(ghz, MeasuredSet({1, 2}, three)).rows(), 2);
  EXPECT_EQ(reshape(ghz, MeasuredSet({1, 2}, three)).cols(), 4);
}

TEST(Ket, PermuteParties) {
  Dims dims({2, 3, 4});
  Ket k = Ket::basis(dims, BasisLabel{{0, 1, 2}});
  Ket p = k.permute_parties({2, 0, 1});
  EXPECT_EQ(p.dims(), Dims({3, 4, 2}));
  EXPECT_EQ(decode(p.terms().front().index, p.dims()), (BasisLabel{{1, 2, 0}}));
  EXPECT_THROW(k.permute_parties({0, 0, 1}), ValidationError);
}

TEST(Ket, PropertyExactInnerMatchesFloat) {
  oracle::Rng rng(23);
  Dims dims({2, 3, 3});
  for (int trial = 0; trial < 100; ++trial) {
    auto random_ket = [&] {
      std::vector<int> idx(dims.total());
      for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
      rng.shuffle(idx);
      int m = rng.uniform(1, 6);
      std::vector<Ket::Term> terms;
      for (int k = 0; k < m; ++k) {
        terms.push_back({static_cast<std::size_t>(idx[k]),
                         ExactScalar(Rational(1), m, 6, rng.uniform(0, 5))});
      }
      return Ket(dims, terms);
    };
    Ket a = random_ket();
    Ket b = random_ket();
    EXPECT_NEAR(std::abs(exact_inner(a, b).to_complex() - inner(a, b)), 0.0, 1e-12);
    std::complex<double> direct(0.0, 0.0);
    for (std::size_t x = 0; x < dims.total(); ++x) direct += std::conj(a.dense()[x]) * b.dense()[x];
    EXPECT_NEAR(std::abs(direct - inner(a, b)), 0.0, 1e-12);
  }
}

TEST(FourierMix, QuarterTurnCoefficients) {
  Dims dims({2, 2, 2});
  std::vector<Ket> alphas;
  for (int x = 0; x < 5; ++x) alphas.push_back(Ket::basis(dims, decode(static_cast<std::size_t>(x), dims)));
  auto psis = fourier_mix(alphas);
  ASSERT_EQ(psis.size(), 5u);
  const std::complex<double> expect[4] = {{0.0, 0.5}, {-0.5, 0.0}, {0.0, -0.5}, {0.5, 0.0}};
  for (int j = 1; j <= 4; ++j) {
    EXPECT_EQ(psis[1].dense()[static_cast<std::size_t>(j)], expect[j - 1]);
  }
  EXPECT_EQ(psis[1].amplitude(std::size_t{1}), ExactScalar(Rational(1, 2), 1, 4, 1));
  EXPECT_EQ(psis[0].dense()[0], std::complex<double>(1.0, 0.0));
  std::vector<Ket> overlapping = {alphas[0], alphas[1], alphas[1]};
  EXPECT_THROW(fourier_mix(overlapping), ValidationError);
}
