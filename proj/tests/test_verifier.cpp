#include <gtest/gtest.h>

#include "oracle.hpp"
#include "snl/constructions/builders.hpp"
#include "snl/verifier/triviality.hpp"

using namespace snl;

namespace {

StateSet custom(Dims dims, std::vector<Ket> psis) {
  StateSet s;
  s.dims = std::move(dims);
  s.construction = Construction::Custom;
  s.mixing = Mixing::Identity;
  s.psis = std::move(psis);
  return s;
}

StateSet product_basis_222() {
  Dims dims({2, 2, 2});
  std::vector<Ket> psis;
  for (std::size_t x = 0; x < dims.total(); ++x) psis.push_back(Ket::basis(dims, decode(x, dims)));
  return custom(dims, psis);
}

StateSet ghz_pair() {
  Dims dims({2, 2, 2});
  return custom(dims, {Ket::basis(dims, BasisLabel{{0, 0, 0}}),
                       Ket::basis(dims, BasisLabel{{1, 1, 1}})});
}

// Random kets with exact amplitudes w_6^k / sqrt(m) on m random labels.
StateSet random_set(oracle::Rng& rng, const std::vector<int>& d, int count) {
  Dims dims(d);
  std::vector<Ket> psis;
  for (int n = 0; n < count; ++n) {
    std::vector<int> idx(dims.total());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
    rng.shuffle(idx);
    int m = rng.uniform(1, 4);
    std::vector<Ket::Term> terms;
    for (int k = 0; k < m; ++k) {
      terms.push_back({static_cast<std::size_t>(idx[k]), ExactScalar(Rational(1), m, 6, rng.uniform(0, 5))});
    }
    psis.emplace_back(dims, terms);
  }
  return custom(dims, psis);
}

void expect_matches_brute(const StateSet& s, const MeasuredSet& m) {
  ConstraintSystem c = assemble(s, m);
  Eigen::MatrixXcd ref = oracle::brute_constraints(oracle::dense(s.psis), s.dims.values(), m.parties());
  ASSERT_EQ(static_cast<Eigen::Index>(c.rows()), ref.rows());
  ASSERT_EQ(static_cast<Eigen::Index>(c.cols()), ref.cols());
  for (std::size_t r = 0; r < c.rows(); ++r) {
    for (std::size_t k = 0; k < c.cols(); ++k) {
      EXPECT_NEAR(std::abs(c.row(r)[k] - ref(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k))),
                  0.0, 1e-13);
    }
  }
}

}  // namespace

TEST(Constraints, MatchBruteForceOnShippedSets) {
  for (const StateSet& s : {build_theorem1(2), build_theorem1(3), build_theorem2(2, 3, 3)}) {
    for (int p = 0; p < 3; ++p) expect_matches_brute(s, MeasuredSet::complement_of(p, s.dims));
    expect_matches_brute(s, MeasuredSet({1}, s.dims));
  }
}

TEST(Constraints, PropertyMatchBruteForceOnRandomSets) {
  oracle::Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> d = {rng.uniform(2, 3), rng.uniform(2, 3), rng.uniform(2, 3)};
    StateSet s = random_set(rng, d, rng.uniform(2, 5));
    std::vector<int> parties = {rng.uniform(0, 2)};
    if (rng.uniform(0, 1)) parties = MeasuredSet::complement_of(parties[0], s.dims).parties();
    MeasuredSet m(parties, s.dims);
    expect_matches_brute(s, m);
    TrivialityVerdict v = check_triviality(s, m);
    EXPECT_EQ(v.nullspace_dim,
              oracle::null_dim(oracle::brute_constraints(oracle::dense(s.psis), d, parties)));
  }
}

TEST(Constraints, RowPairsAndIdentityResidual) {
  StateSet s = build_theorem1(2);
  ConstraintSystem c = assemble(s, MeasuredSet::complement_of(0, s.dims));
  EXPECT_EQ(c.row_pair(0), std::make_pair(std::size_t{0}, std::size_t{1}));
  EXPECT_EQ(c.row_pair(c.rows() - 1), std::make_pair(s.size() - 1, s.size() - 2));
  // orthogonal states: the identity satisfies every constraint
  EXPECT_LT(identity_residual(c), 1e-13);
}

TEST(Verifier, NegativeControls) {
  StateSet pb = product_basis_222();
  StateSet pair = ghz_pair();
  for (int p = 0; p < 3; ++p) {
    MeasuredSet m = MeasuredSet::complement_of(p, pb.dims);
    TrivialityVerdict a = check_triviality(pb, m);
    EXPECT_EQ(a.verdict, Verdict::NonTrivial);
    EXPECT_EQ(a.nullspace_dim, oracle::null_dim(oracle::brute_constraints(
                                   oracle::dense(pb.psis), pb.dims.values(), m.parties())));
    EXPECT_EQ(a.nullspace_dim, 4u);
    TrivialityVerdict b = check_triviality(pair, m);
    EXPECT_EQ(b.verdict, Verdict::NonTrivial);
    EXPECT_EQ(b.nullspace_dim, oracle::null_dim(oracle::brute_constraints(
                                   oracle::dense(pair.psis), pair.dims.values(), m.parties())));
  }
}

TEST(Verifier, TrivialOnShippedSets) {
  for (const StateSet& s : {build_theorem1(3), build_theorem2(2, 3, 4), build_theorem3(2)}) {
    StrongestReport r = verify_strongest(s);
    EXPECT_EQ(r.overall, Verdict::Trivial) << s.describe();
    for (const auto& v : r.parties) {
      EXPECT_EQ(v.nullspace_dim, 1u);
      EXPECT_EQ(v.hermitian_nullspace_dim, 1u);
      EXPECT_GE(v.identity_overlap, 1.0 - kOverlapTolerance);
      EXPECT_GE(v.spectral_gap, kGapThreshold);
    }
  }
}

TEST(Verifier, SvdAndGramAgree) {
  StateSet s = build_theorem1(3);
  for (int p = 0; p < 3; ++p) {
    ConstraintSystem c = assemble(s, MeasuredSet::complement_of(p, s.dims));
    NullspaceResult a = solution_space(c, kDefaultRelTol, SolverMethod::Svd);
    NullspaceResult b = solution_space(c, kDefaultRelTol, SolverMethod::Gram);
    EXPECT_EQ(a.method, SolverMethod::Svd);
    EXPECT_EQ(b.method, SolverMethod::Gram);
    ASSERT_EQ(a.dim(), b.dim());
    // same subspace: the projections agree
    Eigen::MatrixXcd pa = a.basis * a.basis.adjoint();
    Eigen::MatrixXcd pb = b.basis * b.basis.adjoint();
    EXPECT_LT((pa - pb).norm(), 1e-8);
    EXPECT_NEAR(a.sigma_max, b.sigma_max, 1e-9 * a.sigma_max);
  }
  StateSet pb = product_basis_222();
  ConstraintSystem c = assemble(pb, MeasuredSet::complement_of(1, pb.dims));
  EXPECT_EQ(solution_space(c, kDefaultRelTol, SolverMethod::Svd).dim(),
            solution_space(c, kDefaultRelTol, SolverMethod::Gram).dim());
}

TEST(Verifier, NullVectorsSatisfyConstraints) {
  StateSet s = product_basis_222();
  ConstraintSystem c = assemble(s, MeasuredSet::complement_of(0, s.dims));
  NullspaceResult n = solution_space(c, kDefaultRelTol);
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> A(
      c.matrix.data(), static_cast<Eigen::Index>(c.rows()), static_cast<Eigen::Index>(c.cols()));
  EXPECT_LT((A * n.basis).norm(), 1e-12);
  EXPECT_LT((n.basis.adjoint() * n.basis - Eigen::MatrixXcd::Identity(n.dim(), n.dim())).norm(),
            1e-12);
}

TEST(Verifier, ZeroMatrixKeepsEverything) {
  StateSet s = ghz_pair();
  ConstraintSystem c = assemble(s, MeasuredSet::complement_of(0, s.dims));
  NullspaceResult n = solution_space(c, kDefaultRelTol);
  EXPECT_EQ(n.dim(), c.cols());
  EXPECT_TRUE(std::isinf(n.gap()));
}

TEST(Verifier, SizeLimit) {
  StateSet s = build_theorem1(10);
  EXPECT_THROW(check_triviality(s, MeasuredSet::complement_of(0, s.dims)), SizeLimitError);
  EXPECT_EQ(check_single_party(s, 0).dim, 10u);
  EXPECT_THROW(solution_space(ConstraintSystem{}, 0.0), ValidationError);
}

TEST(Verifier, Combine) {
  EXPECT_EQ(combine({Verdict::Trivial, Verdict::Trivial}), Verdict::Trivial);
  EXPECT_EQ(combine({Verdict::Trivial, Verdict::Inconclusive}), Verdict::Inconclusive);
  EXPECT_EQ(combine({Verdict::Inconclusive, Verdict::NonTrivial}), Verdict::NonTrivial);
}
