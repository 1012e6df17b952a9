#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "pspec/linalg.hpp"

using namespace pspec;

namespace {

const ComplexMatrix kNil{{0.0, 1.0}, {0.0, 0.0}};

double tol_for(const ComplexMatrix& a, double rel) { return rel * (1.0 + operator_norm(a)); }

}  // namespace

TEST(Arithmetic, IdentityZeroAndNilpotent) {
  const auto i2 = ComplexMatrix::identity(2);
  EXPECT_EQ(mul(i2, i2), i2);
  const ComplexMatrix a{{1.0, kI}, {2.0, -3.0}};
  EXPECT_EQ(add(ComplexMatrix(2), a), a);
  EXPECT_EQ(mul(kNil, kNil), ComplexMatrix(2));
  EXPECT_EQ(sub(a, a), ComplexMatrix(2));
}

TEST(Arithmetic, DimensionMismatchRejected) {
  EXPECT_THROW(add(ComplexMatrix(2), ComplexMatrix(3)), dimension_error);
  EXPECT_THROW(mul(ComplexMatrix(2), ComplexMatrix(3)), dimension_error);
  EXPECT_THROW(inner_product(ComplexVector(2), ComplexVector(3)), dimension_error);
  EXPECT_THROW(rank_one(ComplexVector(2), ComplexVector(3)), dimension_error);
}

TEST(Arithmetic, NonFiniteEntriesRejected) {
  EXPECT_THROW((ComplexMatrix{{std::nan(""), 0.0}, {0.0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(ComplexMatrix(1, {cplx(INFINITY, 0.0)}), std::invalid_argument);
  EXPECT_THROW(ComplexMatrix(0), dimension_error);
  EXPECT_THROW(ComplexMatrix(2, std::vector<cplx>(3)), dimension_error);
}

TEST(Arithmetic, ProductMatchesNaiveLoop) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = random_ginibre(7, seed);
    const auto b = random_ginibre(7, seed + 100);
    EXPECT_LE(oracle::max_entry_diff(a * b, oracle::naive_mul(a, b)), 1e-13);
  }
}

TEST(Adjoint, Definitions) {
  const ComplexMatrix a{{kI, 1.0}, {0.0, 0.0}};
  const ComplexMatrix expected{{-kI, 0.0}, {1.0, 0.0}};
  EXPECT_EQ(adjoint(a), expected);
  const auto g = random_ginibre(5, 3);
  EXPECT_EQ(transpose(transpose(g)), g);
  EXPECT_EQ(conjugate(ComplexMatrix::identity(3)), ComplexMatrix::identity(3));
  EXPECT_EQ(adjoint(g), conjugate(transpose(g)));
}

TEST(Trace, Basics) {
  EXPECT_EQ(trace(ComplexMatrix::identity(3)), cplx(3.0));
  EXPECT_EQ(trace(kNil), cplx(0.0));
  const auto x = random_unit_vector(4, 7);
  const auto y = random_unit_vector(4, 8);
  EXPECT_NEAR(std::abs(trace(rank_one(x, x)) - inner_product(x, x)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(trace(rank_one(x, y)) - inner_product(x, y)), 0.0, 1e-15);
}

TEST(Trace, CyclicProperty) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = random_ginibre(6, 2 * seed);
    const auto b = random_ginibre(6, 2 * seed + 1);
    EXPECT_LE(std::abs(trace(a * b) - trace(b * a)), 1e-10 * (1.0 + operator_norm(a) * operator_norm(b)));
  }
}

TEST(InnerProduct, Basics) {
  const auto e1 = ComplexVector::basis(2, 0);
  const auto e2 = ComplexVector::basis(2, 1);
  EXPECT_EQ(inner_product(e1, e1), cplx(1.0));
  EXPECT_EQ(inner_product(e1, e2), cplx(0.0));
  EXPECT_EQ(inner_product(ComplexVector{1.0, kI}, ComplexVector{1.0, kI}), cplx(2.0));
  // Conjugate-linear in the second slot.
  EXPECT_EQ(inner_product(e1, kI * e1), -kI);
}

TEST(RankOne, ProjectionAndAction) {
  const ComplexMatrix p = rank_one(ComplexVector::basis(2, 0), ComplexVector::basis(2, 0));
  EXPECT_EQ(p, (ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}));

  const auto x = random_unit_vector(5, 11);
  const auto q = rank_one(x, x);
  EXPECT_TRUE(is_hermitian(q, 1e-14));
  EXPECT_LE(oracle::max_entry_diff(q * q, q), 1e-14);

  // M z = <z, y> x
  const auto y = random_unit_vector(5, 12);
  const auto z = random_unit_vector(5, 13);
  const auto m = rank_one(x, y);
  const auto mz = m * z;
  const cplx c = inner_product(z, y);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_LE(std::abs(mz[i] - c * x[i]), 1e-14);
}

TEST(SingularValues, DiagonalAndSingular) {
  const auto s = singular_values(ComplexMatrix::diagonal({3.0, 1.0}));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s[0], 1.0);
  EXPECT_DOUBLE_EQ(s[1], 3.0);
  EXPECT_EQ(smallest_singular_value(kNil), 0.0);
  EXPECT_EQ(smallest_singular_value(ComplexMatrix(3)), 0.0);
}

TEST(SingularValues, JordanClosedForm) {
  for (double r : {0.0, 0.1, 0.33, 0.5, 0.8660254, 1.0, 2.5, 10.0}) {
    const ComplexMatrix m{{r, -1.0}, {0.0, r}};
    EXPECT_NEAR(smallest_singular_value(m), oracle::jordan_smin(r), 1e-10 * (1.0 + operator_norm(m))) << r;
  }
}

TEST(SingularValues, MatchTwoByTwoOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto a = random_ginibre(2, seed);
    const auto s = singular_values(a);
    const auto ref = oracle::singular_values_2x2(a);
    EXPECT_NEAR(s[0], ref[0], 1e-12 * (1.0 + ref[1]));
    EXPECT_NEAR(s[1], ref[1], 1e-12 * (1.0 + ref[1]));
  }
}

TEST(SingularValues, NormAgreesWithPowerIteration) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto a = random_ginibre(6, seed + 40);
    EXPECT_NEAR(operator_norm(a), oracle::power_norm(a), 1e-8 * operator_norm(a));
  }
}

TEST(SingularValues, UnitaryTransposeAdjointInvariance) {
  for (std::size_t n : {2u, 4u, 8u, 16u}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto a = random_ginibre(n, 1000 * n + seed);
      const auto u = random_haar_unitary(n, 5000 * n + seed);
      const auto s = singular_values(a);
      const double tol = tol_for(a, 1e-10);
      const auto su = singular_values(u * a * adjoint(u));
      const auto st = singular_values(transpose(a));
      const auto sa = singular_values(adjoint(a));
      for (std::size_t k = 0; k < n; ++k) {
        EXPECT_NEAR(su[k], s[k], tol);
        EXPECT_NEAR(st[k], s[k], tol);
        EXPECT_NEAR(sa[k], s[k], tol);
      }
    }
  }
}

TEST(SingularTriplet, DiagonalCase) {
  const auto t = min_singular_triplet(ComplexMatrix::diagonal({3.0, 1.0}));
  EXPECT_DOUBLE_EQ(t.s, 1.0);
  EXPECT_NEAR(std::abs(t.u[1]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(t.v[1]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(t.u[0]), 0.0, 1e-15);
}

TEST(SingularTriplet, UnitaryHasUnitSingularValues) {
  const auto u = random_haar_unitary(6, 17);
  const auto t = min_singular_triplet(u);
  EXPECT_NEAR(t.s, 1.0, 1e-12);
  const auto uv = u * t.v;
  for (std::size_t i = 0; i < 6; ++i) EXPECT_LE(std::abs(uv[i] - t.u[i]), 1e-12);
}

TEST(SingularTriplet, ResidualContractOnGinibreCorpus) {
  for (std::size_t n : {2u, 4u, 8u, 16u, 32u}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto a = random_ginibre(n, 77 * n + seed);
      const auto t = min_singular_triplet(a);
      const auto av = a * t.v;
      double res = 0.0;
      for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(av[i] - t.s * t.u[i]));
      ASSERT_LE(res, 1e-8 * (1.0 + operator_norm(a))) << "n=" << n << " seed=" << seed;
      ASSERT_NEAR(t.u.norm(), 1.0, 1e-12);
      ASSERT_NEAR(t.v.norm(), 1.0, 1e-12);
      ASSERT_NEAR(t.s, singular_values(a).front(), 1e-12 * (1.0 + operator_norm(a)));
    }
  }
}

TEST(SingularTriplet, SingularMatrix) {
  const auto t = min_singular_triplet(kNil);
  EXPECT_EQ(t.s, 0.0);
  const auto av = kNil * t.v;
  EXPECT_NEAR(av.norm(), 0.0, 1e-15);
  EXPECT_NEAR(t.u.norm(), 1.0, 1e-15);
}

TEST(Eigenvalues, SmallCases) {
  auto ev = eigenvalues(ComplexMatrix::diagonal({1.0, -1.0}));
  std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  EXPECT_NEAR(std::abs(ev[0] + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ev[1] - 1.0), 0.0, 1e-15);

  for (const auto& z : eigenvalues(kNil)) EXPECT_EQ(z, cplx(0.0));

  const auto x = random_unit_vector(3, 5);
  auto ev3 = eigenvalues(2.0 * rank_one(x, x));
  std::sort(ev3.begin(), ev3.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  EXPECT_NEAR(std::abs(ev3[0]), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(ev3[1]), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(ev3[2] - 2.0), 0.0, 1e-14);
}

TEST(Eigenvalues, TwoByTwoOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto a = random_ginibre(2, seed + 300);
    auto ev = eigenvalues(a);
    auto ref = oracle::eigenvalues_2x2(a);
    const double d1 = std::max(std::abs(ev[0] - ref[0]), std::abs(ev[1] - ref[1]));
    const double d2 = std::max(std::abs(ev[0] - ref[1]), std::abs(ev[1] - ref[0]));
    EXPECT_LE(std::min(d1, d2), 1e-12 * (1.0 + operator_norm(a)));
  }
}

TEST(Eigenvalues, ResidualContract) {
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 16u, 32u, 64u}) {
    for (std::uint64_t seed = 0; seed < (n > 32 ? 3u : 20u); ++seed) {
      const auto a = random_ginibre(n, 9000 + 31 * n + seed);
      const auto ev = eigenvalues(a);
      ASSERT_EQ(ev.size(), n);
      const double tol = tol_for(a, 1e-8);
      for (const auto& mu : ev) ASSERT_LE(smallest_singular_value(shifted(a, mu)), tol) << "n=" << n;
      cplx sum{};
      for (const auto& mu : ev) sum += mu;
      EXPECT_LE(std::abs(sum - trace(a)), tol);
    }
  }
}

TEST(Eigenvalues, DefectiveAndStructured) {
  // Jordan block of size 5, a shifted one, and a permutation (roots of unity).
  ComplexMatrix j(5);
  for (std::size_t i = 0; i + 1 < 5; ++i) j(i, i + 1) = 1.0;
  for (const auto& mu : eigenvalues(j)) EXPECT_LE(smallest_singular_value(shifted(j, mu)), 1e-8 * 2.0);

  ComplexMatrix p(6);
  for (std::size_t i = 0; i < 6; ++i) p((i + 1) % 6, i) = 1.0;
  for (const auto& mu : eigenvalues(p)) EXPECT_NEAR(std::abs(mu), 1.0, 1e-12);

  const auto h = random_hermitian(10, 4);
  for (const auto& mu : eigenvalues(h)) EXPECT_LE(std::abs(mu.imag()), 1e-8 * (1.0 + operator_norm(h)));
}

TEST(Eigenvalues, HermitianMagnitudesAreSingularValues) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h = random_hermitian(8, seed + 60);
    auto ev = eigenvalues(h);
    std::vector<double> mags;
    for (const auto& mu : ev) mags.push_back(std::abs(mu));
    std::sort(mags.begin(), mags.end());
    const auto s = singular_values(h);
    for (std::size_t k = 0; k < s.size(); ++k) EXPECT_NEAR(mags[k], s[k], tol_for(h, 1e-8));
  }
}

TEST(Predicates, Examples) {
  EXPECT_TRUE(is_normal(ComplexMatrix::diagonal({kI, 2.0}), 0.0));
  EXPECT_TRUE(is_hermitian(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}, 0.0));
  EXPECT_TRUE(is_unitary(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}, 0.0));
  EXPECT_TRUE(is_anti_hermitian(ComplexMatrix{{kI, 1.0}, {-1.0, 0.0}}, 0.0));
  EXPECT_FALSE(is_normal(kNil, 1e-3));
  EXPECT_FALSE(is_hermitian(kNil, 1e-3));
  EXPECT_FALSE(is_unitary(2.0 * ComplexMatrix::identity(2), 1e-3));
  EXPECT_THROW(is_normal(kNil, -1.0), std::invalid_argument);
}

TEST(Random, EnsemblesAndDeterminism) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    EXPECT_TRUE(is_unitary(random_haar_unitary(8, s), 1e-10));
    EXPECT_TRUE(is_hermitian(random_hermitian(8, s), 1e-12));
    EXPECT_NEAR(random_unit_vector(8, s).norm(), 1.0, 1e-14);
  }
  EXPECT_EQ(random_ginibre(8, 42), random_ginibre(8, 42));
  EXPECT_EQ(random_haar_unitary(8, 42), random_haar_unitary(8, 42));
  EXPECT_EQ(random_hermitian(8, 42), random_hermitian(8, 42));
  EXPECT_EQ(random_unit_vector(8, 42), random_unit_vector(8, 42));
  EXPECT_NE(random_ginibre(8, 42), random_ginibre(8, 43));
}

TEST(Random, NormalMatricesAreNormal) {
  Rng rng(5);
  for (int k = 0; k < 10; ++k) EXPECT_TRUE(is_normal(random_normal(6, rng), 1e-12));
}
