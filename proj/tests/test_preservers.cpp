#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pspec/canonical_map.hpp"
#include "pspec/linalg.hpp"
#include "pspec/verify.hpp"

using namespace pspec;

namespace {

VerifyOptions quick(std::size_t trials = 3) {
  VerifyOptions o;
  o.trials = trials;
  o.params.grid_nx = o.params.grid_ny = 41;
  return o;
}

ComplexMatrix haar(std::size_t n, std::uint64_t seed) { return random_haar_unitary(n, seed); }

}  // namespace

TEST(CanonicalMap, Construction) {
  EXPECT_THROW(CanonicalMap(ComplexMatrix::diagonal({2.0, 1.0})), std::invalid_argument);
  EXPECT_THROW(CanonicalMap(haar(3, 1), 0.0), std::invalid_argument);
  EXPECT_THROW(CanonicalMap(haar(3, 1), 1.0, MapVariant::plain, ComplexMatrix(3)), std::invalid_argument);
  EXPECT_THROW(CanonicalMap(haar(3, 1), 1.0, MapVariant::plain, ComplexMatrix::identity(2)), dimension_error);
  const auto t = random_ginibre(3, 2);
  EXPECT_EQ(CanonicalMap::identity(3)(t), t);
  EXPECT_THROW(CanonicalMap::identity(2)(t), dimension_error);
}

TEST(CanonicalMap, Variants) {
  const auto u = haar(3, 3);
  const auto t = random_ginibre(3, 4);
  const CanonicalMap plain(u, 2.0);
  const CanonicalMap tr(u, 1.0, MapVariant::transpose);
  const CanonicalMap cj(u, 1.0, MapVariant::entrywise_conjugate);
  const CanonicalMap left(u, 1.0, MapVariant::plain, ComplexMatrix::diagonal({2.0, 1.0, 1.0}));
  EXPECT_LE(oracle::max_entry_diff(plain(t), 2.0 * (u * t * adjoint(u))), 1e-13);
  EXPECT_LE(oracle::max_entry_diff(tr(t), u * transpose(t) * adjoint(u)), 1e-13);
  EXPECT_LE(oracle::max_entry_diff(cj(t), u * conjugate(t) * adjoint(u)), 1e-13);
  EXPECT_LE(oracle::max_entry_diff(left(t), ComplexMatrix::diagonal({2.0, 1.0, 1.0}) * u * t * adjoint(u)), 1e-13);
  EXPECT_NE(left.describe().find("S *"), std::string::npos);
}

TEST(SampleLambdas, CountAndRings) {
  const auto p = ComplexMatrix::diagonal({0.0, 1.0, 2.0});
  const auto l = sample_lambdas(p, 0.1);
  EXPECT_EQ(l.size(), 400u + 40u);
  // Ring points sit at distance eps * {0.5, 1, 1.5} from some eigenvalue.
  for (std::size_t k = 400; k < l.size(); ++k) {
    double best = 1e9;
    for (double mu : {0.0, 1.0, 2.0}) best = std::min(best, std::abs(l[k] - mu));
    EXPECT_TRUE(std::abs(best - 0.05) < 1e-12 || std::abs(best - 0.1) < 1e-12 || std::abs(best - 0.15) < 1e-12);
  }
}

TEST(JordanPlainPreservers, UnitaryMapsPass) {
  for (double mu : {1.0, -1.0}) {
    for (auto v : {MapVariant::plain, MapVariant::transpose}) {
      const auto r = verify_theorem_1_4(mu, haar(4, 5), v, quick());
      EXPECT_TRUE(r.pass) << mu << " " << name(v) << " " << r.max_pointwise_discrepancy;
      EXPECT_LE(r.max_pointwise_discrepancy, 1e-8);
      EXPECT_EQ(r.identity_name, "thm1_4");
      EXPECT_EQ(r.seeds.size(), 3u);
    }
  }
  EXPECT_THROW(verify_theorem_1_4(2.0, haar(3, 1), MapVariant::plain, quick()), std::invalid_argument);
  EXPECT_THROW(verify_theorem_1_4(1.0, haar(3, 1), MapVariant::entrywise_conjugate, quick()), std::invalid_argument);
}

TEST(MixedAPreservers, UnitaryPassesAndScalarTwoFails) {
  const auto u = haar(4, 6);
  const auto ok = verify_theorem_2_1(CanonicalMap(u), quick());
  EXPECT_TRUE(ok.pass);
  EXPECT_TRUE(ok.meets_expectation());
  EXPECT_LE(ok.max_region_hausdorff, ok.region_tolerance);

  auto bad = verify_theorem_2_1(CanonicalMap(u, 2.0), quick());
  bad.expectation = Expectation::fail;
  EXPECT_FALSE(bad.pass);
  EXPECT_TRUE(bad.meets_expectation());
  EXPECT_EQ(bad.failures.size(), 3u);
}

TEST(MixedAPreservers, NonScalarLeftFactorFails) {
  const std::size_t n = 4;
  std::vector<cplx> d(n, 1.0);
  d[0] = 2.0;
  const CanonicalMap m(ComplexMatrix::identity(n), 1.0, MapVariant::plain, ComplexMatrix::diagonal(d));
  const auto r = verify_theorem_2_1(m, quick());
  EXPECT_FALSE(r.pass);
  EXPECT_GE(r.max_region_hausdorff, 0.1);
}

TEST(MixedBPreservers, UnitaryPasses) {
  const auto r = verify_theorem_2_2(CanonicalMap(haar(4, 7)), quick());
  EXPECT_TRUE(r.pass) << r.max_pointwise_discrepancy;
}

TEST(MixedBPreservers, NegatedScalarChangesProduct) {
  // mixed_B is cubic, so s = -1 negates the product; sigma_eps(-P) != sigma_eps(P) generically.
  const auto r = verify_theorem_2_2(CanonicalMap(haar(4, 7), -1.0), quick());
  EXPECT_FALSE(r.pass);
}

TEST(Scan, MixedAOnlyOne) {
  auto o = quick(2);
  const std::vector<cplx> grid{-1.0, 0.5, 1.0, 1.05, cplx{0.0, 1.0}};
  const auto pts = scalar_preservation_scan(ProductKind::mixed_a, grid, o);
  ASSERT_EQ(pts.size(), grid.size());
  for (const auto& p : pts) EXPECT_EQ(p.pass, p.scalar == cplx{1.0}) << p.scalar << " " << p.discrepancy;
  EXPECT_THROW(scalar_preservation_scan(ProductKind::mixed_a, std::vector<cplx>{0.0}, o), std::invalid_argument);
}

TEST(Scan, JordanPlainSigns) {
  const std::vector<cplx> grid{-1.0, 1.0, 0.5};
  const auto pts = scalar_preservation_scan(ProductKind::jordan_plain, grid, quick(2));
  EXPECT_TRUE(pts[0].pass);
  EXPECT_TRUE(pts[1].pass);
  EXPECT_FALSE(pts[2].pass);
}

TEST(Scan, DefaultGrid) {
  const auto g = default_scan_grid();
  EXPECT_EQ(g.size(), 80u);
  EXPECT_EQ(g.front(), cplx(-2.0));
  EXPECT_EQ(g.back(), cplx(2.0));
}

TEST(Separation, HandExample) {
  // [iI, 0]* = 0 and [iI, I]* = 2iI.
  const auto a = ComplexMatrix::scalar(2, kI);
  EXPECT_EQ(skew_lie(a, ComplexMatrix(2)), ComplexMatrix(2));
  EXPECT_EQ(skew_lie(a, ComplexMatrix::identity(2)), ComplexMatrix::scalar(2, 2.0 * kI));
}

TEST(Separation, FindsWitnessForDistinctPairs) {
  for (auto mode : {SeparationMode::all, SeparationMode::anti_hermitian}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto t = random_ginibre(4, seed);
      const auto s = random_ginibre(4, seed + 100);
      const auto r = lemma_1_3_separation(t, s, 50, seed, mode);
      ASSERT_TRUE(r.witness.has_value());
      const double d = matched_distance(eigenvalues(skew_lie(*r.witness, t)), eigenvalues(skew_lie(*r.witness, s)));
      EXPECT_GT(d, 1e-6);
      if (mode == SeparationMode::anti_hermitian) {
        EXPECT_TRUE(is_anti_hermitian(*r.witness, 1e-14));
      }
    }
  }
}

TEST(Separation, EqualOperatorsNeverSeparate) {
  const auto t = random_ginibre(4, 9);
  const auto r = lemma_1_3_separation(t, t, 50, 1, SeparationMode::all);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.trials_run, 50u);
  EXPECT_THROW(lemma_1_3_separation(t, random_ginibre(3, 1), 5, 1, SeparationMode::all), dimension_error);
}

TEST(TraceIdentity, Cases) {
  EXPECT_EQ(trace_identity_check(ComplexMatrix::identity(3), ComplexVector::basis(3, 1)), 0.0);
  EXPECT_LE(trace_identity_check(ComplexMatrix::diagonal({1.0, -1.0}), ComplexVector{1.0, 1.0}), 1e-15);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = random_hermitian(5, seed);
    EXPECT_LE(trace_identity_check(t, random_unit_vector(5, seed + 50)), 1e-12 * (1.0 + operator_norm(t)));
  }
  EXPECT_THROW(trace_identity_check(ComplexMatrix::identity(2), ComplexVector(2)), std::invalid_argument);
}

TEST(Report, JsonShape) {
  auto r = verify_theorem_2_2(CanonicalMap::identity(3), quick(1));
  const auto j = to_json(r);
  EXPECT_EQ(j["identity_name"], "thm2_2");
  EXPECT_EQ(j["trials"], 1);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["expectation"], "pass");
  EXPECT_TRUE(j["failures"].empty());
  r.region_tolerance = std::numeric_limits<double>::infinity();
  EXPECT_TRUE(to_json(r)["region_tolerance"].is_null());
}
