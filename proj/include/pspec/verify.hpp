#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "pspec/canonical_map.hpp"
#include "pspec/eigen.hpp"
#include "pspec/matching.hpp"
#include "pspec/products.hpp"
#include "pspec/random.hpp"
#include "pspec/region.hpp"
#include "pspec/report.hpp"

namespace pspec {

struct VerifyOptions {
  std::size_t dimension = 4;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  PseudoParams params{.epsilon = 0.1, .grid_nx = 61, .grid_ny = 61};
  /// Pointwise tolerance on |s_min(P) - s_min(Q)| / (1 + ||P|| + |lambda|).
  double tolerance = 1e-8;
  bool compare_regions = true;
  unsigned jobs = 1;
};

/**
 * Sample points for comparing two pseudospectra: a 20x20 lattice over the
 * window of sigma_eps(P) plus up to 40 points on rings of radius
 * eps * {0.5, 1.0, 1.5} at 8 angles around the eigenvalues of P, taken
 * round-robin over the eigenvalues.
 */
inline std::vector<cplx> sample_lambdas(const ComplexMatrix& p, double epsilon, unsigned jobs = 1) {
  PseudoParams coarse{.epsilon = epsilon, .grid_nx = 20, .grid_ny = 20};
  const GridFrame f = GridFrame::from_box(choose_box(p, coarse, jobs), 20, 20);
  std::vector<cplx> out = frame_points(f);

  const auto eig = eigenvalues(p);
  constexpr std::size_t kRingPoints = 40;
  std::size_t added = 0;
  for (double radius : {0.5, 1.0, 1.5}) {
    for (int a = 0; a < 8 && added < kRingPoints; ++a) {
      const cplx dir = std::polar(1.0, (2.0 * a + 0.5) * std::numbers::pi / 8.0);
      for (std::size_t k = 0; k < eig.size() && added < kRingPoints; ++k, ++added) {
        out.push_back(eig[k] + radius * epsilon * dir);
      }
    }
  }
  return out;
}

struct PointwiseComparison {
  double max_discrepancy = 0.0;
  cplx worst_lambda;
};

/// max over lambda of |s_min(lambda I - P) - s_min(lambda I - Q)| / (1 + ||P|| + |lambda|).
inline PointwiseComparison compare_pointwise(const ComplexMatrix& p, const ComplexMatrix& q,
                                             std::span<const cplx> lambdas, unsigned jobs = 1) {
  const double norm = operator_norm(p);
  const auto sp = evaluate_smin(p, lambdas, jobs);
  const auto sq = evaluate_smin(q, lambdas, jobs);
  PointwiseComparison c;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const double d = std::abs(sp[k] - sq[k]) / (1.0 + norm + std::abs(lambdas[k]));
    if (k == 0 || d > c.max_discrepancy) c = {d, lambdas[k]};
  }
  return c;
}

struct RegionAgreement {
  double hausdorff = 0.0;
  /// region_compare_band expressed in absolute units for the common grid.
  double band = 0.0;
};

/**
 * Boundary Hausdorff distance of sigma_eps(P) and sigma_eps(Q) on a common
 * window. The raster is refined beyond the requested grid until a cell side
 * is at most eps (up to 2001 points per axis), so each eps-disc around an
 * eigenvalue holds at least one cell center.
 */
inline RegionAgreement region_agreement(const ComplexMatrix& p, const ComplexMatrix& q, const PseudoParams& params,
                                        unsigned jobs = 1) {
  constexpr std::size_t kMaxAxis = 2001;
  const Box b = choose_box(p, params, jobs).united(choose_box(q, params, jobs));
  auto axis = [&](double width, std::size_t requested) {
    const auto needed = static_cast<std::size_t>(std::ceil(width / params.epsilon)) + 1;
    return std::max(requested, std::min(needed, kMaxAxis));
  };
  const GridFrame f = GridFrame::from_box(b, axis(b.re_max - b.re_min, params.grid_nx),
                                          axis(b.im_max - b.im_min, params.grid_ny));
  const auto rp = compute_membership_on(p, f, params.epsilon, params.membership_tol, jobs);
  const auto rq = compute_membership_on(q, f, params.epsilon, params.membership_tol, jobs);
  return {region_compare(rp, rq).boundary_hausdorff, params.region_compare_band * f.cell_diagonal()};
}

/// Produces the operands of one trial from its generator.
using OperandSampler = std::function<std::vector<ComplexMatrix>(Rng&)>;
using MatrixMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

/**
 * Checks sigma_eps(P(T1, ...)) = sigma_eps(P(phi T1, ...)) on seeded trials:
 * pointwise s_min agreement at sample_lambdas of the original product decides
 * pass/fail. The boundary Hausdorff distance of the two rasterized regions is
 * recorded alongside when compare_regions is set.
 */
inline VerificationReport verify_product_identity(std::string identity_name, ProductKind kind, const MatrixMap& phi,
                                                  const OperandSampler& sampler, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.identity_name = std::move(identity_name);
  rep.trials = opt.trials;
  rep.params = opt.params;
  rep.dimension = opt.dimension;
  rep.tolerance = opt.tolerance;

  double band = 0.0;
  for (std::size_t k = 0; k < opt.trials; ++k) {
    const std::uint64_t seed = opt.seed + k;
    rep.seeds.push_back(seed);
    Rng rng(seed);
    const auto ops = sampler(rng);
    std::vector<ComplexMatrix> images;
    images.reserve(ops.size());
    for (const auto& t : ops) images.push_back(phi(t));
    const ComplexMatrix p = apply_product(kind, ops);
    const ComplexMatrix q = apply_product(kind, images);

    const auto lambdas = sample_lambdas(p, opt.params.epsilon, opt.jobs);
    rep.samples_per_trial = lambdas.size();
    const auto cmp = compare_pointwise(p, q, lambdas, opt.jobs);
    RegionAgreement ra;
    if (opt.compare_regions) {
      ra = region_agreement(p, q, opt.params, opt.jobs);
      band = std::max(band, ra.band);
    }
    rep.max_pointwise_discrepancy = std::max(rep.max_pointwise_discrepancy, cmp.max_discrepancy);
    rep.max_region_hausdorff = std::max(rep.max_region_hausdorff, ra.hausdorff);
    if (cmp.max_discrepancy > opt.tolerance)
      rep.failures.push_back({k, seed, cmp.worst_lambda, cmp.max_discrepancy, ra.hausdorff});
  }
  if (opt.compare_regions) rep.region_tolerance = band;
  rep.pass = rep.failures.empty();
  return rep;
}

namespace detail {
inline OperandSampler ginibre_operands(std::size_t n, std::size_t count) {
  return [n, count](Rng& rng) {
    std::vector<ComplexMatrix> v;
    for (std::size_t k = 0; k < count; ++k) v.push_back(random_ginibre(n, rng));
    return v;
  };
}
inline OperandSampler hermitian_operands(std::size_t n, std::size_t count) {
  return [n, count](Rng& rng) {
    std::vector<ComplexMatrix> v;
    for (std::size_t k = 0; k < count; ++k) v.push_back(random_hermitian(n, rng));
    return v;
  };
}
}  // namespace detail

/// sigma_eps(TS + ST) under T -> mu U T U* or mu U T^t U*, on Hermitian inputs.
inline VerificationReport verify_theorem_1_4(double mu, const ComplexMatrix& u, MapVariant variant,
                                             const VerifyOptions& opt) {
  if (mu != 1.0 && mu != -1.0) throw std::invalid_argument("verify_theorem_1_4: mu must be +1 or -1");
  if (variant == MapVariant::entrywise_conjugate)
    throw std::invalid_argument("verify_theorem_1_4: variant must be plain or transpose");
  VerifyOptions o = opt;
  o.dimension = u.dim();
  const CanonicalMap m(u, mu, variant);
  auto rep = verify_product_identity("thm1_4", ProductKind::jordan_plain, std::cref(m),
                                     detail::hermitian_operands(u.dim(), 2), o);
  rep.description = "sigma_eps(TS+ST) preserved by " + m.describe() + " on Hermitian T, S";
  return rep;
}

/// sigma_eps([T1 * T2, T3]*) under a canonical map.
inline VerificationReport verify_theorem_2_1(const CanonicalMap& m, const VerifyOptions& opt) {
  VerifyOptions o = opt;
  o.dimension = m.dim();
  auto rep = verify_product_identity("thm2_1", ProductKind::mixed_a, std::cref(m),
                                     detail::ginibre_operands(m.dim(), 3), o);
  rep.description = "sigma_eps([T1*T2,T3]*) preserved by " + m.describe();
  return rep;
}

/// sigma_eps(T1 <> T2 o* T3) under a canonical map.
inline VerificationReport verify_theorem_2_2(const CanonicalMap& m, const VerifyOptions& opt) {
  VerifyOptions o = opt;
  o.dimension = m.dim();
  auto rep = verify_product_identity("thm2_2", ProductKind::mixed_b, std::cref(m),
                                     detail::ginibre_operands(m.dim(), 3), o);
  rep.description = "sigma_eps(T1<>T2 o* T3) preserved by " + m.describe();
  return rep;
}

struct ScanPoint {
  cplx scalar;
  double discrepancy = 0.0;
  bool pass = false;
};

/**
 * For each scalar s, the worst pointwise discrepancy of the product's
 * pseudospectrum identity under T -> s U T U* (Haar U from the seed).
 * jordan_plain is scanned on Hermitian operands, everything else on
 * Ginibre operands. Pass threshold is `pass_tol`.
 */
inline std::vector<ScanPoint> scalar_preservation_scan(ProductKind kind, std::span<const cplx> scalars,
                                                       const VerifyOptions& opt, double pass_tol = 1e-6) {
  for (const auto& s : scalars) {
    if (s == cplx{}) throw std::invalid_argument("scalar_preservation_scan: scalars must be nonzero");
  }
  const std::size_t n = opt.dimension;
  const auto sampler = kind == ProductKind::jordan_plain ? detail::hermitian_operands(n, arity(kind))
                                                         : detail::ginibre_operands(n, arity(kind));
  struct Trial {
    std::vector<ComplexMatrix> ops;
    ComplexMatrix product;
    std::vector<cplx> lambdas;
  };
  std::vector<Trial> trials;
  const ComplexMatrix u = random_haar_unitary(n, opt.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t k = 0; k < opt.trials; ++k) {
    Rng rng(opt.seed + k);
    Trial t;
    t.ops = sampler(rng);
    t.product = apply_product(kind, t.ops);
    t.lambdas = sample_lambdas(t.product, opt.params.epsilon, opt.jobs);
    trials.push_back(std::move(t));
  }

  std::vector<ScanPoint> out;
  for (const auto& s : scalars) {
    const CanonicalMap m(u, s);
    double worst = 0.0;
    for (const auto& t : trials) {
      std::vector<ComplexMatrix> images;
      for (const auto& op : t.ops) images.push_back(m(op));
      const auto q = apply_product(kind, images);
      worst = std::max(worst, compare_pointwise(t.product, q, t.lambdas, opt.jobs).max_discrepancy);
    }
    out.push_back({s, worst, worst <= pass_tol});
  }
  return out;
}

/// Real scalars k/20 for k in [-40, 40] excluding 0 (a zero map is not bijective).
inline std::vector<cplx> default_scan_grid() {
  std::vector<cplx> g;
  for (int k = -40; k <= 40; ++k) {
    if (k != 0) g.emplace_back(static_cast<double>(k) / 20.0, 0.0);
  }
  return g;
}

enum class SeparationMode { all, anti_hermitian };

struct SeparationResult {
  std::optional<ComplexMatrix> witness;
  std::size_t trials_run = 0;
  /// Largest eigenvalue multiset distance seen across the trials run.
  double max_distance = 0.0;
};

/**
 * Searches random A (Ginibre, or (G - G*)/2 in anti-Hermitian mode) for one
 * whose skew Lie products with T and S have eigenvalue multisets at
 * bottleneck distance > 1e-6. When ||T - S|| <= 1e-8 no witness is
 * returned; all trials are still run and their spectra must agree to 1e-10
 * (relative to 1 + ||A|| ||T||), otherwise std::logic_error is thrown.
 */
inline SeparationResult lemma_1_3_separation(const ComplexMatrix& t, const ComplexMatrix& s, std::size_t trials,
                                             std::uint64_t seed, SeparationMode mode) {
  if (t.dim() != s.dim()) throw dimension_error("lemma_1_3_separation: dimension mismatch");
  const bool same = max_abs_entry(t - s) == 0.0 || operator_norm(t - s) <= 1e-8;
  Rng rng(seed);
  SeparationResult res;
  for (std::size_t k = 0; k < trials; ++k) {
    const ComplexMatrix a = mode == SeparationMode::all ? random_ginibre(t.dim(), rng) : random_anti_hermitian(t.dim(), rng);
    const auto et = eigenvalues(skew_lie(a, t));
    const auto es = eigenvalues(skew_lie(a, s));
    const double d = matched_distance(et, es);
    res.trials_run = k + 1;
    res.max_distance = std::max(res.max_distance, d);
    if (same) {
      if (d > 1e-10 * (1.0 + operator_norm(a) * operator_norm(t)))
        throw std::logic_error("lemma_1_3_separation: spectra differ for T = S");
      continue;
    }
    if (d > 1e-6) {
      res.witness = a;
      return res;
    }
  }
  return res;
}

/// |Tr(T(x(x)x) + (x(x)x)T) - 2 <Tx, x>| for x normalized to unit length.
inline double trace_identity_check(const ComplexMatrix& t, const ComplexVector& x) {
  if (x.size() != t.dim()) throw dimension_error("trace_identity_check: dimension mismatch");
  const double nrm = x.norm();
  if (nrm == 0.0) throw std::invalid_argument("trace_identity_check: zero vector");
  const ComplexVector u = (1.0 / nrm) * x;
  return std::abs(trace(jordan_plain(t, rank_one(u, u))) - 2.0 * inner_product(t * u, u));
}

}  // namespace pspec
