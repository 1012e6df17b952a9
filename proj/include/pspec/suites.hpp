#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pspec/canonical_map.hpp"
#include "pspec/matching.hpp"
#include "pspec/products.hpp"
#include "pspec/random.hpp"
#include "pspec/region.hpp"
#include "pspec/report.hpp"
#include "pspec/verify.hpp"

namespace pspec {

inline constexpr std::string_view kSuiteNames[] = {"lemma1_1", "lemma1_2", "lemma1_3", "thm1_4",
                                                   "thm2_1",   "thm2_2",   "scan"};

struct SuiteOptions {
  /// Matrix sizes; empty means the suite's default.
  std::vector<std::size_t> sizes;
  /// Seeded cases per size (or trials per map); zero means the suite's default.
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  PseudoParams params{.epsilon = 0.1, .grid_nx = 61, .grid_ny = 61};
  /// Dimension used by the theorem and scan suites.
  std::size_t dimension = 4;
  /// Product scanned by the scan suite; both default products when unset.
  std::optional<ProductKind> scan_product;
  unsigned jobs = 1;
};

struct SuiteReport {
  std::string suite;
  std::vector<VerificationReport> reports;
  nlohmann::json details = nlohmann::json::object();

  [[nodiscard]] bool meets_expectation() const {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.meets_expectation(); });
  }
  [[nodiscard]] const VerificationReport* find(std::string_view name) const {
    for (const auto& r : reports)
      if (r.identity_name == name) return &r;
    return nullptr;
  }
};

inline nlohmann::json to_json(const SuiteReport& s) {
  nlohmann::json j;
  j["suite"] = s.suite;
  j["meets_expectation"] = s.meets_expectation();
  auto& arr = j["reports"] = nlohmann::json::array();
  for (const auto& r : s.reports) arr.push_back(to_json(r));
  j["details"] = s.details;
  return j;
}

namespace detail {

inline std::vector<std::size_t> sizes_or(const SuiteOptions& o, std::vector<std::size_t> fallback) {
  return o.sizes.empty() ? fallback : o.sizes;
}
inline std::size_t trials_or(const SuiteOptions& o, std::size_t fallback) { return o.trials ? o.trials : fallback; }

inline VerificationReport make_report(std::string name, std::string description, const SuiteOptions& o,
                                      double tolerance, Expectation e = Expectation::pass) {
  VerificationReport r;
  r.identity_name = std::move(name);
  r.description = std::move(description);
  r.params = o.params;
  r.tolerance = tolerance;
  r.expectation = e;
  return r;
}

inline void record(VerificationReport& r, std::size_t trial, std::uint64_t seed, cplx lambda, double d) {
  r.max_pointwise_discrepancy = std::max(r.max_pointwise_discrepancy, d);
  if (d > r.tolerance || std::isnan(d)) {
    r.pass = false;
    if (r.failures.size() < 20) r.failures.push_back({trial, seed, lambda, d, 0.0});
  }
}

/// Lattice over the window of sigma_eps(T) plus rings around each eigenvalue.
inline std::vector<cplx> identity_lambdas(const ComplexMatrix& t, const PseudoParams& p, unsigned jobs) {
  constexpr std::size_t kSide = 24;
  const Box b = choose_box(t, p, jobs);
  auto pts = frame_points(GridFrame::from_box(b, kSide, kSide));
  for (const auto& mu : eigenvalues(t)) {
    for (double r : {0.25, 0.5, 1.0}) {
      for (int a = 0; a < 8; ++a) pts.push_back(mu + r * p.epsilon * std::polar(1.0, a * std::numbers::pi / 4.0 + 0.1));
    }
  }
  return pts;
}

}  // namespace detail

/**
 * Pointwise pseudospectrum calculus on seeded Ginibre matrices: superset of
 * sigma(T) + D(0, eps), translation, scaling, transpose, unitary and
 * conjugate-unitary invariance, adjoint reflection; equality with
 * sigma(T) + D(0, eps) for normal T; and the scalar-disc characterization in
 * both directions.
 */
inline SuiteReport suite_lemma1_1(const SuiteOptions& o) {
  const auto sizes = detail::sizes_or(o, {2, 4, 8, 16});
  const std::size_t trials = detail::trials_or(o, 20);
  constexpr double kTol = 1e-8;
  const double eps = o.params.epsilon;

  SuiteReport s;
  s.suite = "lemma1_1";
  auto superset = detail::make_report("superset", "s_min(lambda I - T) <= dist(lambda, sigma(T))", o, kTol);
  auto normal = detail::make_report("normal", "s_min(lambda I - T) = dist(lambda, sigma(T)) for normal T", o, kTol);
  auto translate = detail::make_report("translation", "sigma_eps(T + aI) = a + sigma_eps(T)", o, kTol);
  auto scale = detail::make_report("scaling", "sigma_eps(aT) = a sigma_{eps/|a|}(T)", o, kTol);
  auto scalar_disc = detail::make_report("scalar_disc", "sigma_eps(aI) = D(a, eps)", o, kTol);
  auto transp = detail::make_report("transpose", "sigma_eps(T^t) = sigma_eps(T)", o, kTol);
  auto unitary = detail::make_report("unitary", "sigma_eps(U T U*) = sigma_eps(T)", o, kTol);
  auto adjoint_r = detail::make_report("adjoint_reflection", "s_min(lambda I - T*) = s_min(conj(lambda) I - T)", o, kTol);
  auto conj_unitary =
      detail::make_report("conjugate_unitary", "sigma_eps(V conj(T) V*) = conj(sigma_eps(T))", o, kTol);
  auto non_scalar = detail::make_report(
      "non_scalar_not_disc", "non-scalar T: boundary Hausdorff to every eps-disc exceeds the band", o, 0.0);

  std::size_t min_samples = std::numeric_limits<std::size_t>::max();
  std::size_t case_index = 0;
  for (std::size_t n : sizes) {
    for (std::size_t k = 0; k < trials; ++k, ++case_index) {
      const std::uint64_t seed = o.seed + 1000 * n + k;
      Rng rng(seed);
      const ComplexMatrix t = random_ginibre(n, rng);
      const ComplexMatrix u = random_haar_unitary(n, rng);
      std::uniform_real_distribution<double> unit(-1.0, 1.0);
      const cplx alpha{2.0 * unit(rng), 2.0 * unit(rng)};
      cplx beta{unit(rng), unit(rng)};
      beta *= 2.0 / std::abs(beta) * (0.25 + 0.5 * std::abs(unit(rng)));

      const double norm = operator_norm(t);
      const auto lambdas = detail::identity_lambdas(t, o.params, o.jobs);
      min_samples = std::min(min_samples, lambdas.size());
      const auto eig = eigenvalues(t);
      const auto base = evaluate_smin(t, lambdas, o.jobs);

      auto transformed = [&](auto&& point) {
        std::vector<cplx> q(lambdas.size());
        std::transform(lambdas.begin(), lambdas.end(), q.begin(), point);
        return evaluate_smin(t, q, o.jobs);
      };
      const auto s_shift = transformed([&](cplx l) { return l - alpha; });
      const auto s_div = transformed([&](cplx l) { return l / beta; });
      const auto s_conj = transformed([](cplx l) { return std::conj(l); });
      const auto s_translated = evaluate_smin(t + ComplexMatrix::scalar(n, alpha), lambdas, o.jobs);
      const auto s_scaled = evaluate_smin(beta * t, lambdas, o.jobs);
      const auto s_transpose = evaluate_smin(transpose(t), lambdas, o.jobs);
      const auto s_unitary = evaluate_smin(u * t * adjoint(u), lambdas, o.jobs);
      const auto s_adjoint = evaluate_smin(adjoint(t), lambdas, o.jobs);
      const auto s_conj_unitary = evaluate_smin(u * conjugate(t) * adjoint(u), lambdas, o.jobs);

      for (std::size_t m = 0; m < lambdas.size(); ++m) {
        const cplx l = lambdas[m];
        const double w = 1.0 + norm + std::abs(l);
        double dist = std::numeric_limits<double>::infinity();
        for (const auto& mu : eig) dist = std::min(dist, std::abs(l - mu));
        detail::record(superset, case_index, seed, l, std::max(0.0, base[m] - dist) / w);
        detail::record(translate, case_index, seed, l, std::abs(s_translated[m] - s_shift[m]) / (w + std::abs(alpha)));
        detail::record(scale, case_index, seed, l,
                       std::abs(s_scaled[m] - std::abs(beta) * s_div[m]) / (1.0 + std::abs(beta) * norm + std::abs(l)));
        detail::record(transp, case_index, seed, l, std::abs(s_transpose[m] - base[m]) / w);
        detail::record(unitary, case_index, seed, l, std::abs(s_unitary[m] - base[m]) / w);
        detail::record(adjoint_r, case_index, seed, l, std::abs(s_adjoint[m] - s_conj[m]) / w);
        detail::record(conj_unitary, case_index, seed, l, std::abs(s_conj_unitary[m] - s_conj[m]) / w);
      }
      for (auto* r : {&superset, &translate, &scale, &transp, &unitary, &adjoint_r, &conj_unitary}) {
        r->trials += 1;
        r->seeds.push_back(seed);
      }

      // Normal matrices: Haar-conjugated complex diagonals.
      const ComplexMatrix nm = random_normal(n, rng);
      const double nnorm = operator_norm(nm);
      const auto nl = detail::identity_lambdas(nm, o.params, o.jobs);
      const auto ns = evaluate_smin(nm, nl, o.jobs);
      const auto neig = eigenvalues(nm);
      for (std::size_t m = 0; m < nl.size(); ++m) {
        double dist = std::numeric_limits<double>::infinity();
        for (const auto& mu : neig) dist = std::min(dist, std::abs(nl[m] - mu));
        detail::record(normal, case_index, seed, nl[m], std::abs(ns[m] - dist) / (1.0 + nnorm + std::abs(nl[m])));
      }
      normal.trials += 1;
      normal.seeds.push_back(seed);

      // Scalar matrices: s_min(lambda I - aI) = |lambda - a| and the region is the closed disc.
      const ComplexMatrix sc = ComplexMatrix::scalar(n, alpha);
      const auto sl = detail::identity_lambdas(sc, o.params, o.jobs);
      const auto ss = evaluate_smin(sc, sl, o.jobs);
      for (std::size_t m = 0; m < sl.size(); ++m)
        detail::record(scalar_disc, case_index, seed, sl[m],
                       std::abs(ss[m] - std::abs(sl[m] - alpha)) / (1.0 + std::abs(alpha) + std::abs(sl[m])));
      scalar_disc.trials += 1;
      scalar_disc.seeds.push_back(seed);
    }
  }

  // Region-level checks for the scalar-disc characterization, on a finer raster.
  PseudoParams rp = o.params;
  rp.grid_nx = rp.grid_ny = 101;
  double disc_hausdorff = 0.0;
  double disc_band = 0.0;
  for (std::size_t n : sizes) {
    const cplx a{0.3 * static_cast<double>(n % 3), -0.2};
    const ComplexMatrix sc = ComplexMatrix::scalar(n, a);
    const auto r = compute_region(sc, rp, o.jobs);
    const auto d = disc_region(r.frame(), {a, eps}, eps, rp.membership_tol);
    disc_hausdorff = std::max(disc_hausdorff, region_compare(r, d).boundary_hausdorff);
    disc_band = std::max(disc_band, rp.region_compare_band * r.frame().cell_diagonal());
  }
  scalar_disc.max_region_hausdorff = disc_hausdorff;
  scalar_disc.region_tolerance = disc_band;
  if (disc_hausdorff > disc_band) scalar_disc.pass = false;

  // Reverse direction. For any center c, the directed distance from the
  // region's boundary B to the circle |z - c| = eps is at least
  // max_b |b - c| - eps >= diam(B) / 2 - eps, and the raster circle lies
  // within one cell diagonal of the true one. That lower bound must clear
  // the band.
  std::vector<std::pair<std::string, ComplexMatrix>> cases;
  cases.emplace_back("jordan2", ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
  for (std::size_t n : sizes) {
    for (std::uint64_t k = 0; k < 3; ++k) cases.emplace_back("ginibre" + std::to_string(n), random_ginibre(n, o.seed + 77 * n + k));
  }
  double worst_margin = std::numeric_limits<double>::infinity();
  nlohmann::json bounds = nlohmann::json::array();
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto r = compute_region(cases[c].second, rp, o.jobs);
    const auto bnd = r.boundary_points();
    double diam = 0.0;
    for (std::size_t i = 0; i < bnd.size(); ++i)
      for (std::size_t j = i + 1; j < bnd.size(); ++j) diam = std::max(diam, std::abs(bnd[i] - bnd[j]));
    const double lower = diam / 2.0 - eps - r.frame().cell_diagonal();
    const double band = rp.region_compare_band * r.frame().cell_diagonal();
    cplx centroid{};
    for (const auto& z : bnd) centroid += z;
    if (!bnd.empty()) centroid /= static_cast<double>(bnd.size());
    const double at_centroid =
        region_compare(r, disc_region(r.frame(), {centroid, eps}, eps, rp.membership_tol)).boundary_hausdorff;
    bounds.push_back({{"case", cases[c].first}, {"hausdorff_lower_bound", lower}, {"band", band},
                      {"hausdorff_at_centroid", at_centroid}});
    worst_margin = std::min(worst_margin, lower - band);
    non_scalar.region_tolerance = std::min(non_scalar.region_tolerance, band);
    non_scalar.max_region_hausdorff = std::max(non_scalar.max_region_hausdorff, at_centroid);
    if (!(lower > band)) {
      non_scalar.pass = false;
      non_scalar.failures.push_back({c, 0, centroid, 0.0, lower});
    }
    non_scalar.trials += 1;
  }
  non_scalar.notes = "minimum of (lower bound - band) over cases: " + std::to_string(worst_margin);

  for (auto* r : {&superset, &normal, &translate, &scale, &scalar_disc, &transp, &unitary, &adjoint_r, &conj_unitary,
                  &non_scalar}) {
    r->samples_per_trial = r == &non_scalar ? rp.grid_nx * rp.grid_ny : min_samples;
    s.reports.push_back(std::move(*r));
  }
  s.details["sizes"] = sizes;
  s.details["cases_per_size"] = trials;
  s.details["min_samples_per_case"] = min_samples;
  s.details["non_scalar_bounds"] = bounds;
  return s;
}

/// Closed-form spectrum of T(x(x)x) + (x(x)x)T against the eigensolver.
inline SuiteReport suite_lemma1_2(const SuiteOptions& o) {
  std::vector<std::size_t> fallback;
  for (std::size_t n = 2; n <= 16; ++n) fallback.push_back(n);
  const auto sizes = detail::sizes_or(o, fallback);
  const std::size_t trials = detail::trials_or(o, 100);
  SuiteReport s;
  s.suite = "lemma1_2";
  auto rep = detail::make_report("rank_one_spectrum",
                                 "eig(T P + P T) = {0^(n-2), a +- sqrt(b)}, P = x(x)x, a = <Tx,x>, b = <T^2x,x>; "
                                 "discrepancy is matched distance / (1 + ||T||)",
                                 o, 1e-8);
  auto trace = detail::make_report("trace_identity", "|Tr(T P + P T) - 2<Tx,x>| / (1 + ||T||)", o, 1e-12);
  for (std::size_t n : sizes) {
    for (std::size_t k = 0; k < trials; ++k) {
      const std::uint64_t seed = o.seed + 1000 * n + k;
      Rng rng(seed);
      const ComplexMatrix t = random_ginibre(n, rng);
      const ComplexVector x = random_unit_vector(n, rng);
      const auto f = rank_one_jordan_spectrum(t, x);
      std::vector<cplx> formula;
      if (n == 2) {
        formula = {f[1], f[2]};
      } else {
        formula.assign(n - 2, 0.0);
        formula.push_back(f[1]);
        formula.push_back(f[2]);
      }
      const auto p = rank_one(x, x);
      const auto ev = eigenvalues(t * p + p * t);
      const double w = 1.0 + operator_norm(t);
      detail::record(rep, rep.trials, seed, 0.0, matched_distance(ev, formula) / w);
      detail::record(trace, trace.trials, seed, 0.0, trace_identity_check(t, x) / w);
      rep.trials += 1;
      trace.trials += 1;
    }
  }
  rep.notes = "n = 2 compares only the two formula values; the product has no forced zero eigenvalue there";
  rep.dimension = trace.dimension = sizes.back();
  s.reports = {std::move(rep), std::move(trace)};
  s.details["sizes"] = sizes;
  s.details["cases_per_size"] = trials;
  return s;
}

/// Separation of distinct operators by the spectra of [A o T]*, in both quantifier modes.
inline SuiteReport suite_lemma1_3(const SuiteOptions& o) {
  const auto sizes = detail::sizes_or(o, {2, 4, 8});
  const std::size_t pairs = detail::trials_or(o, 50);
  constexpr std::size_t kSearch = 50;
  SuiteReport s;
  s.suite = "lemma1_3";
  auto all = detail::make_report("separation_all", "witness A in M_n found for every T != S", o, 0.0);
  auto anti = detail::make_report("separation_anti_hermitian", "anti-Hermitian witness found for every T != S", o, 0.0);
  auto equal = detail::make_report("no_false_separation", "T = S is never separated", o, 0.0);
  std::size_t worst_trials = 0;
  for (std::size_t n : sizes) {
    for (std::size_t k = 0; k < pairs; ++k) {
      const std::uint64_t seed = o.seed + 1000 * n + k;
      Rng rng(seed);
      const ComplexMatrix t = random_ginibre(n, rng);
      const ComplexMatrix sm = random_ginibre(n, rng);
      for (auto [rep, mode] : {std::pair{&all, SeparationMode::all}, std::pair{&anti, SeparationMode::anti_hermitian}}) {
        const auto res = lemma_1_3_separation(t, sm, kSearch, seed, mode);
        rep->trials += 1;
        rep->seeds.push_back(seed);
        worst_trials = std::max(worst_trials, res.trials_run);
        if (!res.witness) {
          rep->pass = false;
          rep->failures.push_back({rep->trials - 1, seed, 0.0, res.max_distance, 0.0});
        }
      }
      for (auto mode : {SeparationMode::all, SeparationMode::anti_hermitian}) {
        equal.trials += 1;
        equal.seeds.push_back(seed);
        try {
          const auto res = lemma_1_3_separation(t, t, kSearch, seed, mode);
          equal.max_pointwise_discrepancy = std::max(equal.max_pointwise_discrepancy, res.max_distance);
          if (res.witness) {
            equal.pass = false;
            equal.failures.push_back({equal.trials - 1, seed, 0.0, res.max_distance, 0.0});
          }
        } catch (const std::logic_error&) {
          equal.pass = false;
          equal.failures.push_back({equal.trials - 1, seed, 0.0, std::numeric_limits<double>::infinity(), 0.0});
        }
      }
    }
  }
  s.reports = {std::move(all), std::move(anti), std::move(equal)};
  s.details["sizes"] = sizes;
  s.details["pairs_per_size"] = pairs;
  s.details["search_trials"] = kSearch;
  s.details["max_trials_to_witness"] = worst_trials;
  return s;
}

namespace detail {
inline VerifyOptions verify_options(const SuiteOptions& o, std::size_t default_trials) {
  VerifyOptions v;
  v.dimension = o.dimension;
  v.trials = trials_or(o, default_trials);
  v.seed = o.seed;
  v.params = o.params;
  v.jobs = o.jobs;
  return v;
}
inline ComplexMatrix suite_unitary(const SuiteOptions& o) {
  return random_haar_unitary(o.dimension, o.seed ^ 0x5bd1e995ULL);
}
}  // namespace detail

/// TS + ST on Hermitians under mu U T U* and mu U T^t U*, mu = +-1.
inline SuiteReport suite_thm1_4(const SuiteOptions& o) {
  SuiteReport s;
  s.suite = "thm1_4";
  const auto v = detail::verify_options(o, 10);
  const auto u = detail::suite_unitary(o);
  for (double mu : {1.0, -1.0}) {
    for (auto variant : {MapVariant::plain, MapVariant::transpose}) {
      auto r = verify_theorem_1_4(mu, u, variant, v);
      r.identity_name = "thm1_4_mu" + std::string(mu > 0 ? "+1_" : "-1_") + std::string(name(variant));
      s.reports.push_back(std::move(r));
    }
  }
  return s;
}

/// Left factor diag(2, 1, ..., 1): invertible but not scalar.
inline ComplexMatrix falsifying_left_factor(std::size_t n) {
  std::vector<cplx> d(n, 1.0);
  d[0] = 2.0;
  return ComplexMatrix::diagonal(d);
}

/// [T1 * T2, T3]*: unitary passes; scalar 2 and a non-scalar left factor fail; transpose is measured.
inline SuiteReport suite_thm2_1(const SuiteOptions& o) {
  SuiteReport s;
  s.suite = "thm2_1";
  const auto v = detail::verify_options(o, 10);
  const auto u = detail::suite_unitary(o);
  const std::size_t n = o.dimension;
  struct Case {
    std::string name;
    CanonicalMap map;
    Expectation e;
  };
  const std::vector<Case> cases{
      {"thm2_1_unitary", CanonicalMap(u), Expectation::pass},
      {"thm2_1_scalar_2", CanonicalMap(u, 2.0), Expectation::fail},
      {"thm2_1_left_factor", CanonicalMap(ComplexMatrix::identity(n), 1.0, MapVariant::plain, falsifying_left_factor(n)),
       Expectation::fail},
      {"thm2_1_transpose", CanonicalMap(u, 1.0, MapVariant::transpose), Expectation::measured},
  };
  for (const auto& c : cases) {
    auto r = verify_theorem_2_1(c.map, v);
    r.identity_name = c.name;
    r.expectation = c.e;
    s.reports.push_back(std::move(r));
  }
  return s;
}

/// T1 <> T2 o* T3: unitary passes; scalar -1 and transpose are measured.
inline SuiteReport suite_thm2_2(const SuiteOptions& o) {
  SuiteReport s;
  s.suite = "thm2_2";
  const auto v = detail::verify_options(o, 10);
  const auto u = detail::suite_unitary(o);
  const std::vector<std::tuple<std::string, CanonicalMap, Expectation>> cases{
      {"thm2_2_unitary", CanonicalMap(u), Expectation::pass},
      {"thm2_2_scalar_-1", CanonicalMap(u, -1.0), Expectation::measured},
      {"thm2_2_transpose", CanonicalMap(u, 1.0, MapVariant::transpose), Expectation::measured},
  };
  for (const auto& [nm, map, e] : cases) {
    auto r = verify_theorem_2_2(map, v);
    r.identity_name = nm;
    r.expectation = e;
    s.reports.push_back(std::move(r));
  }
  return s;
}

/**
 * Scalar scans: mixed_A over k/20, k in [-40, 40] \ {0} must admit exactly
 * s = 1; jordan_plain on Hermitians over {-1, 1} must admit both.
 */
inline SuiteReport suite_scan(const SuiteOptions& o) {
  constexpr double kPassTol = 1e-6;
  SuiteReport s;
  s.suite = "scan";
  const auto v = detail::verify_options(o, 3);
  auto run = [&](ProductKind kind, std::vector<cplx> grid, auto&& expected) {
    const auto pts = scalar_preservation_scan(kind, grid, v, kPassTol);
    auto r = detail::make_report("scan_" + std::string(name(kind)),
                                 "scalar s passes iff max discrepancy of T -> s U T U* is within tolerance", o, kPassTol);
    r.trials = v.trials;
    r.dimension = v.dimension;
    for (std::size_t k = 0; k < v.trials; ++k) r.seeds.push_back(v.seed + k);
    nlohmann::json arr = nlohmann::json::array();
    std::vector<double> passing;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const auto& p = pts[k];
      arr.push_back({{"scalar", p.scalar.real()}, {"discrepancy", p.discrepancy}, {"pass", p.pass}});
      if (p.pass) passing.push_back(p.scalar.real());
      if (p.pass != expected(p.scalar)) {
        r.pass = false;
        r.failures.push_back({k, v.seed, p.scalar, p.discrepancy, 0.0});
      }
      if (expected(p.scalar)) r.max_pointwise_discrepancy = std::max(r.max_pointwise_discrepancy, p.discrepancy);
    }
    s.details[std::string(name(kind))] = {{"points", arr}, {"passing", passing}};
    s.reports.push_back(std::move(r));
  };
  if (!o.scan_product || *o.scan_product == ProductKind::mixed_a)
    run(ProductKind::mixed_a, default_scan_grid(), [](cplx z) { return z == cplx{1.0}; });
  if (!o.scan_product || *o.scan_product == ProductKind::jordan_plain)
    run(ProductKind::jordan_plain, {-1.0, 1.0}, [](cplx) { return true; });
  if (o.scan_product && *o.scan_product != ProductKind::mixed_a && *o.scan_product != ProductKind::jordan_plain) {
    std::vector<cplx> grid = default_scan_grid();
    const auto pts = scalar_preservation_scan(*o.scan_product, grid, v, kPassTol);
    auto r = detail::make_report("scan_" + std::string(name(*o.scan_product)), "measured scalar scan", o, kPassTol,
                                 Expectation::measured);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) arr.push_back({{"scalar", p.scalar.real()}, {"discrepancy", p.discrepancy}, {"pass", p.pass}});
    s.details[std::string(name(*o.scan_product))] = {{"points", arr}};
    s.reports.push_back(std::move(r));
  }
  return s;
}

inline SuiteReport run_suite(std::string_view suite, const SuiteOptions& o) {
  if (suite == "lemma1_1") return suite_lemma1_1(o);
  if (suite == "lemma1_2") return suite_lemma1_2(o);
  if (suite == "lemma1_3") return suite_lemma1_3(o);
  if (suite == "thm1_4") return suite_thm1_4(o);
  if (suite == "thm2_1") return suite_thm2_1(o);
  if (suite == "thm2_2") return suite_thm2_2(o);
  if (suite == "scan") return suite_scan(o);
  throw std::invalid_argument("unknown suite: " + std::string(suite));
}

}  // namespace pspec
