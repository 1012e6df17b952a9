#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "pspec/matrix.hpp"
#include "pspec/region.hpp"

namespace pspec {

/// What a report is expected to show. Measured reports never gate.
enum class Expectation { pass, fail, measured };

inline constexpr const char* name(Expectation e) {
  switch (e) {
    case Expectation::pass: return "pass";
    case Expectation::fail: return "fail";
    case Expectation::measured: return "measured";
  }
  return "?";
}

struct TrialFailure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  cplx lambda;
  double discrepancy = 0.0;
  double region_hausdorff = 0.0;
};

struct VerificationReport {
  std::string identity_name;
  std::string description;
  std::size_t trials = 0;
  std::vector<std::uint64_t> seeds;
  PseudoParams params;
  std::size_t dimension = 0;
  /// Pointwise tolerance on the normalized s_min discrepancy.
  double tolerance = 1e-8;
  /// Region tolerance (absolute); infinity when regions are not compared.
  double region_tolerance = std::numeric_limits<double>::infinity();
  double max_pointwise_discrepancy = 0.0;
  double max_region_hausdorff = 0.0;
  std::size_t samples_per_trial = 0;
  bool pass = true;
  Expectation expectation = Expectation::pass;
  std::vector<TrialFailure> failures;
  std::string notes;

  /// True when the outcome agrees with the expectation (always for measured reports).
  [[nodiscard]] bool meets_expectation() const {
    switch (expectation) {
      case Expectation::pass: return pass;
      case Expectation::fail: return !pass;
      case Expectation::measured: return true;
    }
    return false;
  }
};

namespace detail {
inline nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }
}  // namespace detail

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["identity_name"] = r.identity_name;
  j["description"] = r.description;
  j["trials"] = r.trials;
  j["seeds"] = r.seeds;
  j["dimension"] = r.dimension;
  j["params"] = {{"epsilon", r.params.epsilon},
                 {"grid_nx", r.params.grid_nx},
                 {"grid_ny", r.params.grid_ny},
                 {"box_margin", r.params.margin()},
                 {"membership_tol", r.params.membership_tol},
                 {"region_compare_band", r.params.region_compare_band}};
  j["tolerance"] = r.tolerance;
  j["region_tolerance"] = detail::finite_or_null(r.region_tolerance);
  j["samples_per_trial"] = r.samples_per_trial;
  j["max_pointwise_discrepancy"] = detail::finite_or_null(r.max_pointwise_discrepancy);
  j["max_region_hausdorff"] = detail::finite_or_null(r.max_region_hausdorff);
  j["pass"] = r.pass;
  j["expectation"] = name(r.expectation);
  j["meets_expectation"] = r.meets_expectation();
  auto& f = j["failures"] = nlohmann::json::array();
  for (const auto& t : r.failures) {
    f.push_back({{"trial", t.trial},
                 {"seed", t.seed},
                 {"lambda", {t.lambda.real(), t.lambda.imag()}},
                 {"discrepancy", detail::finite_or_null(t.discrepancy)},
                 {"region_hausdorff", detail::finite_or_null(t.region_hausdorff)}});
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace pspec
