#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pspec/contour.hpp"
#include "pspec/io.hpp"
#include "pspec/linalg.hpp"
#include "pspec/products.hpp"
#include "pspec/region.hpp"
#include "pspec/suites.hpp"
#include "pspec/witness.hpp"

namespace pspec {

struct RunConfig {
  double epsilon = 0.1;
  std::size_t grid_nx = 201;
  std::size_t grid_ny = 201;
  /// Negative means the default of eps / 2.
  double box_margin = -1.0;
  std::uint64_t seed = 1;
  /// Zero means the suite's own default.
  std::size_t trials = 0;
  unsigned jobs = 1;
  std::filesystem::path out_dir = ".";
  MatrixFormat format = MatrixFormat::json_dense;
  double membership_tol = 1e-10;
  double region_compare_band = 2.0;

  [[nodiscard]] PseudoParams params() const {
    return {.epsilon = epsilon, .grid_nx = grid_nx, .grid_ny = grid_ny, .box_margin = box_margin,
            .membership_tol = membership_tol, .region_compare_band = region_compare_band};
  }

  void validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be positive");
    if (grid_nx < 2 || grid_ny < 2) throw std::invalid_argument("grid must have at least 2 points per axis");
    if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    if (!(membership_tol >= 0.0)) throw std::invalid_argument("membership tolerance must be non-negative");
    if (!(region_compare_band > 0.0)) throw std::invalid_argument("region compare band must be positive");
  }
};

/// Effective settings echoed into output files. Parallelism is left out so outputs do not depend on it.
inline nlohmann::json to_json(const RunConfig& c) {
  return {{"epsilon", c.epsilon},
          {"grid_nx", c.grid_nx},
          {"grid_ny", c.grid_ny},
          {"box_margin", c.params().margin()},
          {"seed", c.seed},
          {"trials", c.trials},
          {"membership_tol", c.membership_tol},
          {"region_compare_band", c.region_compare_band}};
}

namespace detail {

inline nlohmann::json complex_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline nlohmann::json box_json(const Box& b) {
  return {{"re_min", b.re_min}, {"re_max", b.re_max}, {"im_min", b.im_min}, {"im_max", b.im_max}};
}

/// Eigenvalues sorted by (re, im) so summaries do not depend on solver ordering.
inline std::vector<cplx> sorted_eigenvalues(const ComplexMatrix& t) {
  auto ev = eigenvalues(t);
  std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  return ev;
}

inline void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

inline void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  write_file(path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

}  // namespace detail

struct ComputeResult {
  SpectralRegion region;
  std::vector<Polyline> contours;
  nlohmann::json summary;
};

/// sigma_eps(T) on the automatic window: region.csv, contours.csv and summary.json in out_dir.
inline ComputeResult cmd_compute(const RunConfig& cfg, const ComplexMatrix& t, const std::string& source = "") {
  cfg.validate();
  const auto p = cfg.params();
  auto region = compute_region(t, p, cfg.jobs);
  auto contours = contour_extract(region);

  nlohmann::json s;
  s["command"] = "compute";
  if (!source.empty()) s["input"] = source;
  s["config"] = to_json(cfg);
  s["dimension"] = t.dim();
  s["operator_norm"] = operator_norm(t);
  auto& ev = s["eigenvalues"] = nlohmann::json::array();
  for (const auto& z : detail::sorted_eigenvalues(t)) ev.push_back(detail::complex_json(z));
  s["box"] = detail::box_json(region.frame().bounds());
  s["grid"] = {{"nx", region.nx()}, {"ny", region.ny()}};
  s["member_cells"] = region.member_count();
  s["member_area"] = region.member_area();
  s["polylines"] = contours.size();

  detail::ensure_dir(cfg.out_dir);
  write_file(cfg.out_dir / "region.csv", [&](std::ostream& o) { write_region_csv(o, region); });
  write_file(cfg.out_dir / "contours.csv", [&](std::ostream& o) { write_contours_csv(o, contours); });
  detail::write_json(cfg.out_dir / "summary.json", s);
  return {std::move(region), std::move(contours), std::move(s)};
}

/// Operand from a file path or one of the keywords I, iI, -I, -iI, 0 (which need a dimension).
inline ComplexMatrix resolve_operand(const std::string& spec, std::optional<std::size_t> dim) {
  static const std::pair<const char*, cplx> kKeywords[] = {{"I", 1.0}, {"iI", kI}, {"-I", -1.0}, {"-iI", -kI}, {"0", 0.0}};
  for (const auto& [word, value] : kKeywords) {
    if (spec == word) {
      if (!dim) throw std::invalid_argument("operand '" + spec + "' needs --dim");
      return ComplexMatrix::scalar(*dim, value);
    }
  }
  return read_matrix(spec);
}

inline ComplexMatrix cmd_products(const RunConfig& cfg, ProductKind kind, const std::vector<ComplexMatrix>& ops,
                                  std::ostream& log = std::cout) {
  if (ops.size() != arity(kind))
    throw std::invalid_argument(std::string(name(kind)) + " takes " + std::to_string(arity(kind)) + " operands, got " +
                                std::to_string(ops.size()));
  auto p = apply_product(kind, ops);
  log << name(kind) << " = " << formula(kind) << '\n';
  detail::ensure_dir(cfg.out_dir);
  const auto path = cfg.out_dir / (std::string("product") + std::string(extension(cfg.format)));
  save_matrix(path, p, cfg.format);
  log << "wrote " << path.string() << '\n';
  return p;
}

struct VerifyRequest {
  std::string suite;
  std::vector<std::size_t> sizes;
  std::size_t dimension = 4;
  std::optional<ProductKind> product;
  /// Restricts theorem suites to one map: unitary, scalar_2, left_factor, transpose, scalar_-1.
  std::optional<std::string> map;
};

/// Runs a suite, writes report_<suite>.json and returns the process exit status (0 iff expectations met).
inline int cmd_verify(const RunConfig& cfg, const VerifyRequest& req, std::ostream& log = std::cout) {
  cfg.validate();
  SuiteOptions o;
  o.sizes = req.sizes;
  o.trials = cfg.trials;
  o.seed = cfg.seed;
  o.params = cfg.params();
  o.dimension = req.dimension;
  o.scan_product = req.product;
  o.jobs = cfg.jobs;
  auto s = run_suite(req.suite, o);
  if (req.map) {
    const std::string wanted = req.suite + "_" + *req.map;
    std::erase_if(s.reports, [&](const auto& r) { return r.identity_name != wanted; });
    if (s.reports.empty()) throw std::invalid_argument("suite " + req.suite + " has no map '" + *req.map + "'");
  }
  for (const auto& r : s.reports) {
    log << (r.meets_expectation() ? "ok   " : "FAIL ") << r.identity_name << " (expected " << name(r.expectation)
        << ", " << (r.pass ? "passed" : "failed") << ", max discrepancy " << r.max_pointwise_discrepancy << ")\n";
  }
  auto j = to_json(s);
  j["config"] = to_json(cfg);
  detail::ensure_dir(cfg.out_dir);
  const auto path = cfg.out_dir / ("report_" + req.suite + ".json");
  detail::write_json(path, j);
  log << "wrote " << path.string() << '\n';
  return s.meets_expectation() ? 0 : 1;
}

inline WitnessCertificate cmd_witness(const RunConfig& cfg, const ComplexMatrix& t, cplx lambda,
                                      std::ostream& log = std::cout) {
  auto c = certify_witness(t, lambda);
  nlohmann::json j;
  j["command"] = "witness";
  j["lambda"] = detail::complex_json(lambda);
  j["norm"] = c.norm;
  j["smin"] = c.smin;
  j["eigen_residual"] = c.eigen_residual;
  j["epsilon"] = cfg.epsilon;
  j["in_pseudospectrum"] = c.smin <= cfg.epsilon + cfg.membership_tol;
  detail::ensure_dir(cfg.out_dir);
  const auto mpath = cfg.out_dir / (std::string("witness") + std::string(extension(cfg.format)));
  save_matrix(mpath, c.perturbation, cfg.format);
  detail::write_json(cfg.out_dir / "certificate.json", j);
  log << "||A||_2 = " << format_double(c.norm) << ", eigen residual = " << format_double(c.eigen_residual) << '\n';
  return c;
}

/// sigma_eps of two matrices on one window (union of their automatic boxes).
inline RegionComparison cmd_compare(const RunConfig& cfg, const ComplexMatrix& a, const ComplexMatrix& b,
                                    std::ostream& log = std::cout) {
  cfg.validate();
  if (a.dim() != b.dim()) throw dimension_error("compare: matrices have different dimensions");
  const auto p = cfg.params();
  const Box box = choose_box(a, p, cfg.jobs).united(choose_box(b, p, cfg.jobs));
  const auto frame = GridFrame::from_box(box, p.grid_nx, p.grid_ny);
  const auto ra = compute_region_on(a, frame, p.epsilon, p.membership_tol, cfg.jobs);
  const auto rb = compute_region_on(b, frame, p.epsilon, p.membership_tol, cfg.jobs);
  const auto cmp = region_compare(ra, rb);
  double max_diff = 0.0;
  for (std::size_t k = 0; k < frame.cells(); ++k) max_diff = std::max(max_diff, std::abs(ra.smin()[k] - rb.smin()[k]));

  nlohmann::json j;
  j["command"] = "compare";
  j["config"] = to_json(cfg);
  j["box"] = detail::box_json(box);
  j["grid"] = {{"nx", frame.nx}, {"ny", frame.ny}};
  j["sym_diff_area"] = cmp.sym_diff_area;
  j["boundary_hausdorff"] = detail::finite_or_null(cmp.boundary_hausdorff);
  j["band"] = p.region_compare_band * frame.cell_diagonal();
  j["max_smin_difference"] = max_diff;
  detail::ensure_dir(cfg.out_dir);
  detail::write_json(cfg.out_dir / "compare.json", j);
  log << "sym diff area " << format_double(cmp.sym_diff_area) << ", boundary Hausdorff "
      << format_double(cmp.boundary_hausdorff) << ", max |s_min difference| " << format_double(max_diff) << '\n';
  return cmp;
}

}  // namespace pspec
