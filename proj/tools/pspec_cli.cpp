// pspec: pseudospectra of dense complex matrices from the command line.
//
//   pspec compute  MATRIX                 region.csv, contours.csv, summary.json
//   pspec products KIND OP...             product matrix file
//   pspec verify   SUITE                  report_<suite>.json, exit 1 on failure
//   pspec witness  MATRIX LAMBDA          witness matrix and certificate.json
//   pspec compare  MATRIX MATRIX          compare.json
//
// Exit status: 0 success, 1 a verification expectation failed, 2 bad input.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pspec/commands.hpp"

namespace {

std::pair<std::size_t, std::size_t> parse_grid(const std::string& s) {
  const auto x = s.find_first_of("xX");
  try {
    std::size_t used = 0;
    if (x == std::string::npos) {
      const auto n = std::stoul(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {n, n};
    }
    const auto a = std::stoul(s.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(s);
    const auto b = std::stoul(s.substr(x + 1), &used);
    if (used != s.size() - x - 1) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw pspec::ParseError("--grid expects N or NXxNY, got '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudospectra toolkit for dense complex matrices"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML file with option defaults; command-line flags take precedence");

  pspec::RunConfig cfg;
  std::string grid = "201";
  std::string format = "json";
  std::string out = ".";
  app.add_option("--epsilon", cfg.epsilon, "Pseudospectrum level eps > 0")->capture_default_str();
  app.add_option("--grid", grid, "Grid points per axis: N or NXxNY")->capture_default_str();
  app.add_option("--margin", cfg.box_margin, "Window padding beyond eps (default eps/2)");
  app.add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Trials or cases per size (0 = suite default)")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads for grid evaluation")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--out", out, "Output directory")->capture_default_str();
  app.add_option("--format", format, "Matrix output format: json, coordinate or mtx")->capture_default_str();

  std::string matrix_a, matrix_b, lambda, kind_name, suite, map_name, product_name;
  std::vector<std::string> operands;
  std::vector<std::size_t> sizes;
  std::size_t dim = 0;
  std::size_t dimension = 4;

  auto* compute = app.add_subcommand("compute", "Compute sigma_eps(T) on an automatic window");
  compute->add_option("matrix", matrix_a, "Matrix file (JSON or Matrix Market)")->required();

  auto* products = app.add_subcommand("products", "Evaluate one of the operator products");
  products->add_option("kind", kind_name, "jordan_star, skew_lie, diamond, circ_star, jordan_plain, mixed_A, mixed_B")
      ->required();
  products->add_option("operands", operands, "Matrix files or I, iI, -I, -iI, 0")->required();
  products->add_option("--dim", dim, "Dimension for keyword operands");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "lemma1_1, lemma1_2, lemma1_3, thm1_4, thm2_1, thm2_2 or scan")->required();
  verify->add_option("--sizes", sizes, "Matrix sizes (comma separated)")->delimiter(',');
  verify->add_option("--dimension", dimension, "Dimension for theorem and scan suites")->capture_default_str();
  verify->add_option("--map", map_name, "Restrict a theorem suite to one map (unitary, scalar_2, left_factor, ...)");
  verify->add_option("--product", product_name, "Product for the scan suite");

  auto* witness = app.add_subcommand("witness", "Minimal-norm perturbation placing lambda in the spectrum");
  witness->add_option("matrix", matrix_a, "Matrix file")->required();
  witness->add_option("lambda", lambda, "Complex point, e.g. 0.3, 1-2i or (1,-2)")->required();

  auto* compare = app.add_subcommand("compare", "Compare two pseudospectra on a common window");
  compare->add_option("first", matrix_a, "Matrix file")->required();
  compare->add_option("second", matrix_b, "Matrix file")->required();

  for (auto* sub : {compute, products, verify, witness, compare}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    std::tie(cfg.grid_nx, cfg.grid_ny) = parse_grid(grid);
    const auto fmt = pspec::parse_matrix_format(format);
    if (!fmt) throw pspec::ParseError("--format expects json, coordinate or mtx, got '" + format + "'");
    cfg.format = *fmt;
    cfg.out_dir = out;
    cfg.validate();

    if (*compute) {
      const auto r = pspec::cmd_compute(cfg, pspec::read_matrix(matrix_a), matrix_a);
      std::cout << r.region.member_count() << " member cells, " << r.contours.size() << " polylines; wrote "
                << (cfg.out_dir / "summary.json").string() << '\n';
    } else if (*products) {
      const auto kind = pspec::parse_product_kind(kind_name);
      if (!kind) throw pspec::ParseError("unknown product '" + kind_name + "'");
      std::vector<pspec::ComplexMatrix> ops;
      for (const auto& s : operands) ops.push_back(pspec::resolve_operand(s, dim ? std::optional(dim) : std::nullopt));
      pspec::cmd_products(cfg, *kind, ops);
    } else if (*verify) {
      pspec::VerifyRequest req;
      req.suite = suite;
      req.sizes = sizes;
      req.dimension = dimension;
      if (!map_name.empty()) req.map = map_name;
      if (!product_name.empty()) {
        req.product = pspec::parse_product_kind(product_name);
        if (!req.product) throw pspec::ParseError("unknown product '" + product_name + "'");
      }
      return pspec::cmd_verify(cfg, req);
    } else if (*witness) {
      pspec::cmd_witness(cfg, pspec::read_matrix(matrix_a), pspec::parse_complex(lambda));
    } else if (*compare) {
      pspec::cmd_compare(cfg, pspec::read_matrix(matrix_a), pspec::read_matrix(matrix_b));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
