#include <gtest/gtest.h>

#include <sstream>

#include "pspec/io.hpp"
#include "pspec/random.hpp"

using namespace pspec;

namespace {

ComplexMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in, "test");
}

std::string parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

bool bit_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t k = 0; k < a.values().size(); ++k) {
    const auto x = a.values()[k], y = b.values()[k];
    if (std::memcmp(&x, &y, sizeof x) != 0) return false;
  }
  return true;
}

}  // namespace

TEST(ParseMatrix, DenseIdentity) {
  EXPECT_EQ(parse(R"({"n": 2, "entries": [[1,0],[0,0],[0,0],[1,0]]})"), ComplexMatrix::identity(2));
}

TEST(ParseMatrix, CoordinateSingleEntry) {
  const ComplexMatrix expected{{0.0, 1.0}, {0.0, 0.0}};
  EXPECT_EQ(parse(R"({"n": 2, "entries": [[0,1,1,0]]})"), expected);
  EXPECT_EQ(parse(R"({"n": 2, "format": "coordinate", "entries": [[0,1,1,0]]})"), expected);
  EXPECT_EQ(parse(R"({"n": 3, "format": "coordinate", "entries": []})"), ComplexMatrix(3));
}

TEST(ParseMatrix, MatrixMarket) {
  const auto m = parse(
      "%%MatrixMarket matrix coordinate complex general\n"
      "% comment\n"
      "2 2 2\n"
      "1 2 1.5 -2\n"
      "2 1 0 1e-3\n");
  EXPECT_EQ(m(0, 1), cplx(1.5, -2.0));
  EXPECT_EQ(m(1, 0), cplx(0.0, 1e-3));
  EXPECT_EQ(m(0, 0), cplx{});
}

TEST(ParseMatrix, ExactDecimalParse) {
  const auto m = parse(R"({"n": 1, "entries": [[0.1, 2.2250738585072014e-308]]})");
  EXPECT_EQ(m(0, 0).real(), 0.1);
  EXPECT_EQ(m(0, 0).imag(), 2.2250738585072014e-308);
  const auto mm = parse("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 0.1 -0.30000000000000004\n");
  EXPECT_EQ(mm(0, 0), cplx(0.1, -0.30000000000000004));
}

TEST(ParseMatrix, Errors) {
  EXPECT_NE(parse_error(R"({"n": 2, "entries": [[1,0],[0,0],[0,0]]})").find("square"), std::string::npos);
  EXPECT_NE(parse_error(R"({"n": 2, "entries": [[0,1,1,0],[0,1,2,0]]})").find("duplicate"), std::string::npos);
  EXPECT_NE(parse_error(R"({"n": 2, "entries": [[0,2,1,0]]})").find("out of range"), std::string::npos);
  EXPECT_NE(parse_error(R"({"n": 1, "entries": [["NaN", 0]]})").find("entry 0"), std::string::npos);
  EXPECT_NE(parse_error(R"({"n": 1, "entries": [[NaN, 0]]})").find("test"), std::string::npos);
  EXPECT_NE(parse_error(R"({"n": 0, "entries": []})").find("positive"), std::string::npos);
  EXPECT_NE(parse_error(R"({"n": 1, "entries": [[1, 0]], "format": "banded"})").find("banded"), std::string::npos);
  EXPECT_NE(parse_error("[1, 2]").find("object"), std::string::npos);

  const std::string head = "%%MatrixMarket matrix coordinate complex general\n";
  EXPECT_NE(parse_error(head + "2 2 1\n1 1 nan 0\n").find("test:3"), std::string::npos);
  EXPECT_NE(parse_error(head + "2 2 1\n1 1 inf 0\n").find("non-finite"), std::string::npos);
  EXPECT_NE(parse_error(head + "2 3 1\n1 1 1 0\n").find("square"), std::string::npos);
  EXPECT_NE(parse_error(head + "2 2 2\n1 1 1 0\n1 1 2 0\n").find("duplicate"), std::string::npos);
  EXPECT_NE(parse_error(head + "2 2 1\n3 1 1 0\n").find("out of range"), std::string::npos);
  EXPECT_NE(parse_error(head + "2 2 2\n1 1 1 0\n").find("declared 2"), std::string::npos);
  EXPECT_NE(parse_error(head + "2 2 1\n1 1 1x 0\n").find("malformed"), std::string::npos);
  EXPECT_NE(parse_error("%%MatrixMarket matrix array real general\n1 1\n1\n").find("coordinate complex general"),
            std::string::npos);
}

TEST(WriteMatrix, RoundTripBitExact) {
  auto m = random_ginibre(5, 42);
  m(0, 0) = {1e-300, -0.0};
  m(1, 2) = {0.0, 0.0};
  m(3, 3) = {0.1, 1.0 / 3.0};
  for (auto f : {MatrixFormat::json_dense, MatrixFormat::json_coordinate, MatrixFormat::matrix_market}) {
    std::ostringstream out;
    write_matrix(out, m, f);
    auto back = parse(out.str());
    if (f == MatrixFormat::json_dense) {
      EXPECT_TRUE(bit_equal(back, m));
    } else {
      // Sparse forms drop exact zeros, including -0.
      EXPECT_EQ(back, m);
    }
  }
}

TEST(WriteMatrix, MatrixMarketLayout) {
  std::ostringstream out;
  write_matrix(out, ComplexMatrix{{0.0, cplx(1.0, -2.0)}, {0.0, 0.0}}, MatrixFormat::matrix_market);
  EXPECT_EQ(out.str(), "%%MatrixMarket matrix coordinate complex general\n2 2 1\n1 2 1 -2\n");
}

TEST(FormatDouble, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Csv, RegionAndContours) {
  const auto f = GridFrame::from_box({0.0, 1.0, 0.0, 1.0}, 2, 2);
  const SpectralRegion r(f, {0.0, 1.0, 2.0, 3.0}, 0.5);
  std::ostringstream out;
  write_region_csv(out, r);
  // Cell centers of a 2x2 frame on the unit square.
  EXPECT_EQ(out.str(), "re,im,smin\n0.25,0.25,0\n0.75,0.25,1\n0.25,0.75,2\n0.75,0.75,3\n");

  std::vector<Polyline> polys{{{cplx{0, 0}, cplx{1, 0}, cplx{0, 1}}, true}, {{cplx{2, 2}, cplx{3, 3}}, false}};
  std::ostringstream c;
  write_contours_csv(c, polys);
  EXPECT_EQ(c.str(), "polyline_id,re,im\n0,0,0\n0,1,0\n0,0,1\n0,0,0\n1,2,2\n1,3,3\n");
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("0.3"), cplx(0.3, 0.0));
  EXPECT_EQ(parse_complex("-2i"), cplx(0.0, -2.0));
  EXPECT_EQ(parse_complex("i"), cplx(0.0, 1.0));
  EXPECT_EQ(parse_complex("-i"), cplx(0.0, -1.0));
  EXPECT_EQ(parse_complex("1-2i"), cplx(1.0, -2.0));
  EXPECT_EQ(parse_complex("1e-3+4.5i"), cplx(1e-3, 4.5));
  EXPECT_EQ(parse_complex("-1.5e+2-i"), cplx(-150.0, -1.0));
  EXPECT_EQ(parse_complex(" (1, -2) "), cplx(1.0, -2.0));
  EXPECT_EQ(parse_complex("+3"), cplx(3.0, 0.0));
  EXPECT_THROW(parse_complex(""), ParseError);
  EXPECT_THROW(parse_complex("1+2"), ParseError);
  EXPECT_THROW(parse_complex("abc"), ParseError);
  EXPECT_THROW(parse_complex("nan"), ParseError);
}

TEST(ReadMatrix, MissingFile) { EXPECT_THROW(read_matrix("/nonexistent/m.json"), IoError); }
