#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pspec/contour.hpp"
#include "pspec/matrix.hpp"
#include "pspec/region.hpp"

namespace pspec {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MatrixFormat { json_dense, json_coordinate, matrix_market };

inline std::optional<MatrixFormat> parse_matrix_format(std::string_view s) {
  if (s == "json" || s == "dense") return MatrixFormat::json_dense;
  if (s == "coordinate") return MatrixFormat::json_coordinate;
  if (s == "mtx" || s == "matrix_market") return MatrixFormat::matrix_market;
  return std::nullopt;
}

inline std::string_view extension(MatrixFormat f) { return f == MatrixFormat::matrix_market ? ".mtx" : ".json"; }

/// 17 significant digits, enough for an exact round trip.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

// A bare "-0" reads back from JSON as the integer 0.
inline std::string json_double(double v) {
  return v == 0.0 && std::signbit(v) ? "-0.0" : format_double(v);
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline double parse_real(std::string_view tok, const std::string& where) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) throw ParseError(where + ": malformed number '" + std::string(tok) + "'");
  if (!std::isfinite(v)) throw ParseError(where + ": non-finite value '" + std::string(tok) + "'");
  return v;
}

inline double json_real(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number, got " + v.dump());
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(where + ": non-finite value");
  return d;
}

inline std::size_t json_index(const nlohmann::json& v, std::size_t n, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": index must be an integer, got " + v.dump());
  const auto i = v.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= n)
    throw ParseError(where + ": index " + std::to_string(i) + " out of range for n = " + std::to_string(n));
  return static_cast<std::size_t>(i);
}

inline ComplexMatrix parse_json_matrix(std::string_view text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(source + ": top level must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw ParseError(source + ": \"n\" must be a positive integer");
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError(source + ": \"entries\" must be an array");
  const auto n = static_cast<std::size_t>(j["n"].get<long long>());
  const auto& entries = j["entries"];

  std::string layout;
  if (j.contains("format")) {
    if (!j["format"].is_string()) throw ParseError(source + ": \"format\" must be a string");
    layout = j["format"].get<std::string>();
    if (layout != "dense" && layout != "coordinate")
      throw ParseError(source + ": unknown format \"" + layout + "\" (expected dense or coordinate)");
  } else {
    layout = !entries.empty() && entries[0].is_array() && entries[0].size() == 4 ? "coordinate" : "dense";
  }

  ComplexMatrix m(n);
  if (layout == "dense") {
    if (entries.size() != n * n)
      throw ParseError(source + ": dense form needs n*n = " + std::to_string(n * n) + " entries, found " +
                       std::to_string(entries.size()) + " (matrix must be square)");
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::string where = source + ": entry " + std::to_string(k);
      const auto& e = entries[k];
      if (!e.is_array() || e.size() != 2) throw ParseError(where + ": expected [re, im]");
      m(k / n, k % n) = {json_real(e[0], where), json_real(e[1], where)};
    }
  } else {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::string where = source + ": record " + std::to_string(k);
      const auto& e = entries[k];
      if (!e.is_array() || e.size() != 4) throw ParseError(where + ": expected [row, col, re, im]");
      const std::size_t r = json_index(e[0], n, where);
      const std::size_t c = json_index(e[1], n, where);
      if (!seen.emplace(r, c).second)
        throw ParseError(where + ": duplicate coordinate (" + std::to_string(r) + ", " + std::to_string(c) + ")");
      m(r, c) = {json_real(e[2], where), json_real(e[3], where)};
    }
  }
  return m;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t b = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > b) out.push_back(line.substr(b, i - b));
  }
  return out;
}

inline std::size_t parse_count(std::string_view tok, const std::string& where) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(where + ": expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

inline ComplexMatrix parse_matrix_market(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto where = [&] { return source + ":" + std::to_string(lineno); };

  if (!std::getline(in, line)) throw ParseError(source + ": empty input");
  ++lineno;
  auto banner = split_ws(line);
  std::vector<std::string> lower;
  for (auto t : banner) {
    std::string s(t);
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    lower.push_back(s);
  }
  if (lower.size() != 5 || lower[0] != "%%matrixmarket" || lower[1] != "matrix")
    throw ParseError(where() + ": expected '%%MatrixMarket matrix coordinate complex general'");
  if (lower[2] != "coordinate" || lower[3] != "complex" || lower[4] != "general")
    throw ParseError(where() + ": only 'coordinate complex general' is supported, got '" + line + "'");

  std::optional<std::size_t> n;
  std::size_t nnz = 0, read = 0;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  ComplexMatrix m(1);
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '%') continue;
    if (!n) {
      if (toks.size() != 3) throw ParseError(where() + ": expected 'rows cols nnz'");
      const std::size_t rows = parse_count(toks[0], where());
      const std::size_t cols = parse_count(toks[1], where());
      nnz = parse_count(toks[2], where());
      if (rows != cols) throw ParseError(where() + ": matrix must be square, got " + std::to_string(rows) + "x" + std::to_string(cols));
      if (rows == 0) throw ParseError(where() + ": dimension must be positive");
      if (nnz > rows * cols) throw ParseError(where() + ": more entries than cells");
      n = rows;
      m = ComplexMatrix(rows);
      continue;
    }
    if (toks.size() != 4) throw ParseError(where() + ": expected 'row col re im'");
    if (read == nnz) throw ParseError(where() + ": more entries than declared (" + std::to_string(nnz) + ")");
    const std::size_t r = parse_count(toks[0], where());
    const std::size_t c = parse_count(toks[1], where());
    if (r < 1 || r > *n || c < 1 || c > *n)
      throw ParseError(where() + ": index (" + std::to_string(r) + ", " + std::to_string(c) + ") out of range for n = " +
                       std::to_string(*n));
    if (!seen.emplace(r, c).second)
      throw ParseError(where() + ": duplicate coordinate (" + std::to_string(r) + ", " + std::to_string(c) + ")");
    m(r - 1, c - 1) = {parse_real(toks[2], where()), parse_real(toks[3], where())};
    ++read;
  }
  if (!n) throw ParseError(source + ": missing size line");
  if (read != nnz)
    throw ParseError(source + ": declared " + std::to_string(nnz) + " entries, found " + std::to_string(read));
  return m;
}

}  // namespace detail

/// Reads either format; Matrix Market is recognised by its banner, anything else is parsed as JSON.
inline ComplexMatrix parse_matrix(std::istream& in, const std::string& source = "<input>") {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text.compare(first, 2, "%%") == 0)
    return detail::parse_matrix_market(std::string_view(text).substr(first), source);
  return detail::parse_json_matrix(text, source);
}

inline ComplexMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_matrix(in, path.string());
}

inline void write_matrix(std::ostream& out, const ComplexMatrix& m, MatrixFormat format) {
  const std::size_t n = m.dim();
  switch (format) {
    case MatrixFormat::json_dense:
      out << "{\"n\": " << n << ", \"format\": \"dense\", \"entries\": [";
      for (std::size_t k = 0; k < n * n; ++k) {
        const cplx z = m(k / n, k % n);
        out << (k ? ", " : "") << '[' << detail::json_double(z.real()) << ", " << detail::json_double(z.imag()) << ']';
      }
      out << "]}\n";
      break;
    case MatrixFormat::json_coordinate: {
      out << "{\"n\": " << n << ", \"format\": \"coordinate\", \"entries\": [";
      bool first = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const cplx z = m(i, j);
          if (z == cplx{}) continue;
          out << (first ? "" : ", ") << '[' << i << ", " << j << ", " << detail::json_double(z.real()) << ", "
              << detail::json_double(z.imag()) << ']';
          first = false;
        }
      out << "]}\n";
      break;
    }
    case MatrixFormat::matrix_market: {
      std::size_t nnz = 0;
      for (const auto& z : m.values()) nnz += z != cplx{};
      out << "%%MatrixMarket matrix coordinate complex general\n" << n << ' ' << n << ' ' << nnz << '\n';
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const cplx z = m(i, j);
          if (z == cplx{}) continue;
          out << i + 1 << ' ' << j + 1 << ' ' << format_double(z.real()) << ' ' << format_double(z.imag()) << '\n';
        }
      break;
    }
  }
}

/// Header "re,im,smin"; one row per cell, row-major with the imaginary index outermost.
inline void write_region_csv(std::ostream& out, const SpectralRegion& r) {
  out << "re,im,smin\n";
  for (std::size_t j = 0; j < r.ny(); ++j)
    for (std::size_t i = 0; i < r.nx(); ++i) {
      const cplx z = r.point(i, j);
      out << format_double(z.real()) << ',' << format_double(z.imag()) << ',' << format_double(r.value(i, j)) << '\n';
    }
}

/// Header "polyline_id,re,im"; closed polylines repeat their first point at the end.
inline void write_contours_csv(std::ostream& out, const std::vector<Polyline>& polys) {
  out << "polyline_id,re,im\n";
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const auto& p = polys[k];
    auto row = [&](cplx z) { out << k << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << '\n'; };
    for (const auto& z : p.points) row(z);
    if (p.closed && !p.points.empty()) row(p.points.front());
  }
}

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" and "(a,b)".
inline cplx parse_complex(std::string_view s) {
  auto fail = [&] { return ParseError("malformed complex number '" + std::string(s) + "'"); };
  s = detail::trim(s);
  if (s.empty()) throw fail();
  if (s.front() == '(') {
    if (s.back() != ')') throw fail();
    const auto inner = s.substr(1, s.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw fail();
    return {detail::parse_real(detail::trim(inner.substr(0, comma)), "complex"),
            detail::parse_real(detail::trim(inner.substr(comma + 1)), "complex")};
  }
  auto coefficient = [&](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return detail::parse_real(t, "complex");
  };
  if (s.back() != 'i' && s.back() != 'j') return {detail::parse_real(s, "complex"), 0.0};
  const auto body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading one and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  try {
    if (split == std::string_view::npos) return {0.0, coefficient(body)};
    return {detail::parse_real(body.substr(0, split), "complex"), coefficient(body.substr(split))};
  } catch (const ParseError&) {
    throw fail();
  }
}

/// Opens, fills and flushes `path`; failures name the path.
template <class F>
void write_file(const std::filesystem::path& path, F&& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  body(out);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

inline void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m, MatrixFormat format) {
  write_file(path, [&](std::ostream& out) { write_matrix(out, m, format); });
}

}  // namespace pspec
