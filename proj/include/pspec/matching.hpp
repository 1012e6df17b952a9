#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "pspec/matrix.hpp"

namespace pspec {

namespace detail {

inline bool augment(std::size_t u, const std::vector<std::vector<char>>& ok, std::vector<std::ptrdiff_t>& match_b,
                    std::vector<char>& seen) {
  for (std::size_t v = 0; v < ok[u].size(); ++v) {
    if (!ok[u][v] || seen[v]) continue;
    seen[v] = 1;
    if (match_b[v] < 0 || augment(static_cast<std::size_t>(match_b[v]), ok, match_b, seen)) {
      match_b[v] = static_cast<std::ptrdiff_t>(u);
      return true;
    }
  }
  return false;
}

inline bool perfect_matching_within(std::span<const cplx> a, std::span<const cplx> b, double r) {
  const std::size_t n = a.size();
  std::vector<std::vector<char>> ok(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ok[i][j] = std::abs(a[i] - b[j]) <= r;
  std::vector<std::ptrdiff_t> match_b(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<char> seen(n, 0);
    if (!augment(u, ok, match_b, seen)) return false;
  }
  return true;
}

}  // namespace detail

/**
 * Bottleneck distance between two multisets of equal size: the smallest r
 * such that some bijection pairs every element with one at distance <= r.
 * Infinity when the sizes differ.
 */
inline double matched_distance(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  if (a.empty()) return 0.0;
  std::vector<double> cand;
  cand.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) cand.push_back(std::abs(x - y));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::size_t lo = 0, hi = cand.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (detail::perfect_matching_within(a, b, cand[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return cand[lo];
}

}  // namespace pspec
