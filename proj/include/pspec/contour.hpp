#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pspec/region.hpp"

namespace pspec {

struct Polyline {
  std::vector<cplx> points;
  bool closed = false;
};

namespace detail {

// Edge keys: horizontal edge from sample (i, j) to (i+1, j) -> 2*(j*nx+i);
// vertical edge from (i, j) to (i, j+1) -> 2*(j*nx+i)+1.
struct ContourTracer {
  const SpectralRegion& r;
  std::size_t nx, ny;
  double level;

  explicit ContourTracer(const SpectralRegion& region)
      : r(region), nx(region.nx()), ny(region.ny()), level(region.level()) {}

  [[nodiscard]] std::size_t hkey(std::size_t i, std::size_t j) const { return 2 * (j * nx + i); }
  [[nodiscard]] std::size_t vkey(std::size_t i, std::size_t j) const { return 2 * (j * nx + i) + 1; }

  [[nodiscard]] cplx crossing(std::size_t key) const {
    const std::size_t cell = key / 2;
    const std::size_t i = cell % nx;
    const std::size_t j = cell / nx;
    const bool vertical = key % 2 == 1;
    const std::size_t i2 = vertical ? i : i + 1;
    const std::size_t j2 = vertical ? j + 1 : j;
    const double a = r.value(i, j);
    const double b = r.value(i2, j2);
    const double t = (level - a) / (b - a);
    return r.frame().point(static_cast<double>(i) + (vertical ? 0.0 : t), static_cast<double>(j) + (vertical ? t : 0.0));
  }

  [[nodiscard]] std::vector<std::array<std::size_t, 2>> segments() const {
    std::vector<std::array<std::size_t, 2>> segs;
    for (std::size_t j = 0; j + 1 < ny; ++j) {
      for (std::size_t i = 0; i + 1 < nx; ++i) {
        const double bl = r.value(i, j), br = r.value(i + 1, j);
        const double tr = r.value(i + 1, j + 1), tl = r.value(i, j + 1);
        const unsigned code = (bl <= level ? 1u : 0u) | (br <= level ? 2u : 0u) | (tr <= level ? 4u : 0u) |
                              (tl <= level ? 8u : 0u);
        if (code == 0 || code == 15) continue;
        const std::size_t bottom = hkey(i, j), top = hkey(i, j + 1);
        const std::size_t left = vkey(i, j), right = vkey(i + 1, j);
        if (code == 5 || code == 10) {
          const bool center_in = 0.25 * (bl + br + tr + tl) <= level;
          // Member center joins the two member corners, isolating the other two.
          const bool cut_br_tl = (code == 5) == center_in;
          if (cut_br_tl) {
            segs.push_back({bottom, right});
            segs.push_back({top, left});
          } else {
            segs.push_back({left, bottom});
            segs.push_back({right, top});
          }
          continue;
        }
        std::array<std::size_t, 4> edges{};
        std::size_t k = 0;
        if (((code >> 0) & 1u) != ((code >> 1) & 1u)) edges[k++] = bottom;
        if (((code >> 1) & 1u) != ((code >> 2) & 1u)) edges[k++] = right;
        if (((code >> 2) & 1u) != ((code >> 3) & 1u)) edges[k++] = top;
        if (((code >> 3) & 1u) != ((code >> 0) & 1u)) edges[k++] = left;
        segs.push_back({edges[0], edges[1]});
      }
    }
    return segs;
  }
};

}  // namespace detail

/**
 * Level set value = epsilon (+ membership tolerance) of the region's sample
 * grid, as polylines through linearly interpolated edge crossings. Squares
 * are scanned row-major and polylines are emitted in discovery order; saddle
 * squares are resolved by the mean of their four corners.
 */
inline std::vector<Polyline> contour_extract(const SpectralRegion& region) {
  detail::ContourTracer tracer(region);
  const auto segs = tracer.segments();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<std::array<std::size_t, 2>> owners(2 * region.nx() * region.ny(), {kNone, kNone});
  for (std::size_t s = 0; s < segs.size(); ++s) {
    for (std::size_t key : segs[s]) {
      auto& o = owners[key];
      (o[0] == kNone ? o[0] : o[1]) = s;
    }
  }

  std::vector<char> used(segs.size(), 0);
  auto next_segment = [&](std::size_t key, std::size_t from) -> std::size_t {
    for (std::size_t s : owners[key]) {
      if (s != kNone && s != from && !used[s]) return s;
    }
    return kNone;
  };
  auto other_end = [&](std::size_t s, std::size_t key) { return segs[s][0] == key ? segs[s][1] : segs[s][0]; };

  std::vector<Polyline> out;
  for (std::size_t start = 0; start < segs.size(); ++start) {
    if (used[start]) continue;
    used[start] = 1;
    std::vector<std::size_t> keys{segs[start][0], segs[start][1]};
    bool closed = false;

    std::size_t cur = start;
    for (;;) {
      const std::size_t s = next_segment(keys.back(), cur);
      if (s == kNone) break;
      used[s] = 1;
      const std::size_t k = other_end(s, keys.back());
      cur = s;
      if (k == keys.front()) {
        closed = true;
        break;
      }
      keys.push_back(k);
    }
    if (!closed) {
      std::vector<std::size_t> head;
      cur = start;
      std::size_t front = keys.front();
      for (;;) {
        const std::size_t s = next_segment(front, cur);
        if (s == kNone) break;
        used[s] = 1;
        front = other_end(s, front);
        cur = s;
        head.push_back(front);
      }
      keys.insert(keys.begin(), head.rbegin(), head.rend());
    }

    Polyline pl;
    pl.closed = closed;
    pl.points.reserve(keys.size());
    for (std::size_t k : keys) pl.points.push_back(tracer.crossing(k));
    out.push_back(std::move(pl));
  }
  return out;
}

}  // namespace pspec
