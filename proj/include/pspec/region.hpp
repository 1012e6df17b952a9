#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pspec/eigen.hpp"
#include "pspec/matrix.hpp"
#include "pspec/svd.hpp"

namespace pspec {

struct PseudoParams {
  double epsilon = 0.1;
  std::size_t grid_nx = 201;
  std::size_t grid_ny = 201;
  /// Box padding beyond epsilon; negative means "0.5 * epsilon".
  double box_margin = -1.0;
  double membership_tol = 1e-10;
  /// Region equality band, in grid-cell diagonals.
  double region_compare_band = 2.0;

  [[nodiscard]] double margin() const { return box_margin < 0.0 ? 0.5 * epsilon : box_margin; }

  void validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be a positive finite number");
    if (grid_nx < 2 || grid_ny < 2) throw std::invalid_argument("grid must be at least 2x2");
    if (membership_tol < 0.0) throw std::invalid_argument("membership_tol must be non-negative");
  }
};

struct Disc {
  cplx center;
  double radius = 0.0;
};

struct Box {
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;

  [[nodiscard]] Box united(const Box& o) const {
    return {std::min(re_min, o.re_min), std::max(re_max, o.re_max), std::min(im_min, o.im_min),
            std::max(im_max, o.im_max)};
  }
  [[nodiscard]] Box intersected(const Box& o) const {
    return {std::max(re_min, o.re_min), std::min(re_max, o.re_max), std::max(im_min, o.im_min),
            std::min(im_max, o.im_max)};
  }
  friend bool operator==(const Box&, const Box&) = default;
};

/**
 * Sample lattice: cell (i, j) has its center at origin + i*step_x + j*step_y.
 * Freshly built frames are axis aligned (step_x > 0 real, step_y = i*dy with
 * dy > 0); region_scale by a non-real, non-imaginary factor yields a rotated
 * frame.
 */
struct GridFrame {
  cplx origin;
  cplx step_x;
  cplx step_y;
  std::size_t nx = 0;
  std::size_t ny = 0;

  static GridFrame from_box(const Box& b, std::size_t nx, std::size_t ny) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("GridFrame: empty grid");
    if (!(b.re_max > b.re_min) || !(b.im_max > b.im_min)) throw std::invalid_argument("GridFrame: degenerate box");
    const double dx = (b.re_max - b.re_min) / static_cast<double>(nx);
    const double dy = (b.im_max - b.im_min) / static_cast<double>(ny);
    return {cplx(b.re_min + 0.5 * dx, b.im_min + 0.5 * dy), cplx(dx, 0.0), cplx(0.0, dy), nx, ny};
  }

  [[nodiscard]] cplx point(double i, double j) const { return origin + i * step_x + j * step_y; }
  [[nodiscard]] std::size_t cells() const { return nx * ny; }
  [[nodiscard]] double cell_area() const { return std::abs((std::conj(step_x) * step_y).imag()); }
  [[nodiscard]] double cell_diagonal() const { return std::abs(step_x + step_y); }
  [[nodiscard]] double cell_size() const { return std::max(std::abs(step_x), std::abs(step_y)); }

  /// Fractional cell coordinates of a point.
  [[nodiscard]] std::pair<double, double> locate(cplx z) const {
    const cplx d = z - origin;
    // Solve d = a*step_x + b*step_y for real a, b.
    const double det = step_x.real() * step_y.imag() - step_x.imag() * step_y.real();
    const double a = (d.real() * step_y.imag() - d.imag() * step_y.real()) / det;
    const double b = (step_x.real() * d.imag() - step_x.imag() * d.real()) / det;
    return {a, b};
  }

  /// Bounding box of the covered cells (cell edges, not centers).
  [[nodiscard]] Box bounds() const {
    Box b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (double ci : {-0.5, static_cast<double>(nx) - 0.5}) {
      for (double cj : {-0.5, static_cast<double>(ny) - 0.5}) {
        const cplx p = point(ci, cj);
        b.re_min = std::min(b.re_min, p.real());
        b.re_max = std::max(b.re_max, p.real());
        b.im_min = std::min(b.im_min, p.imag());
        b.im_max = std::max(b.im_max, p.imag());
      }
    }
    return b;
  }

  [[nodiscard]] bool matches(const GridFrame& o) const {
    if (nx != o.nx || ny != o.ny) return false;
    const double tol = 1e-9 * cell_size();
    return std::abs(origin - o.origin) <= 1e3 * tol && std::abs(step_x - o.step_x) <= tol &&
           std::abs(step_y - o.step_y) <= tol;
  }
};

/// ||(lambda I - T)^{-1}||_2, +infinity when lambda is an eigenvalue.
inline double resolvent_norm(const ComplexMatrix& t, cplx lambda) {
  const double s = smallest_singular_value(shifted(t, lambda));
  return s == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / s;
}

/// Closed pseudospectrum membership: s_min(lambda I - T) <= epsilon + tol.
inline bool membership(const ComplexMatrix& t, cplx lambda, double epsilon, double tol = 1e-10) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("membership: epsilon must be positive");
  return smallest_singular_value(shifted(t, lambda)) <= epsilon + tol;
}

/**
 * Evaluates f at every index in [0, count) using up to `jobs` threads. Each
 * result slot depends only on its index, so the output is identical for any
 * degree of parallelism.
 */
template <class F>
void parallel_fill(std::span<double> out, unsigned jobs, F&& f) {
  const std::size_t count = out.size();
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) out[k] = f(k);
    return;
  }
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(kChunk);
        if (begin >= count) return;
        const std::size_t end = std::min(count, begin + kChunk);
        for (std::size_t k = begin; k < end; ++k) out[k] = f(k);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(jobs - 1);
    for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
}

/// s_min(lambda I - T) at every point.
inline std::vector<double> evaluate_smin(const ComplexMatrix& t, std::span<const cplx> points, unsigned jobs = 1) {
  std::vector<double> out(points.size());
  parallel_fill(out, jobs, [&](std::size_t k) { return smallest_singular_value(shifted(t, points[k])); });
  return out;
}

inline std::vector<cplx> frame_points(const GridFrame& f) {
  std::vector<cplx> pts;
  pts.reserve(f.cells());
  for (std::size_t j = 0; j < f.ny; ++j)
    for (std::size_t i = 0; i < f.nx; ++i) pts.push_back(f.point(static_cast<double>(i), static_cast<double>(j)));
  return pts;
}

/**
 * Rasterized sublevel set {lambda : value(lambda) <= epsilon + tol}. For
 * pseudospectra `value` holds s_min(lambda I - T) at each cell center,
 * stored row-major (row j = imaginary index, column i = real index).
 */
class SpectralRegion {
 public:
  SpectralRegion(GridFrame frame, std::vector<double> smin, double epsilon, double membership_tol = 1e-10)
      : frame_(frame), smin_(std::move(smin)), epsilon_(epsilon), tol_(membership_tol) {
    if (smin_.size() != frame_.cells()) throw std::invalid_argument("SpectralRegion: value count does not match grid");
    if (!(epsilon_ > 0.0)) throw std::invalid_argument("SpectralRegion: epsilon must be positive");
    for (double v : smin_) {
      if (!(v >= 0.0)) throw std::invalid_argument("SpectralRegion: values must be non-negative");
    }
  }

  [[nodiscard]] const GridFrame& frame() const noexcept { return frame_; }
  [[nodiscard]] std::size_t nx() const noexcept { return frame_.nx; }
  [[nodiscard]] std::size_t ny() const noexcept { return frame_.ny; }
  [[nodiscard]] double epsilon() const noexcept { return epsilon_; }
  [[nodiscard]] double membership_tol() const noexcept { return tol_; }
  [[nodiscard]] std::span<const double> smin() const noexcept { return smin_; }
  [[nodiscard]] double value(std::size_t i, std::size_t j) const { return smin_[j * frame_.nx + i]; }
  [[nodiscard]] cplx point(std::size_t i, std::size_t j) const {
    return frame_.point(static_cast<double>(i), static_cast<double>(j));
  }
  [[nodiscard]] bool member(std::size_t i, std::size_t j) const { return value(i, j) <= epsilon_ + tol_; }
  [[nodiscard]] double level() const noexcept { return epsilon_ + tol_; }

  [[nodiscard]] std::size_t member_count() const {
    return static_cast<std::size_t>(
        std::count_if(smin_.begin(), smin_.end(), [&](double v) { return v <= epsilon_ + tol_; }));
  }
  [[nodiscard]] double member_area() const { return static_cast<double>(member_count()) * frame_.cell_area(); }

  /// Same grid and values, different threshold.
  [[nodiscard]] SpectralRegion at_epsilon(double eps) const { return {frame_, smin_, eps, tol_}; }

  /// True when the cell containing z, or any cell within `dilation` cells of it, is a member.
  [[nodiscard]] bool contains_dilated(cplx z, std::size_t dilation = 1) const {
    const auto [a, b] = frame_.locate(z);
    const auto ci = static_cast<std::ptrdiff_t>(std::lround(a));
    const auto cj = static_cast<std::ptrdiff_t>(std::lround(b));
    const auto d = static_cast<std::ptrdiff_t>(dilation);
    for (std::ptrdiff_t j = cj - d; j <= cj + d; ++j) {
      for (std::ptrdiff_t i = ci - d; i <= ci + d; ++i) {
        if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(nx()) || j >= static_cast<std::ptrdiff_t>(ny())) continue;
        if (member(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) return true;
      }
    }
    return false;
  }

  /// Member cells with a non-member 4-neighbour; cells outside the grid count as non-members.
  [[nodiscard]] std::vector<cplx> boundary_points() const {
    std::vector<cplx> out;
    const std::size_t w = nx(), h = ny();
    for (std::size_t j = 0; j < h; ++j) {
      for (std::size_t i = 0; i < w; ++i) {
        if (!member(i, j)) continue;
        const bool edge = i == 0 || j == 0 || i + 1 == w || j + 1 == h;
        if (edge || !member(i - 1, j) || !member(i + 1, j) || !member(i, j - 1) || !member(i, j + 1)) {
          out.push_back(point(i, j));
        }
      }
    }
    return out;
  }

 private:
  GridFrame frame_;
  std::vector<double> smin_;
  double epsilon_;
  double tol_;
};

/**
 * Sampling window for sigma_eps(T). Starts from the eigenvalue hull padded
 * by epsilon + margin and doubles the padding while any boundary cell center
 * is still a member, never exceeding the square around D(0, ||T|| + eps +
 * margin), which always contains sigma_eps(T). Every component of
 * sigma_eps(T) contains an eigenvalue, so a component leaving the window
 * must cross its boundary.
 */
inline Box choose_box(const ComplexMatrix& t, const PseudoParams& p, unsigned jobs = 1) {
  p.validate();
  const auto eig = eigenvalues(t);
  const double norm = operator_norm(t);
  const double margin = p.margin();
  const double cap_r = norm + p.epsilon + margin;
  const Box cap{-cap_r, cap_r, -cap_r, cap_r};

  Box hull{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& mu : eig) {
    hull.re_min = std::min(hull.re_min, mu.real());
    hull.re_max = std::max(hull.re_max, mu.real());
    hull.im_min = std::min(hull.im_min, mu.imag());
    hull.im_max = std::max(hull.im_max, mu.imag());
  }

  double pad = p.epsilon + margin;
  for (;;) {
    Box b{hull.re_min - pad, hull.re_max + pad, hull.im_min - pad, hull.im_max + pad};
    b = b.intersected(cap);
    const bool capped = b == cap;
    if (capped) return b;

    const GridFrame f = GridFrame::from_box(b, p.grid_nx, p.grid_ny);
    std::vector<cplx> edge;
    for (std::size_t i = 0; i < f.nx; ++i) {
      edge.push_back(f.point(static_cast<double>(i), 0.0));
      edge.push_back(f.point(static_cast<double>(i), static_cast<double>(f.ny - 1)));
    }
    for (std::size_t j = 1; j + 1 < f.ny; ++j) {
      edge.push_back(f.point(0.0, static_cast<double>(j)));
      edge.push_back(f.point(static_cast<double>(f.nx - 1), static_cast<double>(j)));
    }
    const auto s = evaluate_smin(t, edge, jobs);
    const bool touches = std::any_of(s.begin(), s.end(), [&](double v) { return v <= p.epsilon + p.membership_tol; });
    if (!touches) return b;
    pad *= 2.0;
  }
}

inline SpectralRegion compute_region_on(const ComplexMatrix& t, const GridFrame& frame, double epsilon,
                                        double membership_tol = 1e-10, unsigned jobs = 1) {
  const auto pts = frame_points(frame);
  return {frame, evaluate_smin(t, pts, jobs), epsilon, membership_tol};
}

/**
 * Same membership mask as compute_region_on, cheaper on large sparse windows.
 * s_min(lambda I - T) is 1-Lipschitz in lambda, so a block of cells whose
 * center value exceeds the level by more than the block radius has no
 * members; its cells store the lower bound s_c - |lambda - c| instead of
 * s_min. All other cells hold exact s_min values.
 */
inline SpectralRegion compute_membership_on(const ComplexMatrix& t, const GridFrame& frame, double epsilon,
                                            double membership_tol = 1e-10, unsigned jobs = 1) {
  constexpr std::size_t kBlock = 16;
  const std::size_t bx = (frame.nx + kBlock - 1) / kBlock;
  const std::size_t by = (frame.ny + kBlock - 1) / kBlock;
  auto block_range = [&](std::size_t b, std::size_t n) { return std::pair{b * kBlock, std::min(n, (b + 1) * kBlock)}; };

  std::vector<cplx> centers(bx * by);
  for (std::size_t j = 0; j < by; ++j)
    for (std::size_t i = 0; i < bx; ++i) {
      const auto [i0, i1] = block_range(i, frame.nx);
      const auto [j0, j1] = block_range(j, frame.ny);
      centers[j * bx + i] = frame.point(0.5 * static_cast<double>(i0 + i1 - 1), 0.5 * static_cast<double>(j0 + j1 - 1));
    }
  const auto sc = evaluate_smin(t, centers, jobs);
  const double level = epsilon + membership_tol;

  std::vector<double> values(frame.cells(), 0.0);
  std::vector<std::size_t> exact;
  for (std::size_t j = 0; j < by; ++j)
    for (std::size_t i = 0; i < bx; ++i) {
      const auto [i0, i1] = block_range(i, frame.nx);
      const auto [j0, j1] = block_range(j, frame.ny);
      const cplx c = centers[j * bx + i];
      const double radius = std::abs(frame.point(static_cast<double>(i0), static_cast<double>(j0)) - c);
      const bool skip = sc[j * bx + i] - radius > level;
      for (std::size_t jj = j0; jj < j1; ++jj)
        for (std::size_t ii = i0; ii < i1; ++ii) {
          const std::size_t k = jj * frame.nx + ii;
          if (skip) {
            values[k] = sc[j * bx + i] - std::abs(frame.point(static_cast<double>(ii), static_cast<double>(jj)) - c);
          } else {
            exact.push_back(k);
          }
        }
    }
  std::vector<cplx> pts(exact.size());
  for (std::size_t k = 0; k < exact.size(); ++k)
    pts[k] = frame.point(static_cast<double>(exact[k] % frame.nx), static_cast<double>(exact[k] / frame.nx));
  const auto ev = evaluate_smin(t, pts, jobs);
  for (std::size_t k = 0; k < exact.size(); ++k) values[exact[k]] = ev[k];
  return {frame, std::move(values), epsilon, membership_tol};
}

/// sigma_eps(T) sampled at cell centers over the window chosen by choose_box.
inline SpectralRegion compute_region(const ComplexMatrix& t, const PseudoParams& p, unsigned jobs = 1) {
  const Box b = choose_box(t, p, jobs);
  return compute_region_on(t, GridFrame::from_box(b, p.grid_nx, p.grid_ny), p.epsilon, p.membership_tol, jobs);
}

/// sigma(T) + D(0, eps) on a given frame; cell values are dist(lambda, sigma(T)).
inline SpectralRegion spectrum_plus_disc_on(const ComplexMatrix& t, const GridFrame& frame, double epsilon,
                                            double membership_tol = 1e-10) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("spectrum_plus_disc: epsilon must be positive");
  const auto eig = eigenvalues(t);
  const auto pts = frame_points(frame);
  std::vector<double> d(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& mu : eig) m = std::min(m, std::abs(pts[k] - mu));
    d[k] = m;
  }
  return {frame, std::move(d), epsilon, membership_tol};
}

inline SpectralRegion spectrum_plus_disc(const ComplexMatrix& t, double epsilon, const PseudoParams& p,
                                         unsigned jobs = 1) {
  PseudoParams q = p;
  q.epsilon = epsilon;
  const Box b = choose_box(t, q, jobs);
  return spectrum_plus_disc_on(t, GridFrame::from_box(b, q.grid_nx, q.grid_ny), epsilon, q.membership_tol);
}

/// Rasterized closed disc; cell values are |lambda - c| - r + eps so membership at eps is |lambda - c| <= r.
inline SpectralRegion disc_region(const GridFrame& frame, const Disc& disc, double epsilon,
                                  double membership_tol = 1e-10) {
  const auto pts = frame_points(frame);
  std::vector<double> v(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) v[k] = std::max(0.0, std::abs(pts[k] - disc.center) - disc.radius + epsilon);
  return {frame, std::move(v), epsilon, membership_tol};
}

namespace detail {

inline bool near_zero(double x, double scale) { return std::abs(x) <= 1e-12 * scale; }

// Re-index an axis-aligned frame (possibly mirrored or with swapped axes)
// so step_x is positive real and step_y positive imaginary.
inline SpectralRegion canonicalize(const GridFrame& f, const std::vector<double>& v, double eps, double tol) {
  const double scale = f.cell_size();
  const bool aligned = near_zero(f.step_x.imag(), scale) && near_zero(f.step_y.real(), scale);
  const bool swapped = near_zero(f.step_x.real(), scale) && near_zero(f.step_y.imag(), scale);
  if (!aligned && !swapped) return {f, v, eps, tol};

  // Source index (i, j) -> target (a, b).
  const std::size_t nx = swapped ? f.ny : f.nx;
  const std::size_t ny = swapped ? f.nx : f.ny;
  const double sx = swapped ? f.step_y.real() : f.step_x.real();
  const double sy = swapped ? f.step_x.imag() : f.step_y.imag();
  const bool flip_x = sx < 0.0;
  const bool flip_y = sy < 0.0;

  GridFrame g;
  g.nx = nx;
  g.ny = ny;
  g.step_x = cplx(std::abs(sx), 0.0);
  g.step_y = cplx(0.0, std::abs(sy));
  std::vector<double> out(v.size());
  for (std::size_t j = 0; j < f.ny; ++j) {
    for (std::size_t i = 0; i < f.nx; ++i) {
      std::size_t a = swapped ? j : i;
      std::size_t b = swapped ? i : j;
      if (flip_x) a = nx - 1 - a;
      if (flip_y) b = ny - 1 - b;
      out[b * nx + a] = v[j * f.nx + i];
    }
  }
  // New origin is the image of the source cell that lands at (0, 0).
  const std::size_t a0 = flip_x ? nx - 1 : 0;
  const std::size_t b0 = flip_y ? ny - 1 : 0;
  const std::size_t si = swapped ? b0 : a0;
  const std::size_t sj = swapped ? a0 : b0;
  g.origin = f.point(static_cast<double>(si), static_cast<double>(sj));
  return {g, std::move(out), eps, tol};
}

}  // namespace detail

/// sigma_eps(T + alpha I) = alpha + sigma_eps(T).
inline SpectralRegion region_translate(const SpectralRegion& r, cplx alpha) {
  GridFrame f = r.frame();
  f.origin += alpha;
  return {f, std::vector<double>(r.smin().begin(), r.smin().end()), r.epsilon(), r.membership_tol()};
}

/**
 * alpha * region: new value(lambda) = |alpha| * old value(lambda / alpha) and
 * epsilon scales by |alpha|, matching sigma_eps(alpha T) = alpha sigma_{eps/|alpha|}(T).
 */
inline SpectralRegion region_scale(const SpectralRegion& r, cplx alpha) {
  if (alpha == cplx{}) throw std::invalid_argument("region_scale: alpha must be nonzero");
  const double m = std::abs(alpha);
  GridFrame f = r.frame();
  f.origin *= alpha;
  f.step_x *= alpha;
  f.step_y *= alpha;
  std::vector<double> v(r.smin().begin(), r.smin().end());
  for (auto& x : v) x *= m;
  return detail::canonicalize(f, v, r.epsilon() * m, r.membership_tol());
}

/// Complex-conjugate reflection; maps the region of T to the region of T*.
inline SpectralRegion region_conjugate(const SpectralRegion& r) {
  GridFrame f = r.frame();
  f.origin = std::conj(f.origin);
  f.step_x = std::conj(f.step_x);
  f.step_y = std::conj(f.step_y);
  return detail::canonicalize(f, std::vector<double>(r.smin().begin(), r.smin().end()), r.epsilon(),
                              r.membership_tol());
}

/// Symmetric Hausdorff distance between two finite point sets; infinity if exactly one is empty.
inline double hausdorff_distance(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](std::span<const cplx> x, std::span<const cplx> y) {
    double worst = 0.0;
    for (const auto& p : x) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : y) {
        best = std::min(best, std::norm(p - q));
        if (best <= worst) break;
      }
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(directed(a, b), directed(b, a));
}

struct RegionComparison {
  double sym_diff_area = 0.0;
  double boundary_hausdorff = 0.0;
};

/// Requires identical grids; resampling across grids is not supported.
inline RegionComparison region_compare(const SpectralRegion& a, const SpectralRegion& b) {
  if (!a.frame().matches(b.frame())) throw dimension_error("region_compare: grids differ");
  std::size_t diff = 0;
  for (std::size_t j = 0; j < a.ny(); ++j)
    for (std::size_t i = 0; i < a.nx(); ++i) diff += a.member(i, j) != b.member(i, j);
  const auto ba = a.boundary_points();
  const auto bb = b.boundary_points();
  return {static_cast<double>(diff) * a.frame().cell_area(), hausdorff_distance(ba, bb)};
}

/**
 * Cellwise intersection of the member masks for a strictly decreasing list
 * of epsilons, all thresholded on one s_min grid (window chosen for the
 * largest epsilon). Masks are nested, so the intersection is the mask of the
 * smallest epsilon; the result carries that epsilon.
 */
inline SpectralRegion spectrum_via_intersection(const ComplexMatrix& t, std::span<const double> eps_list,
                                                const PseudoParams& p, unsigned jobs = 1) {
  if (eps_list.empty()) throw std::invalid_argument("spectrum_via_intersection: empty epsilon list");
  for (std::size_t k = 0; k < eps_list.size(); ++k) {
    if (!(eps_list[k] > 0.0)) throw std::invalid_argument("spectrum_via_intersection: epsilons must be positive");
    if (k > 0 && !(eps_list[k] < eps_list[k - 1]))
      throw std::invalid_argument("spectrum_via_intersection: epsilons must be strictly decreasing");
  }
  PseudoParams q = p;
  q.epsilon = eps_list.front();
  return compute_region(t, q, jobs).at_epsilon(eps_list.back());
}

}  // namespace pspec
