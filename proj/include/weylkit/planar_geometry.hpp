#ifndef WEYLKIT_PLANAR_GEOMETRY_HPP
#define WEYLKIT_PLANAR_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/errors.hpp"
#include "weylkit/raster.hpp"

namespace weylkit {

inline constexpr int kDefaultSamples = 4096;
inline constexpr int kDefaultGrid = 512;
inline constexpr int kMinCurveSamples = 16;
inline constexpr int kMinGridResolution = 64;

/// Closed, oriented polyline sampled from a parametrised curve. The successor
/// of the last sample is the first one.
class Curve {
 public:
  explicit Curve(std::vector<Point> samples) : samples_(std::move(samples)) {
    if (samples_.size() < static_cast<std::size_t>(kMinCurveSamples))
      throw InvalidInput("curve needs at least " + std::to_string(kMinCurveSamples) + " samples, got " +
                         std::to_string(samples_.size()));
    for (std::size_t k = 0; k < samples_.size(); ++k) {
      if (!is_finite(samples_[k])) throw InvalidInput("curve sample " + std::to_string(k) + " is not finite");
      box_.expand(samples_[k]);
      max_gap_ = std::max(max_gap_, std::abs(samples_[(k + 1) % samples_.size()] - samples_[k]));
    }
  }

  std::size_t size() const { return samples_.size(); }
  const std::vector<Point>& samples() const { return samples_; }
  Point operator[](std::size_t k) const { return samples_[k]; }
  Point next(std::size_t k) const { return samples_[(k + 1) % samples_.size()]; }

  /// Largest distance between consecutive samples (closing edge included).
  double max_gap() const { return max_gap_; }
  const BoundingBox& bbox() const { return box_; }

  Curve reversed() const { return Curve(std::vector<Point>(samples_.rbegin(), samples_.rend())); }

  Curve translated(Point offset) const {
    std::vector<Point> out(samples_);
    for (auto& s : out) s += offset;
    return Curve(std::move(out));
  }

  double distance_to_samples(Point p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : samples_) best = std::min(best, std::abs(s - p));
    return best;
  }

  double distance_to_polyline(Point p) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < samples_.size(); ++k) best = std::min(best, distance_to_segment(p, samples_[k], next(k)));
    return best;
  }

  /// True when the samples span less than 1e-12 relative to their magnitude.
  bool degenerate() const {
    double scale = 1.0;
    for (const auto& s : samples_) scale = std::max(scale, std::abs(s));
    return box_.diameter() < 1e-12 * scale;
  }

 private:
  std::vector<Point> samples_;
  BoundingBox box_;
  double max_gap_ = 0.0;
};

/// Turns of the polyline around `p`, as a real number: the sum of the signed
/// angles subtended by each edge, divided by 2*pi. Only requires `p` to
/// differ from every sample.
inline double winding_sum(const Curve& curve, Point p) {
  double total = 0.0;
  for (std::size_t k = 0; k < curve.size(); ++k) {
    const Point a = curve[k] - p;
    const Point b = curve.next(k) - p;
    if (a == Point(0.0, 0.0)) throw PointOnCurve("query point coincides with a curve sample");
    const double cross = a.real() * b.imag() - a.imag() * b.real();
    const double dot = a.real() * b.real() + a.imag() * b.imag();
    total += std::atan2(cross, dot);
  }
  return total / (2.0 * std::numbers::pi);
}

inline constexpr double kWindingSnapTolerance = 1e-6;

inline int snap_winding(double raw) {
  const double nearest = std::round(raw);
  if (std::abs(raw - nearest) >= kWindingSnapTolerance)
    throw NumericFailure("winding sum " + std::to_string(raw) + " is not within 1e-6 of an integer");
  return static_cast<int>(nearest);
}

/// Winding number of `curve` about `point`. The point must stay farther than
/// ten sample gaps from every sample; closer queries are ill posed at this
/// sampling and raise PointOnCurve.
inline int winding_number(const Curve& curve, Point point) {
  if (!is_finite(point)) throw InvalidInput("winding query point is not finite");
  const double margin = 10.0 * curve.max_gap();
  const double dist = curve.distance_to_samples(point);
  if (!(dist > margin))
    throw PointOnCurve("point lies within " + std::to_string(margin) + " of the curve (distance " +
                       std::to_string(dist) + ")");
  return snap_winding(winding_sum(curve, point));
}

/// Bounded component of the complement of a curve, as seen on a raster.
struct Hole {
  Point representative;
  int winding = 0;
  int cell_count = 0;
  int component_id = 0;
};

/// Raster decomposition of the plane around a curve. Every cell is either
/// boundary (within one cell diagonal of the polyline), outside (the
/// component touching the frame), or belongs to exactly one hole.
class HoleMap {
 public:
  static constexpr int kBoundary = -2;
  static constexpr int kOutside = -1;

  HoleMap(Curve curve, GridFrame frame, std::vector<int> labels, std::vector<Hole> holes)
      : curve_(std::move(curve)), frame_(frame), labels_(std::move(labels)), holes_(std::move(holes)) {}

  const Curve& curve() const { return curve_; }
  const GridFrame& frame() const { return frame_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<Hole>& holes() const { return holes_; }

  /// Id of the hole containing `p`, if any. Points in the boundary band are
  /// resolved by matching their polyline winding against nearby hole cells.
  std::optional<int> hole_at(Point p) const {
    const auto cell = frame_.locate(p);
    if (!cell) return std::nullopt;
    const int label = labels_[frame_.index(cell->first, cell->second)];
    if (label >= 0) return label;
    if (label == kOutside) return std::nullopt;
    if (curve_.distance_to_polyline(p) < 1e-14) return std::nullopt;
    double raw = 0.0;
    try {
      raw = winding_sum(curve_, p);
    } catch (const PointOnCurve&) {
      return std::nullopt;
    }
    const int w = static_cast<int>(std::lround(raw));
    std::optional<int> best;
    double best_d = std::numeric_limits<double>::infinity();
    constexpr int kSearch = 4;
    for (int dj = -kSearch; dj <= kSearch; ++dj)
      for (int di = -kSearch; di <= kSearch; ++di) {
        const int a = cell->first + di, b = cell->second + dj;
        if (a < 0 || b < 0 || a >= frame_.nx || b >= frame_.ny) continue;
        const int l = labels_[frame_.index(a, b)];
        if (l < 0 || holes_[static_cast<std::size_t>(l)].winding != w) continue;
        const double d = std::abs(frame_.center(a, b) - p);
        if (d < best_d) {
          best_d = d;
          best = l;
        }
      }
    return best;
  }

 private:
  Curve curve_;
  GridFrame frame_;
  std::vector<int> labels_;
  std::vector<Hole> holes_;
};

namespace detail {

// Two-pass 3-4 chamfer distance (in units of cell/3) from the boundary cells.
inline std::vector<int> chamfer_distance(const GridFrame& f, const std::vector<int>& labels) {
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<int> d(f.size(), kInf);
  for (std::size_t k = 0; k < f.size(); ++k)
    if (labels[k] == HoleMap::kBoundary) d[k] = 0;
  auto relax = [&](int i, int j, int a, int b, int w) {
    if (a < 0 || b < 0 || a >= f.nx || b >= f.ny) return;
    int& cur = d[f.index(i, j)];
    cur = std::min(cur, d[f.index(a, b)] + w);
  };
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i) {
      relax(i, j, i - 1, j, 3);
      relax(i, j, i, j - 1, 3);
      relax(i, j, i - 1, j - 1, 4);
      relax(i, j, i + 1, j - 1, 4);
    }
  for (int j = f.ny - 1; j >= 0; --j)
    for (int i = f.nx - 1; i >= 0; --i) {
      relax(i, j, i + 1, j, 3);
      relax(i, j, i, j + 1, 3);
      relax(i, j, i + 1, j + 1, 4);
      relax(i, j, i - 1, j + 1, 4);
    }
  return d;
}

}  // namespace detail

/// Rasterises the padded bounding box of `curve`, marks the boundary band,
/// flood-fills the rest and keeps the components that do not reach the frame.
inline HoleMap analyze_holes(const Curve& curve, int grid_resolution = kDefaultGrid) {
  if (grid_resolution < kMinGridResolution)
    throw InvalidInput("grid resolution must be at least " + std::to_string(kMinGridResolution));
  if (curve.degenerate()) throw DegenerateCurve("curve bounding box is degenerate; holes are undefined");

  const GridFrame f = padded_frame(curve.bbox(), grid_resolution);
  const double band = f.cell * std::numbers::sqrt2;

  std::vector<std::uint8_t> boundary(f.size(), 0);
  for (std::size_t k = 0; k < curve.size(); ++k) {
    const Point a = curve[k];
    const Point b = curve.next(k);
    const double x0 = std::min(a.real(), b.real()) - band, x1 = std::max(a.real(), b.real()) + band;
    const double y0 = std::min(a.imag(), b.imag()) - band, y1 = std::max(a.imag(), b.imag()) + band;
    const int i0 = std::max(0, static_cast<int>(std::floor((x0 - f.origin.real()) / f.cell)));
    const int i1 = std::min(f.nx - 1, static_cast<int>(std::floor((x1 - f.origin.real()) / f.cell)));
    const int j0 = std::max(0, static_cast<int>(std::floor((y0 - f.origin.imag()) / f.cell)));
    const int j1 = std::min(f.ny - 1, static_cast<int>(std::floor((y1 - f.origin.imag()) / f.cell)));
    for (int j = j0; j <= j1; ++j)
      for (int i = i0; i <= i1; ++i)
        if (distance_to_segment(f.center(i, j), a, b) <= band) boundary[f.index(i, j)] = 1;
  }

  std::vector<std::uint8_t> free(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) free[k] = boundary[k] ? 0 : 1;
  std::vector<int> comp;
  const int ncomp = label_components(f, free, /*eight_connected=*/false, comp);

  std::vector<char> touches_frame(static_cast<std::size_t>(ncomp), 0);
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i) {
      const int c = comp[f.index(i, j)];
      if (c >= 0 && f.on_rim(i, j)) touches_frame[static_cast<std::size_t>(c)] = 1;
    }

  // Bounded components become holes, numbered in order of discovery.
  std::vector<int> hole_of(static_cast<std::size_t>(ncomp), HoleMap::kOutside);
  int nholes = 0;
  for (int c = 0; c < ncomp; ++c)
    if (!touches_frame[static_cast<std::size_t>(c)]) hole_of[static_cast<std::size_t>(c)] = nholes++;

  std::vector<int> labels(f.size());
  for (std::size_t k = 0; k < f.size(); ++k)
    labels[k] = comp[k] < 0 ? HoleMap::kBoundary : hole_of[static_cast<std::size_t>(comp[k])];

  const std::vector<int> depth = detail::chamfer_distance(f, labels);
  std::vector<Hole> holes(static_cast<std::size_t>(nholes));
  std::vector<int> best_depth(static_cast<std::size_t>(nholes), -1);
  std::vector<std::size_t> best_cell(static_cast<std::size_t>(nholes), 0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const int h = labels[k];
    if (h < 0) continue;
    auto& hole = holes[static_cast<std::size_t>(h)];
    ++hole.cell_count;
    if (depth[k] > best_depth[static_cast<std::size_t>(h)]) {
      best_depth[static_cast<std::size_t>(h)] = depth[k];
      best_cell[static_cast<std::size_t>(h)] = k;
    }
  }
  for (int h = 0; h < nholes; ++h) {
    auto& hole = holes[static_cast<std::size_t>(h)];
    hole.component_id = h;
    hole.representative = f.center(best_cell[static_cast<std::size_t>(h)]);
    // The representative is more than a cell diagonal from the polyline, so
    // the polyline winding is exact there.
    hole.winding = snap_winding(winding_sum(curve, hole.representative));
  }
  return HoleMap(curve, f, std::move(labels), std::move(holes));
}

inline std::vector<Hole> find_holes(const Curve& curve, int grid_resolution = kDefaultGrid) {
  return analyze_holes(curve, grid_resolution).holes();
}

}  // namespace weylkit

#endif  // WEYLKIT_PLANAR_GEOMETRY_HPP
