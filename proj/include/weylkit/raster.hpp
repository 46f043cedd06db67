#ifndef WEYLKIT_RASTER_HPP
#define WEYLKIT_RASTER_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace weylkit {

using Point = std::complex<double>;

inline bool is_finite(Point p) { return std::isfinite(p.real()) && std::isfinite(p.imag()); }

/// Axis-aligned box; starts empty and grows with expand().
struct BoundingBox {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  bool empty() const { return xmin > xmax; }

  void expand(Point p) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }

  void expand(const BoundingBox& other) {
    if (other.empty()) return;
    expand(Point(other.xmin, other.ymin));
    expand(Point(other.xmax, other.ymax));
  }

  double width() const { return empty() ? 0.0 : xmax - xmin; }
  double height() const { return empty() ? 0.0 : ymax - ymin; }
  double extent() const { return std::max(width(), height()); }
  double diameter() const { return std::hypot(width(), height()); }

  bool contains(Point p, double margin = 0.0) const {
    return !empty() && p.real() >= xmin - margin && p.real() <= xmax + margin &&
           p.imag() >= ymin - margin && p.imag() <= ymax + margin;
  }
};

/// Square-cell raster over a rectangle. Cell (i, j) has column i and row j;
/// linear index is j * nx + i.
struct GridFrame {
  Point origin;  // lower-left corner
  double cell = 1.0;
  int nx = 0;
  int ny = 0;

  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
  }
  Point center(int i, int j) const { return origin + Point((i + 0.5) * cell, (j + 0.5) * cell); }
  Point center(std::size_t idx) const {
    return center(static_cast<int>(idx % static_cast<std::size_t>(nx)),
                  static_cast<int>(idx / static_cast<std::size_t>(nx)));
  }

  std::optional<std::pair<int, int>> locate(Point p) const {
    const double fx = (p.real() - origin.real()) / cell;
    const double fy = (p.imag() - origin.imag()) / cell;
    if (!(fx >= 0.0 && fy >= 0.0)) return std::nullopt;
    const auto i = static_cast<long long>(std::floor(fx));
    const auto j = static_cast<long long>(std::floor(fy));
    if (i >= nx || j >= ny) return std::nullopt;
    return std::pair<int, int>(static_cast<int>(i), static_cast<int>(j));
  }

  bool on_rim(int i, int j) const { return i == 0 || j == 0 || i == nx - 1 || j == ny - 1; }
};

/// Grid over `box` padded by 10% of its larger side on every side, with
/// `resolution` cells across the larger padded dimension. A degenerate box
/// gets unit extent so the frame stays well defined.
inline GridFrame padded_frame(const BoundingBox& box, int resolution) {
  double extent = box.extent();
  if (!(extent > 1e-12)) extent = 1.0;
  const double pad = 0.1 * extent;
  const double cx = 0.5 * (box.xmin + box.xmax);
  const double cy = 0.5 * (box.ymin + box.ymax);
  const double w = std::max(box.width(), 0.0) + 2.0 * pad;
  const double h = std::max(box.height(), 0.0) + 2.0 * pad;
  GridFrame f;
  f.cell = (extent + 2.0 * pad) / resolution;
  f.nx = std::max(1, static_cast<int>(std::ceil(w / f.cell - 1e-9)));
  f.ny = std::max(1, static_cast<int>(std::ceil(h / f.cell - 1e-9)));
  f.origin = Point(cx - 0.5 * f.nx * f.cell, cy - 0.5 * f.ny * f.cell);
  return f;
}

inline double distance_to_segment(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

/// Binary occupancy raster.
class CellMask {
 public:
  explicit CellMask(const GridFrame& frame) : frame_(frame), bits_(frame.size(), 0) {}

  const GridFrame& frame() const { return frame_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  bool get(int i, int j) const { return bits_[frame_.index(i, j)] != 0; }
  void set(int i, int j) { bits_[frame_.index(i, j)] = 1; }
  void set_index(std::size_t idx) { bits_[idx] = 1; }

  void mark_point(Point p) {
    if (auto c = frame_.locate(p)) set(c->first, c->second);
  }

  /// Marks every cell the segment passes through, sampled at quarter-cell steps.
  void mark_segment(Point a, Point b) {
    const double len = std::abs(b - a);
    const int steps = std::max(1, static_cast<int>(std::ceil(4.0 * len / frame_.cell)));
    for (int s = 0; s <= steps; ++s) mark_point(a + (b - a) * (static_cast<double>(s) / steps));
  }

  /// Grows the occupied set by one cell in all eight directions.
  void dilate() {
    std::vector<std::uint8_t> out(bits_);
    for (int j = 0; j < frame_.ny; ++j)
      for (int i = 0; i < frame_.nx; ++i) {
        if (!get(i, j)) continue;
        for (int dj = -1; dj <= 1; ++dj)
          for (int di = -1; di <= 1; ++di) {
            const int a = i + di, b = j + dj;
            if (a >= 0 && b >= 0 && a < frame_.nx && b < frame_.ny) out[frame_.index(a, b)] = 1;
          }
      }
    bits_ = std::move(out);
  }

  std::size_t count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
  }

 private:
  GridFrame frame_;
  std::vector<std::uint8_t> bits_;
};

/// Labels connected components of the cells where `active` is nonzero.
/// Inactive cells get -1; components are numbered 0.. in row-major order of
/// their first cell. Returns the number of components.
inline int label_components(const GridFrame& frame, const std::vector<std::uint8_t>& active,
                            bool eight_connected, std::vector<int>& labels) {
  labels.assign(frame.size(), -1);
  int next = 0;
  std::deque<std::size_t> queue;
  for (std::size_t start = 0; start < frame.size(); ++start) {
    if (!active[start] || labels[start] >= 0) continue;
    labels[start] = next;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::size_t idx = queue.front();
      queue.pop_front();
      const int i = static_cast<int>(idx % static_cast<std::size_t>(frame.nx));
      const int j = static_cast<int>(idx / static_cast<std::size_t>(frame.nx));
      for (int dj = -1; dj <= 1; ++dj)
        for (int di = -1; di <= 1; ++di) {
          if (di == 0 && dj == 0) continue;
          if (!eight_connected && di != 0 && dj != 0) continue;
          const int a = i + di, b = j + dj;
          if (a < 0 || b < 0 || a >= frame.nx || b >= frame.ny) continue;
          const std::size_t n = frame.index(a, b);
          if (active[n] && labels[n] < 0) {
            labels[n] = next;
            queue.push_back(n);
          }
        }
    }
    ++next;
  }
  return next;
}

}  // namespace weylkit

#endif  // WEYLKIT_RASTER_HPP
