#ifndef WEYLKIT_CONNECTIVITY_HPP
#define WEYLKIT_CONNECTIVITY_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "weylkit/raster.hpp"
#include "weylkit/spectral_sets.hpp"

namespace weylkit {

/// Marks the cells a region occupies on `mask`.
inline void rasterize(const Region& region, CellMask& mask) {
  const GridFrame& f = mask.frame();
  auto outline = [&](Point c, double r) {
    if (r == 0.0) {
      mask.mark_point(c);
      return;
    }
    const int n = std::max(64, static_cast<int>(std::ceil(2.0 * std::numbers::pi * r / (0.25 * f.cell))));
    Point prev = c + Point(r, 0.0);
    for (int k = 1; k <= n; ++k) {
      const Point cur = c + std::polar(r, 2.0 * std::numbers::pi * k / n);
      mask.mark_segment(prev, cur);
      prev = cur;
    }
  };
  // Visits the cells whose centres fall inside `box`.
  auto for_cells_in = [&](const BoundingBox& box, auto&& fn) {
    const int i0 = std::max(0, static_cast<int>(std::floor((box.xmin - f.origin.real()) / f.cell)));
    const int i1 = std::min(f.nx - 1, static_cast<int>(std::floor((box.xmax - f.origin.real()) / f.cell)));
    const int j0 = std::max(0, static_cast<int>(std::floor((box.ymin - f.origin.imag()) / f.cell)));
    const int j1 = std::min(f.ny - 1, static_cast<int>(std::floor((box.ymax - f.origin.imag()) / f.cell)));
    for (int j = j0; j <= j1; ++j)
      for (int i = i0; i <= i1; ++i) fn(i, j);
  };

  std::visit(Overloaded{
                 [](const EmptySet&) {},
                 [&](const FinitePoints& s) {
                   for (auto p : s.points) mask.mark_point(p);
                 },
                 [&](const SequenceWithLimits& s) {
                   for (auto p : s.prefix) mask.mark_point(p);
                   for (auto p : s.limits) mask.mark_point(p);
                   if (!s.has_rule()) return;
                   // Tail terms until they settle inside the limit's cell.
                   for (long n = static_cast<long>(s.prefix.size()) + 1; n <= SequenceWithLimits::kMaxRuleIndex; ++n) {
                     const Point t = s.term(n);
                     if (std::abs(t - s.offset) < 0.5 * f.cell) break;
                     mask.mark_point(t);
                   }
                 },
                 [&](const Circle& c) { outline(c.center, c.radius); },
                 [&](const Disk& d) {
                   mask.mark_point(d.center);
                   outline(d.center, d.radius);
                   BoundingBox box;
                   box.expand(d.center - Point(d.radius, d.radius));
                   box.expand(d.center + Point(d.radius, d.radius));
                   for_cells_in(box, [&](int i, int j) {
                     if (std::abs(f.center(i, j) - d.center) <= d.radius) mask.set(i, j);
                   });
                 },
                 [&](const CurveRegion& c) {
                   const Curve& curve = c.curve();
                   for (std::size_t k = 0; k < curve.size(); ++k) mask.mark_segment(curve[k], curve.next(k));
                   bool any = false;
                   for (const auto& [id, inc] : c.include_hole) any = any || inc;
                   if (!any) return;
                   for_cells_in(curve.bbox(), [&](int i, int j) {
                     if (mask.get(i, j)) return;
                     const auto hole = c.map->hole_at(f.center(i, j));
                     if (hole && c.includes(*hole)) mask.set(i, j);
                   });
                 },
                 [&](const RegionUnion& u) {
                   for (const auto& part : u.parts) rasterize(part, mask);
                 },
             },
             region.variant());
}

/// Whether the union of `regions` is connected at the given grid resolution.
/// Every set is thickened by one cell and occupied cells are joined with
/// 8-connectivity. The union of empty sets counts as connected.
inline bool union_is_connected(const std::vector<Region>& regions, int grid_resolution = kDefaultGrid) {
  if (grid_resolution < kMinGridResolution)
    throw InvalidInput("grid resolution must be at least " + std::to_string(kMinGridResolution));
  BoundingBox box;
  bool all_empty = true;
  for (const auto& r : regions) {
    if (is_empty(r)) continue;
    all_empty = false;
    box.expand(bbox(r));
  }
  if (all_empty) return true;

  CellMask mask(padded_frame(box, grid_resolution));
  for (const auto& r : regions) rasterize(r, mask);
  mask.dilate();
  std::vector<int> labels;
  return label_components(mask.frame(), mask.bits(), /*eight_connected=*/true, labels) == 1;
}

/// Whether the complement of `region` is connected. The padded frame is free,
/// so the unbounded component is always present; free cells are joined with
/// 4-connectivity after thickening the region by one cell.
inline bool complement_is_connected(const Region& region, int grid_resolution = kDefaultGrid) {
  if (grid_resolution < kMinGridResolution)
    throw InvalidInput("grid resolution must be at least " + std::to_string(kMinGridResolution));
  if (is_empty(region)) return true;
  CellMask mask(padded_frame(bbox(region), grid_resolution));
  rasterize(region, mask);
  mask.dilate();
  std::vector<std::uint8_t> free(mask.bits().size());
  for (std::size_t k = 0; k < free.size(); ++k) free[k] = mask.bits()[k] ? 0 : 1;
  std::vector<int> labels;
  return label_components(mask.frame(), free, /*eight_connected=*/false, labels) <= 1;
}

}  // namespace weylkit

#endif  // WEYLKIT_CONNECTIVITY_HPP
