#ifndef WEYLKIT_SPECTRAL_SETS_HPP
#define WEYLKIT_SPECTRAL_SETS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weylkit/errors.hpp"
#include "weylkit/planar_geometry.hpp"

namespace weylkit {

inline constexpr double kDefaultTol = 1e-9;

// ---------------------------------------------------------------------------
// Region grammar

struct EmptySet {};

struct FinitePoints {
  std::vector<Point> points;
};

/// Countable set given by a stored prefix, an extension rule and its limit
/// points. The only rule understood is "1/n": term n (n >= 1) equals
/// offset + scale / n. An empty tag means the prefix is the whole sequence.
struct SequenceWithLimits {
  static constexpr std::size_t kMaxPrefix = 64;
  static constexpr long kMaxRuleIndex = 1'000'000;

  std::vector<Point> prefix;
  std::string rule_tag;
  std::vector<Point> limits;
  Point offset{0.0, 0.0};
  Point scale{1.0, 0.0};

  bool has_rule() const { return rule_tag == "1/n"; }
  Point term(long n) const { return offset + scale / static_cast<double>(n); }

  /// Index of the rule term within `tol` of `p`, if one exists below kMaxRuleIndex.
  std::optional<long> term_index(Point p, double tol) const {
    if (!has_rule()) return std::nullopt;
    const Point d = p - offset;
    if (std::abs(d) == 0.0) return std::nullopt;
    const double est = (scale / d).real();
    if (!std::isfinite(est) || est < 0.5 || est > kMaxRuleIndex + 1.5) return std::nullopt;
    const long centre = std::lround(est);
    for (long n = std::max(1L, centre - 1); n <= std::min(kMaxRuleIndex, centre + 1); ++n)
      if (std::abs(term(n) - p) <= tol) return n;
    return std::nullopt;
  }
};

struct Circle {
  Point center;
  double radius = 0.0;
};

struct Disk {
  Point center;
  double radius = 0.0;
  bool closed = true;
};

/// A curve together with a chosen subset of its holes.
struct CurveRegion {
  std::shared_ptr<const HoleMap> map;
  std::map<int, bool> include_hole;
  int grid = kDefaultGrid;  // resolution `map` was built at

  bool includes(int hole_id) const {
    auto it = include_hole.find(hole_id);
    return it != include_hole.end() && it->second;
  }
  const Curve& curve() const { return map->curve(); }
  const std::vector<Hole>& holes() const { return map->holes(); }

  /// Curve plus the holes whose winding satisfies `keep`.
  static CurveRegion from_curve(const Curve& curve, int grid_resolution, const std::function<bool(int)>& keep) {
    CurveRegion r;
    r.map = std::make_shared<const HoleMap>(analyze_holes(curve, grid_resolution));
    r.grid = grid_resolution;
    for (const auto& h : r.map->holes()) r.include_hole[h.component_id] = keep(h.winding);
    return r;
  }
};

class Region;

struct RegionUnion {
  std::vector<Region> parts;
};

class Region {
 public:
  using Variant = std::variant<EmptySet, FinitePoints, SequenceWithLimits, Circle, Disk, CurveRegion, RegionUnion>;

  Region() : v_(EmptySet{}) {}
  template <typename T>
    requires std::is_constructible_v<Variant, T&&>
  Region(T&& alt) : v_(std::forward<T>(alt)) {}  // NOLINT(google-explicit-constructor)

  static Region empty() { return Region(EmptySet{}); }
  static Region points(std::vector<Point> pts) { return Region(FinitePoints{std::move(pts)}); }
  static Region circle(Point c, double r) { return Region(Circle{c, r}); }
  static Region disk(Point c, double r, bool closed = true) { return Region(Disk{c, r, closed}); }
  static Region union_of(std::vector<Region> parts) { return Region(RegionUnion{std::move(parts)}); }

  /// Sequence offset + scale/n for n = 1..prefix_len, with limit `offset`.
  static Region reciprocal_sequence(std::size_t prefix_len = SequenceWithLimits::kMaxPrefix, Point offset = 0.0,
                                    Point scale = 1.0, bool with_limit = true) {
    SequenceWithLimits s;
    s.rule_tag = "1/n";
    s.offset = offset;
    s.scale = scale;
    for (std::size_t n = 1; n <= prefix_len; ++n) s.prefix.push_back(s.term(static_cast<long>(n)));
    if (with_limit) s.limits.push_back(offset);
    return Region(std::move(s));
  }

  const Variant& variant() const { return v_; }
  template <typename T>
  const T* as() const {
    return std::get_if<T>(&v_);
  }

 private:
  Variant v_;
};

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// ---------------------------------------------------------------------------
// Queries

inline BoundingBox bbox(const Region& region) {
  BoundingBox box;
  std::visit(Overloaded{
                 [](const EmptySet&) {},
                 [&](const FinitePoints& s) {
                   for (auto p : s.points) box.expand(p);
                 },
                 [&](const SequenceWithLimits& s) {
                   for (auto p : s.prefix) box.expand(p);
                   for (auto p : s.limits) box.expand(p);
                   if (s.has_rule()) box.expand(s.offset);
                 },
                 [&](const Circle& c) {
                   box.expand(c.center - Point(c.radius, c.radius));
                   box.expand(c.center + Point(c.radius, c.radius));
                 },
                 [&](const Disk& d) {
                   box.expand(d.center - Point(d.radius, d.radius));
                   box.expand(d.center + Point(d.radius, d.radius));
                 },
                 [&](const CurveRegion& c) { box.expand(c.curve().bbox()); },
                 [&](const RegionUnion& u) {
                   for (const auto& p : u.parts) box.expand(bbox(p));
                 },
             },
             region.variant());
  return box;
}

inline bool contains(const Region& region, Point p, double tol = kDefaultTol) {
  return std::visit(
      Overloaded{
          [](const EmptySet&) { return false; },
          [&](const FinitePoints& s) {
            return std::any_of(s.points.begin(), s.points.end(), [&](Point q) { return std::abs(p - q) <= tol; });
          },
          [&](const SequenceWithLimits& s) {
            auto near = [&](Point q) { return std::abs(p - q) <= tol; };
            return std::any_of(s.prefix.begin(), s.prefix.end(), near) ||
                   std::any_of(s.limits.begin(), s.limits.end(), near) || s.term_index(p, tol).has_value();
          },
          [&](const Circle& c) { return std::abs(std::abs(p - c.center) - c.radius) <= tol; },
          [&](const Disk& d) {
            const double r = std::abs(p - d.center);
            return d.closed ? r <= d.radius + tol : r <= d.radius - tol;
          },
          [&](const CurveRegion& c) {
            if (c.curve().distance_to_polyline(p) <= tol) return true;
            const auto hole = c.map->hole_at(p);
            return hole.has_value() && c.includes(*hole);
          },
          [&](const RegionUnion& u) {
            return std::any_of(u.parts.begin(), u.parts.end(), [&](const Region& r) { return contains(r, p, tol); });
          },
      },
      region.variant());
}

inline bool is_empty(const Region& region) {
  return std::visit(Overloaded{
                        [](const EmptySet&) { return true; },
                        [](const FinitePoints& s) { return s.points.empty(); },
                        [](const SequenceWithLimits& s) { return s.prefix.empty() && s.limits.empty(); },
                        [](const Circle&) { return false; },
                        [](const Disk& d) { return !d.closed && d.radius <= 0.0; },
                        [](const CurveRegion&) { return false; },
                        [](const RegionUnion& u) { return std::all_of(u.parts.begin(), u.parts.end(), is_empty); },
                    },
                    region.variant());
}

/// Isolated points of a region, keeping sequences intact where their whole
/// tail is isolated.
struct IsolatedParts {
  std::vector<Point> points;
  std::vector<SequenceWithLimits> sequences;

  std::vector<Point> flatten() const {
    std::vector<Point> out(points);
    for (const auto& s : sequences) out.insert(out.end(), s.prefix.begin(), s.prefix.end());
    return out;
  }
};

inline IsolatedParts isolated_parts(const Region& region, double tol = kDefaultTol);

inline std::vector<Point> isolated_points(const Region& region, double tol = kDefaultTol) {
  return isolated_parts(region, tol).flatten();
}

namespace detail {

inline bool near_any(Point p, const std::vector<Point>& pts, double tol) {
  return std::any_of(pts.begin(), pts.end(), [&](Point q) { return std::abs(p - q) <= tol; });
}

inline void push_unique(std::vector<Point>& pts, Point p, double tol) {
  if (!near_any(p, pts, tol)) pts.push_back(p);
}

}  // namespace detail

/// True when the region has a part that is not a countable set.
inline bool has_continuum(const Region& region) {
  return std::visit(Overloaded{
                        [](const EmptySet&) { return false; },
                        [](const FinitePoints&) { return false; },
                        [](const SequenceWithLimits&) { return false; },
                        [](const Circle& c) { return c.radius > 0.0; },
                        [](const Disk& d) { return d.radius > 0.0; },
                        [](const CurveRegion&) { return true; },
                        [](const RegionUnion& u) { return std::any_of(u.parts.begin(), u.parts.end(), has_continuum); },
                    },
                    region.variant());
}

inline IsolatedParts isolated_parts(const Region& region, double tol) {
  IsolatedParts out;
  std::visit(Overloaded{
                 [](const EmptySet&) {},
                 [&](const FinitePoints& s) {
                   for (auto p : s.points) detail::push_unique(out.points, p, tol);
                 },
                 [&](const SequenceWithLimits& s) {
                   SequenceWithLimits kept = s;
                   kept.prefix.clear();
                   for (auto p : s.prefix)
                     if (!detail::near_any(p, s.limits, tol)) kept.prefix.push_back(p);
                   if (!kept.prefix.empty()) out.sequences.push_back(std::move(kept));
                 },
                 [&](const Circle& c) {
                   if (c.radius == 0.0) out.points.push_back(c.center);
                 },
                 [&](const Disk& d) {
                   if (d.closed && d.radius == 0.0) out.points.push_back(d.center);
                 },
                 [](const CurveRegion&) {},
                 [&](const RegionUnion& u) {
                   std::vector<IsolatedParts> per_part;
                   std::vector<std::vector<Point>> flat;
                   for (const auto& part : u.parts) {
                     per_part.push_back(isolated_parts(part, tol));
                     flat.push_back(per_part.back().flatten());
                   }
                   // A candidate from part i survives if every other part
                   // either misses it or also has it as an isolated point.
                   auto survives = [&](Point p, std::size_t i) {
                     for (std::size_t j = 0; j < u.parts.size(); ++j) {
                       if (j == i) continue;
                       if (contains(u.parts[j], p, tol) && !detail::near_any(p, flat[j], tol)) return false;
                     }
                     return true;
                   };
                   for (std::size_t i = 0; i < u.parts.size(); ++i) {
                     for (auto p : per_part[i].points)
                       if (survives(p, i)) detail::push_unique(out.points, p, tol);
                     for (const auto& s : per_part[i].sequences) {
                       bool whole = std::all_of(s.prefix.begin(), s.prefix.end(), [&](Point p) { return survives(p, i); });
                       // The tail accumulates at the rule's limit; a continuous
                       // part covering that limit swallows tail terms.
                       for (std::size_t j = 0; whole && s.has_rule() && j < u.parts.size(); ++j)
                         if (j != i && has_continuum(u.parts[j]) && contains(u.parts[j], s.offset, tol)) whole = false;
                       if (whole) {
                         out.sequences.push_back(s);
                       } else {
                         for (auto p : s.prefix)
                           if (survives(p, i)) detail::push_unique(out.points, p, tol);
                       }
                     }
                   }
                 },
             },
             region.variant());
  return out;
}

inline constexpr int kBoundaryProbes = 64;

/// Deterministic probe set used to decide containments and set identities:
/// stored points, limits, a few rule terms, hole representatives and 64
/// boundary samples per continuous part.
inline std::vector<Point> probe_points(const Region& region) {
  std::vector<Point> out;
  auto ring = [&](Point c, double r, int count) {
    for (int k = 0; k < count; ++k)
      out.push_back(c + std::polar(r, 2.0 * std::numbers::pi * k / count));
  };
  std::visit(Overloaded{
                 [](const EmptySet&) {},
                 [&](const FinitePoints& s) { out.insert(out.end(), s.points.begin(), s.points.end()); },
                 [&](const SequenceWithLimits& s) {
                   out.insert(out.end(), s.prefix.begin(), s.prefix.end());
                   out.insert(out.end(), s.limits.begin(), s.limits.end());
                   if (s.has_rule()) {
                     for (long n : {static_cast<long>(s.prefix.size()) + 1, 100L, 1000L, 10000L, 1000000L})
                       out.push_back(s.term(n));
                   }
                 },
                 [&](const Circle& c) {
                   if (c.radius == 0.0)
                     out.push_back(c.center);
                   else
                     ring(c.center, c.radius, kBoundaryProbes);
                 },
                 [&](const Disk& d) {
                   out.push_back(d.center);
                   if (d.radius > 0.0) {
                     ring(d.center, 0.5 * d.radius, 16);
                     ring(d.center, d.closed ? d.radius : d.radius * (1.0 - 1e-6), kBoundaryProbes);
                   }
                 },
                 [&](const CurveRegion& c) {
                   const std::size_t n = c.curve().size();
                   for (int k = 0; k < kBoundaryProbes; ++k) out.push_back(c.curve()[k * n / kBoundaryProbes]);
                   for (const auto& h : c.holes()) out.push_back(h.representative);
                 },
                 [&](const RegionUnion& u) {
                   for (const auto& p : u.parts) {
                     auto sub = probe_points(p);
                     out.insert(out.end(), sub.begin(), sub.end());
                   }
                 },
             },
             region.variant());
  return out;
}

/// Structural checks on a region: finiteness, distinct points, sequence
/// limits that really are accumulation points, hole ids that exist.
inline std::vector<std::string> validate_region(const Region& region, const std::string& name) {
  std::vector<std::string> issues;
  auto finite = [&](Point p, const char* what) {
    if (!is_finite(p)) issues.push_back(name + ": non-finite " + what);
  };
  std::visit(Overloaded{
                 [](const EmptySet&) {},
                 [&](const FinitePoints& s) {
                   for (std::size_t i = 0; i < s.points.size(); ++i) {
                     finite(s.points[i], "point");
                     for (std::size_t j = i + 1; j < s.points.size(); ++j)
                       if (std::abs(s.points[i] - s.points[j]) <= 1e-12) issues.push_back(name + ": duplicate point");
                   }
                 },
                 [&](const SequenceWithLimits& s) {
                   if (s.prefix.size() > SequenceWithLimits::kMaxPrefix) issues.push_back(name + ": prefix longer than 64");
                   if (!s.rule_tag.empty() && !s.has_rule()) issues.push_back(name + ": unknown sequence rule '" + s.rule_tag + "'");
                   for (auto p : s.prefix) finite(p, "sequence term");
                   for (auto l : s.limits) {
                     finite(l, "limit");
                     if (!s.has_rule() || std::abs(l - s.offset) > 1e-12)
                       issues.push_back(name + ": limit is not an accumulation point of the sequence");
                     if (detail::near_any(l, s.prefix, 1e-12)) issues.push_back(name + ": prefix contains a limit");
                   }
                 },
                 [&](const Circle& c) {
                   finite(c.center, "center");
                   if (!(c.radius >= 0.0)) issues.push_back(name + ": negative radius");
                 },
                 [&](const Disk& d) {
                   finite(d.center, "center");
                   if (!(d.radius >= 0.0)) issues.push_back(name + ": negative radius");
                 },
                 [&](const CurveRegion& c) {
                   if (!c.map) {
                     issues.push_back(name + ": curve region without hole map");
                     return;
                   }
                   for (const auto& [id, inc] : c.include_hole)
                     if (id < 0 || id >= static_cast<int>(c.holes().size()))
                       issues.push_back(name + ": unknown hole id " + std::to_string(id));
                 },
                 [&](const RegionUnion& u) {
                   for (const auto& p : u.parts) {
                     auto sub = validate_region(p, name);
                     issues.insert(issues.end(), sub.begin(), sub.end());
                   }
                 },
             },
             region.variant());
  return issues;
}

// ---------------------------------------------------------------------------
// Set identities decided on probe sets

using Membership = std::function<bool(Point)>;

inline Membership member(const Region& r, double tol = kDefaultTol) {
  return [&r, tol](Point p) { return contains(r, p, tol); };
}

inline Membership minus(Membership a, Membership b) {
  return [a = std::move(a), b = std::move(b)](Point p) { return a(p) && !b(p); };
}

/// First probe at which the two sides disagree, or nullopt if they agree on
/// every probe.
inline std::optional<Point> identity_witness(const Membership& lhs, const Membership& rhs,
                                             const std::vector<Point>& probes) {
  for (auto p : probes)
    if (lhs(p) != rhs(p)) return p;
  return std::nullopt;
}

inline std::vector<Point> joint_probes(std::initializer_list<const Region*> regions) {
  std::vector<Point> out;
  for (const Region* r : regions) {
    auto sub = probe_points(*r);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

/// Equality by mutual membership over both sides' probes.
inline bool equal(const Region& a, const Region& b, double tol = kDefaultTol) {
  return !identity_witness(member(a, tol), member(b, tol), joint_probes({&a, &b})).has_value();
}

/// First probe of `a` that lies in `a` but not in `b`.
inline std::optional<Point> subset_witness(const Region& a, const Region& b, double tol = kDefaultTol) {
  for (auto p : probe_points(a))
    if (contains(a, p, tol) && !contains(b, p, tol)) return p;
  return std::nullopt;
}

/// The single point of a region that is exactly one point, if it is.
inline std::optional<Point> singleton(const Region& region, double tol = kDefaultTol) {
  if (is_empty(region)) return std::nullopt;
  const auto iso = isolated_parts(region, tol);
  if (!iso.sequences.empty() || iso.points.size() != 1) return std::nullopt;
  const Point p = iso.points.front();
  for (auto q : probe_points(region))
    if (contains(region, q, tol) && std::abs(q - p) > tol) return std::nullopt;
  return p;
}

// ---------------------------------------------------------------------------
// Spectral pictures

/// Nullity alpha(T - lambda), possibly infinite.
struct Multiplicity {
  long long value = 0;
  bool infinite = false;

  static Multiplicity inf() { return {0, true}; }
  static Multiplicity of(long long n) { return {n, false}; }
  bool positive() const { return infinite || value > 0; }
  bool finite_positive() const { return !infinite && value > 0; }
  bool operator==(const Multiplicity&) const = default;
};

struct EigenEntry {
  Point point;
  Multiplicity alpha;
};

struct PictureFlags {
  std::optional<bool> is_hypercyclic;
  std::optional<bool> is_supercyclic;
  std::optional<bool> is_hyponormal;
};

struct SpectralPicture {
  std::string label;
  Region sigma, sigma_a, sigma_e, sigma_w, sigma_uw, sigma_b;
  std::vector<EigenEntry> eigen;
  PictureFlags flags;

  std::optional<Multiplicity> alpha_at(Point p, double tol = kDefaultTol) const {
    for (const auto& e : eigen)
      if (std::abs(e.point - p) <= tol) return e.alpha;
    return std::nullopt;
  }
};

/// Lists every violated containment (sigma_e in sigma_uw in sigma_w in sigma_b
/// in sigma, sigma_uw in sigma_a in sigma) and eigen entries outside sigma.
/// An empty result means the picture is admissible.
inline std::vector<std::string> validate_picture(const SpectralPicture& pic, double tol = kDefaultTol) {
  std::vector<std::string> out;
  const std::pair<const char*, const Region*> named[] = {
      {"σ", &pic.sigma},     {"σ_a", &pic.sigma_a},   {"σ_e", &pic.sigma_e},
      {"σ_w", &pic.sigma_w}, {"σ_uw", &pic.sigma_uw}, {"σ_b", &pic.sigma_b},
  };
  for (const auto& [name, region] : named) {
    auto sub = validate_region(*region, name);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  auto check = [&](const Region& a, const char* an, const Region& b, const char* bn) {
    if (subset_witness(a, b, tol)) out.push_back(std::string(an) + " ⊄ " + bn);
  };
  check(pic.sigma_e, "σ_e", pic.sigma_uw, "σ_uw");
  check(pic.sigma_uw, "σ_uw", pic.sigma_w, "σ_w");
  check(pic.sigma_w, "σ_w", pic.sigma_b, "σ_b");
  check(pic.sigma_b, "σ_b", pic.sigma, "σ");
  check(pic.sigma_uw, "σ_uw", pic.sigma_a, "σ_a");
  check(pic.sigma_a, "σ_a", pic.sigma, "σ");
  for (const auto& e : pic.eigen) {
    if (!is_finite(e.point)) out.push_back("eigen entry is not finite");
    else if (!contains(pic.sigma, e.point, tol)) out.push_back("eigen entry outside σ");
    if (!e.alpha.infinite && e.alpha.value < 0) out.push_back("negative multiplicity");
  }
  return out;
}

/// E(T), E0(T) and P00(T) of a picture.
struct EigenSets {
  Region E;
  Region E0;
  Region P00;
  /// Set when sigma \ sigma_b has non-isolated probes: P00 then also contains
  /// the (sigma, sigma_b) difference described here.
  std::optional<std::pair<Region, Region>> p00_difference;
};

namespace detail {

inline Region assemble(std::vector<Point> points, std::vector<SequenceWithLimits> seqs) {
  if (points.empty() && seqs.empty()) return Region::empty();
  if (seqs.empty()) return Region::points(std::move(points));
  if (points.empty() && seqs.size() == 1) return Region(std::move(seqs.front()));
  std::vector<Region> parts;
  if (!points.empty()) parts.push_back(Region::points(std::move(points)));
  for (auto& s : seqs) parts.emplace_back(std::move(s));
  return Region::union_of(std::move(parts));
}

/// Splits isolated parts by a predicate on multiplicity. A sequence is kept
/// whole (rule tail included) only when every stored term qualifies.
inline Region select_isolated(const IsolatedParts& iso, const std::function<bool(Point)>& keep) {
  std::vector<Point> pts;
  std::vector<SequenceWithLimits> seqs;
  for (auto p : iso.points)
    if (keep(p)) pts.push_back(p);
  for (const auto& s : iso.sequences) {
    if (std::all_of(s.prefix.begin(), s.prefix.end(), keep)) {
      SequenceWithLimits t = s;
      t.limits.clear();
      seqs.push_back(std::move(t));
    } else {
      for (auto p : s.prefix)
        if (keep(p)) pts.push_back(p);
    }
  }
  return assemble(std::move(pts), std::move(seqs));
}

}  // namespace detail

inline EigenSets eigen_sets(const SpectralPicture& pic, double tol = kDefaultTol) {
  const IsolatedParts iso = isolated_parts(pic.sigma, tol);
  auto alpha = [&](Point p) {
    auto a = pic.alpha_at(p, tol);
    if (!a)
      throw MissingMultiplicity("isolated point (" + std::to_string(p.real()) + ", " + std::to_string(p.imag()) +
                                ") of σ has no multiplicity entry");
    return *a;
  };
  for (auto p : iso.flatten()) (void)alpha(p);

  EigenSets out;
  out.E = detail::select_isolated(iso, [&](Point p) { return alpha(p).positive(); });
  out.E0 = detail::select_isolated(iso, [&](Point p) { return alpha(p).finite_positive(); });
  out.P00 = detail::select_isolated(iso, [&](Point p) { return !contains(pic.sigma_b, p, tol); });

  const auto iso_flat = iso.flatten();
  for (auto p : joint_probes({&pic.sigma, &pic.sigma_b})) {
    if (contains(pic.sigma, p, tol) && !contains(pic.sigma_b, p, tol) && !detail::near_any(p, iso_flat, tol) &&
        !contains(out.P00, p, tol)) {
      out.p00_difference = std::make_pair(pic.sigma, pic.sigma_b);
      break;
    }
  }
  return out;
}

}  // namespace weylkit

#endif  // WEYLKIT_SPECTRAL_SETS_HPP
