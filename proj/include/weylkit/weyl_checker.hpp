#ifndef WEYLKIT_WEYL_CHECKER_HPP
#define WEYLKIT_WEYL_CHECKER_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/connectivity.hpp"
#include "weylkit/spectral_sets.hpp"

namespace weylkit {

/// Truth of each Weyl-type identity on a picture, with one violating point
/// per failed identity.
struct PropertyReport {
  bool weyl = false;        // σ \ σ_w = E0
  bool browder = false;     // σ_w = σ_b
  bool property_w = false;  // σ_a \ σ_uw = E0
  bool uwe = false;         // σ_a \ σ_uw = E
  bool ve = false;          // σ \ σ_uw = E
  bool we = false;          // σ \ σ_w = E
  bool a_weyl_note = false; // σ_a \ σ_uw = isolated points of σ_a with finite positive nullity
  bool r1_consistent = false;
  std::map<std::string, std::optional<Point>> witness;
  std::vector<std::string> consistency_violations;

  bool get(std::string_view key) const {
    if (key == "weyl") return weyl;
    if (key == "browder") return browder;
    if (key == "property_w") return property_w;
    if (key == "uwe") return uwe;
    if (key == "ve") return ve;
    if (key == "we") return we;
    if (key == "a_weyl_note") return a_weyl_note;
    if (key == "r1_consistent") return r1_consistent;
    throw UnknownName("unknown property '" + std::string(key) + "'");
  }
};

inline void require_valid(const SpectralPicture& pic) {
  const auto issues = validate_picture(pic);
  if (issues.empty()) return;
  std::string msg = "picture '" + pic.label + "' is not admissible:";
  for (const auto& i : issues) msg += " [" + i + "]";
  throw InvalidPicture(msg);
}

inline PropertyReport evaluate_properties(const SpectralPicture& pic) {
  require_valid(pic);
  const EigenSets es = eigen_sets(pic);

  // Isolated points of σ_a with finite positive nullity; a missing entry
  // counts as nullity zero.
  const IsolatedParts iso_a = isolated_parts(pic.sigma_a);
  const Region e_a0 = detail::select_isolated(iso_a, [&](Point p) {
    const auto a = pic.alpha_at(p);
    return a && a->finite_positive();
  });

  const std::vector<Point> probes = joint_probes(
      {&pic.sigma, &pic.sigma_a, &pic.sigma_e, &pic.sigma_w, &pic.sigma_uw, &pic.sigma_b, &es.E, &es.E0, &e_a0});
  const Membership sigma = member(pic.sigma), sigma_a = member(pic.sigma_a), sigma_w = member(pic.sigma_w),
                   sigma_uw = member(pic.sigma_uw), sigma_b = member(pic.sigma_b), E = member(es.E),
                   E0 = member(es.E0), Ea0 = member(e_a0);

  PropertyReport r;
  auto decide = [&](const char* key, const Membership& lhs, const Membership& rhs) {
    auto w = identity_witness(lhs, rhs, probes);
    r.witness[key] = w;
    return !w.has_value();
  };
  r.weyl = decide("weyl", minus(sigma, sigma_w), E0);
  r.browder = decide("browder", sigma_w, sigma_b);
  r.property_w = decide("property_w", minus(sigma_a, sigma_uw), E0);
  r.uwe = decide("uwe", minus(sigma_a, sigma_uw), E);
  r.ve = decide("ve", minus(sigma, sigma_uw), E);
  r.we = decide("we", minus(sigma, sigma_w), E);
  r.a_weyl_note = decide("a_weyl_note", minus(sigma_a, sigma_uw), Ea0);

  const bool sigma_eq_a = !identity_witness(sigma, sigma_a, probes).has_value();
  const bool wuw_eq = !identity_witness(minus(sigma_w, sigma_uw), minus(sigma, sigma_a), probes).has_value();
  const bool e_eq_e0 = !identity_witness(E, E0, probes).has_value();
  r.r1_consistent = r.uwe == (r.weyl && wuw_eq && e_eq_e0);

  if (r.uwe && !r.property_w) r.consistency_violations.push_back("(UW_E) holds but property (w) fails");
  if (r.property_w && !r.weyl) r.consistency_violations.push_back("property (w) holds but Weyl's theorem fails");
  if (r.weyl && !r.browder) r.consistency_violations.push_back("Weyl's theorem holds but Browder's theorem fails");
  if (r.ve != (r.uwe && sigma_eq_a)) r.consistency_violations.push_back("(V_E) differs from (UW_E) and σ = σ_a");
  if (!r.r1_consistent) r.consistency_violations.push_back("(UW_E) factorisation through Weyl's theorem fails");
  return r;
}

/// Cross-check: (UW_E) holds iff Weyl's theorem holds, σ_w \ σ_uw = σ \ σ_a
/// and E = E0. A false return flags a bad picture or a checker bug.
inline bool check_r1(const SpectralPicture& pic) { return evaluate_properties(pic).r1_consistent; }

/// (UW_E) survives every compact perturbation iff σ_w has no isolated points
/// and the complement of σ_uw is connected.
inline bool uwe_stable_under_compacts(const SpectralPicture& pic, int grid_resolution = kDefaultGrid) {
  require_valid(pic);
  return isolated_points(pic.sigma_w).empty() && complement_is_connected(pic.sigma_uw, grid_resolution);
}

/// σ ∪ ∂D connected; characterises the closure of the hypercyclic operators
/// among operators with (UW_E).
inline bool closure_hp_connectedness(const SpectralPicture& pic, int grid_resolution = kDefaultGrid) {
  require_valid(pic);
  return union_is_connected({pic.sigma, Region::circle(0.0, 1.0)}, grid_resolution);
}

struct RadiusSearch {
  bool connected = false;
  std::optional<double> radius;
};

/// Searches for r >= 0 with σ ∪ ∂(rD) connected. Candidates: 0, the moduli
/// of stored points, |c| ± r of circle and disk parts, and 32 radii spread
/// over the annulus bounding σ. The smallest succeeding candidate is returned.
inline RadiusSearch closure_sp_connectedness(const SpectralPicture& pic, int grid_resolution = kDefaultGrid) {
  require_valid(pic);
  std::vector<double> radii{0.0};
  std::function<void(const Region&)> collect = [&](const Region& region) {
    std::visit(Overloaded{
                   [](const EmptySet&) {},
                   [&](const FinitePoints& s) {
                     for (auto p : s.points) radii.push_back(std::abs(p));
                   },
                   [&](const SequenceWithLimits& s) {
                     for (auto p : s.prefix) radii.push_back(std::abs(p));
                     for (auto p : s.limits) radii.push_back(std::abs(p));
                   },
                   [&](const Circle& c) {
                     radii.push_back(std::abs(c.center) + c.radius);
                     radii.push_back(std::max(0.0, std::abs(c.center) - c.radius));
                   },
                   [&](const Disk& d) {
                     radii.push_back(std::abs(d.center) + d.radius);
                     radii.push_back(std::max(0.0, std::abs(d.center) - d.radius));
                   },
                   [](const CurveRegion&) {},
                   [&](const RegionUnion& u) {
                     for (const auto& p : u.parts) collect(p);
                   },
               },
               region.variant());
  };
  collect(pic.sigma);

  const BoundingBox box = bbox(pic.sigma);
  if (!box.empty()) {
    const double dx = std::max({box.xmin, 0.0, -box.xmax});
    const double dy = std::max({box.ymin, 0.0, -box.ymax});
    const double inner = std::hypot(dx, dy);
    const double outer = std::max({std::hypot(box.xmin, box.ymin), std::hypot(box.xmin, box.ymax),
                                   std::hypot(box.xmax, box.ymin), std::hypot(box.xmax, box.ymax)});
    for (int k = 0; k < 32; ++k) radii.push_back(inner + (outer - inner) * k / 31.0);
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end(), [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
              radii.end());

  for (double r : radii)
    if (union_is_connected({pic.sigma, Region::circle(0.0, r)}, grid_resolution)) return {true, r};
  return {false, std::nullopt};
}

struct HypercyclicVerdict {
  bool consistent = false;
  std::string detail;
};

/// For a hypercyclic operator, (UW_E) holds iff E is empty.
inline HypercyclicVerdict check_th5_hypercyclic(const SpectralPicture& pic) {
  if (!pic.flags.is_hypercyclic.has_value()) throw FlagMissing("is_hypercyclic is not set on '" + pic.label + "'");
  if (!*pic.flags.is_hypercyclic) throw FlagMissing("'" + pic.label + "' is not flagged hypercyclic");
  const auto report = evaluate_properties(pic);
  const bool e_empty = is_empty(eigen_sets(pic).E);
  HypercyclicVerdict v;
  v.consistent = report.uwe == e_empty;
  v.detail = std::string("(UW_E) ") + (report.uwe ? "holds" : "fails") + ", E " + (e_empty ? "is" : "is not") +
             " empty";
  return v;
}

struct SupercyclicVerdict {
  bool consistent = false;
  std::optional<Point> alpha;
  std::string detail;
};

/// For a supercyclic operator with E(T) ⊆ E0(T*), (UW_E) holds iff E ⊆ {α}
/// for some α outside σ_b. The adjoint inclusion cannot be read off a picture
/// and is supplied by the caller.
inline SupercyclicVerdict check_th5_supercyclic(const SpectralPicture& pic, bool adjoint_inclusion_holds = true) {
  if (!pic.flags.is_supercyclic.has_value()) throw FlagMissing("is_supercyclic is not set on '" + pic.label + "'");
  if (!*pic.flags.is_supercyclic) throw FlagMissing("'" + pic.label + "' is not flagged supercyclic");
  SupercyclicVerdict v;
  if (!adjoint_inclusion_holds) {
    v.consistent = true;
    v.detail = "E(T) ⊆ E0(T*) not asserted; characterisation does not apply";
    return v;
  }
  const auto report = evaluate_properties(pic);
  const Region E = eigen_sets(pic).E;
  bool rhs = is_empty(E);
  if (!rhs) {
    if (auto a = singleton(E)) {
      v.alpha = *a;
      rhs = !contains(pic.sigma_b, *a);
    }
  }
  v.consistent = report.uwe == rhs;
  v.detail = std::string("(UW_E) ") + (report.uwe ? "holds" : "fails") + ", E ⊆ {α} with α ∉ σ_b " +
             (rhs ? "holds" : "fails");
  return v;
}

}  // namespace weylkit

#endif  // WEYLKIT_WEYL_CHECKER_HPP
