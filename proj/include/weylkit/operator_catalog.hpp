#ifndef WEYLKIT_OPERATOR_CATALOG_HPP
#define WEYLKIT_OPERATOR_CATALOG_HPP

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/bergman_toeplitz.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/spectral_sets.hpp"
#include "weylkit/symbol.hpp"

namespace weylkit {

/// A named operator: its spectral picture, the recorded verdicts on it and,
/// for Bergman Toeplitz operators, the symbol used to build truncations.
struct CatalogEntry {
  std::string name;
  SpectralPicture picture;
  std::map<std::string, bool> recorded_verdicts;
  std::optional<SymbolExpr> truncation_symbol;
  std::string notes;

  bool has_truncation() const { return truncation_symbol.has_value(); }
  TruncationMatrix truncation(int n) const {
    if (!truncation_symbol) throw InvalidInput("'" + name + "' has no truncation generator");
    return truncation_matrix(*truncation_symbol, n);
  }
};

using CatalogParams = std::map<std::string, double>;

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"exampleA", "exampleV", "zeroInterleave", "interleave",
                                              "ex29",     "cho",      "zbarPlusZsqOver3", "harmonicMonomial"};
  return names;
}

/// Parameters used when a catalog entry is built without explicit ones.
inline CatalogParams default_catalog_params(const std::string& name) {
  if (name == "ex29") return {{"J", 2.0}};
  if (name == "harmonicMonomial") return {{"n", 3.0}};
  return {};
}

namespace detail {

inline SpectralPicture uniform_picture(std::string label, const Region& all) {
  SpectralPicture p;
  p.label = std::move(label);
  p.sigma = p.sigma_a = p.sigma_e = p.sigma_w = p.sigma_uw = p.sigma_b = all;
  return p;
}

inline double require_param(const CatalogParams& params, const std::string& entry, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw InvalidInput("catalog entry '" + entry + "' needs parameter " + key);
  if (!std::isfinite(it->second)) throw InvalidInput("parameter " + key + " is not finite");
  return it->second;
}

}  // namespace detail

inline CatalogEntry make_catalog_entry(const std::string& name, const CatalogParams& params = {}) {
  CatalogEntry e;
  e.name = name;
  const Region zero = Region::points({0.0});

  if (name == "exampleA") {
    const Region seq = Region::reciprocal_sequence();
    e.picture = detail::uniform_picture(name, zero);
    e.picture.sigma = seq;
    e.picture.sigma_a = seq;
    for (std::size_t n = 1; n <= SequenceWithLimits::kMaxPrefix; ++n)
      e.picture.eigen.push_back({1.0 / static_cast<double>(n), Multiplicity::of(1)});
    e.picture.eigen.push_back({0.0, Multiplicity::of(1)});
    e.recorded_verdicts = {{"uwe", true}, {"in_HP_closure", false}};
    e.notes =
        "σ = σ_a = {1/n} ∪ {0}; σ_e = σ_w = σ_uw = σ_b = {0}. Each 1/n is a simple eigenvalue. "
        "The kernel at 0 is one-dimensional; 0 is not isolated so its multiplicity does not enter E.";
  } else if (name == "exampleV") {
    const Region disk = Region::disk(0.0, 1.0);
    const Region circle = Region::circle(0.0, 1.0);
    e.picture = detail::uniform_picture(name, circle);
    e.picture.sigma = disk;
    e.picture.sigma_a = disk;
    e.picture.sigma_b = disk;
    e.recorded_verdicts = {{"ve", false}, {"in_HP_closure", true}};
    e.notes =
        "V = S ⊕ S* for the unilateral shift S. For |λ| < 1, V - λ is Fredholm of index 0 with a "
        "one-dimensional kernel coming from S* - λ, so σ = σ_a = σ_b is the closed disk while "
        "σ_e = σ_w = σ_uw is the unit circle.";
  } else if (name == "zeroInterleave") {
    e.picture = detail::uniform_picture(name, zero);
    e.picture.eigen.push_back({0.0, Multiplicity::inf()});
    e.recorded_verdicts = {{"uwe", false}, {"in_HP_closure", false}};
    e.notes = "Every spectrum is {0}; the kernel at 0 is infinite-dimensional.";
  } else if (name == "interleave") {
    const Region disk = Region::disk(0.0, 1.0);
    const Region circle = Region::circle(0.0, 1.0);
    e.picture = detail::uniform_picture(name, circle);
    e.picture.sigma = disk;
    e.picture.sigma_w = disk;
    e.picture.sigma_b = disk;
    e.recorded_verdicts = {{"uwe", true}, {"in_SP_closure", false}};
    e.notes =
        "σ = σ_w = σ_b is the closed disk, σ_a = σ_uw = σ_e the unit circle, no eigenvalues. "
        "The stored in_SP_closure = false comes from an index argument; the connectedness test "
        "σ ∪ ∂(rD) succeeds on this σ, so the two disagree.";
  } else if (name == "ex29") {
    const double J = detail::require_param(params, name, "J");
    if (!(J > 1.0)) throw InvalidInput("ex29 needs J > 1");
    e.picture = detail::uniform_picture(name, zero);
    e.picture.eigen.push_back({0.0, Multiplicity::of(1)});
    e.recorded_verdicts = {{"uwe", false}, {"weyl", false}};
    e.truncation_symbol = SymbolExpr::indicator(J);
    e.notes =
        "Toeplitz operator with symbol χ_{|z|<1/J} e^{-iθ}: a compact backward weighted shift, "
        "σ = {0} with the constants as its kernel.";
  } else if (name == "cho") {
    const SymbolExpr s = SymbolExpr::monomial(-1);
    e.picture = toeplitz_picture(s, name);
    e.recorded_verdicts = {{"ve", true}, {"uwe", true}};
    e.truncation_symbol = s;
    e.notes = "T_zbar on the Bergman space; the curve is the unit circle traced clockwise, winding -1.";
  } else if (name == "zbarPlusZsqOver3") {
    SymbolExpr s = SymbolExpr::monomial(-1);
    s.add(2, 1.0 / 3.0);
    e.picture = toeplitz_picture(s, name);
    e.picture.flags.is_hyponormal = false;
    e.recorded_verdicts = {{"ve", true}, {"uwe", true}};
    e.truncation_symbol = s;
    e.notes = "h = zbar + z^2/3; the curve is traced clockwise so its only hole has winding -1.";
  } else if (name == "harmonicMonomial") {
    const double n = detail::require_param(params, name, "n");
    if (n < 1.0 || n != std::floor(n)) throw InvalidInput("harmonicMonomial needs a positive integer n");
    e.picture = detail::uniform_picture(name, Region::circle(0.0, 1.0));
    e.picture.flags.is_hyponormal = false;
    e.recorded_verdicts = {{"ve", true}, {"uwe", true}};
    e.notes = "Harmonic Bergman Toeplitz operator with monomial symbol z^" + std::to_string(static_cast<long>(n)) +
              "; every spectrum is the unit circle. Picture only, no truncation.";
  } else {
    throw UnknownName("unknown catalog entry '" + name + "'");
  }
  return e;
}

}  // namespace weylkit

#endif  // WEYLKIT_OPERATOR_CATALOG_HPP
