#ifndef WEYLKIT_BERGMAN_TOEPLITZ_HPP
#define WEYLKIT_BERGMAN_TOEPLITZ_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "weylkit/eigen_solver.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/planar_geometry.hpp"
#include "weylkit/quadrature.hpp"
#include "weylkit/spectral_sets.hpp"
#include "weylkit/symbol.hpp"

namespace weylkit {

/// Image of the unit circle under the symbol, sampled at θ_k = 2πk/N.
/// The indicator term vanishes on the circle and contributes nothing.
inline Curve boundary_curve(const SymbolExpr& symbol, int samples = kDefaultSamples) {
  if (samples < kMinCurveSamples) throw InvalidInput("boundary curve needs at least 16 samples");
  std::vector<Point> pts(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k)
    pts[static_cast<std::size_t>(k)] = symbol.boundary_value(2.0 * std::numbers::pi * k / samples);
  return Curve(std::move(pts));
}

/// Decided from the exponents: only the constant term (and possibly the
/// indicator, which vanishes on the circle) survives on the boundary.
inline bool is_constant_on_boundary(const SymbolExpr& symbol) {
  for (const auto& [m, c] : symbol.terms())
    if (m != 0 && c != std::complex<double>{}) return false;
  return true;
}

/// Index of T_φ - λ, equal to minus the winding of φ(∂D) about λ.
inline int fredholm_index(const SymbolExpr& symbol, Point lambda, int samples = kDefaultSamples) {
  const Curve curve = boundary_curve(symbol, samples);
  return -winding_number(curve.translated(-lambda), 0.0);
}

struct WeylSpectra {
  Region sigma_w;
  Region sigma_uw;
};

/// σ_w is the curve with every hole of nonzero winding, σ_uw the curve with
/// the holes of negative winding. A constant symbol λ gives {λ} for both.
inline WeylSpectra weyl_spectra(const SymbolExpr& symbol, int samples = kDefaultSamples,
                                int grid_resolution = kDefaultGrid) {
  if (is_constant_on_boundary(symbol)) {
    const Region point = Region::points({symbol.coefficient(0)});
    return {point, point};
  }
  const Curve curve = boundary_curve(symbol, samples);
  CurveRegion w;
  w.map = std::make_shared<const HoleMap>(analyze_holes(curve, grid_resolution));
  w.grid = grid_resolution;
  CurveRegion uw{w.map, {}, grid_resolution};
  for (const auto& h : w.map->holes()) {
    w.include_hole[h.component_id] = h.winding != 0;
    uw.include_hole[h.component_id] = h.winding < 0;
  }
  return {Region(std::move(w)), Region(std::move(uw))};
}

/// Which Weyl-type properties hold for T_φ + K for every compact K.
struct StabilityReport {
  bool uwe = false;
  bool weyl = false;
  bool a_weyl = false;
  bool browder = false;
  bool a_browder = false;
  bool constant_on_boundary = false;
  std::vector<Hole> holes;
};

inline StabilityReport classify_compact_stability(const SymbolExpr& symbol, int samples = kDefaultSamples,
                                                  int grid_resolution = kDefaultGrid) {
  StabilityReport r;
  r.constant_on_boundary = is_constant_on_boundary(symbol);
  if (!r.constant_on_boundary) r.holes = find_holes(boundary_curve(symbol, samples), grid_resolution);
  bool all_negative = true, all_nonzero = true;
  for (const auto& h : r.holes) {
    all_negative = all_negative && h.winding < 0;
    all_nonzero = all_nonzero && h.winding != 0;
  }
  r.uwe = r.a_weyl = !r.constant_on_boundary && all_negative;
  r.weyl = !r.constant_on_boundary && all_nonzero;
  r.browder = all_nonzero;
  r.a_browder = all_negative;
  return r;
}

inline constexpr int kMinTruncation = 2;
inline constexpr int kMaxTruncation = kMaxMatrixSize;

/// Compression of T_φ to span{e_0, …, e_{n-1}}, e_j(z) = √(j+1) z^j;
/// entries(k, j) = <φ e_j, e_k>.
struct TruncationMatrix {
  int n = 0;
  Eigen::MatrixXcd entries;
  SymbolExpr symbol;
};

/// Closed-form entries. For z^m the basis vector e_j goes to a multiple of
/// e_{j+m}; for zbar^m it goes to e_{j-m}. The indicator term sends e_j to
///   2√(j(j+1))/(2j+1) · J^{-(2j+1)} e_{j-1},
/// which is 4^{-j}√(j(j+1))/(2j+1) at J = 2.
inline TruncationMatrix truncation_matrix(const SymbolExpr& symbol, int n) {
  if (n < kMinTruncation || n > kMaxTruncation)
    throw SizeOutOfRange("truncation size " + std::to_string(n) + " outside [2, 512]");
  TruncationMatrix t{n, Eigen::MatrixXcd::Zero(n, n), symbol};
  for (const auto& [m, c] : symbol.terms()) {
    if (m >= 0) {
      for (int j = 0; j + m < n; ++j)
        t.entries(j + m, j) += c * std::sqrt(static_cast<double>(j + 1) / static_cast<double>(j + m + 1));
    } else {
      const int a = -m;
      for (int j = a; j < n; ++j)
        t.entries(j - a, j) += c * std::sqrt(static_cast<double>(j - a + 1) / static_cast<double>(j + 1));
    }
  }
  if (const auto& J = symbol.indicator_J()) {
    for (int j = 1; j < n; ++j) {
      const double jd = j;
      t.entries(j - 1, j) += 2.0 * std::sqrt(jd * (jd + 1.0)) / (2.0 * jd + 1.0) * std::pow(*J, -(2.0 * jd + 1.0));
    }
  }
  return t;
}

inline constexpr int kMinRadialNodes = 16;
inline constexpr int kMinAngularNodes = 64;

/// <φ e_j, e_k> by direct numerical integration over the disk with the
/// normalised area measure: Gauss–Legendre in r, trapezoid in θ. The
/// polynomial part is integrated over [0, 1] and the indicator over [0, 1/J].
inline std::complex<double> entry_quadrature(const SymbolExpr& symbol, int k, int j, int radial_nodes = 64,
                                             int angular_nodes = 256) {
  if (radial_nodes < kMinRadialNodes) throw InvalidInput("need at least 16 radial nodes");
  if (angular_nodes < kMinAngularNodes) throw InvalidInput("need at least 64 angular nodes");
  if (k < 0 || j < 0) throw InvalidInput("basis indices must be non-negative");

  const double nj = std::sqrt(static_cast<double>(j + 1)), nk = std::sqrt(static_cast<double>(k + 1));
  const double dtheta = 2.0 * std::numbers::pi / angular_nodes;

  auto integrate = [&](double r_max, auto&& phi) {
    const QuadratureRule rule = gauss_legendre(radial_nodes, 0.0, r_max);
    std::complex<double> total{};
    for (std::size_t a = 0; a < rule.nodes.size(); ++a) {
      const double r = rule.nodes[a];
      std::complex<double> ring{};
      for (int b = 0; b < angular_nodes; ++b) {
        const double theta = b * dtheta;
        const Point z = std::polar(r, theta);
        const std::complex<double> ej = nj * ipow(z, j);
        const std::complex<double> ek = nk * ipow(z, k);
        ring += phi(z, theta) * ej * std::conj(ek);
      }
      total += rule.weights[a] * r * ring * dtheta;
    }
    return total / std::numbers::pi;
  };

  std::complex<double> value{};
  if (!symbol.terms().empty()) {
    value += integrate(1.0, [&](Point z, double) {
      std::complex<double> v{};
      for (const auto& [m, c] : symbol.terms()) v += c * (m >= 0 ? ipow(z, m) : ipow(std::conj(z), -m));
      return v;
    });
  }
  if (const auto& J = symbol.indicator_J())
    value += integrate(1.0 / *J, [](Point, double theta) { return std::polar(1.0, -theta); });
  return value;
}

inline std::vector<std::complex<double>> eigenvalues(const TruncationMatrix& matrix) {
  return eigenvalues(matrix.entries);
}

/// Spectral picture of T_φ read from the symbol: σ_e is the curve, σ_uw and
/// σ_w add holes of negative and nonzero winding, and σ = σ_b = σ_w,
/// σ_a = σ_uw. Point spectrum inside the zero-winding holes is not modelled.
inline SpectralPicture toeplitz_picture(const SymbolExpr& symbol, std::string label,
                                        int samples = kDefaultSamples, int grid_resolution = kDefaultGrid) {
  SpectralPicture pic;
  pic.label = std::move(label);
  const WeylSpectra ws = weyl_spectra(symbol, samples, grid_resolution);
  if (is_constant_on_boundary(symbol)) {
    pic.sigma_e = ws.sigma_w;
  } else {
    CurveRegion e = *ws.sigma_w.as<CurveRegion>();
    e.include_hole.clear();
    pic.sigma_e = Region(std::move(e));
  }
  pic.sigma_uw = ws.sigma_uw;
  pic.sigma_a = ws.sigma_uw;
  pic.sigma_w = ws.sigma_w;
  pic.sigma_b = ws.sigma_w;
  pic.sigma = ws.sigma_w;
  return pic;
}

}  // namespace weylkit

#endif  // WEYLKIT_BERGMAN_TOEPLITZ_HPP
