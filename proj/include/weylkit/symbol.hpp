#ifndef WEYLKIT_SYMBOL_HPP
#define WEYLKIT_SYMBOL_HPP

#include <complex>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>

#include "weylkit/errors.hpp"

namespace weylkit {

/// z^n for n >= 0 by repeated squaring.
inline std::complex<double> ipow(std::complex<double> z, int n) {
  std::complex<double> result = 1.0;
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

/// Toeplitz symbol: a finite sum of c_m z^m (m >= 0) and c_m zbar^|m|
/// (m < 0), optionally plus the radial indicator term
/// chi_{|z| < 1/J}(z) * e^{-i arg z}.
class SymbolExpr {
 public:
  static constexpr int kMaxExponent = 32;
  static constexpr std::size_t kMaxTerms = 64;

  SymbolExpr() = default;

  static SymbolExpr constant(std::complex<double> c) { return SymbolExpr().add(0, c); }
  static SymbolExpr monomial(int m, std::complex<double> c = 1.0) { return SymbolExpr().add(m, c); }
  static SymbolExpr indicator(double J) { return SymbolExpr().with_indicator(J); }

  /// Adds c * z^m (or c * zbar^|m| when m < 0); cancelling terms are dropped.
  SymbolExpr& add(int m, std::complex<double> c) {
    if (m > kMaxExponent || m < -kMaxExponent)
      throw InvalidInput("exponent " + std::to_string(m) + " exceeds " + std::to_string(kMaxExponent));
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw InvalidInput("non-finite coefficient");
    auto it = terms_.find(m);
    const std::complex<double> sum = (it == terms_.end() ? std::complex<double>{} : it->second) + c;
    if (sum == std::complex<double>{}) {
      if (it != terms_.end()) terms_.erase(it);
      return *this;
    }
    terms_[m] = sum;
    if (terms_.size() > kMaxTerms) throw InvalidInput("symbol has more than 64 nonzero terms");
    return *this;
  }

  SymbolExpr& with_indicator(double J) {
    if (!(J > 1.0) || !std::isfinite(J)) throw InvalidInput("indicator radius parameter J must exceed 1");
    indicator_ = J;
    return *this;
  }

  const std::map<int, std::complex<double>>& terms() const { return terms_; }
  const std::optional<double>& indicator_J() const { return indicator_; }

  std::complex<double> coefficient(int m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? std::complex<double>{} : it->second;
  }

  /// Value on the unit circle at angle theta. The indicator vanishes there.
  std::complex<double> boundary_value(double theta) const {
    std::complex<double> v{};
    for (const auto& [m, c] : terms_) v += c * std::polar(1.0, m * theta);
    return v;
  }

  /// Value at an interior point z of the closed disk.
  std::complex<double> value(std::complex<double> z) const {
    std::complex<double> v{};
    for (const auto& [m, c] : terms_) v += c * (m >= 0 ? ipow(z, m) : ipow(std::conj(z), -m));
    if (indicator_ && std::abs(z) < 1.0 / *indicator_ && std::abs(z) > 0.0) v += std::conj(z) / std::abs(z);
    return v;
  }

  bool operator==(const SymbolExpr&) const = default;

 private:
  std::map<int, std::complex<double>> terms_;
  std::optional<double> indicator_;
};

}  // namespace weylkit

#endif  // WEYLKIT_SYMBOL_HPP
