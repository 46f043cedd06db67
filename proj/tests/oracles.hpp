// Reference computations that share no code with the library routines they
// check. Each one reaches the same quantity along a different route.
#ifndef WEYLKIT_TESTS_ORACLES_HPP
#define WEYLKIT_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;

/// Winding of a closed polygon about p by signed crossings of the rightward
/// horizontal ray (Sunday's rule).
inline int crossing_winding(const std::vector<cplx>& poly, cplx p) {
  int w = 0;
  const std::size_t n = poly.size();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx a = poly[k] - p, b = poly[(k + 1) % n] - p;
    const double cross = a.real() * b.imag() - a.imag() * b.real();
    if (a.imag() <= 0.0) {
      if (b.imag() > 0.0 && cross > 0.0) ++w;
    } else {
      if (b.imag() <= 0.0 && cross < 0.0) --w;
    }
  }
  return w;
}

/// Winding of t -> φ(e^{it}) about λ for a Laurent polynomial φ, by the
/// argument principle: with d the largest zbar power, z^d(φ(z) - λ) is a
/// polynomial whose zeros in the open disk number wind + d.
inline int argument_principle_winding(const std::map<int, cplx>& terms, cplx lambda) {
  int d = 0, top = 0;
  for (const auto& [m, c] : terms) {
    d = std::max(d, -m);
    top = std::max(top, m);
  }
  const int degree = top + d;
  std::vector<cplx> coeff(static_cast<std::size_t>(degree + 1), 0.0);  // coeff[i] multiplies z^i
  for (const auto& [m, c] : terms) coeff[static_cast<std::size_t>(m + d)] += c;
  coeff[static_cast<std::size_t>(d)] -= lambda;
  int deg = degree;
  while (deg > 0 && coeff[static_cast<std::size_t>(deg)] == cplx{}) --deg;
  int low = 0;
  while (low < deg && coeff[static_cast<std::size_t>(low)] == cplx{}) ++low;
  int inside = low;  // zero of order `low` at the origin
  const int n = deg - low;
  if (n > 0) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    const cplx lead = coeff[static_cast<std::size_t>(deg)];
    for (int i = 0; i < n; ++i) companion(0, i) = -coeff[static_cast<std::size_t>(deg - 1 - i)] / lead;
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
    for (int i = 0; i < n; ++i)
      if (std::abs(es.eigenvalues()(i)) < 1.0) ++inside;
  }
  return inside - d;
}

/// <z^m e_j, e_k> with e_j = √(j+1) z^j, integrated by hand. The integrand
/// is √((j+1)(k+1)) r^{j+k+|m|} e^{i(j+m-k)θ} (m < 0 meaning zbar^{|m|}), so
/// only k = j + m survives and the radial integral gives 2/(j+k+|m|+2).
inline cplx monomial_entry(int m, int k, int j) {
  const int shift = m >= 0 ? j + m - k : j - (-m) - k;
  if (shift != 0) return 0.0;
  const double power = j + k + std::abs(m);
  return std::sqrt((j + 1.0) * (k + 1.0)) * 2.0 / (power + 2.0);
}

/// The indicator entry at (j-1, j): (1/π)∫_0^{2π}∫_0^{1/J} e^{-iθ} e_j conj(e_{j-1}) r dr dθ.
inline double indicator_entry(double J, int j) {
  if (j < 1) return 0.0;
  const double radial = std::pow(1.0 / J, 2.0 * j + 1.0) / (2.0 * j + 1.0);
  return std::sqrt(static_cast<double>(j) * (j + 1.0)) * 2.0 * radial;
}

/// Midpoint rule in r and θ on a fine grid; slow but independent of any
/// Gaussian rule.
inline cplx midpoint_disk_integral(const std::function<cplx(cplx)>& f, double r_max, int nr, int nt) {
  cplx total = 0.0;
  const double dr = r_max / nr, dt = 2.0 * std::numbers::pi / nt;
  for (int a = 0; a < nr; ++a) {
    const double r = (a + 0.5) * dr;
    for (int b = 0; b < nt; ++b) total += f(std::polar(r, (b + 0.5) * dt)) * r;
  }
  return total * dr * dt / std::numbers::pi;
}

}  // namespace oracle

#endif  // WEYLKIT_TESTS_ORACLES_HPP
