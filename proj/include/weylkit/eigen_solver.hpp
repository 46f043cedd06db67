#ifndef WEYLKIT_EIGEN_SOLVER_HPP
#define WEYLKIT_EIGEN_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "weylkit/errors.hpp"

namespace weylkit {

inline constexpr int kMaxMatrixSize = 512;
inline constexpr double kEigenResidualBound = 1e-8;

struct EigenPair {
  std::complex<double> value;
  Eigen::VectorXcd vector;
  double residual = 0.0;  // ||(M - λI)v|| / ||M||_F with ||v|| = 1
};

namespace detail {

inline std::complex<double> clean_zero(std::complex<double> z) {
  return {z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag()};
}

inline bool is_upper_triangular(const Eigen::MatrixXcd& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = j + 1; i < m.rows(); ++i)
      if (m(i, j) != std::complex<double>{}) return false;
  return true;
}

inline bool is_lower_triangular(const Eigen::MatrixXcd& m) {
  for (Eigen::Index j = 1; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i)
      if (m(i, j) != std::complex<double>{}) return false;
  return true;
}

inline double relative_residual(const Eigen::MatrixXcd& m, std::complex<double> lambda, const Eigen::VectorXcd& v,
                                double scale) {
  const Eigen::VectorXcd r = m * v - lambda * v;
  return scale > 0.0 ? r.norm() / scale : r.norm();
}

/// Unit vector minimising ||(M - λI)v||.
inline Eigen::VectorXcd smallest_singular_vector(const Eigen::MatrixXcd& m, std::complex<double> lambda) {
  Eigen::MatrixXcd shifted = m;
  shifted.diagonal().array() -= lambda;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
  return svd.matrixV().col(svd.matrixV().cols() - 1);
}

}  // namespace detail

/// All eigenvalues of a dense complex matrix with a residual certificate for
/// each. Triangular input is read off the diagonal, so nilpotent shift
/// truncations give exact zeros. Ordered by modulus (descending), then argument.
inline std::vector<EigenPair> eigen_pairs(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw InvalidInput("matrix is not square");
  if (m.rows() < 1 || m.rows() > kMaxMatrixSize) throw SizeOutOfRange("matrix size must be in [1, 512]");
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) throw InvalidInput("matrix entry is not finite");

  const Eigen::Index n = m.rows();
  const double scale = m.norm();
  std::vector<EigenPair> pairs(static_cast<std::size_t>(n));
  bool have_vectors = false;

  if (detail::is_upper_triangular(m) || detail::is_lower_triangular(m)) {
    for (Eigen::Index i = 0; i < n; ++i) pairs[static_cast<std::size_t>(i)].value = m(i, i);
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) throw ConvergenceFailure("eigenvalue iteration did not converge");
    for (Eigen::Index i = 0; i < n; ++i) {
      auto& p = pairs[static_cast<std::size_t>(i)];
      p.value = solver.eigenvalues()(i);
      p.vector = solver.eigenvectors().col(i).normalized();
    }
    have_vectors = true;
  }

  // Certificates; vectors failing the bound are replaced by the smallest right
  // singular vector of M - λI, computed once per distinct eigenvalue.
  std::vector<std::pair<std::complex<double>, Eigen::VectorXcd>> fallback;
  for (auto& p : pairs) {
    if (!have_vectors || p.vector.size() != n || !p.vector.allFinite() ||
        detail::relative_residual(m, p.value, p.vector, scale) > kEigenResidualBound) {
      auto it = std::find_if(fallback.begin(), fallback.end(), [&](const auto& f) { return f.first == p.value; });
      if (it == fallback.end()) {
        fallback.emplace_back(p.value, detail::smallest_singular_vector(m, p.value));
        it = std::prev(fallback.end());
      }
      p.vector = it->second;
    }
    p.residual = detail::relative_residual(m, p.value, p.vector, scale);
    if (!(p.residual <= kEigenResidualBound))
      throw ConvergenceFailure("eigenpair residual " + std::to_string(p.residual) + " exceeds the certificate bound");
    p.value = detail::clean_zero(p.value);
  }

  std::stable_sort(pairs.begin(), pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    const double ma = std::abs(a.value), mb = std::abs(b.value);
    if (ma != mb) return ma > mb;
    return std::arg(a.value) < std::arg(b.value);
  });
  return pairs;
}

inline std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXcd& m) {
  std::vector<std::complex<double>> out;
  for (const auto& p : eigen_pairs(m)) out.push_back(p.value);
  return out;
}

}  // namespace weylkit

#endif  // WEYLKIT_EIGEN_SOLVER_HPP
