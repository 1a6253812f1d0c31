#include "altlab/functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "altlab/spectral.hpp"

namespace altlab {

PsdMatrix psd_power(const PsdMatrix& p, double alpha) {
  const std::size_t n = p.size();
  if (alpha == 0.0) {
    return PsdMatrix::from_spectrum({std::vector<double>(n, 1.0), ComplexMatrix::identity(n)});
  }
  if (alpha == 1.0) return p;
  const auto& d = p.spectrum();
  if (alpha < 0.0 && !p.is_positive_definite()) {
    throw std::domain_error("psd_power: negative exponent " + std::to_string(alpha) +
                            " needs a positive definite matrix (lambda_min = " +
                            std::to_string(p.lambda_min()) + ")");
  }
  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  // x^alpha is decreasing for alpha < 0: reverse to keep the order.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = alpha > 0.0 ? k : n - 1 - k;
    const double w = d.eigenvalues[src];
    out.eigenvalues[k] = w == 0.0 ? 0.0 : std::pow(w, alpha);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = d.eigenvectors(i, src);
  }
  return PsdMatrix::from_spectrum(std::move(out));
}

std::vector<double> sandwich_eigenvalues(const PsdMatrix& outer, const PsdMatrix& inner) {
  if (outer.size() != inner.size()) {
    throw std::invalid_argument("sandwich_eigenvalues: dimension mismatch (" +
                                std::to_string(outer.size()) + " vs " +
                                std::to_string(inner.size()) + ")");
  }
  const auto& p = outer.spectrum();
  const auto& q = inner.spectrum();
  // P Q P = (Q^{1/2} P)* (Q^{1/2} P) and Q^{1/2} P = V_Q diag(sqrt q) W diag(p) V_P*.
  std::vector<double> root(q.eigenvalues.size());
  for (std::size_t k = 0; k < root.size(); ++k) root[k] = std::sqrt(q.eigenvalues[k]);
  const ComplexMatrix w = q.eigenvectors.adjoint() * p.eigenvectors;
  auto values = graded_singular_values(root, w, p.eigenvalues);
  for (double& v : values) v *= v;
  return values;
}

std::vector<double> product_singular_values(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.cols() != y.rows()) {
    throw std::invalid_argument("product_singular_values: inner dimension mismatch (" +
                                std::to_string(x.cols()) + " vs " + std::to_string(y.rows()) +
                                ")");
  }
  const std::size_t k = x.cols();
  const auto sx = svd(x);
  const auto sy = svd(y);
  std::vector<double> left(k, 0.0);
  std::vector<double> right(k, 0.0);
  std::copy_n(sx.singular_values.begin(), std::min(k, sx.singular_values.size()), left.begin());
  std::copy_n(sy.singular_values.begin(), std::min(k, sy.singular_values.size()), right.begin());
  auto values = graded_singular_values(left, sx.right.adjoint() * sy.left, right);
  values.resize(std::min(x.rows(), y.cols()), 0.0);
  return values;
}

PsdMatrix modulus(const ComplexMatrix& x) {
  auto s = svd(x);
  const std::size_t n = x.cols();
  std::vector<double> values(n, 0.0);
  std::copy(s.singular_values.begin(), s.singular_values.end(), values.begin());
  return PsdMatrix::from_spectrum({std::move(values), std::move(s.right)});
}

PolarDecomposition polar(const ComplexMatrix& x) {
  if (!x.is_square()) throw std::invalid_argument("polar: matrix must be square");
  auto s = svd(x);
  ComplexMatrix unitary = s.left * s.right.adjoint();
  auto mod = PsdMatrix::from_spectrum({s.singular_values, std::move(s.right)});
  return {std::move(unitary), std::move(mod)};
}

JordanDecomposition jordan(const HermitianMatrix& h) {
  const auto d = hermitian_eig(h);
  const std::size_t n = h.size();
  EigenDecomposition plus{std::vector<double>(n), d.eigenvectors};
  EigenDecomposition minus{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    plus.eigenvalues[k] = std::max(d.eigenvalues[k], 0.0);
    const std::size_t src = n - 1 - k;
    minus.eigenvalues[k] = std::max(-d.eigenvalues[src], 0.0);
    for (std::size_t i = 0; i < n; ++i) minus.eigenvectors(i, k) = d.eigenvectors(i, src);
  }
  return {PsdMatrix::from_spectrum(std::move(plus)), PsdMatrix::from_spectrum(std::move(minus))};
}

namespace {

double spectral_radius(const HermitianMatrix& h) {
  const auto d = hermitian_eig(h);
  return std::max(std::abs(d.eigenvalues.front()), std::abs(d.eigenvalues.back()));
}

}  // namespace

double loewner_margin(const HermitianMatrix& x, const HermitianMatrix& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("loewner_leq: dimension mismatch (" + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()) + ")");
  }
  const auto diff = hermitian_eig(HermitianMatrix::project(y.matrix() - x.matrix()));
  const double scale = std::max({1.0, spectral_radius(x), spectral_radius(y)});
  return diff.eigenvalues.back() / scale;
}

bool loewner_leq(const HermitianMatrix& x, const HermitianMatrix& y, double tol) {
  return loewner_margin(x, y) >= -tol;
}

ComplexMatrix contraction_factor(const PsdMatrix& x, const PsdMatrix& y) {
  if (x.size() != y.size()) throw std::invalid_argument("contraction_factor: dimension mismatch");
  const auto sum = PsdMatrix::project(x.matrix() + y.matrix());
  const auto& d = sum.spectrum();
  const std::size_t n = x.size();
  const double cutoff = 1e-12 * sum.lambda_max();
  std::vector<double> inv_sqrt(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (d.eigenvalues[k] > cutoff) inv_sqrt[k] = 1.0 / std::sqrt(d.eigenvalues[k]);
  }
  // K = R (X - Y) R with R the pseudo-inverse square root, assembled in the
  // eigenbasis of X + Y.
  const ComplexMatrix& v = d.eigenvectors;
  ComplexMatrix inner = v.adjoint() * (x.matrix() - y.matrix()) * v;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inner(i, j) *= inv_sqrt[i] * inv_sqrt[j];
  }
  return HermitianMatrix::project(v * inner * v.adjoint()).matrix();
}

HermitianMatrix block_dilation(const ComplexMatrix& x) {
  if (!x.is_square()) throw std::invalid_argument("block_dilation: matrix must be square");
  const std::size_t n = x.rows();
  ComplexMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, n + j) = x(i, j);
      out(n + j, i) = std::conj(x(i, j));
    }
  }
  return HermitianMatrix::project(out);
}

}  // namespace altlab
