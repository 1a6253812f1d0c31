#include "altlab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "altlab/spectral.hpp"

namespace altlab {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(data_.size()));
  }
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!std::isfinite(data_[k].real()) || !std::isfinite(data_[k].imag())) {
      throw std::invalid_argument("ComplexMatrix: non-finite entry at index " +
                                  std::to_string(k));
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
  return sum;
}

double ComplexMatrix::frobenius_norm() const {
  double scale = 0.0;
  for (const auto& z : data_) scale = std::max({scale, std::abs(z.real()), std::abs(z.imag())});
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z / scale);
  return scale * std::sqrt(sum);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw std::invalid_argument("operator*: inner dimensions differ (" +
                                std::to_string(lhs.cols()) + " vs " +
                                std::to_string(rhs.rows()) + ")");
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double frobenius_distance(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_shape(x, y, "frobenius_distance");
  return (x - y).frobenius_norm();
}

ComplexMatrix direct_sum(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix out(x.rows() + y.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j);
  }
  for (std::size_t i = 0; i < y.rows(); ++i) {
    for (std::size_t j = 0; j < y.cols(); ++j) out(x.rows() + i, x.cols() + j) = y(i, j);
  }
  return out;
}

ComplexMatrix spectral_synthesis(const ComplexMatrix& vectors, std::span<const double> values) {
  const std::size_t n = vectors.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double w = values[k];
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = w * vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(vectors(j, k));
    }
  }
  return out;
}

double spectral_zero_threshold(std::size_t n, double scale) noexcept {
  return 64.0 * static_cast<double>(std::max<std::size_t>(n, 1)) *
         std::numeric_limits<double>::epsilon() * scale;
}

// HermitianMatrix

HermitianMatrix::HermitianMatrix(ComplexMatrix m, Unchecked) : h_(std::move(m)) {}

HermitianMatrix HermitianMatrix::project(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("HermitianMatrix: matrix must be square");
  const std::size_t n = m.rows();
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return HermitianMatrix(std::move(h), Unchecked{});
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) : h_(project(m).h_) {
  const double asym = frobenius_distance(m, m.adjoint());
  const double bound = 1e-12 * std::max(1.0, m.frobenius_norm());
  if (asym > bound) {
    throw std::invalid_argument("HermitianMatrix: ||H - H*||_F = " + std::to_string(asym) +
                                " exceeds tolerance " + std::to_string(bound));
  }
}

// PsdMatrix

namespace {

/// Clamps the spectrum in place. Returns the most negative eigenvalue seen.
double clamp_spectrum(EigenDecomposition& d) {
  const double lmax = std::max(d.eigenvalues.front(), 0.0);
  const double floor = spectral_zero_threshold(d.eigenvalues.size(), lmax);
  double most_negative = 0.0;
  for (double& w : d.eigenvalues) {
    most_negative = std::min(most_negative, w);
    if (w <= floor) w = 0.0;
  }
  return most_negative;
}

}  // namespace

PsdMatrix::PsdMatrix(HermitianMatrix h, std::shared_ptr<const EigenDecomposition> spectrum)
    : h_(std::move(h)), spectrum_(std::move(spectrum)) {}

PsdMatrix::PsdMatrix(const HermitianMatrix& h) : h_(h) {
  auto d = hermitian_eig(h);
  const double lmax = d.eigenvalues.front();
  const double lmin = d.eigenvalues.back();
  if (lmin < -1e-10 * std::max(1.0, lmax)) {
    throw std::invalid_argument("PsdMatrix: lambda_min = " + std::to_string(lmin) +
                                " is below tolerance (lambda_max = " + std::to_string(lmax) +
                                ")");
  }
  const double most_negative = clamp_spectrum(d);
  if (most_negative < -spectral_zero_threshold(h.size(), std::max(lmax, 0.0))) {
    h_ = HermitianMatrix::project(d.reconstruct());
  }
  spectrum_ = std::make_shared<const EigenDecomposition>(std::move(d));
}

PsdMatrix PsdMatrix::project(const ComplexMatrix& m) {
  auto h = HermitianMatrix::project(m);
  auto d = hermitian_eig(h);
  const double lmax = std::max(d.eigenvalues.front(), 0.0);
  const double most_negative = clamp_spectrum(d);
  if (most_negative < -spectral_zero_threshold(h.size(), lmax)) {
    h = HermitianMatrix::project(d.reconstruct());
  }
  return PsdMatrix(std::move(h), std::make_shared<const EigenDecomposition>(std::move(d)));
}

PsdMatrix PsdMatrix::from_spectrum(EigenDecomposition spectrum) {
  auto h = HermitianMatrix::project(spectrum.reconstruct());
  return PsdMatrix(std::move(h), std::make_shared<const EigenDecomposition>(std::move(spectrum)));
}

PsdMatrix PsdMatrix::zero(std::size_t n) {
  return from_spectrum({std::vector<double>(n, 0.0), ComplexMatrix::identity(n)});
}

bool PsdMatrix::is_positive_definite() const noexcept {
  return lambda_max() > 0.0 && lambda_min() > 1e-12 * lambda_max();
}

}  // namespace altlab
