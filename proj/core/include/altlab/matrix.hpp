#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace altlab {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Every entry is finite.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given shape. Both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of `entries` (row-major). Throws std::invalid_argument
  /// on a length mismatch or a non-finite component.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::span<const Complex> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// ||x - y||_F. Shapes must agree.
double frobenius_distance(const ComplexMatrix& x, const ComplexMatrix& y);

/// Block-diagonal x ⊕ y.
ComplexMatrix direct_sum(const ComplexMatrix& x, const ComplexMatrix& y);

/// V diag(d) V*, for square V with d.size() columns used.
ComplexMatrix spectral_synthesis(const ComplexMatrix& vectors, std::span<const double> values);

/// Spectral data of a Hermitian matrix: eigenvalues non-increasing, unitary
/// eigenvector columns in the same order.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const { return spectral_synthesis(eigenvectors, eigenvalues); }
};

/// Square matrix equal to its adjoint. Construction checks
/// ||H - H*||_F <= 1e-12 max(1, ||H||_F) and stores (H + H*)/2.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m);

  /// Symmetrizes without the tolerance check. For matrices that are Hermitian
  /// in exact arithmetic (products like A B A*), where rounding may exceed the
  /// construction tolerance.
  static HermitianMatrix project(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const noexcept { return h_; }
  std::size_t size() const noexcept { return h_.rows(); }

 private:
  struct Unchecked {};
  HermitianMatrix(ComplexMatrix m, Unchecked);

  ComplexMatrix h_;
};

/// Positive semidefinite matrix with its cached eigendecomposition.
///
/// Construction requires lambda_min >= -1e-10 max(1, lambda_max). Eigenvalues
/// that are negative within that tolerance, or positive but below the
/// rounding floor of the eigensolver (see `spectral_zero_threshold`), are
/// stored as exact zeros so that fractional powers of rank-deficient input do
/// not amplify rounding noise.
class PsdMatrix {
 public:
  explicit PsdMatrix(const HermitianMatrix& h);
  explicit PsdMatrix(const ComplexMatrix& m) : PsdMatrix(HermitianMatrix(m)) {}

  /// Symmetrizes and clamps the spectrum at zero without any check.
  static PsdMatrix project(const ComplexMatrix& m);

  /// Builds from trusted spectral data (eigenvalues >= 0, non-increasing).
  static PsdMatrix from_spectrum(EigenDecomposition spectrum);

  static PsdMatrix zero(std::size_t n);

  const HermitianMatrix& hermitian() const noexcept { return h_; }
  const ComplexMatrix& matrix() const noexcept { return h_.matrix(); }
  const EigenDecomposition& spectrum() const noexcept { return *spectrum_; }
  std::size_t size() const noexcept { return h_.size(); }

  double lambda_max() const noexcept { return spectrum_->eigenvalues.front(); }
  double lambda_min() const noexcept { return spectrum_->eigenvalues.back(); }

  /// lambda_min > 1e-12 lambda_max (and lambda_max > 0).
  bool is_positive_definite() const noexcept;

 private:
  PsdMatrix(HermitianMatrix h, std::shared_ptr<const EigenDecomposition> spectrum);

  HermitianMatrix h_;
  std::shared_ptr<const EigenDecomposition> spectrum_;
};

/// Magnitude below which a computed eigenvalue or singular value of an n x n
/// problem with spectral scale `scale` is indistinguishable from zero.
double spectral_zero_threshold(std::size_t n, double scale) noexcept;

}  // namespace altlab
