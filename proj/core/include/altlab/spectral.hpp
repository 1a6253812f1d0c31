#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "altlab/matrix.hpp"

namespace altlab {

/// Cyclic Jacobi stopping rule: sweep until the off-diagonal Frobenius mass is
/// at most `tolerance * ||H||_F`, or fail after `max_sweeps`.
struct JacobiOptions {
  double tolerance = 1e-14;
  int max_sweeps = 100;
};

/// Thrown when the eigensolver exhausts its sweep budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(double residual, int sweeps);

  /// Relative off-diagonal mass at the last sweep.
  double residual() const noexcept { return residual_; }
  int sweeps() const noexcept { return sweeps_; }

 private:
  double residual_;
  int sweeps_;
};

/// Options used by `hermitian_eig` on the calling thread when none are passed.
const JacobiOptions& current_jacobi_options() noexcept;

/// Overrides the calling thread's default Jacobi options for its lifetime.
class ScopedJacobiOptions {
 public:
  explicit ScopedJacobiOptions(const JacobiOptions& options);
  ~ScopedJacobiOptions();

  ScopedJacobiOptions(const ScopedJacobiOptions&) = delete;
  ScopedJacobiOptions& operator=(const ScopedJacobiOptions&) = delete;

 private:
  JacobiOptions previous_;
};

EigenDecomposition hermitian_eig(const HermitianMatrix& h);
EigenDecomposition hermitian_eig(const HermitianMatrix& h, const JacobiOptions& options);

/// X = U diag(s) V*, U m x m and V n x n unitary, s non-increasing with
/// min(m, n) entries.
struct SingularDecomposition {
  std::vector<double> singular_values;
  ComplexMatrix left;
  ComplexMatrix right;

  ComplexMatrix reconstruct() const;
};

/// SVD from the eigendecomposition of X*X. Singular values are taken as the
/// column norms of X V (the square roots of the eigenvalues of X*X up to
/// rounding) so that null directions stay at rounding level instead of
/// sqrt(eps). Left vectors for (numerically) zero singular values are
/// completed deterministically, preferring the matching right vector.
SingularDecomposition svd(const ComplexMatrix& x);

/// Singular values of diag(left) W diag(right), non-increasing. The Gram
/// matrix is formed and diagonalized in extended precision with a relative
/// (per-pair) stopping rule, so small singular values of strongly graded
/// products keep their relative accuracy. Zero scalings give exact zeros.
std::vector<double> graded_singular_values(std::span<const double> left, const ComplexMatrix& w,
                                           std::span<const double> right);

}  // namespace altlab
