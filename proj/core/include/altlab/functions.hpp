#pragma once

#include <vector>

#include "altlab/matrix.hpp"

namespace altlab {

/// P^alpha by spectral calculus. alpha = 0 returns the identity (0^0 = 1).
/// Negative alpha requires P positive definite; otherwise std::domain_error.
PsdMatrix psd_power(const PsdMatrix& p, double alpha);

/// Eigenvalues of P Q P, non-increasing, computed as squared singular values
/// of diag(q)^{1/2} (V_Q* V_P) diag(p) from the cached spectra. Tiny
/// eigenvalues of strongly graded products keep their relative accuracy,
/// which fractional powers of the result depend on. Zero eigenvalues of
/// either factor propagate as exact zeros.
std::vector<double> sandwich_eigenvalues(const PsdMatrix& outer, const PsdMatrix& inner);

/// Singular values of X Y, non-increasing, from the two SVDs:
/// sigma(X Y) = sigma(diag(sigma_X) V_X* U_Y diag(sigma_Y)).
std::vector<double> product_singular_values(const ComplexMatrix& x, const ComplexMatrix& y);

/// |X| = (X*X)^{1/2}.
PsdMatrix modulus(const ComplexMatrix& x);

struct PolarDecomposition {
  ComplexMatrix unitary;
  PsdMatrix modulus;
};

/// X = U |X| for square X. U is assembled from the SVD factors, so it is a
/// deterministic function of X even when X is singular.
PolarDecomposition polar(const ComplexMatrix& x);

struct JordanDecomposition {
  PsdMatrix plus;
  PsdMatrix minus;
};

/// H = plus - minus with plus * minus = 0.
JordanDecomposition jordan(const HermitianMatrix& h);

/// Normalized Loewner margin lambda_min(Y - X) / max(1, ||X||, ||Y||).
/// Non-negative iff X <= Y in exact arithmetic.
double loewner_margin(const HermitianMatrix& x, const HermitianMatrix& y);

/// X <= Y up to `tol` on the normalized margin.
bool loewner_leq(const HermitianMatrix& x, const HermitianMatrix& y, double tol = 1e-9);

/// Hermitian contraction K with X - Y = (X+Y)^{1/2} K (X+Y)^{1/2}, built with
/// the pseudo-inverse square root of X+Y (eigenvalues <= 1e-12 lambda_max
/// are treated as zero).
ComplexMatrix contraction_factor(const PsdMatrix& x, const PsdMatrix& y);

/// [[0, X], [X*, 0]]. Its modulus is diag(|X*|, |X|).
HermitianMatrix block_dilation(const ComplexMatrix& x);

}  // namespace altlab
