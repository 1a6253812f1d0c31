#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "altlab/altlab.hpp"

namespace testing_util {

using altlab::Complex;
using altlab::ComplexMatrix;
using altlab::PsdMatrix;

inline ComplexMatrix mat(std::size_t rows, std::size_t cols, std::initializer_list<Complex> values) {
  return ComplexMatrix(rows, cols, std::vector<Complex>(values));
}

inline ComplexMatrix diag(std::initializer_list<double> values) {
  const std::vector<double> v(values);
  return ComplexMatrix::diagonal(v);
}

inline ComplexMatrix gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  altlab::SplitMix64 rng(seed);
  return altlab::gaussian_matrix(rows, cols, rng);
}

inline PsdMatrix random_psd(std::size_t n, std::uint64_t seed) {
  const auto g = gaussian(n, n, seed);
  return PsdMatrix::project(g * g.adjoint() * Complex(1.0 / static_cast<double>(n)));
}

inline ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  altlab::SplitMix64 rng(seed);
  return altlab::haar_unitary(n, rng);
}

inline double relative_error(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

inline double unitarity_defect(const ComplexMatrix& u) {
  return altlab::frobenius_distance(u.adjoint() * u, ComplexMatrix::identity(u.cols()));
}

}  // namespace testing_util

#define EXPECT_MATRIX_NEAR(x, y, tol) \
  EXPECT_LE(altlab::frobenius_distance((x), (y)), (tol)) << "matrices differ"
