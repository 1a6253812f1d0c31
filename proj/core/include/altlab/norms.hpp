#pragma once

#include <span>
#include <string>

#include "altlab/matrix.hpp"

namespace altlab {

/// Schatten index p in (0, inf]. Infinity is a distinct state, not a large
/// sentinel, so the operator norm path is exact.
class SchattenIndex {
 public:
  /// Throws std::invalid_argument unless p > 0. Passing +inf gives infinity().
  explicit SchattenIndex(double p);
  static SchattenIndex infinity() noexcept { return SchattenIndex(); }

  /// Accepts a decimal number or "inf" / "infinity".
  static SchattenIndex parse(const std::string& text);

  bool is_infinite() const noexcept { return infinite_; }
  /// +inf when is_infinite().
  double value() const noexcept;

  std::string to_string() const;

  bool operator==(const SchattenIndex&) const = default;

 private:
  SchattenIndex() noexcept : p_(0.0), infinite_(true) {}
  double p_;
  bool infinite_;
};

/// (sum_i s_i^p)^{1/p} over non-negative values, max for p = inf. Evaluated
/// relative to the largest value so that large p does not overflow.
double schatten_of_values(std::span<const double> values, SchattenIndex p);

double schatten(const ComplexMatrix& x, SchattenIndex p);
double schatten(const HermitianMatrix& h, SchattenIndex p);
double schatten(const PsdMatrix& p, SchattenIndex index);

double operator_norm(const ComplexMatrix& x);
double operator_norm(const PsdMatrix& p);

/// Tr P^s = sum_i lambda_i^s with the psd_power conventions (0^0 = 1).
/// Negative s on a singular P throws std::domain_error.
double trace_power(const PsdMatrix& p, double s);

/// Ky Fan constant K(a, b, r) for a >= b > 0, r >= 1. The removable
/// singularities a = b and r = 1 evaluate to their limit 1.
double kyfan_constant(double a, double b, double r);

}  // namespace altlab
