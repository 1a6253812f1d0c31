#include "altlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "altlab/spectral.hpp"

namespace altlab {

SchattenIndex::SchattenIndex(double p) : p_(p), infinite_(std::isinf(p) && p > 0) {
  if (!(p > 0.0)) {
    throw std::invalid_argument("SchattenIndex: p must be positive, got " + std::to_string(p));
  }
  if (infinite_) p_ = 0.0;
}

SchattenIndex SchattenIndex::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") return infinity();
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("SchattenIndex: cannot parse '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("SchattenIndex: cannot parse '" + text + "'");
  return SchattenIndex(value);
}

double SchattenIndex::value() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : p_;
}

std::string SchattenIndex::to_string() const {
  if (infinite_) return "inf";
  std::string s = std::to_string(p_);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

double schatten_of_values(std::span<const double> values, SchattenIndex p) {
  double largest = 0.0;
  for (double v : values) largest = std::max(largest, std::abs(v));
  if (p.is_infinite() || largest == 0.0) return largest;
  const double exponent = p.value();
  double sum = 0.0;
  for (double v : values) {
    const double x = std::abs(v);
    if (x > 0.0) sum += std::pow(x / largest, exponent);
  }
  return largest * std::pow(sum, 1.0 / exponent);
}

double schatten(const ComplexMatrix& x, SchattenIndex p) {
  return schatten_of_values(svd(x).singular_values, p);
}

double schatten(const HermitianMatrix& h, SchattenIndex p) {
  auto d = hermitian_eig(h);
  double largest = 0.0;
  for (double w : d.eigenvalues) largest = std::max(largest, std::abs(w));
  const double floor = spectral_zero_threshold(h.size(), largest);
  for (double& w : d.eigenvalues) w = std::abs(w) <= floor ? 0.0 : std::abs(w);
  return schatten_of_values(d.eigenvalues, p);
}

double schatten(const PsdMatrix& p, SchattenIndex index) {
  return schatten_of_values(p.spectrum().eigenvalues, index);
}

double operator_norm(const ComplexMatrix& x) { return schatten(x, SchattenIndex::infinity()); }

double operator_norm(const PsdMatrix& p) { return p.lambda_max(); }

double trace_power(const PsdMatrix& p, double s) {
  if (s < 0.0 && !p.is_positive_definite()) {
    throw std::domain_error("trace_power: negative exponent " + std::to_string(s) +
                            " needs a positive definite matrix (lambda_min = " +
                            std::to_string(p.lambda_min()) + ")");
  }
  const auto& w = p.spectrum().eigenvalues;
  if (s == 0.0) return static_cast<double>(w.size());
  // Ascending order keeps the sum stable for positive s.
  double sum = 0.0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it > 0.0) sum += std::pow(*it, s);
  }
  return sum;
}

double kyfan_constant(double a, double b, double r) {
  if (!(b > 0.0)) throw std::domain_error("kyfan_constant: b must be positive");
  if (a < b) throw std::domain_error("kyfan_constant: needs a >= b");
  if (r < 1.0) throw std::domain_error("kyfan_constant: needs r >= 1");
  if (a == b || r == 1.0) return 1.0;
  // Work with h = a/b: K is homogeneous of degree 0 in (a, b). expm1 keeps
  // h -> 1 and r -> 1 free of cancellation.
  const double h_minus_1 = (a - b) / b;
  const double h = a / b;
  const double log_h = std::log1p(h_minus_1);
  const double num = h * std::expm1((r - 1.0) * log_h);  // (a^r b - a b^r) / b^{r+1}
  const double first = num / ((r - 1.0) * h_minus_1);
  const double inner = (r - 1.0) / r * std::expm1(r * log_h) / num;
  return first * std::pow(inner, r);
}

}  // namespace altlab
