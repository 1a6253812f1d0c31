#include "altlab/inequalities.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "altlab/functions.hpp"
#include "altlab/spectral.hpp"

namespace altlab {

namespace {

constexpr std::array kAllIds = {
    IneqId::kAlt,          IneqId::kWater,           IneqId::kWaterwine,
    IneqId::kTFamily,      IneqId::kBourin,          IneqId::kTraceNormSpecial,
    IneqId::kHolder,       IneqId::kHolderCorollary, IneqId::kGeneralA,
    IneqId::kLemmaSumDiff, IneqId::kHermitianB,      IneqId::kGeneral,
    IneqId::kProofSteps,
};

constexpr std::array<std::string_view, kAllIds.size()> kNames = {
    "alt",    "water",            "waterwine", "t_family",       "bourin",
    "trace_norm", "holder",       "holder_corollary", "general_A", "lemma_sum_diff",
    "hermitian_B", "general",     "proof_steps",
};

void require_same_dim(std::size_t a, std::size_t b, const char* who) {
  if (a != b) {
    throw std::invalid_argument(std::string(who) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

double require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw std::range_error(std::string(what) + " is not finite; parameters exceed double range");
  }
  return value;
}

double relative_difference(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

/// (|| M^exponent ||_p)^outer from the non-increasing spectrum w of M, scaled
/// by lambda_max so that large exponents stay in range.
double gauge(std::span<const double> w, double exponent, SchattenIndex p, double outer = 1.0) {
  const double largest = w.front();
  if (largest <= 0.0) {
    if (exponent == 0.0) return std::pow(schatten_of_values(std::vector<double>(w.size(), 1.0), p), outer);
    return 0.0;
  }
  double log_norm = exponent * std::log(largest);
  if (!p.is_infinite()) {
    double sum = 0.0;
    for (double x : w) {
      if (x > 0.0) {
        sum += std::pow(x / largest, exponent * p.value());
      } else if (exponent == 0.0) {
        sum += 1.0;
      }
    }
    log_norm += std::log(sum) / p.value();
  }
  return std::exp(outer * log_norm);
}

double gauge(const PsdMatrix& m, double exponent, SchattenIndex p, double outer = 1.0) {
  return gauge(m.spectrum().eigenvalues, exponent, p, outer);
}

/// sum_i w_i^s over a non-increasing spectrum, 0^0 = 1.
double trace_power(std::span<const double> w, double s) {
  if (s == 0.0) return static_cast<double>(w.size());
  if (s < 0.0 && !w.empty() && !(w.back() > 0.0)) {
    throw std::domain_error("trace_power: negative exponent on a singular product");
  }
  double sum = 0.0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it > 0.0) sum += std::pow(*it, s);
  }
  return sum;
}

/// x^t y^{1-t} with 0 absorbing.
double weighted_geometric(double x, double y, double t) {
  if (x == 0.0 || y == 0.0) return 0.0;
  const double direct = std::pow(x, t) * std::pow(y, 1.0 - t);
  if (std::isfinite(direct) && direct > 0.0) return direct;
  return std::exp(t * std::log(x) + (1.0 - t) * std::log(y));
}

/// Spectrum of outer * inner * outer.
std::vector<double> sandwich(const PsdMatrix& outer, const PsdMatrix& inner) {
  return sandwich_eigenvalues(outer, inner);
}

/// Modulus of a Hermitian matrix as plus + minus of its Jordan decomposition.
PsdMatrix hermitian_modulus(const HermitianMatrix& h) {
  const auto parts = jordan(h);
  return PsdMatrix::project(parts.plus.matrix() + parts.minus.matrix());
}

std::uint64_t fingerprint_of(std::initializer_list<const ComplexMatrix*> inputs,
                             std::uint64_t seed) {
  return fingerprint(std::span<const ComplexMatrix* const>(inputs.begin(), inputs.size()), seed);
}

IneqReport make_report(IneqId id, std::size_t dim, double lhs, double rhs,
                       const IneqParams& params, const CheckContext& ctx,
                       std::uint64_t print, std::optional<double> scale = std::nullopt) {
  IneqReport rep;
  rep.id = id;
  rep.dim = dim;
  rep.lhs = require_finite(lhs, "lhs");
  rep.rhs = require_finite(rhs, "rhs");
  rep.slack = rhs - lhs;
  const double denom = scale ? *scale : std::max({std::abs(lhs), std::abs(rhs), 1.0});
  rep.relative_slack = rep.slack / denom;
  rep.verdict = classify(rep.relative_slack, ctx.tolerance);
  rep.params = params;
  rep.seed = ctx.seed;
  rep.fingerprint = print;
  return rep;
}

/// Pair (lhs, rhs) with its relative slack under the default normalization.
struct Side {
  double lhs;
  double rhs;
  double relative() const { return (rhs - lhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0}); }
};

Side tighter(const Side& x, const Side& y) { return y.relative() < x.relative() ? y : x; }

void require_nonnegative(double value, const char* name, const char* who) {
  if (value < 0.0) {
    throw std::domain_error(std::string(who) + ": " + name + " must be >= 0, got " +
                            std::to_string(value));
  }
}

void require_at_least_one(double value, const char* name, const char* who) {
  if (value < 1.0) {
    throw std::domain_error(std::string(who) + ": " + name + " must be >= 1, got " +
                            std::to_string(value));
  }
}

}  // namespace

std::string_view to_string(IneqId id) noexcept { return kNames[static_cast<std::size_t>(id)]; }

std::optional<IneqId> parse_ineq_id(std::string_view name) noexcept {
  for (std::size_t k = 0; k < kNames.size(); ++k) {
    if (kNames[k] == name) return kAllIds[k];
  }
  if (name == "trace_norm_special") return IneqId::kTraceNormSpecial;
  return std::nullopt;
}

std::span<const IneqId> all_inequalities() noexcept { return kAllIds; }

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kViolated: return "violated";
    case Verdict::kEquality: return "equality";
  }
  return "?";
}

Verdict classify(double relative_slack, double tol) noexcept {
  if (relative_slack < -tol) return Verdict::kViolated;
  if (std::abs(relative_slack) <= kEqualityTolerance) return Verdict::kEquality;
  return Verdict::kHolds;
}

std::optional<double> IneqReport::detail(std::string_view name) const {
  for (const auto& d : details) {
    if (d.name == name) return d.value;
  }
  return std::nullopt;
}

std::uint64_t fingerprint(std::span<const ComplexMatrix* const> inputs, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (word >> (8 * byte)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (const ComplexMatrix* m : inputs) {
    mix(m->rows());
    mix(m->cols());
    for (const auto& z : m->entries()) {
      mix(std::bit_cast<std::uint64_t>(z.real()));
      mix(std::bit_cast<std::uint64_t>(z.imag()));
    }
  }
  mix(seed);
  return h;
}

// ---------------------------------------------------------------------------
// Positive-pair statements

IneqReport check_alt(const PsdMatrix& a, const PsdMatrix& b, double r, double q,
                     const CheckContext& ctx) {
  require_same_dim(a.size(), b.size(), "check_alt");
  require_nonnegative(q, "q", "check_alt");
  require_nonnegative(r, "r", "check_alt");
  const auto ar = psd_power(a, r);
  const auto br = psd_power(b, r);
  const double wine = trace_power(sandwich(ar, br), q);
  const double abar = trace_power(sandwich(a, b), r * q);

  IneqParams params;
  params.r = r;
  params.q = q;
  const bool reversed = r > 1.0;
  auto rep = make_report(IneqId::kAlt, a.size(), reversed ? abar : wine, reversed ? wine : abar,
                         params, ctx, fingerprint_of({&a.matrix(), &b.matrix()}, ctx.seed));
  rep.details = {{"tr_ArBrAr_q", wine}, {"tr_ABA_rq", abar}};
  return rep;
}

IneqReport check_water(const PsdMatrix& a, const PsdMatrix& b, double r, double q,
                       const CheckContext& ctx) {
  require_same_dim(a.size(), b.size(), "check_water");
  require_nonnegative(r, "r", "check_water");
  const double power = r * q;
  if (power < 0.0 && !(a.is_positive_definite() && b.is_positive_definite())) {
    throw std::domain_error("check_water: r q < 0 needs positive definite A and B");
  }
  const double abar = trace_power(sandwich(a, b), power);
  const double water =
      require_finite(std::pow(a.lambda_max(), 2.0 * power) * trace_power(b, power), "water");

  IneqParams params;
  params.r = r;
  params.q = q;
  const bool reversed = q < 0.0;
  auto rep = make_report(IneqId::kWater, a.size(), reversed ? water : abar,
                         reversed ? abar : water, params, ctx,
                         fingerprint_of({&a.matrix(), &b.matrix()}, ctx.seed));
  rep.details = {{"tr_ABA_rq", abar}, {"water", water}};
  return rep;
}

namespace {

struct WaterWineParts {
  double abar;
  double water;
  double wine;
  std::vector<double> aba;
  std::vector<double> wine_matrix;
};

WaterWineParts water_wine_parts(const PsdMatrix& a, const PsdMatrix& b, double r, double q) {
  const auto ar = psd_power(a, r);
  const auto br = psd_power(b, r);
  auto wine_matrix = sandwich(ar, br);
  auto aba = sandwich(a, b);
  const double abar = trace_power(aba, r * q);
  const double water = require_finite(
      std::pow(a.lambda_max(), 2.0 * r * q) * trace_power(b, r * q), "water");
  const double wine = trace_power(wine_matrix, q);
  return {abar, water, wine, std::move(aba), std::move(wine_matrix)};
}

}  // namespace

IneqReport check_waterwine(const PsdMatrix& a, const PsdMatrix& b, double r, double q,
                           const CheckContext& ctx) {
  require_same_dim(a.size(), b.size(), "check_waterwine");
  require_nonnegative(q, "q", "check_waterwine");
  require_nonnegative(r, "r", "check_waterwine");
  const auto parts = water_wine_parts(a, b, r, q);
  const double bound = require_finite(weighted_geometric(parts.water, parts.wine, 1.0 - r), "rhs");

  IneqParams params;
  params.r = r;
  params.q = q;
  const bool reversed = r > 1.0;
  auto rep = make_report(IneqId::kWaterwine, a.size(), reversed ? bound : parts.abar,
                         reversed ? parts.abar : bound, params, ctx,
                         fingerprint_of({&a.matrix(), &b.matrix()}, ctx.seed));
  rep.details = {{"tr_ABA_rq", parts.abar}, {"water", parts.water}, {"wine", parts.wine},
                 {"bound", bound}};

  if (q > 0.0) {
    const SchattenIndex qi(q);
    // ||(ABA)^r||_q <= (||A||^{2r} ||B^r||_q)^{1-r} ||A^r B^r A^r||_q^r
    const double wine_norm = gauge(parts.wine_matrix, 1.0, qi);
    const double qnorm_lhs = gauge(parts.aba, r, qi);
    const double qnorm_rhs = weighted_geometric(
        std::pow(a.lambda_max(), 2.0 * r) * gauge(b, r, qi), wine_norm, 1.0 - r);

    // Same bound on the pair (B^{1/2}, A^2).
    const auto b_half = psd_power(b, 0.5);
    const auto a_sq = psd_power(a, 2.0);
    const double dual_lhs = gauge(sandwich(b_half, a_sq), r, qi);
    const double dual_rhs = weighted_geometric(std::pow(b.lambda_max(), r) * gauge(a, 2.0 * r, qi),
                                              wine_norm, 1.0 - r);
    const auto swapped_inner = sandwich(psd_power(b_half, r), psd_power(a_sq, r));
    const double dual_swapped = weighted_geometric(
        std::pow(b_half.lambda_max(), 2.0 * r) * gauge(a_sq, r, qi), gauge(swapped_inner, 1.0, qi),
        1.0 - r);

    const double mismatch = std::max(
        {relative_difference(parts.abar, std::pow(qnorm_lhs, q)),
         relative_difference(bound, std::pow(qnorm_rhs, q)), relative_difference(qnorm_lhs, dual_lhs),
         relative_difference(dual_rhs, dual_swapped)});
    rep.details.insert(rep.details.end(), {{"qnorm_lhs", qnorm_lhs},
                                           {"qnorm_rhs", qnorm_rhs},
                                           {"dual_lhs", dual_lhs},
                                           {"dual_rhs", dual_rhs},
                                           {"dual_swapped_rhs", dual_swapped},
                                           {"formulation_mismatch", mismatch}});
  }
  return rep;
}

IneqReport check_t_family(const PsdMatrix& a, const PsdMatrix& b, double r, double q, double t,
                          const CheckContext& ctx) {
  require_same_dim(a.size(), b.size(), "check_t_family");
  if (r < 0.0 || r > 1.0) throw std::domain_error("check_t_family: needs 0 <= r <= 1");
  if (t < 0.0 || t > 1.0) throw std::domain_error("check_t_family: needs 0 <= t <= 1");
  require_nonnegative(q, "q", "check_t_family");
  const auto parts = water_wine_parts(a, b, r, q);
  const double bound = require_finite(weighted_geometric(parts.water, parts.wine, t), "rhs");

  IneqParams params;
  params.r = r;
  params.q = q;
  params.t = t;
  auto rep = make_report(IneqId::kTFamily, a.size(), parts.abar, bound, params, ctx,
                         fingerprint_of({&a.matrix(), &b.matrix()}, ctx.seed));
  rep.exploratory = is_exploratory(IneqId::kTFamily, params);
  rep.details = {{"water", parts.water}, {"wine", parts.wine}, {"proven_threshold", 1.0 - r}};
  return rep;
}

IneqReport check_bourin(const PsdMatrix& a, const PsdMatrix& b, double r, double upper,
                        double lower, const CheckContext& ctx) {
  require_same_dim(a.size(), b.size(), "check_bourin");
  if (r < 1.0) throw std::domain_error("check_bourin: needs r >= 1");
  const double k = kyfan_constant(upper, lower, r);
  const std::size_t n = a.size();
  const auto id = ComplexMatrix::identity(n);
  if (!loewner_leq(HermitianMatrix(lower * id), b.hermitian()) ||
      !loewner_leq(b.hermitian(), HermitianMatrix(upper * id))) {
    throw std::invalid_argument("check_bourin: B violates the spectrum bounds " +
                                std::to_string(lower) + " I <= B <= " + std::to_string(upper) +
                                " I (spectrum [" + std::to_string(b.lambda_min()) + ", " +
                                std::to_string(b.lambda_max()) + "])");
  }
  const auto aba_matrix = sandwich(a, b);
  const auto& aba = aba_matrix;
  const auto inner = sandwich(psd_power(a, r), psd_power(b, r));
  const auto& mid = inner;

  std::vector<double> outer(n);
  for (std::size_t i = 0; i < n; ++i) outer[i] = aba[i] > 0.0 ? std::pow(aba[i], r) : 0.0;

  const double scale = std::max({1.0, k * outer.front(), mid.front()});
  double best_lhs = 0.0;
  double best_rhs = 0.0;
  double best_rel = std::numeric_limits<double>::infinity();
  double best_index = 0;
  double best_side = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::array<Side, 2> sides = {Side{outer[i] / k, mid[i]}, Side{mid[i], k * outer[i]}};
    for (std::size_t s = 0; s < 2; ++s) {
      const double rel = (sides[s].rhs - sides[s].lhs) / scale;
      if (rel < best_rel) {
        best_rel = rel;
        best_lhs = sides[s].lhs;
        best_rhs = sides[s].rhs;
        best_index = static_cast<double>(i);
        best_side = static_cast<double>(s);
      }
    }
  }
  IneqParams params;
  params.r = r;
  params.a = upper;
  params.b = lower;
  auto rep = make_report(IneqId::kBourin, n, best_lhs, best_rhs, params, ctx,
                         fingerprint_of({&a.matrix(), &b.matrix()}, ctx.seed), scale);
  rep.details = {{"kyfan_constant", k}, {"component", best_index}, {"upper_side", best_side}};
  return rep;
}

IneqReport check_trace_norm_special(const PsdMatrix& a, const PsdMatrix& b,
                                    const CheckContext& ctx) {
  require_same_dim(a.size(), b.size(), "check_trace_norm_special");
  const ComplexMatrix ab = a.matrix() * b.matrix();
  const double tr_ab = ab.trace().real();
  const double trace_norm = schatten(ab, SchattenIndex(1.0));
  const double trace_b = trace_power(b, 1.0);
  const double upper = std::sqrt(a.lambda_max() * trace_b * std::max(tr_ab, 0.0));

  const Side worst = tighter(Side{tr_ab, trace_norm}, Side{trace_norm, upper});
  auto rep = make_report(IneqId::kTraceNormSpecial, a.size(), worst.lhs, worst.rhs, IneqParams{},
                         ctx, fingerprint_of({&a.matrix(), &b.matrix()}, ctx.seed));
  rep.details = {{"tr_AB", tr_ab}, {"trace_norm_AB", trace_norm}, {"upper_bound", upper}};
  return rep;
}

// ---------------------------------------------------------------------------
// Hölder

namespace {

void require_holder_exponents(double s, double t, double u, const char* who) {
  if (!(s > 0.0 && t > 0.0 && u > 0.0)) {
    throw std::invalid_argument(std::string(who) + ": exponents s, t, u must be positive");
  }
  if (std::abs(1.0 / s + 1.0 / t - 1.0 / u) > 1e-12) {
    throw std::invalid_argument(std::string(who) + ": exponents violate 1/s + 1/t = 1/u");
  }
}

}  // namespace

IneqReport check_holder(const ComplexMatrix& x, const ComplexMatrix& y, double s, double t,
                        double u, SchattenIndex p, const CheckContext& ctx) {
  require_holder_exponents(s, t, u, "check_holder");
  require_same_dim(x.cols(), y.rows(), "check_holder");
  const double lhs = gauge(product_singular_values(x, y), u, p, 1.0 / u);
  const double rhs = gauge(modulus(x), s, p, 1.0 / s) * gauge(modulus(y), t, p, 1.0 / t);

  IneqParams params;
  params.s = s;
  params.t = t;
  params.u = u;
  params.p = p;
  auto rep = make_report(IneqId::kHolder, x.rows(), lhs, rhs, params, ctx,
                         fingerprint_of({&x, &y}, ctx.seed));
  rep.exploratory = is_exploratory(IneqId::kHolder, params);
  return rep;
}

IneqReport check_holder_corollary(const PsdMatrix& x, const PsdMatrix& y, double s, double t,
                                  double u, SchattenIndex p, const CheckContext& ctx) {
  require_holder_exponents(s, t, u, "check_holder_corollary");
  require_same_dim(x.size(), y.size(), "check_holder_corollary");
  const double lhs = gauge(sandwich(x, y), u, p, 1.0 / u);
  const double rhs = gauge(x, 2.0 * s, p, 1.0 / s) * gauge(y, t, p, 1.0 / t);

  IneqParams params;
  params.s = s;
  params.t = t;
  params.u = u;
  params.p = p;
  auto rep = make_report(IneqId::kHolderCorollary, x.size(), lhs, rhs, params, ctx,
                         fingerprint_of({&x.matrix(), &y.matrix()}, ctx.seed));
  rep.exploratory = is_exploratory(IneqId::kHolderCorollary, params);
  return rep;
}

// ---------------------------------------------------------------------------
// General matrices

IneqReport check_general_A(const ComplexMatrix& a, const PsdMatrix& b, double q, SchattenIndex p,
                           const CheckContext& ctx) {
  if (!a.is_square()) throw std::invalid_argument("check_general_A: A must be square");
  require_same_dim(a.rows(), b.size(), "check_general_A");
  require_at_least_one(q, "q", "check_general_A");
  const double lhs = gauge(PsdMatrix::project(a * b.matrix() * a.adjoint()), q, p);
  const double rhs = gauge(sandwich(psd_power(modulus(a), q), psd_power(b, q)), 1.0, p);

  IneqParams params;
  params.q = q;
  params.p = p;
  return make_report(IneqId::kGeneralA, a.rows(), lhs, rhs, params, ctx,
                     fingerprint_of({&a, &b.matrix()}, ctx.seed));
}

IneqReport check_lemma_sum_diff(const PsdMatrix& x, const PsdMatrix& y, SchattenIndex p, double q,
                                const CheckContext& ctx) {
  require_same_dim(x.size(), y.size(), "check_lemma_sum_diff");
  if (p.value() < 1.0) throw std::domain_error("check_lemma_sum_diff: needs p >= 1");
  require_at_least_one(q, "q", "check_lemma_sum_diff");
  const auto diff = HermitianMatrix::project(x.matrix() - y.matrix());
  const auto sum = PsdMatrix::project(x.matrix() + y.matrix());
  const Side plain{schatten(diff, p), schatten(sum, p)};
  const Side composite{gauge(hermitian_modulus(diff), q, p, 1.0 / q), gauge(sum, q, p, 1.0 / q)};
  const Side worst = tighter(plain, composite);

  IneqParams params;
  params.p = p;
  params.q = q;
  auto rep = make_report(IneqId::kLemmaSumDiff, x.size(), worst.lhs, worst.rhs, params, ctx,
                         fingerprint_of({&x.matrix(), &y.matrix()}, ctx.seed));
  rep.details = {{"norm_diff", plain.lhs},
                 {"norm_sum", plain.rhs},
                 {"composite_diff", composite.lhs},
                 {"composite_sum", composite.rhs}};
  return rep;
}

IneqReport check_hermitian_B(const ComplexMatrix& a, const HermitianMatrix& b, double q,
                             SchattenIndex p, const CheckContext& ctx) {
  if (!a.is_square()) throw std::invalid_argument("check_hermitian_B: A must be square");
  require_same_dim(a.rows(), b.size(), "check_hermitian_B");
  require_at_least_one(q, "q", "check_hermitian_B");
  const auto aba = HermitianMatrix::project(a * b.matrix() * a.adjoint());
  const auto abs_b = hermitian_modulus(b);
  const auto abs_a_q = psd_power(modulus(a), q);
  const double lhs = gauge(hermitian_modulus(aba), q, p);
  const double rhs = gauge(sandwich(abs_a_q, psd_power(abs_b, q)), 1.0, p);
  const double middle = gauge(PsdMatrix::project(a * abs_b.matrix() * a.adjoint()), q, p);

  IneqParams params;
  params.q = q;
  params.p = p;
  auto rep = make_report(IneqId::kHermitianB, a.rows(), lhs, rhs, params, ctx,
                         fingerprint_of({&a, &b.matrix()}, ctx.seed));
  rep.details = {{"middle", middle}};
  return rep;
}

IneqReport check_general(const ComplexMatrix& a, const ComplexMatrix& b, double q, SchattenIndex p,
                         const CheckContext& ctx) {
  if (!a.is_square() || !b.is_square()) {
    throw std::invalid_argument("check_general: A and B must be square");
  }
  require_same_dim(a.rows(), b.rows(), "check_general");
  if (p.value() < 1.0) throw std::domain_error("check_general: needs p >= 1");
  require_at_least_one(q, "q", "check_general");

  const auto abs_a_q = psd_power(modulus(a), q);
  const auto abs_b_q = psd_power(modulus(b), q);
  const auto abs_bstar_q = psd_power(modulus(b.adjoint()), q);
  const double lhs = gauge(modulus(a * b * a.adjoint()), q, p);
  const auto mean = PsdMatrix::project(0.5 * (abs_b_q.matrix() + abs_bstar_q.matrix()));
  const double rhs = gauge(sandwich(abs_a_q, mean), 1.0, p);

  // One-sided bounds and their p-power mean.
  const double with_bstar = gauge(sandwich(abs_a_q, abs_bstar_q), 1.0, p);
  const double with_b = gauge(sandwich(abs_a_q, abs_b_q), 1.0, p);
  double proven_rhs;
  double expected_block_lhs;
  double expected_block_rhs;
  if (p.is_infinite()) {
    proven_rhs = std::max(with_bstar, with_b);
    expected_block_lhs = lhs;
    expected_block_rhs = proven_rhs;
  } else {
    const double pv = p.value();
    const double top = std::max(with_bstar, with_b);
    const double power_sum =
        top == 0.0 ? 0.0 : std::pow(with_bstar / top, pv) + std::pow(with_b / top, pv);
    expected_block_rhs = top * std::pow(power_sum, 1.0 / pv);
    proven_rhs = expected_block_rhs * std::pow(0.5, 1.0 / pv);
    expected_block_lhs = lhs * std::pow(2.0, 1.0 / pv);
  }

  // The same inequality on A ⊕ A and the dilation of B.
  const auto block = check_hermitian_B(direct_sum(a, a), block_dilation(b), q, p);

  IneqParams params;
  params.q = q;
  params.p = p;
  auto rep = make_report(IneqId::kGeneral, a.rows(), lhs, rhs, params, ctx,
                         fingerprint_of({&a, &b}, ctx.seed));
  rep.details = {{"rhs_with_B", with_b},
                 {"rhs_with_Bstar", with_bstar},
                 {"proven_rhs", proven_rhs},
                 {"proven_relative_slack",
                  (proven_rhs - lhs) / std::max({std::abs(lhs), std::abs(proven_rhs), 1.0})},
                 {"block_lhs", block.lhs},
                 {"block_rhs", block.rhs},
                 {"block_lhs_mismatch", relative_difference(block.lhs, expected_block_lhs)},
                 {"block_rhs_mismatch", relative_difference(block.rhs, expected_block_rhs)}};
  return rep;
}

// ---------------------------------------------------------------------------
// Proof steps

IneqReport check_proof_steps(const PsdMatrix& a, const PsdMatrix& b, double r,
                             const CheckContext& ctx) {
  require_same_dim(a.size(), b.size(), "check_proof_steps");
  if (r < 0.0 || r > 1.0) throw std::domain_error("check_proof_steps: needs 0 <= r <= 1");

  // ABA <= ||B||^{1-r} A B^r A
  const double b_norm = b.lambda_max();
  const auto aba = HermitianMatrix::project(a.matrix() * b.matrix() * a.matrix());
  const ComplexMatrix abra = a.matrix() * psd_power(b, r).matrix() * a.matrix();
  const double aba_margin =
      loewner_margin(aba, HermitianMatrix::project(std::pow(b_norm, 1.0 - r) * abra));

  // B^{1/2} A^2 B^{1/2} <= ||A||^2 B
  const auto b_half = psd_power(b, 0.5);
  const auto a_sq = psd_power(a, 2.0);
  const auto lhs_water = HermitianMatrix::project(b_half.matrix() * a_sq.matrix() * b_half.matrix());
  const double a_norm = a.lambda_max();
  const double water_margin =
      loewner_margin(lhs_water, HermitianMatrix::project(a_norm * a_norm * b.matrix()));

  // ||B^{1-r}|| = ||B||^{1-r}
  const double power_norm = psd_power(b, 1.0 - r).lambda_max();
  const double norm_power = std::pow(b_norm, 1.0 - r);
  const double scalar_mismatch = relative_difference(power_norm, norm_power);

  IneqParams params;
  params.r = r;
  auto rep = make_report(IneqId::kProofSteps, a.size(), 0.0, std::min(aba_margin, water_margin),
                         params, ctx, fingerprint_of({&a.matrix(), &b.matrix()}, ctx.seed));
  rep.details = {{"aba_margin", aba_margin},
                 {"water_margin", water_margin},
                 {"norm_power_mismatch", scalar_mismatch}};
  if (scalar_mismatch > kEqualityTolerance) rep.verdict = Verdict::kViolated;
  return rep;
}

// ---------------------------------------------------------------------------
// Registry

InputClasses input_classes(IneqId id) noexcept {
  switch (id) {
    case IneqId::kBourin: return {InputClass::kPsd, InputClass::kBoundedPsd};
    case IneqId::kHolder: return {InputClass::kGeneral, InputClass::kGeneral};
    case IneqId::kGeneralA: return {InputClass::kGeneral, InputClass::kPsd};
    case IneqId::kHermitianB: return {InputClass::kGeneral, InputClass::kHermitian};
    case IneqId::kGeneral: return {InputClass::kGeneral, InputClass::kGeneral};
    default: return {InputClass::kPsd, InputClass::kPsd};
  }
}

std::string_view to_string(InputClass c) noexcept {
  switch (c) {
    case InputClass::kPsd: return "psd";
    case InputClass::kHermitian: return "hermitian";
    case InputClass::kGeneral: return "general";
    case InputClass::kBoundedPsd: return "pd_spectrum";
  }
  return "?";
}

std::span<const std::string_view> consumed_params(IneqId id) noexcept {
  static constexpr std::array<std::string_view, 2> kRq = {"r", "q"};
  static constexpr std::array<std::string_view, 3> kRqt = {"r", "q", "t"};
  static constexpr std::array<std::string_view, 3> kBourin = {"r", "a", "b"};
  static constexpr std::array<std::string_view, 4> kHolder = {"s", "t", "u", "p"};
  static constexpr std::array<std::string_view, 2> kQp = {"q", "p"};
  static constexpr std::array<std::string_view, 1> kR = {"r"};
  switch (id) {
    case IneqId::kAlt:
    case IneqId::kWater:
    case IneqId::kWaterwine: return kRq;
    case IneqId::kTFamily: return kRqt;
    case IneqId::kBourin: return kBourin;
    case IneqId::kTraceNormSpecial: return {};
    case IneqId::kHolder:
    case IneqId::kHolderCorollary: return kHolder;
    case IneqId::kGeneralA:
    case IneqId::kLemmaSumDiff:
    case IneqId::kHermitianB:
    case IneqId::kGeneral: return kQp;
    case IneqId::kProofSteps: return kR;
  }
  return {};
}

std::optional<std::string> param_violation(IneqId id, const IneqParams& prm) {
  auto uses = [&](std::string_view name) {
    const auto names = consumed_params(id);
    return std::find(names.begin(), names.end(), name) != names.end();
  };
  if (uses("r") && (prm.r < 0.0 || prm.r > 8.0)) return "r must lie in [0, 8]";
  if (uses("q") && std::abs(prm.q) > 8.0) return "|q| must be at most 8";
  if (uses("p") && prm.p.value() < 0.25) return "p must be at least 0.25";
  switch (id) {
    case IneqId::kAlt:
    case IneqId::kWaterwine:
      if (prm.q < 0.0) return "q must be >= 0";
      break;
    case IneqId::kWater: break;
    case IneqId::kTFamily:
      if (prm.r > 1.0) return "r must be <= 1";
      if (prm.q < 0.0) return "q must be >= 0";
      if (prm.t < 0.0 || prm.t > 1.0) return "t must lie in [0, 1]";
      break;
    case IneqId::kBourin:
      if (prm.r < 1.0) return "r must be >= 1";
      if (!(prm.b > 0.0) || prm.a < prm.b) return "spectrum bounds need a >= b > 0";
      break;
    case IneqId::kTraceNormSpecial: break;
    case IneqId::kHolder:
    case IneqId::kHolderCorollary:
      if (!(prm.s > 0.0 && prm.t > 0.0 && prm.u > 0.0)) return "s, t, u must be positive";
      if (std::abs(1.0 / prm.s + 1.0 / prm.t - 1.0 / prm.u) > 1e-12) {
        return "exponents must satisfy 1/s + 1/t = 1/u";
      }
      break;
    case IneqId::kGeneralA:
    case IneqId::kHermitianB:
      if (prm.q < 1.0) return "q must be >= 1";
      break;
    case IneqId::kLemmaSumDiff:
    case IneqId::kGeneral:
      if (prm.q < 1.0) return "q must be >= 1";
      if (prm.p.value() < 1.0) return "p must be >= 1";
      break;
    case IneqId::kProofSteps:
      if (prm.r > 1.0) return "r must be <= 1";
      break;
  }
  return std::nullopt;
}

bool is_exploratory(IneqId id, const IneqParams& params) noexcept {
  switch (id) {
    case IneqId::kTFamily: return params.t < 1.0 - params.r - 1e-12;
    case IneqId::kHolder:
    case IneqId::kHolderCorollary: return params.p.value() < 1.0;
    default: return false;
  }
}

bool is_ratio_type(IneqId id) noexcept { return id != IneqId::kProofSteps; }

namespace {

PsdMatrix as_psd(const ComplexMatrix& m, const char* slot) {
  try {
    return PsdMatrix(m);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("input ") + slot + " must be positive semidefinite: " +
                                e.what());
  }
}

HermitianMatrix as_hermitian(const ComplexMatrix& m, const char* slot) {
  try {
    return HermitianMatrix(m);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("input ") + slot + " must be Hermitian: " + e.what());
  }
}

}  // namespace

IneqReport evaluate(IneqId id, const ComplexMatrix& a, const ComplexMatrix& b,
                    const IneqParams& prm, const CheckContext& ctx) {
  switch (id) {
    case IneqId::kAlt: return check_alt(as_psd(a, "A"), as_psd(b, "B"), prm.r, prm.q, ctx);
    case IneqId::kWater: return check_water(as_psd(a, "A"), as_psd(b, "B"), prm.r, prm.q, ctx);
    case IneqId::kWaterwine:
      return check_waterwine(as_psd(a, "A"), as_psd(b, "B"), prm.r, prm.q, ctx);
    case IneqId::kTFamily:
      return check_t_family(as_psd(a, "A"), as_psd(b, "B"), prm.r, prm.q, prm.t, ctx);
    case IneqId::kBourin:
      return check_bourin(as_psd(a, "A"), as_psd(b, "B"), prm.r, prm.a, prm.b, ctx);
    case IneqId::kTraceNormSpecial:
      return check_trace_norm_special(as_psd(a, "A"), as_psd(b, "B"), ctx);
    case IneqId::kHolder: return check_holder(a, b, prm.s, prm.t, prm.u, prm.p, ctx);
    case IneqId::kHolderCorollary:
      return check_holder_corollary(as_psd(a, "X"), as_psd(b, "Y"), prm.s, prm.t, prm.u, prm.p,
                                    ctx);
    case IneqId::kGeneralA: return check_general_A(a, as_psd(b, "B"), prm.q, prm.p, ctx);
    case IneqId::kLemmaSumDiff:
      return check_lemma_sum_diff(as_psd(a, "X"), as_psd(b, "Y"), prm.p, prm.q, ctx);
    case IneqId::kHermitianB: return check_hermitian_B(a, as_hermitian(b, "B"), prm.q, prm.p, ctx);
    case IneqId::kGeneral: return check_general(a, b, prm.q, prm.p, ctx);
    case IneqId::kProofSteps: return check_proof_steps(as_psd(a, "A"), as_psd(b, "B"), prm.r, ctx);
  }
  throw std::invalid_argument("evaluate: unknown inequality id");
}

}  // namespace altlab
