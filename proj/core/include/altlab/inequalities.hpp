#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altlab/matrix.hpp"
#include "altlab/norms.hpp"

namespace altlab {

/// Registry of checkable statements.
enum class IneqId {
  kAlt,               // Tr[(A^r B^r A^r)^q] <= Tr[(ABA)^{rq}], reversed for r >= 1
  kWater,             // Tr[(ABA)^{rq}] <= ||A||^{2rq} Tr B^{rq}, reversed for q <= 0
  kWaterwine,         // Tr[(ABA)^{rq}] <= water^{1-r} wine^r, reversed for r >= 1
  kTFamily,           // Tr[(ABA)^{rq}] <= water^t wine^{1-t}
  kBourin,            // K^{-1} l((ABA)^r) <= l(A^r B^r A^r) <= K l((ABA)^r)
  kTraceNormSpecial,  // Tr AB <= ||AB||_1 <= (||A|| Tr B Tr AB)^{1/2}
  kHolder,            // || |XY|^u ||^{1/u} <= || |X|^s ||^{1/s} || |Y|^t ||^{1/t}
  kHolderCorollary,   // ||(XYX)^u||^{1/u} <= ||X^{2s}||^{1/s} ||Y^t||^{1/t}, X, Y >= 0
  kGeneralA,          // ||(ABA*)^q||_p <= || |A|^q B^q |A|^q ||_p
  kLemmaSumDiff,      // ||X - Y||_p <= ||X + Y||_p
  kHermitianB,        // || |ABA*|^q ||_p <= || |A|^q |B|^q |A|^q ||_p
  kGeneral,           // || |ABA*|^q ||_p <= || |A|^q (|B|^q + |B*|^q)/2 |A|^q ||_p
  kProofSteps,        // ABA <= ||B||^{1-r} A B^r A and B^{1/2} A^2 B^{1/2} <= ||A||^2 B
};

std::string_view to_string(IneqId id) noexcept;
std::optional<IneqId> parse_ineq_id(std::string_view name) noexcept;
std::span<const IneqId> all_inequalities() noexcept;

enum class Verdict { kHolds, kViolated, kEquality };

std::string_view to_string(Verdict v) noexcept;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kEqualityTolerance = 1e-9;

/// violated iff relative_slack < -tol; equality iff |relative_slack| <= 1e-9.
Verdict classify(double relative_slack, double tol) noexcept;

/// Scalar parameters. Each checker reads only the fields it needs; `t` is
/// both the interpolation weight of the t-family and the middle Hölder
/// exponent.
struct IneqParams {
  double r = 0.5;
  double q = 1.0;
  SchattenIndex p{1.0};
  double t = 1.0;
  double s = 2.0;
  double u = 1.0;
  double a = 2.0;
  double b = 1.0;
};

struct Detail {
  std::string name;
  double value;
};

/// One evaluation. Orientation is normalized: slack = rhs - lhs >= 0 means
/// the statement holds.
struct IneqReport {
  IneqId id{};
  std::size_t dim = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double relative_slack = 0.0;
  Verdict verdict = Verdict::kHolds;
  IneqParams params;
  std::uint64_t seed = 0;
  std::uint64_t fingerprint = 0;
  /// Outside the proven regime (t < 1 - r, quasinorm Hölder): violations are
  /// data, not failures.
  bool exploratory = false;
  std::vector<Detail> details;

  std::optional<double> detail(std::string_view name) const;
};

struct CheckContext {
  double tolerance = kDefaultTolerance;
  /// Mixed into the input fingerprint.
  std::uint64_t seed = 0;
};

/// FNV-1a over the little-endian bytes of every entry, then the seed.
std::uint64_t fingerprint(std::span<const ComplexMatrix* const> inputs, std::uint64_t seed);

IneqReport check_alt(const PsdMatrix& a, const PsdMatrix& b, double r, double q,
                     const CheckContext& ctx = {});

IneqReport check_water(const PsdMatrix& a, const PsdMatrix& b, double r, double q,
                       const CheckContext& ctx = {});

/// Also reports the two reformulations in Schatten q-(quasi)norm form
/// (details qnorm_*, dual_*) and `formulation_mismatch`, the largest relative
/// disagreement between the equivalent routes.
IneqReport check_waterwine(const PsdMatrix& a, const PsdMatrix& b, double r, double q,
                           const CheckContext& ctx = {});

IneqReport check_t_family(const PsdMatrix& a, const PsdMatrix& b, double r, double q, double t,
                          const CheckContext& ctx = {});

/// Requires b I <= B <= a I (std::invalid_argument otherwise) and r >= 1.
/// lhs/rhs are the component pair with the smallest slack; relative slack is
/// measured against the scale of the eigenvalue vectors.
IneqReport check_bourin(const PsdMatrix& a, const PsdMatrix& b, double r, double upper,
                        double lower, const CheckContext& ctx = {});

IneqReport check_trace_norm_special(const PsdMatrix& a, const PsdMatrix& b,
                                    const CheckContext& ctx = {});

IneqReport check_holder(const ComplexMatrix& x, const ComplexMatrix& y, double s, double t,
                        double u, SchattenIndex p, const CheckContext& ctx = {});

IneqReport check_holder_corollary(const PsdMatrix& x, const PsdMatrix& y, double s, double t,
                                  double u, SchattenIndex p, const CheckContext& ctx = {});

IneqReport check_general_A(const ComplexMatrix& a, const PsdMatrix& b, double q, SchattenIndex p,
                           const CheckContext& ctx = {});

/// With q > 1 the composite gauge || |.|^q ||_p^{1/q} is checked as well and
/// the verdict covers both.
IneqReport check_lemma_sum_diff(const PsdMatrix& x, const PsdMatrix& y, SchattenIndex p,
                                double q = 1.0, const CheckContext& ctx = {});

IneqReport check_hermitian_B(const ComplexMatrix& a, const HermitianMatrix& b, double q,
                             SchattenIndex p, const CheckContext& ctx = {});

/// Evaluates the symmetrized bound directly and re-derives both sides on the
/// 2n x 2n dilation (details block_lhs, block_rhs, block_*_mismatch).
/// `proven_rhs` is the p-power mean of the two one-sided bounds, which is
/// what the dilation argument establishes.
IneqReport check_general(const ComplexMatrix& a, const ComplexMatrix& b, double q, SchattenIndex p,
                         const CheckContext& ctx = {});

/// lhs = 0, rhs = smallest normalized Loewner margin of the two operator
/// inequalities. Fails as well if ||B^{1-r}|| != ||B||^{1-r} beyond 1e-9.
IneqReport check_proof_steps(const PsdMatrix& a, const PsdMatrix& b, double r,
                             const CheckContext& ctx = {});

/// Matrix class a checker needs in each input slot.
enum class InputClass { kPsd, kHermitian, kGeneral, kBoundedPsd };

struct InputClasses {
  InputClass a;
  InputClass b;
};

InputClasses input_classes(IneqId id) noexcept;
std::string_view to_string(InputClass c) noexcept;

/// Parameter names a checker reads, in serialization order.
std::span<const std::string_view> consumed_params(IneqId id) noexcept;

/// Why `params` is outside the checker's domain or the campaign range caps
/// (r <= 8, |q| <= 8, p >= 0.25), or nullopt if valid.
std::optional<std::string> param_violation(IneqId id, const IneqParams& params);

bool is_exploratory(IneqId id, const IneqParams& params) noexcept;

/// Whether lhs / rhs is a meaningful tightness ratio (everything except the
/// Loewner-margin report of kProofSteps).
bool is_ratio_type(IneqId id) noexcept;

/// Converts the raw inputs to the classes the checker needs and runs it.
IneqReport evaluate(IneqId id, const ComplexMatrix& a, const ComplexMatrix& b,
                    const IneqParams& params, const CheckContext& ctx = {});

}  // namespace altlab
