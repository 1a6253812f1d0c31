#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "support/oracle.hpp"

using namespace altlab;
using testing_util::diag;
using testing_util::mat;
using testing_util::random_psd;

namespace {

PsdMatrix psd(const ComplexMatrix& m) { return PsdMatrix(m); }

PsdMatrix commuting(const ComplexMatrix& u, std::initializer_list<double> values) {
  return PsdMatrix::project(spectral_synthesis(u, std::vector<double>(values)));
}

void expect_oracle_values(IneqId id, const ComplexMatrix& a, const ComplexMatrix& b,
                          const IneqParams& params, const IneqReport& rep) {
  const auto candidates = oracle::evaluate(id, a, b, params);
  bool matched = false;
  for (const auto& v : candidates) {
    matched = matched || (oracle::close(rep.lhs, v.lhs, 1e-10L) && oracle::close(rep.rhs, v.rhs, 1e-10L));
  }
  EXPECT_TRUE(matched) << to_string(id) << ": lhs " << rep.lhs << " rhs " << rep.rhs
                       << " vs oracle " << double(candidates.front().lhs) << " "
                       << double(candidates.front().rhs);
}

}  // namespace

TEST(Registry, NamesRoundTrip) {
  for (IneqId id : all_inequalities()) EXPECT_EQ(parse_ineq_id(to_string(id)), id);
  EXPECT_EQ(parse_ineq_id("trace_norm_special"), IneqId::kTraceNormSpecial);
  EXPECT_FALSE(parse_ineq_id("nope").has_value());
  EXPECT_EQ(all_inequalities().size(), 13u);
}

TEST(Registry, ClassifyBoundaries) {
  EXPECT_EQ(classify(0.0, 1e-9), Verdict::kEquality);
  EXPECT_EQ(classify(1e-9, 1e-9), Verdict::kEquality);
  EXPECT_EQ(classify(-1e-9, 1e-9), Verdict::kEquality);
  EXPECT_EQ(classify(2e-9, 1e-9), Verdict::kHolds);
  EXPECT_EQ(classify(-2e-9, 1e-9), Verdict::kViolated);
  EXPECT_EQ(classify(-1e-7, 1e-6), Verdict::kHolds);
}

TEST(Registry, ParamViolations) {
  IneqParams p;
  p.q = -1.0;
  EXPECT_TRUE(param_violation(IneqId::kAlt, p).has_value());
  EXPECT_FALSE(param_violation(IneqId::kWater, p).has_value());
  p = {};
  p.r = 9.0;
  EXPECT_TRUE(param_violation(IneqId::kAlt, p).has_value());
  EXPECT_FALSE(param_violation(IneqId::kGeneralA, IneqParams{.q = 2.0}).has_value());
  EXPECT_TRUE(param_violation(IneqId::kGeneralA, IneqParams{.q = 0.5}).has_value());
  IneqParams holder{.s = 2.0, .u = 1.0};
  holder.t = 3.0;
  EXPECT_TRUE(param_violation(IneqId::kHolder, holder).has_value());
  holder.t = 2.0;
  EXPECT_FALSE(param_violation(IneqId::kHolder, holder).has_value());
  holder.p = SchattenIndex(0.1);
  EXPECT_TRUE(param_violation(IneqId::kHolder, holder).has_value());
}

TEST(Registry, ExploratoryRegimes) {
  EXPECT_TRUE(is_exploratory(IneqId::kTFamily, IneqParams{.r = 0.5, .t = 0.2}));
  EXPECT_FALSE(is_exploratory(IneqId::kTFamily, IneqParams{.r = 0.5, .t = 0.5}));
  EXPECT_TRUE(is_exploratory(IneqId::kHolder, IneqParams{.p = SchattenIndex(0.5)}));
  EXPECT_FALSE(is_exploratory(IneqId::kAlt, IneqParams{}));
  EXPECT_FALSE(is_ratio_type(IneqId::kProofSteps));
}

TEST(Report, OrientationAndFingerprint) {
  const auto a = random_psd(2, 1);
  const auto b = random_psd(2, 2);
  const auto rep = check_alt(a, b, 0.5, 1.0, CheckContext{1e-9, 99});
  EXPECT_DOUBLE_EQ(rep.slack, rep.rhs - rep.lhs);
  EXPECT_DOUBLE_EQ(rep.relative_slack,
                   rep.slack / std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1.0}));
  EXPECT_EQ(rep.seed, 99u);
  const ComplexMatrix* inputs[] = {&a.matrix(), &b.matrix()};
  EXPECT_EQ(rep.fingerprint, fingerprint(inputs, 99));
  EXPECT_NE(rep.fingerprint, fingerprint(inputs, 100));
}

// ALT

TEST(Alt, IdentityEquality) {
  const auto id = psd(ComplexMatrix::identity(3));
  for (double r : {0.3, 1.0, 2.5}) {
    const auto rep = check_alt(id, id, r, 1.7);
    EXPECT_EQ(rep.verdict, Verdict::kEquality);
    EXPECT_NEAR(rep.lhs, 3.0, 1e-12);
  }
}

TEST(Alt, CommutingEquality) {
  const auto rep = check_alt(psd(diag({2, 0.5, 1})), psd(diag({0.3, 4, 1})), 0.4, 2.0);
  EXPECT_EQ(rep.verdict, Verdict::kEquality);
  const auto u = testing_util::random_unitary(3, 7);
  const auto rep2 = check_alt(commuting(u, {1.5, 0.2, 0.0}), commuting(u, {0.1, 3.0, 2.0}), 2.0, 0.5);
  EXPECT_EQ(rep2.verdict, Verdict::kEquality);
}

TEST(Alt, TwoByTwoAgainstOracle) {
  const auto a = diag({2, 1});
  const auto b = mat(2, 2, {1.0, 1.0, 1.0, 2.0});
  const auto rep = check_alt(psd(a), psd(b), 0.5, 1.0);
  EXPECT_NE(rep.verdict, Verdict::kViolated);
  EXPECT_GT(rep.relative_slack, 1e-6);
  expect_oracle_values(IneqId::kAlt, a, b, IneqParams{.r = 0.5, .q = 1.0}, rep);
}

TEST(Alt, ReversedForLargeR) {
  const auto a = random_psd(3, 30);
  const auto b = random_psd(3, 31);
  const auto low = check_alt(a, b, 0.5, 1.0);
  const auto high = check_alt(a, b, 2.0, 1.0);
  EXPECT_EQ(low.lhs, *low.detail("tr_ArBrAr_q"));
  EXPECT_EQ(high.rhs, *high.detail("tr_ArBrAr_q"));
  EXPECT_NE(high.verdict, Verdict::kViolated);
}

TEST(Alt, DomainErrors) {
  const auto a = random_psd(2, 1);
  EXPECT_THROW(check_alt(a, a, 0.5, -1.0), std::domain_error);
  EXPECT_THROW(check_alt(a, random_psd(3, 2), 0.5, 1.0), std::invalid_argument);
}

// Water

TEST(Water, IdentityAAndScalarsAreEquality) {
  const auto b = random_psd(3, 40);
  EXPECT_EQ(check_water(psd(ComplexMatrix::identity(3)), b, 0.7, 1.3).verdict, Verdict::kEquality);
  EXPECT_EQ(check_water(psd(diag({1.7})), psd(diag({0.4})), 0.7, 1.3).verdict, Verdict::kEquality);
}

TEST(Water, RandomAndReversed) {
  const auto a = random_psd(3, 41);
  const auto b = random_psd(3, 42);
  const auto rep = check_water(a, b, 0.7, 1.3);
  EXPECT_NE(rep.verdict, Verdict::kViolated);
  expect_oracle_values(IneqId::kWater, a.matrix(), b.matrix(), IneqParams{.r = 0.7, .q = 1.3}, rep);
  const auto rev = check_water(a, b, 0.7, -1.0);
  EXPECT_NE(rev.verdict, Verdict::kViolated);
  EXPECT_EQ(rev.lhs, *rev.detail("water"));
  expect_oracle_values(IneqId::kWater, a.matrix(), b.matrix(), IneqParams{.r = 0.7, .q = -1.0}, rev);
}

TEST(Water, NegativePowerNeedsDefiniteInputs) {
  const auto a = random_psd(2, 43);
  EXPECT_THROW(check_water(a, psd(diag({1, 0})), 0.5, -1.0), std::domain_error);
  EXPECT_NO_THROW(check_water(a, psd(diag({1, 0})), 0.5, 1.0));
}

// Water-wine

TEST(Waterwine, ScalarAndIdentityEquality) {
  EXPECT_EQ(check_waterwine(psd(diag({3.0})), psd(diag({0.2})), 0.5, 2.0).verdict, Verdict::kEquality);
  const auto id = psd(ComplexMatrix::identity(2));
  EXPECT_EQ(check_waterwine(id, id, 0.3, 1.0).verdict, Verdict::kEquality);
}

TEST(Waterwine, SandwichedBetweenAltAndWater) {
  const auto a = diag({2, 1});
  const auto b = mat(2, 2, {2.0, 1.0, 1.0, 1.0});
  const auto rep = check_waterwine(psd(a), psd(b), 0.5, 2.0);
  EXPECT_NE(rep.verdict, Verdict::kViolated);
  expect_oracle_values(IneqId::kWaterwine, a, b, IneqParams{.r = 0.5, .q = 2.0}, rep);
  const double abar = *rep.detail("tr_ABA_rq");
  const double wine = *rep.detail("wine");
  const double water = *rep.detail("water");
  EXPECT_LE(wine, abar);
  EXPECT_LE(abar, rep.rhs * (1 + 1e-12));
  EXPECT_LE(rep.rhs, water * (1 + 1e-12));
}

TEST(Waterwine, FormulationsAgree) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = random_psd(3, 50 + 2 * seed);
    const auto b = random_psd(3, 51 + 2 * seed);
    for (double r : {0.25, 0.75, 2.0}) {
      const auto rep = check_waterwine(a, b, r, 1.5);
      EXPECT_LE(*rep.detail("formulation_mismatch"), 1e-9);
      EXPECT_NE(rep.verdict, Verdict::kViolated);
    }
  }
}

// t-family

TEST(TFamily, EndpointsReduce) {
  const auto a = random_psd(3, 60);
  const auto b = random_psd(3, 61);
  const auto water = check_water(a, b, 0.5, 1.0);
  const auto t1 = check_t_family(a, b, 0.5, 1.0, 1.0);
  EXPECT_NEAR(t1.lhs, water.lhs, 1e-12 * water.lhs);
  EXPECT_NEAR(t1.rhs, water.rhs, 1e-12 * water.rhs);
  const auto ww = check_waterwine(a, b, 0.5, 1.0);
  const auto tr = check_t_family(a, b, 0.5, 1.0, 0.5);
  EXPECT_NEAR(tr.lhs, ww.lhs, 1e-12 * ww.lhs);
  EXPECT_NEAR(tr.rhs, ww.rhs, 1e-12 * ww.rhs);
  EXPECT_FALSE(tr.exploratory);
}

TEST(TFamily, ZeroIsViolatedOnNonCommutingPair) {
  bool found = false;
  for (std::uint64_t seed = 0; seed < 50 && !found; ++seed) {
    const auto a = random_psd(2, 70 + 2 * seed);
    const auto b = random_psd(2, 71 + 2 * seed);
    const auto rep = check_t_family(a, b, 0.5, 1.0, 0.0);
    EXPECT_TRUE(rep.exploratory);
    found = rep.verdict == Verdict::kViolated;
  }
  EXPECT_TRUE(found);
}

TEST(TFamily, DomainErrors) {
  const auto a = random_psd(2, 1);
  EXPECT_THROW(check_t_family(a, a, 1.5, 1.0, 0.5), std::domain_error);
  EXPECT_THROW(check_t_family(a, a, 0.5, 1.0, 1.5), std::domain_error);
}

// Bourin

TEST(Bourin, ScalarBHasUnitConstant) {
  const auto a = random_psd(3, 80);
  const auto b = psd(1.5 * ComplexMatrix::identity(3));
  const auto rep = check_bourin(a, b, 2.0, 1.5, 1.5);
  EXPECT_EQ(*rep.detail("kyfan_constant"), 1.0);
  EXPECT_EQ(rep.verdict, Verdict::kEquality);
}

TEST(Bourin, CommutingHolds) {
  const auto u = testing_util::random_unitary(3, 81);
  const auto rep = check_bourin(commuting(u, {2, 1, 0.5}), commuting(u, {1.1, 2.9, 2.0}), 3.0, 3.0, 1.0);
  EXPECT_NE(rep.verdict, Verdict::kViolated);
  EXPECT_GE(*rep.detail("kyfan_constant"), 1.0);
}

TEST(Bourin, TwoByTwoAgainstOracle) {
  const auto a = diag({1, 2});
  const auto b = mat(2, 2, {1.5, 0.3, 0.3, 1.5});
  const auto rep = check_bourin(psd(a), psd(b), 2.0, 1.9, 1.1);
  EXPECT_NE(rep.verdict, Verdict::kViolated);
  const auto candidates = oracle::evaluate(IneqId::kBourin, a, b, IneqParams{.r = 2.0, .a = 1.9, .b = 1.1});
  const auto k = static_cast<std::size_t>(*rep.detail("component") * 2 + *rep.detail("upper_side"));
  EXPECT_TRUE(oracle::close(rep.lhs, candidates.at(k).lhs, 1e-10L));
  EXPECT_TRUE(oracle::close(rep.rhs, candidates.at(k).rhs, 1e-10L));
}

TEST(Bourin, Errors) {
  const auto a = random_psd(2, 1);
  const auto b = psd(diag({3, 1}));
  EXPECT_THROW(check_bourin(a, b, 2.0, 2.0, 1.0), std::invalid_argument);
  EXPECT_THROW(check_bourin(a, b, 0.5, 3.0, 1.0), std::domain_error);
}

// Trace norm chain

TEST(TraceNorm, IdentityDoubleEquality) {
  const auto id = psd(ComplexMatrix::identity(3));
  const auto rep = check_trace_norm_special(id, id);
  EXPECT_EQ(rep.verdict, Verdict::kEquality);
  EXPECT_NEAR(*rep.detail("tr_AB"), 3.0, 1e-12);
  EXPECT_NEAR(*rep.detail("trace_norm_AB"), 3.0, 1e-12);
  EXPECT_NEAR(*rep.detail("upper_bound"), 3.0, 1e-12);
}

TEST(TraceNorm, CommutingLeftEquality) {
  const auto rep = check_trace_norm_special(psd(diag({1, 2})), psd(diag({3, 1})));
  EXPECT_NEAR(*rep.detail("tr_AB"), *rep.detail("trace_norm_AB"), 1e-12);
  EXPECT_GT(*rep.detail("upper_bound"), *rep.detail("trace_norm_AB"));
}

TEST(TraceNorm, ProjectorExample) {
  const auto rep = check_trace_norm_special(psd(diag({1, 0})), psd(mat(2, 2, {1.0, 1.0, 1.0, 1.0})));
  EXPECT_NEAR(*rep.detail("tr_AB"), 1.0, 1e-14);
  EXPECT_NEAR(*rep.detail("trace_norm_AB"), std::sqrt(2.0), 1e-14);
  EXPECT_NE(rep.verdict, Verdict::kViolated);
}

// Hölder

TEST(Holder, IdentityEquality) {
  const auto id = ComplexMatrix::identity(3);
  const auto rep = check_holder(id, id, 2.0, 2.0, 1.0, SchattenIndex(1.0));
  EXPECT_EQ(rep.verdict, Verdict::kEquality);
}

TEST(Holder, LargeTLimit) {
  const auto x = testing_util::gaussian(3, 3, 90);
  const double t = 1e6;
  const double u = 1.0;
  const double s = u * t / (t - u);
  const auto rep = check_holder(x, ComplexMatrix::identity(3), s, t, u, SchattenIndex(2.0));
  EXPECT_NE(rep.verdict, Verdict::kViolated);
  const double predicted = std::pow(schatten_of_values(
                                        [&] {
                                          auto v = svd(x).singular_values;
                                          for (double& w : v) w = std::pow(w, s);
                                          return v;
                                        }(),
                                        SchattenIndex(2.0)),
                                    1.0 / s) *
                           std::pow(3.0, 1.0 / (2.0 * t));
  EXPECT_NEAR(rep.rhs, predicted, 1e-9 * predicted);
}

TEST(Holder, CauchySchwarzAgainstOracle) {
  const auto x = testing_util::gaussian(3, 3, 91);
  const auto y = testing_util::gaussian(3, 3, 92);
  const auto rep = check_holder(x, y, 2.0, 2.0, 1.0, SchattenIndex(1.0));
  EXPECT_NE(rep.verdict, Verdict::kViolated);
  expect_oracle_values(IneqId::kHolder, x, y, IneqParams{.p = SchattenIndex(1.0), .t = 2.0, .s = 2.0, .u = 1.0}, rep);
}

TEST(Holder, ExponentRelationEnforced) {
  const auto id = ComplexMatrix::identity(2);
  EXPECT_THROW(check_holder(id, id, 2.0, 3.0, 1.0, SchattenIndex(1.0)), std::invalid_argument);
  EXPECT_TRUE(check_holder(id, id, 2.0, 2.0, 1.0, SchattenIndex(0.5)).exploratory);
}

TEST(HolderCorollary, MatchesOracle) {
  const auto x = random_psd(3, 93);
  const auto y = random_psd(3, 94);
  const auto rep = check_holder_corollary(x, y, 3.0, 1.5, 1.0, SchattenIndex(2.0));
  EXPECT_NE(rep.verdict, Verdict::kViolated);
  expect_oracle_values(IneqId::kHolderCorollary, x.matrix(), y.matrix(),
                       IneqParams{.p = SchattenIndex(2.0), .t = 1.5, .s = 3.0, .u = 1.0}, rep);
}

// General A

TEST(GeneralA, UnitaryEquality) {
  const auto u = testing_util::random_unitary(3, 95);
  const auto rep = check_general_A(u, random_psd(3, 96), 2.0, SchattenIndex(1.5));
  EXPECT_EQ(rep.verdict, Verdict::kEquality);
}

TEST(GeneralA, PsdAReducesToAltForm) {
  const auto a = random_psd(3, 97);
  const auto b = random_psd(3, 98);
  const auto rep = check_general_A(a.matrix(), b, 2.0, SchattenIndex(1.0));
  // With p = 1 both sides are the traces of the ALT statement at r = q.
  const auto alt = check_alt(a, b, 2.0, 1.0);
  EXPECT_NEAR(rep.lhs, alt.lhs, 1e-10 * alt.lhs);
  EXPECT_NEAR(rep.rhs, alt.rhs, 1e-10 * alt.rhs);
}

TEST(GeneralA, NonNormalAgainstOracle) {
  const auto a = mat(2, 2, {0.0, 2.0, 1.0, 0.0});
  const auto b = diag({1, 3});
  const auto rep = check_general_A(a, psd(b), 2.0, SchattenIndex(1.0));
  EXPECT_NE(rep.verdict, Verdict::kViolated);
  expect_oracle_values(IneqId::kGeneralA, a, b, IneqParams{.q = 2.0, .p = SchattenIndex(1.0)}, rep);
  EXPECT_THROW(check_general_A(a, psd(b), 0.5, SchattenIndex(1.0)), std::domain_error);
}

// Lemma

TEST(LemmaSumDiff, Examples) {
  const auto x = random_psd(3, 99);
  const auto same = check_lemma_sum_diff(x, x, SchattenIndex(2.0));
  EXPECT_NEAR(*same.detail("norm_diff"), 0.0, 1e-12);
  EXPECT_NE(same.verdict, Verdict::kViolated);
  EXPECT_EQ(check_lemma_sum_diff(x, PsdMatrix::zero(3), SchattenIndex(2.0)).verdict, Verdict::kEquality);

  const auto e1 = psd(diag({1, 0}));
  const auto e2 = psd(diag({0, 1}));
  const auto p1 = check_lemma_sum_diff(e1, e2, SchattenIndex(1.0));
  EXPECT_NEAR(p1.lhs, 2.0, 1e-14);
  EXPECT_NEAR(p1.rhs, 2.0, 1e-14);
  EXPECT_EQ(p1.verdict, Verdict::kEquality);
  const auto p2 = check_lemma_sum_diff(e1, e2, SchattenIndex(2.0));
  EXPECT_NEAR(*p2.detail("norm_diff"), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(*p2.detail("norm_sum"), std::sqrt(2.0), 1e-14);
}

TEST(LemmaSumDiff, CompositeGaugeAndDomain) {
  const auto x = random_psd(3, 100);
  const auto y = random_psd(3, 101);
  const auto rep = check_lemma_sum_diff(x, y, SchattenIndex(1.5), 2.0);
  EXPECT_NE(rep.verdict, Verdict::kViolated);
  EXPECT_LE(*rep.detail("composite_diff"), *rep.detail("composite_sum"));
  EXPECT_THROW(check_lemma_sum_diff(x, y, SchattenIndex(0.5)), std::domain_error);
}

// Hermitian B

TEST(HermitianB, PsdBReducesToGeneralA) {
  const auto a = testing_util::gaussian(3, 3, 102);
  const auto b = random_psd(3, 103);
  const auto h = check_hermitian_B(a, b.hermitian(), 2.0, SchattenIndex(2.0));
  const auto g = check_general_A(a, b, 2.0, SchattenIndex(2.0));
  EXPECT_NEAR(h.lhs, g.lhs, 1e-10 * g.lhs);
  EXPECT_NEAR(h.rhs, g.rhs, 1e-10 * g.rhs);
}

TEST(HermitianB, SignInvariance) {
  const auto a = testing_util::gaussian(3, 3, 104);
  const auto p = random_psd(3, 105);
  const auto pos = check_hermitian_B(a, p.hermitian(), 1.5, SchattenIndex(1.0));
  const auto neg = check_hermitian_B(a, HermitianMatrix(-1.0 * p.matrix()), 1.5, SchattenIndex(1.0));
  EXPECT_NEAR(pos.lhs, neg.lhs, 1e-12 * pos.lhs);
  EXPECT_NEAR(pos.rhs, neg.rhs, 1e-12 * pos.rhs);
  EXPECT_NE(neg.verdict, Verdict::kViolated);
}

TEST(HermitianB, ExampleAgainstOracle) {
  const auto a = mat(2, 2, {1.0, 1.0, 0.0, 1.0});
  const auto b = diag({1, -1});
  const auto rep = check_hermitian_B(a, HermitianMatrix(b), 1.0, SchattenIndex(1.0));
  EXPECT_NE(rep.verdict, Verdict::kViolated);
  expect_oracle_values(IneqId::kHermitianB, a, b, IneqParams{.q = 1.0, .p = SchattenIndex(1.0)}, rep);
}

// General B

TEST(General, HermitianBReduces) {
  const auto a = testing_util::gaussian(3, 3, 106);
  const auto g = testing_util::gaussian(3, 3, 107);
  const auto b = HermitianMatrix::project(g + g.adjoint());
  const auto gen = check_general(a, b.matrix(), 2.0, SchattenIndex(2.0));
  const auto her = check_hermitian_B(a, b, 2.0, SchattenIndex(2.0));
  EXPECT_NEAR(gen.lhs, her.lhs, 1e-10 * her.lhs);
  EXPECT_NEAR(gen.rhs, her.rhs, 1e-10 * her.rhs);
}

TEST(General, UnitaryBWithIdentityA) {
  const auto u = testing_util::random_unitary(3, 108);
  const auto rep = check_general(ComplexMatrix::identity(3), u, 2.0, SchattenIndex(2.0));
  EXPECT_NEAR(rep.lhs, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(rep.rhs, std::sqrt(3.0), 1e-12);
  EXPECT_EQ(rep.verdict, Verdict::kEquality);
}

TEST(General, NilpotentExampleAndDilation) {
  const auto a = diag({1, 2});
  const auto b = mat(2, 2, {0.0, 1.0, 0.0, 0.0});
  const auto rep = check_general(a, b, 2.0, SchattenIndex(2.0));
  expect_oracle_values(IneqId::kGeneral, a, b, IneqParams{.q = 2.0, .p = SchattenIndex(2.0)}, rep);
  EXPECT_LE(*rep.detail("block_lhs_mismatch"), 1e-9);
  EXPECT_LE(*rep.detail("block_rhs_mismatch"), 1e-9);
  EXPECT_GE(*rep.detail("proven_rhs"), rep.lhs * (1 - 1e-12));
}

TEST(General, DomainErrors) {
  const auto id = ComplexMatrix::identity(2);
  EXPECT_THROW(check_general(id, id, 2.0, SchattenIndex(0.5)), std::domain_error);
  EXPECT_THROW(check_general(id, id, 0.5, SchattenIndex(1.0)), std::domain_error);
}

// Proof steps

TEST(ProofSteps, IdentityAndEndpoint) {
  const auto id = psd(ComplexMatrix::identity(2));
  EXPECT_EQ(check_proof_steps(id, id, 0.5).verdict, Verdict::kEquality);
  const auto a = random_psd(3, 109);
  const auto b = random_psd(3, 110);
  EXPECT_NEAR(*check_proof_steps(a, b, 1.0).detail("aba_margin"), 0.0, 1e-12);
}

TEST(ProofSteps, HoldOnRandomPairs) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const double r = 0.1 * static_cast<double>(1 + seed % 9);
    const auto rep = check_proof_steps(random_psd(n, 2000 + 2 * seed), random_psd(n, 2001 + 2 * seed), r);
    EXPECT_NE(rep.verdict, Verdict::kViolated) << "seed " << seed;
  }
}

// Cross-checker properties

TEST(Properties, ScalarInputsGiveEquality) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SampleSpec s{SampleKind::kScalar, 1, 2.0, 1.0, 42, seed};
    const auto a = psd(sample(s));
    s.index += 100;
    const auto b = psd(sample(s));
    for (double r : {0.3, 1.0, 3.0}) {
      EXPECT_EQ(check_alt(a, b, r, 0.8).verdict, Verdict::kEquality);
      EXPECT_EQ(check_water(a, b, r, 0.8).verdict, Verdict::kEquality);
      EXPECT_EQ(check_waterwine(a, b, r, 0.8).verdict, Verdict::kEquality);
    }
  }
}

TEST(Properties, AltAndWaterwineHoldTogether) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const auto a = random_psd(n, 3000 + 2 * seed);
    const auto b = random_psd(n, 3001 + 2 * seed);
    const double r = 0.2 + 0.15 * static_cast<double>(seed % 5);
    const auto alt = check_alt(a, b, r, 1.5);
    const auto ww = check_waterwine(a, b, r, 1.5);
    EXPECT_NE(alt.verdict, Verdict::kViolated);
    EXPECT_NE(ww.verdict, Verdict::kViolated);
  }
}

TEST(Properties, ReversedRegimesHold) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = PsdMatrix(sample(SampleSpec{SampleKind::kPdSpectrum, 3, 4.0, 0.5, 7, 2 * seed}));
    const auto b = PsdMatrix(sample(SampleSpec{SampleKind::kPdSpectrum, 3, 4.0, 0.5, 7, 2 * seed + 1}));
    EXPECT_NE(check_alt(a, b, 2.5, 1.0).verdict, Verdict::kViolated);
    EXPECT_NE(check_waterwine(a, b, 2.5, 1.0).verdict, Verdict::kViolated);
    EXPECT_NE(check_water(a, b, 0.5, -2.0).verdict, Verdict::kViolated);
  }
}

TEST(Evaluate, DispatchesAndValidatesClasses) {
  const auto a = random_psd(2, 1);
  const auto b = random_psd(2, 2);
  const IneqParams p{.r = 0.5, .q = 1.0};
  const auto direct = check_alt(a, b, 0.5, 1.0);
  const auto via = evaluate(IneqId::kAlt, a.matrix(), b.matrix(), p);
  EXPECT_EQ(direct.lhs, via.lhs);
  EXPECT_EQ(direct.rhs, via.rhs);
  const auto general = testing_util::gaussian(2, 2, 3);
  EXPECT_THROW(evaluate(IneqId::kAlt, general, b.matrix(), p), std::invalid_argument);
  EXPECT_THROW(evaluate(IneqId::kHermitianB, general, general, IneqParams{.q = 1.0}),
               std::invalid_argument);
}
