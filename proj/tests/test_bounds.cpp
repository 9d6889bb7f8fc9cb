#include <bicheb/bounds.hpp>
#include <bicheb/errors.hpp>
#include <bicheb/verify.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace bicheb {
namespace {

TEST(CoefficientBounds, BasicPoint) {
  const ClassParams p(1, 1, 0, 0.6);
  const BoundReport r = coefficient_bounds(p);
  EXPECT_DOUBLE_EQ(r.A, 4.0);
  EXPECT_DOUBLE_EQ(r.B, 6.0);
  EXPECT_NEAR(r.denom, 2.56, 1e-15);
  EXPECT_FALSE(r.singular);
  // 1.2 sqrt(1.2) / 1.6, high-precision value 0.821583836257749170...
  EXPECT_NEAR(r.a2_bound.value, 0.821583836257749, 1e-15);
  EXPECT_NEAR(r.a3_bound, 0.76, 1e-15);
  EXPECT_EQ(bound_a2(p), r.a2_bound);
  EXPECT_EQ(bound_a3(p), r.a3_bound);
}

TEST(CoefficientBounds, WithDelta) {
  const ClassParams p(1, 1, 0.5, 0.7);
  const BoundReport r = coefficient_bounds(p);
  EXPECT_DOUBLE_EQ(r.A, 9.0);
  EXPECT_DOUBLE_EQ(r.B, 12.0);
  EXPECT_NEAR(r.denom, 3.12, 1e-14);
  EXPECT_NEAR(r.a2_bound.value, 1.4 * std::sqrt(1.4) / std::sqrt(3.12), 1e-15);
  EXPECT_NEAR(r.a2_bound.value, 0.937809777879917, 1e-14);
  EXPECT_NEAR(r.a3_bound, 4 * 0.49 / 9 + 1.4 / 6, 1e-15);
}

TEST(CoefficientBounds, SingularPointIsUnbounded) {
  const ClassParams p(2, 1, 0, 0.75);
  const BoundReport r = coefficient_bounds(p);
  EXPECT_TRUE(r.singular);
  EXPECT_TRUE(r.a2_bound.is_unbounded());
  EXPECT_TRUE(std::isfinite(r.a3_bound));
  const FeketeSzegoReport fs = fekete_szego_bound(p, 2.0);
  EXPECT_TRUE(fs.bound.is_unbounded());
  EXPECT_EQ(fs.branch, Branch::kSloped);
  const FeketeSzegoReport fs1 = fekete_szego_bound(p, 1.0);
  EXPECT_FALSE(fs1.bound.is_unbounded());
  EXPECT_NEAR(fs1.bound.value, 1.5 / 5.0, 1e-15);
}

TEST(CoefficientBounds, SecondSingularPoint) {
  EXPECT_TRUE(coefficient_bounds(ClassParams(2, 0, 0, 1.0 / std::sqrt(2.0))).singular);
}

TEST(CoefficientBounds, A3DecreasesInDelta) {
  for (double lam : {1.0, 2.0, 3.0})
    for (double mu : {0.0, 1.0, 2.0})
      for (double t : {0.55, 0.75, 0.95}) {
        double prev = INFINITY;
        for (int i = 0; i <= 10; ++i) {
          const double a3 = bound_a3(ClassParams(lam, mu, 0.1 * i, t));
          EXPECT_LT(a3, prev);
          prev = a3;
        }
      }
}

TEST(FeketeSzego, FlatBranchAtEtaOne) {
  const FeketeSzegoReport r = fekete_szego_bound(ClassParams(1, 1, 0, 0.6), 1.0);
  EXPECT_EQ(r.branch, Branch::kFlat);
  EXPECT_DOUBLE_EQ(r.bound.value, 1.2 / 3.0);
  EXPECT_NEAR(r.threshold_M, 2.56 / (12 * 0.36), 1e-15);
  EXPECT_EQ(r.h_eta, 0.0);
}

TEST(FeketeSzego, ThresholdReadings) {
  const ClassParams p(1, 1, 0.5, 0.7);
  const auto corrected = fekete_szego_bound(p, 1.0, MVariant::kCorrected);
  const auto printed = fekete_szego_bound(p, 1.0, MVariant::kAsPrinted);
  EXPECT_NEAR(corrected.threshold_M, 0.265306122448980, 1e-14);
  EXPECT_NEAR(printed.threshold_M, 0.397959183673469, 1e-14);

  // Between the two thresholds the readings pick different branches.
  const auto c = fekete_szego_bound(p, 1.35, MVariant::kCorrected);
  const auto a = fekete_szego_bound(p, 1.35, MVariant::kAsPrinted);
  EXPECT_EQ(c.branch, Branch::kSloped);
  EXPECT_EQ(a.branch, Branch::kFlat);
  EXPECT_NEAR(c.bound.value, 8 * 0.35 * 0.343 / 3.12, 1e-14);
  EXPECT_NEAR(a.bound.value, 1.4 / 6, 1e-15);
}

TEST(FeketeSzego, AsPrintedJumpsAtItsThreshold) {
  const ClassParams p(1, 1, 0.5, 0.7);
  const double m = fekete_szego_bound(p, 1.0, MVariant::kAsPrinted).threshold_M;
  const double below = fekete_szego_bound(p, 1.0 + m, MVariant::kAsPrinted).bound.value;
  const double above = fekete_szego_bound(p, 1.0 + m * (1 + 1e-12), MVariant::kAsPrinted).bound.value;
  EXPECT_NEAR(below, 1.4 / 6, 1e-15);
  EXPECT_NEAR(above, 0.35, 1e-9);
}

TEST(FeketeSzego, CorrectedIsContinuousAtThreshold) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 200; ++i) {
    const ClassParams p(1 + 2 * u(rng), 2 * u(rng), u(rng), 0.55 + 0.4 * u(rng));
    if (coefficient_bounds(p).singular) continue;
    const auto r = fekete_szego_bound(p, 1.0);
    const double m = r.threshold_M;
    EXPECT_NEAR(r.flat_value, fekete_szego_bound(p, 1.0 + m).sloped_value.value, 1e-10);
    EXPECT_NEAR(fekete_szego_bound(p, 1.0 - m).bound.value, fekete_szego_bound(p, 1.0 - m * (1 + 1e-13)).bound.value,
                1e-10);
  }
}

TEST(FeketeSzego, SymmetricInEtaMinusOneAndFloored) {
  const ClassParams p(2, 0.5, 0.3, 0.8);
  for (double g : {0.0, 0.1, 0.5, 1.0, 3.0, 10.0}) {
    const double plus = fekete_szego_bound(p, 1.0 + g).bound.value;
    const double minus = fekete_szego_bound(p, 1.0 - g).bound.value;
    EXPECT_DOUBLE_EQ(plus, minus);
    EXPECT_GE(plus, fekete_szego_bound(p, 1.0).bound.value - 1e-15);
  }
}

TEST(FeketeSzego, BranchAgreesWithH) {
  const ClassParams p(1.5, 0.7, 0.4, 0.65);
  const BoundReport b = coefficient_bounds(p);
  const double c = 2 * 1.5 + 0.7 + 6 * p.xi() * 0.4;
  for (double eta : {-2.0, 0.0, 0.8, 1.0, 1.2, 4.0}) {
    const auto r = fekete_szego_bound(p, eta);
    const double u1 = 2 * 0.65, u2 = 4 * 0.65 * 0.65 - 1;
    EXPECT_NEAR(r.h_eta, u1 * u1 * (1 - eta) / (b.B * u1 * u1 - 2 * b.A * u2), 1e-14);
    EXPECT_EQ(r.branch == Branch::kFlat, std::abs(r.h_eta) <= 1 / (2 * c) + 1e-15);
  }
}

TEST(Variant, Parsing) {
  EXPECT_EQ(parse_variant("corrected"), MVariant::kCorrected);
  EXPECT_EQ(parse_variant("as-printed"), MVariant::kAsPrinted);
  EXPECT_FALSE(parse_variant("other"));
}

TEST(Corollaries, Names) {
  EXPECT_EQ(to_string(Corollary::k3_8), "COR_3_8");
  EXPECT_EQ(parse_corollary("2.4"), Corollary::k2_4);
  EXPECT_EQ(parse_corollary("COR_3_6"), Corollary::k3_6);
  EXPECT_FALSE(parse_corollary("4.1"));
  for (Corollary c : kAllCorollaries) EXPECT_EQ(parse_corollary(to_string(c)), c);
}

TEST(Corollaries, WorkedValues) {
  const auto v32 = corollary_bound(Corollary::k3_2, ClassParams(2, 0.5, 1, 0.8));
  ASSERT_TRUE(v32.fs);
  EXPECT_NEAR(v32.fs->value, 1.6 / 9.9, 1e-15);

  const auto v36 = corollary_bound(Corollary::k3_6, ClassParams(1.5, 1, 0, 0.9));
  EXPECT_NEAR(v36.fs->value, 1.8 / 4.0, 1e-15);

  const auto v38 = corollary_bound(Corollary::k3_8, ClassParams(1.5, 1, 0.25, 0.9), 1.0);
  EXPECT_NEAR(v38.fs->value, 1.8 / 5.5, 1e-15);

  const auto v34 = corollary_bound(Corollary::k3_4, ClassParams(1, 1, 0, 0.6));
  EXPECT_NEAR(v34.fs->value, 0.4, 1e-15);

  const auto v22 = corollary_bound(Corollary::k2_2, ClassParams(1, 1, 0, 0.6));
  EXPECT_NEAR(v22.a2->value, 0.821583836257749, 1e-15);
  EXPECT_NEAR(v22.a3->value, 0.76, 1e-15);
}

TEST(Corollaries, OffSliceAndEtaRules) {
  EXPECT_THROW(corollary_bound(Corollary::k2_2, ClassParams(2, 1, 0, 0.6)), UsageError);
  EXPECT_THROW(corollary_bound(Corollary::k2_5, ClassParams(1, 2, 0, 0.6)), UsageError);
  EXPECT_THROW(corollary_bound(Corollary::k3_7, ClassParams(1, 1, 0.5, 0.6), 2.0), UsageError);
  EXPECT_THROW(corollary_bound(Corollary::k3_7, ClassParams(1, 1, 0, 0.6)), UsageError);
  EXPECT_THROW(corollary_bound(Corollary::k3_4, ClassParams(1, 1, 0, 0.6), 2.0), UsageError);
  EXPECT_TRUE(on_slice(Corollary::k3_2, ClassParams(3, 2, 1, 0.9)));
}

TEST(Corollaries, ReduceFromGeneralTheorems) {
  for (Corollary c : kAllCorollaries) {
    const auto [grid, etas] = reduction_grid(c);
    const ReductionResult r = reduction_check(c, grid, etas);
    EXPECT_TRUE(r.pass) << to_string(c) << " deviation " << r.max_deviation;
    EXPECT_LE(r.max_deviation, 1e-12);
    EXPECT_GE(r.points, 81u);
  }
}

TEST(BoundDeviation, Cases) {
  EXPECT_EQ(bound_deviation(Bound{2.0}, Bound{2.0}), 0.0);
  EXPECT_DOUBLE_EQ(bound_deviation(Bound{4.0}, Bound{2.0}), 0.5);
  EXPECT_DOUBLE_EQ(bound_deviation(Bound{0.1}, Bound{0.2}), 0.1);
  EXPECT_EQ(bound_deviation(Bound::unbounded(), Bound::unbounded()), 0.0);
  EXPECT_TRUE(std::isinf(bound_deviation(Bound::unbounded(), Bound{1.0})));
}

}  // namespace
}  // namespace bicheb
