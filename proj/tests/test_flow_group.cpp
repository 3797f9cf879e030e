#include "smalldiv/error.hpp"
#include "smalldiv/flow_group.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace smalldiv;

namespace {

const AlphaSpec kSqrt2 = AlphaSpec::surd(0, 1, 2, 1);

FlowClass make(long c, const PeriodicFunction& delta, const AlphaSpec& alpha = kSqrt2) {
  return FlowClass::make(alpha, Scalar(c), delta);
}

}  // namespace

TEST(FlowClass, FromFunctionSplitsDrift) {
  const auto a = flow_from_function(PeriodicFunction::constant(3) + PeriodicFunction::cosine(1), kSqrt2);
  EXPECT_EQ(a.c, Scalar(3));
  EXPECT_EQ(a.delta, PeriodicFunction::cosine(1));
  EXPECT_EQ(flow_from_function(PeriodicFunction(), kSqrt2), FlowClass::identity(kSqrt2));
}

TEST(FlowClass, RejectsRationalAndMeanfulDelta) {
  EXPECT_THROW(FlowClass::make(AlphaSpec::rational(1, 2), Scalar(1), PeriodicFunction()), Error);
  EXPECT_THROW(FlowClass::make(kSqrt2, Scalar(1), PeriodicFunction::constant(1)), Error);
}

TEST(FlowGroup, Addition) {
  const auto sum = flow_add(make(1, PeriodicFunction::cosine(1)), make(2, -PeriodicFunction::cosine(1)));
  EXPECT_EQ(sum, make(3, PeriodicFunction()));
  const auto p = make(4, PeriodicFunction::sine(2));
  EXPECT_EQ(flow_add(p, FlowClass::identity(kSqrt2)), p);
}

TEST(FlowGroup, DisjointSupportsMerge) {
  const auto a = make(0, PeriodicFunction::cosine(1));
  const auto b = make(0, PeriodicFunction::cosine(5));
  const auto sum = flow_add(a, b);
  EXPECT_EQ(sum.delta.mode_count(), 2u);
  EXPECT_EQ(sum.delta.coefficient(1), PeriodicFunction::cosine(1).coefficient(1));
  EXPECT_EQ(sum.delta.coefficient(5), PeriodicFunction::cosine(5).coefficient(5));
}

TEST(FlowGroup, MismatchedAlphaIsRejected) {
  try {
    flow_add(make(1, PeriodicFunction()), make(1, PeriodicFunction(), AlphaSpec::surd(0, 1, 3, 1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AlphaMismatch);
  }
}

TEST(FlowGroup, Inverse) {
  const auto a = make(3, PeriodicFunction::cosine(1));
  EXPECT_EQ(flow_inverse(a), make(-3, -PeriodicFunction::cosine(1)));
  EXPECT_EQ(flow_inverse(FlowClass::identity(kSqrt2)), FlowClass::identity(kSqrt2));
  EXPECT_EQ(flow_add(a, flow_inverse(a)), FlowClass::identity(kSqrt2));
}

TEST(Reduction, ForwardCoboundaryReducesToDrift) {
  std::mt19937_64 rng(5);
  const auto g0 = oracle::random_trig(rng, 10);
  const auto a = FlowClass::make(kSqrt2, Scalar(2), delta_forward(g0, kSqrt2));
  const auto r = reduce_mod_coboundary(a);
  EXPECT_TRUE(r.reduced);
  EXPECT_TRUE(r.result.delta.is_zero());
  EXPECT_EQ(r.result.c, Scalar(2));
  ASSERT_TRUE(r.witness.has_value());
  for (const auto& [k, c] : g0.coeffs()) {
    if (k == 0) continue;
    EXPECT_NEAR(r.witness->coefficient(k).re.to_double(), c.re.to_double(), 1e-14);
  }
  const auto again = reduce_mod_coboundary(r.result);
  EXPECT_EQ(again.result, r.result);
}

TEST(Reduction, ZeroDeltaIsTriviallyReduced) {
  const auto r = reduce_mod_coboundary(FlowClass::identity(kSqrt2));
  EXPECT_TRUE(r.reduced);
  EXPECT_EQ(r.result, FlowClass::identity(kSqrt2));
}

TEST(Cocycle, ConstantDrift) {
  const auto tau = cocycle_expand(make(5, PeriodicFunction()), 2);
  EXPECT_EQ(tau, PeriodicFunction::constant(10));
  EXPECT_TRUE(cocycle_expand(make(5, PeriodicFunction::cosine(1)), 0).is_zero());
}

TEST(Cocycle, MinusOneIsShiftedNegation) {
  const auto a = make(1, PeriodicFunction::cosine(1) + PeriodicFunction::sine(3));
  const auto tau = cocycle_expand(a, -1);
  const auto f = a.function();
  const double alpha = std::sqrt(2.0);
  for (double x : {0.0, 0.2, 0.77}) EXPECT_NEAR(tau.eval(x), -f.eval(x - alpha), 1e-12);
}

TEST(Cocycle, MatchesOrbitSum) {
  const auto a = make(1, PeriodicFunction::cosine(2));
  const MpFloat x(0.3, 160);
  for (long m : {1L, 3L, 10L, 100L}) {
    EXPECT_NEAR(cocycle_expand(a, m).eval(x).to_double(), orbit_sum(a.function(), kSqrt2, x, m).to_double(), 1e-12);
  }
}

TEST(Classify, SpeedOfLinearFlow) {
  const auto r = classify_bundle(make(1, PeriodicFunction()));
  EXPECT_EQ(r.kind, BundleKind::TorusLinearFlow);
  ASSERT_TRUE(r.speed.has_value());
  EXPECT_EQ(*r.speed, Scalar(1));
  const auto half = classify_bundle(make(2, PeriodicFunction()));
  EXPECT_EQ(*half.speed, Scalar(mpq_class(1, 2)));
}

TEST(Classify, IdentityIsTrivial) {
  EXPECT_EQ(classify_bundle(FlowClass::identity(kSqrt2)).kind, BundleKind::TrivialProduct);
}

TEST(Generator, IterateBasics) {
  const auto h = GeneratorH::from_class(make(1, PeriodicFunction()));
  const MpFloat x0(0.25, 160), t0(1.5, 160);
  const auto p0 = generator_iterate(h, x0, t0, 0);
  EXPECT_EQ(p0.x, x0);
  EXPECT_EQ(p0.t, t0);
  const auto p5 = generator_iterate(h, x0, t0, 5);
  EXPECT_NEAR(p5.t.to_double(), 6.5, 1e-40);
  const double x5 = std::fmod(0.25 + 5 * std::sqrt(2.0), 1.0);
  EXPECT_NEAR(p5.x.to_double(), x5, 1e-14);
}

TEST(Generator, AgreesWithCocycleExpansion) {
  const auto a = make(1, PeriodicFunction::cosine(1) + PeriodicFunction::sine(2));
  const auto h = GeneratorH::from_class(a);
  const MpFloat x0(0.4, 160), t0(0.0, 160);
  for (long m : {-7L, -1L, 1L, 6L}) {
    const auto p = generator_iterate(h, x0, t0, m);
    EXPECT_NEAR(p.t.to_double(), cocycle_expand(a, m).eval(x0).to_double(), 1e-12);
  }
}
