#include "smalldiv/cohomology.hpp"
#include "smalldiv/error.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace smalldiv;

namespace {

const AlphaSpec kSilver = AlphaSpec::surd(-1, 1, 2, 1);
const AlphaSpec kSqrt2 = AlphaSpec::surd(0, 1, 2, 1);

mpz_class pow10(unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(LambdaK, QuarterRotation) {
  const auto d = lambda_k(AlphaSpec::rational(1, 4), 1);
  EXPECT_NEAR(d.magnitude.mid().to_double(), std::sqrt(2.0), 1e-15);
  EXPECT_LE(d.magnitude.lo().to_double(), std::sqrt(2.0));
  EXPECT_GE(d.magnitude.hi().to_double(), std::sqrt(2.0));
}

TEST(LambdaK, ModeZeroVanishes) {
  const auto d = lambda_k(kSilver, 0);
  EXPECT_TRUE(d.lambda.is_zero());
  EXPECT_TRUE(d.magnitude.hi().is_zero());
}

TEST(LambdaK, SilverAtTwentyNine) {
  const auto d = lambda_k(kSilver, 29, 200);
  // 60-digit reference values.
  EXPECT_NEAR(d.magnitude.mid().to_double(), 0.07659408349770137773699858, 1e-16);
  EXPECT_NEAR(d.distance.mid().to_double(), 0.012193308819756415248973, 1e-16);
  EXPECT_LT(d.magnitude.width().to_double(), 1e-50);
}

TEST(LambdaK, ConjugateSymmetry) {
  for (long k : {1L, 2L, 7L, 29L, 1000L}) {
    const auto plus = lambda_k(kSilver, k, 160);
    const auto minus = lambda_k(kSilver, -k, 160);
    EXPECT_EQ(plus.magnitude.lo(), minus.magnitude.lo());
    EXPECT_EQ(plus.magnitude.hi(), minus.magnitude.hi());
    EXPECT_NEAR(plus.lambda.re.to_double(), minus.lambda.re.to_double(), 1e-40);
    EXPECT_NEAR(plus.lambda.im.to_double(), -minus.lambda.im.to_double(), 1e-40);
  }
}

TEST(DeltaForward, ConstantGoesToZero) {
  EXPECT_TRUE(delta_forward(PeriodicFunction::constant(7), kSqrt2).is_zero());
}

TEST(DeltaForward, CosineMatchesShiftDifference) {
  const auto f = delta_forward(PeriodicFunction::cosine(1), kSqrt2);
  const double a = std::sqrt(2.0);
  for (double x : {0.0, 0.1, 0.37, 0.9}) {
    const double expect = std::cos(2 * M_PI * (x + a)) - std::cos(2 * M_PI * x);
    EXPECT_NEAR(f.eval(x), expect, 1e-12);
  }
}

TEST(DeltaForward, RandomPolynomialPointwise) {
  std::mt19937_64 rng(11);
  const auto g = oracle::random_trig(rng, 32, true);
  const auto f = delta_forward(g, kSqrt2);
  EXPECT_TRUE(f.mean().is_zero());
  const long double a = std::sqrt(2.0L);
  for (int j = 0; j < 64; ++j) {
    const long double x = j / 64.0L;
    const long double expect = oracle::direct_eval(g, x + a) - oracle::direct_eval(g, x);
    EXPECT_NEAR(f.eval(static_cast<double>(x)), static_cast<double>(expect), 1e-10);
  }
}

TEST(Solve, InvertsForwardCosine) {
  const auto r = solve(delta_forward(PeriodicFunction::cosine(1), kSqrt2), kSqrt2);
  EXPECT_EQ(r.verdict, SolveVerdict::Solved);
  EXPECT_LT(r.residual.to_double(), 1e-12);
  EXPECT_NEAR(r.g.coefficient(1).re.to_double(), 0.5, 1e-30);
  EXPECT_NEAR(r.g.coefficient(1).im.to_double(), 0.0, 1e-30);
}

TEST(Solve, NonzeroMeanIsObstructed) {
  const auto r = solve(PeriodicFunction::constant(3) + PeriodicFunction::cosine(2), kSqrt2);
  EXPECT_EQ(r.verdict, SolveVerdict::Obstructed);
  EXPECT_EQ(r.mean, Scalar(3));
}

TEST(Solve, RationalIsRejected) {
  EXPECT_EQ(kind_of([] { solve(PeriodicFunction::cosine(1), AlphaSpec::rational(1, 3)); }), ErrorKind::NotIrrational);
}

TEST(Solve, ExactResonanceIsAHardError) {
  EXPECT_EQ(kind_of([] { invert_multiplier(PeriodicFunction::cosine(3), AlphaSpec::rational(1, 3)); }),
            ErrorKind::ResonantObstruction);
  EXPECT_NO_THROW(invert_multiplier(PeriodicFunction::cosine(2), AlphaSpec::rational(1, 3)));
}

TEST(Solve, ModeLimitIsAPrecondition) {
  SolvePolicy policy;
  policy.max_mode = 4;
  EXPECT_EQ(kind_of([&] { solve(PeriodicFunction::cosine(5), kSqrt2, policy); }), ErrorKind::InvalidArgument);
}

TEST(Birkhoff, ConstantHasNoFluctuation) {
  const auto r = birkhoff_sum(PeriodicFunction::constant(1), kSqrt2, 0.3, 50);
  ASSERT_EQ(r.s.size(), 50u);
  for (std::size_t n = 0; n < 50; ++n) {
    EXPECT_DOUBLE_EQ(r.s[n], double(n + 1));
    EXPECT_DOUBLE_EQ(r.d[n], 0.0);
  }
}

TEST(Birkhoff, CosineStaysWithinTransferBound) {
  const auto r = birkhoff_sum(PeriodicFunction::cosine(1), kSqrt2, 0.1, 10000);
  ASSERT_TRUE(r.bound.has_value());
  EXPECT_TRUE(r.within_bound);
  EXPECT_LE(r.sup_d, *r.bound + 1e-8);
  ASSERT_TRUE(r.telescoping_error.has_value());
  EXPECT_LE(*r.telescoping_error, 1e-8);
}

TEST(Birkhoff, DirectSummation) {
  std::mt19937_64 rng(3);
  const auto f = oracle::random_trig(rng, 6, true);
  const auto r = birkhoff_sum(f, kSqrt2, 0.25, 200);
  long double s = 0;
  const long double a = std::sqrt(2.0L);
  for (int n = 0; n < 200; ++n) {
    s += oracle::direct_eval(f, 0.25L + n * a);
    EXPECT_NEAR(r.s[n], static_cast<double>(s), 1e-9);
  }
}

TEST(OrbitSum, MatchesBirkhoffSamples) {
  const auto f = PeriodicFunction::constant(2) + PeriodicFunction::sine(3);
  const auto r = birkhoff_sum(f, kSqrt2, 0.5, 100);
  for (long m : {1L, 17L, 100L}) {
    const double s = orbit_sum(f, kSqrt2, MpFloat(0.5, 160), m).to_double();
    EXPECT_NEAR(s, r.s[m - 1], 1e-12);
  }
}

TEST(MinDivisorScan, SilverRecordsMatchExhaustiveScan) {
  const auto records = min_divisor_scan(kSilver, 30);
  std::vector<long> got;
  for (const auto& d : records) got.push_back(d.k.get_si());
  // Exhaustive: every k in 2..30 evaluated directly.
  const auto x = oracle::surd_value(-1, 1, 2, 1, 256);
  std::vector<long> expect;
  double best = 3.0;
  for (long k = 2; k <= 30; ++k) {
    const double m = oracle::two_sin_pi(oracle::distance(x, k));
    if (m < best) {
      best = m;
      expect.push_back(k);
    }
  }
  EXPECT_EQ(got, expect);
  EXPECT_EQ(got, (std::vector<long>{2, 5, 12, 29}));
}

TEST(MinDivisorScan, RationalResonance) {
  const auto records = min_divisor_scan(AlphaSpec::rational(1, 3), 3);
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(records.back().k, 3);
  EXPECT_TRUE(records.back().magnitude.hi().is_zero());
}

TEST(MinDivisorScan, LiouvilleRecordAtTenToTheSix) {
  const auto records = min_divisor_scan(liouville_alpha(10), pow10(6));
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(records.back().k, pow10(6));
  EXPECT_NEAR(records.back().magnitude.mid().to_double() / 6.283185307179586476925287e-18, 1.0, 1e-12);
}
