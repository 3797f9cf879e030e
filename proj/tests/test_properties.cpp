// Randomized invariants across modules. Seeds are fixed so failures replay.

#include "smalldiv/big_integer.hpp"
#include "smalldiv/cohomology.hpp"
#include "smalldiv/continued_fraction.hpp"
#include "smalldiv/diff_group.hpp"
#include "smalldiv/flow_group.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace smalldiv;

namespace {

const AlphaSpec kSqrt2 = AlphaSpec::surd(0, 1, 2, 1);

std::vector<AlphaSpec> sample_alphas() {
  return {AlphaSpec::surd(-1, 1, 2, 1), AlphaSpec::surd(1, 1, 5, 2), AlphaSpec::surd(0, 1, 7, 3),
          liouville_alpha(10), liouville_alpha(3),
          AlphaSpec::continued_fraction({0, 1, 5, 2, 9, 1, 1, 40, 3, 2, 7, 1, 1, 1, 2})};
}

}  // namespace

TEST(Property, ConvergentDeterminant) {
  for (const auto& alpha : sample_alphas()) {
    const auto cs = convergents(alpha, 12);
    for (std::size_t n = 1; n < cs.size(); ++n) {
      const mpz_class det = cs[n].q * cs[n - 1].p - cs[n].p * cs[n - 1].q;
      EXPECT_EQ(abs(det), 1) << alpha.describe() << " n=" << n;
      EXPECT_EQ(gcd(cs[n].p, cs[n].q), 1);
    }
  }
}

TEST(Property, ConvergentDistanceBelowNextDenominator) {
  for (const auto& alpha : sample_alphas()) {
    const auto cs = convergents(alpha, 8);
    RotationEnclosure rot(alpha, 128);
    for (std::size_t n = 1; n + 1 < cs.size(); ++n) {
      const Interval d = rot.distance(cs[n].q);
      const MpFloat bound = MpFloat::from_rational(mpq_class(1, cs[n + 1].q), 256, MPFR_RNDD);
      EXPECT_LT(d.hi(), bound) << alpha.describe() << " q=" << cs[n].q.get_str();
    }
  }
}

TEST(Property, DistanceIsSymmetric) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> k(1, 1000000);
  for (const auto& alpha : sample_alphas()) {
    for (int i = 0; i < 20; ++i) {
      const long kk = k(rng);
      const auto a = nearest_distance(alpha, kk, 1e-25);
      const auto b = nearest_distance(alpha, -kk, 1e-25);
      EXPECT_EQ(a.bounds.lo(), b.bounds.lo());
      EXPECT_EQ(a.bounds.hi(), b.bounds.hi());
    }
  }
}

TEST(Property, SurdsAlwaysHaveConfirmedPeriods) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> small(-20, 20), dist_d(2, 200), dist_c(1, 30);
  int checked = 0;
  while (checked < 100) {
    const long d = dist_d(rng);
    if (!is_squarefree(d)) continue;
    const long b = small(rng);
    if (b == 0) continue;
    const auto alpha = AlphaSpec::surd(small(rng), b, d, dist_c(rng));
    const auto period = detect_quadratic(alpha, 4);
    ASSERT_TRUE(period.has_value()) << alpha.describe();
    EXPECT_TRUE(period->confirmed);
    EXPECT_FALSE(period->period.empty());
    ++checked;
  }
}

TEST(Property, DecomposeRecombines) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto f = oracle::random_trig(rng, 12, true);
    const auto [c, delta] = f.decompose();
    EXPECT_TRUE(delta.mean().is_zero());
    EXPECT_EQ(PeriodicFunction::constant(c) + delta, f);
  }
}

TEST(Property, Linearity) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const auto u = oracle::random_trig(rng, 8, true);
    const auto v = oracle::random_trig(rng, 8, true);
    const Scalar a(mpq_class(3, 7)), b(-2);
    std::vector<std::pair<mpz_class, Coeff>> mixed;
    for (long k = 0; k <= 8; ++k) mixed.push_back({k, a * u.coefficient(k) + b * v.coefficient(k)});
    EXPECT_EQ(PeriodicFunction::from_coeffs(mixed), a * u + b * v);
  }
}

TEST(Property, ForwardHasZeroMeanAndRealSymmetry) {
  std::mt19937_64 rng(41);
  for (const auto& alpha : sample_alphas()) {
    const auto f = delta_forward(oracle::random_trig(rng, 10, true), alpha);
    EXPECT_TRUE(f.mean().is_zero());
    for (const auto& [k, c] : f.coeffs()) {
      EXPECT_EQ(f.coefficient(-k), c.conj());
    }
  }
}

TEST(Property, RoundTripSolve) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 10; ++i) {
    const auto g = oracle::random_trig(rng, 64, true);
    const auto r = solve(delta_forward(g, kSqrt2), kSqrt2);
    EXPECT_EQ(r.verdict, SolveVerdict::Solved);
    EXPECT_LE(r.residual.to_double(), 1e-10);
    const auto diff = r.g - g.decompose().second;
    for (const auto& [k, c] : diff.coeffs()) EXPECT_LT(c.magnitude(128).to_double(), 1e-30);
  }
}

TEST(Property, TelescopingWhenSolved) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 5; ++i) {
    const auto f = oracle::random_trig(rng, 6, true);
    const auto r = birkhoff_sum(f, kSqrt2, 0.2, 2000);
    ASSERT_TRUE(r.telescoping_error.has_value());
    EXPECT_LE(*r.telescoping_error, 1e-8);
  }
}

TEST(Property, BirkhoffCocycleLaw) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> m(0, 40);
  std::uniform_real_distribution<double> x(0.0, 1.0);
  const auto f = oracle::random_trig(rng, 5, true);
  for (int i = 0; i < 30; ++i) {
    const long a = m(rng), b = m(rng);
    const MpFloat x0(x(rng), 160);
    const MpFloat shifted = x0 + MpFloat(double(b), 160) * kSqrt2.enclosure(200).mid();
    const double lhs = orbit_sum(f, kSqrt2, x0, a + b).to_double();
    const double rhs = orbit_sum(f, kSqrt2, shifted, a).to_double() + orbit_sum(f, kSqrt2, x0, b).to_double();
    EXPECT_NEAR(lhs, rhs, 1e-12);
  }
}

TEST(Property, CocycleIsAHomomorphism) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 20; ++i) {
    const auto a = FlowClass::make(kSqrt2, Scalar(mpq_class(i, 3)), oracle::random_trig(rng, 4));
    const auto b = FlowClass::make(kSqrt2, Scalar(-1), oracle::random_trig(rng, 4));
    for (long m : {-3L, 2L, 5L}) {
      const auto lhs = cocycle_expand(flow_add(a, b), m);
      const auto rhs = cocycle_expand(a, m) + cocycle_expand(b, m);
      const auto diff = lhs - rhs;
      for (const auto& [k, c] : diff.coeffs()) EXPECT_LT(c.magnitude(128).to_double(), 1e-40);
    }
  }
}

TEST(Property, ClassificationIgnoresCoboundaries) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 10; ++i) {
    const auto a = FlowClass::make(kSqrt2, Scalar(i % 2), oracle::random_trig(rng, 6));
    const auto shifted = flow_add(a, FlowClass::make(kSqrt2, Scalar(0), delta_forward(oracle::random_trig(rng, 6), kSqrt2)));
    const auto ka = classify_bundle(a), kb = classify_bundle(shifted);
    EXPECT_EQ(ka.kind, kb.kind);
    EXPECT_NE(ka.kind, BundleKind::ExoticProduct);
  }
}

TEST(Property, UnitPowersKeepNormOne) {
  const auto alpha = AlphaSpec::surd(0, 1, 2, 1);
  const auto u = quadratic_unit(alpha);
  // (c + d sqrt2)^n by integer recurrence; the norm must stay +-1.
  mpz_class x = u.c, y = u.d;
  for (int n = 1; n <= 30; ++n) {
    EXPECT_EQ(abs(x * x - 2 * y * y), 1);
    const mpz_class nx = x * u.c + 2 * y * u.d, ny = x * u.d + y * u.c;
    x = nx;
    y = ny;
  }
}
