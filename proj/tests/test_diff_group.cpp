#include "smalldiv/diff_group.hpp"
#include "smalldiv/error.hpp"
#include "smalldiv/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <random>

using namespace smalldiv;

namespace {

std::vector<mpz_class> Z(std::initializer_list<long> xs) {
  std::vector<mpz_class> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Real eigenvalues of the companion matrix; roots closer than `tol` to the
// real axis count as real.
int numeric_real_roots(const std::vector<long>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -double(c[i]) / double(c[n]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  int real = 0;
  for (int i = 0; i < n; ++i) real += std::abs(es.eigenvalues()[i].imag()) < 1e-7 ? 1 : 0;
  return real;
}

}  // namespace

TEST(Pi0Rank, PureCubic) {
  const auto f = pi0_rank(Z({-2, 0, 0, 1}));
  EXPECT_EQ(f.r, 1);
  EXPECT_EQ(f.s, 1);
  EXPECT_EQ(f.rank, 1);
  EXPECT_EQ(f.group, "{±1} x Z");
  EXPECT_TRUE(f.warnings.empty());
}

TEST(Pi0Rank, TotallyRealCubic) {
  const auto f = pi0_rank(Z({1, -3, 0, 1}));
  EXPECT_EQ(f.r, 3);
  EXPECT_EQ(f.s, 0);
  EXPECT_EQ(f.rank, 2);
  EXPECT_EQ(f.group, "{±1} x Z^2");
}

TEST(Pi0Rank, RationalCase) {
  const auto f = pi0_rank(Z({-1, 1}));
  EXPECT_EQ(f.r, 1);
  EXPECT_EQ(f.s, 0);
  EXPECT_EQ(f.rank, 0);
  EXPECT_EQ(f.group, "{±1}");
}

TEST(Pi0Rank, RepeatedRootsAreRejected) {
  try {
    pi0_rank(Z({1, -2, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RepeatedRoots);
  }
}

TEST(Pi0Rank, ReducibleInputWarns) {
  EXPECT_FALSE(pi0_rank(Z({-2, 1, 1})).warnings.empty());          // (x - 1)(x + 2)
  EXPECT_FALSE(pi0_rank(Z({2, 0, -3, 0, 1})).warnings.empty());    // (x^2 - 1)(x^2 - 2)
  EXPECT_FALSE(pi0_rank(Z({5, 0, 6, 0, 1})).warnings.empty());     // (x^2 + 1)(x^2 + 5)
}

TEST(Sturm, AgreesWithCompanionEigenvalues) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> deg(1, 6);
  int checked = 0;
  while (checked < 300) {
    const int n = deg(rng);
    std::vector<long> c(n + 1);
    for (auto& x : c) x = coef(rng);
    if (c[n] == 0) continue;
    std::vector<mpz_class> z(c.begin(), c.end());
    const auto p = Polynomial::from_integers(z);
    if (gcd(p, p.derivative()).degree() > 0) continue;
    EXPECT_EQ(count_real_roots(p), numeric_real_roots(c)) << "degree " << n;
    const auto f = pi0_rank(z);
    EXPECT_EQ(f.r + 2 * f.s, f.degree);
    ++checked;
  }
}

TEST(Polynomial, Arithmetic) {
  const auto p = Polynomial::from_integers(Z({-1, 0, 1}));
  const auto q = Polynomial::from_integers(Z({1, 1}));
  const auto [quot, rem] = divmod(p, q);
  EXPECT_EQ(quot, Polynomial::from_integers(Z({-1, 1})));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(gcd(p, q), q);
  const auto roots = rational_roots(Z({-2, 1, 1}));
  ASSERT_TRUE(roots.has_value());
  EXPECT_EQ(roots->size(), 2u);
  EXPECT_FALSE(quadratic_factor(Z({2, 0, -3, 0, 1})).has_value());  // rational roots: left to rational_roots
  const auto factor = quadratic_factor(Z({6, 0, -5, 0, 1}));                 // (x^2 - 2)(x^2 - 3)
  ASSERT_TRUE(factor.has_value());
  EXPECT_TRUE(divmod(Polynomial::from_integers(Z({6, 0, -5, 0, 1})), *factor).second.is_zero());
  EXPECT_FALSE(quadratic_factor(Z({-2, 0, 0, 0, 1})).has_value());
}

TEST(QuadraticUnit, SqrtTwoMatchesPellSearch) {
  // Smallest positive (x, y) with x^2 - 2 y^2 = +-1.
  long px = 0, py = 0;
  for (long y = 1; y < 100 && px == 0; ++y) {
    for (long x = 1; x < 200; ++x) {
      if (std::abs(x * x - 2 * y * y) == 1) {
        px = x;
        py = y;
        break;
      }
    }
  }
  const auto alpha = AlphaSpec::surd(0, 1, 2, 1);
  const auto u = quadratic_unit(alpha);
  EXPECT_EQ(u.c, px);
  EXPECT_EQ(u.d, py);
  EXPECT_EQ(u.a, 2);
  EXPECT_EQ(u.b, 1);
  EXPECT_EQ(u.det, -1);
  EXPECT_TRUE(verify_unit(alpha.as<AlphaSpec::Surd>(), u));
}

TEST(QuadraticUnit, GoldenRatio) {
  const auto alpha = AlphaSpec::surd(1, 1, 5, 2);
  const auto u = quadratic_unit(alpha);
  EXPECT_EQ(u.c, 0);
  EXPECT_EQ(u.d, 1);
  EXPECT_EQ(std::abs(u.det), 1);
  EXPECT_TRUE(verify_unit(alpha.as<AlphaSpec::Surd>(), u));
}

TEST(QuadraticUnit, IdentityHoldsAcrossSurds) {
  for (long d : {2L, 3L, 5L, 6L, 7L, 10L, 13L, 19L, 22L, 61L}) {
    for (long a : {-3L, 0L, 1L}) {
      for (long c : {1L, 2L, 3L}) {
        const auto alpha = AlphaSpec::surd(a, 1, d, c);
        const auto u = quadratic_unit(alpha);
        EXPECT_TRUE(verify_unit(alpha.as<AlphaSpec::Surd>(), u)) << a << "+sqrt" << d << "/" << c;
        EXPECT_EQ(std::abs(u.det), 1);
      }
    }
  }
}

TEST(QuadraticUnit, RationalIsNotQuadratic) {
  try {
    quadratic_unit(AlphaSpec::rational(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotQuadratic);
  }
}

TEST(Pi0ForAlpha, Cases) {
  const auto silver = pi0_for_alpha(AlphaSpec::surd(-1, 1, 2, 1));
  EXPECT_EQ(silver.group, "{±1} x Z");
  EXPECT_EQ(silver.evidence, Pi0Evidence::Exact);
  ASSERT_TRUE(silver.unit.has_value());
  const auto liouville = pi0_for_alpha(liouville_alpha(10));
  EXPECT_EQ(liouville.group, "{±1}");
  EXPECT_EQ(liouville.evidence, Pi0Evidence::NonQuadraticEvidence);
  const auto decimal = pi0_for_alpha(AlphaSpec::decimal("0.41421356", mpq_class(1, 100000000)));
  EXPECT_EQ(decimal.evidence, Pi0Evidence::Inconclusive);
  EXPECT_THROW(pi0_for_alpha(AlphaSpec::rational(1, 2)), Error);
}
