#include "smalldiv/cohomology.hpp"
#include "smalldiv/counterexamples.hpp"
#include "smalldiv/error.hpp"
#include "smalldiv/flow_group.hpp"

#include <gtest/gtest.h>

using namespace smalldiv;

namespace {

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

// Built once; selection at p_max = 5 is the expensive step.
const CounterexampleFamily& family() {
  static const CounterexampleFamily f = [] {
    const auto alpha = liouville_alpha(10);
    return build_family(partition_modes(select_resonant_modes(alpha, 5), 3), alpha);
  }();
  return f;
}

}  // namespace

TEST(SelectModes, LiouvilleModesAreFactorialPowers) {
  const auto& modes = family().skeleton.modes;
  ASSERT_EQ(modes.modes.size(), 5u);
  const unsigned long expect[] = {6, 120, 5040, 362880, 39916800};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& m = modes.modes[i];
    EXPECT_EQ(m.p, i + 1);
    EXPECT_EQ(m.k, pow10(expect[i]));
    // Certified |lambda_k| < k^{-2p}: log10 of the upper bound is below -2p * log10 k.
    const double log10_hi = m.magnitude.hi().log2_abs() * 0.30102999566398119521;
    EXPECT_LT(log10_hi, -2.0 * double(m.p) * double(expect[i]));
  }
}

TEST(SelectModes, SingleMode) {
  const auto modes = select_resonant_modes(liouville_alpha(10), 1);
  ASSERT_EQ(modes.modes.size(), 1u);
  EXPECT_EQ(modes.modes[0].k, pow10(6));
}

TEST(SelectModes, DiophantineInputIsRejected) {
  EXPECT_EQ(kind_of([] { select_resonant_modes(AlphaSpec::surd(0, 1, 2, 1), 2); }), ErrorKind::NotNonDiophantine);
}

TEST(Partition, RoundRobin) {
  const auto modes = select_resonant_modes(liouville_alpha(10), 4);
  const auto two = partition_modes(modes, 2);
  EXPECT_EQ(two.sets, (std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}}));
  EXPECT_EQ(partition_modes(modes, 1).sets.size(), 1u);
  EXPECT_EQ(kind_of([&] { partition_modes(modes, 5); }), ErrorKind::InsufficientModes);
}

TEST(Family, CoefficientsDecayAndStayReal) {
  const auto& fam = family();
  ASSERT_EQ(fam.size(), 3u);
  for (const auto& c : fam.coefficients) {
    EXPECT_TRUE(c.decay_certified);
    const auto& f = fam.functions[c.set];
    const Coeff plus = f.coefficient(c.k), minus = f.coefficient(-c.k);
    EXPECT_EQ(plus, minus);
    EXPECT_TRUE(plus.im.is_zero());
    EXPECT_TRUE(c.root.contains(plus.re.to_float(plus.re.precision())));
  }
  for (std::size_t m = 0; m < fam.size(); ++m) {
    EXPECT_TRUE(fam.functions[m].mean().is_zero());
    EXPECT_TRUE(fam.functions[m].rule().has_value());
  }
}

TEST(Family, SupportsAreDisjoint) {
  const auto& fam = family();
  for (std::size_t a = 0; a < fam.size(); ++a) {
    for (std::size_t b = a + 1; b < fam.size(); ++b) {
      for (const auto& [k, c] : fam.functions[a].coeffs()) {
        EXPECT_TRUE(fam.functions[b].coefficient(k).is_zero()) << "mode " << k.get_str().size() << " digits";
      }
    }
  }
}

TEST(Verify, EveryModeCertified) {
  const auto& fam = family();
  for (std::size_t m = 0; m < fam.size(); ++m) {
    const auto report = verify_not_coboundary(fam, m, 5);
    EXPECT_EQ(report.verdict, CertificationVerdict::NotACoboundary);
    for (const auto& mc : report.modes) {
      EXPECT_TRUE(mc.certified);
      EXPECT_GT(mc.log10_ratio, mc.log10_bound);
    }
  }
}

TEST(Verify, ForwardCoboundaryIsConsistent) {
  const AlphaSpec alpha = liouville_alpha(10);
  const auto g0 = PeriodicFunction::cosine(1) + PeriodicFunction::cosine(3);
  const auto report = verify_not_coboundary(delta_forward(g0, alpha), alpha, 2);
  EXPECT_EQ(report.verdict, CertificationVerdict::CoboundaryConsistent);
  for (const auto& mc : report.modes) EXPECT_FALSE(mc.certified);
}

TEST(Verify, EmptySupportIsDegenerate) {
  EXPECT_EQ(verify_not_coboundary(PeriodicFunction(), liouville_alpha(10), 3).verdict,
            CertificationVerdict::Degenerate);
}

TEST(Independence, ZeroCombination) {
  EXPECT_EQ(independence_check(family(), {0, 0, 0}).verdict, IndependenceVerdict::ZeroClass);
}

TEST(Independence, SingleMemberMatchesVerify) {
  const auto report = independence_check(family(), {1, 0, 0});
  EXPECT_EQ(report.verdict, IndependenceVerdict::NotACoboundary);
  ASSERT_EQ(report.sets.size(), 1u);
}

TEST(Independence, MixedCombination) {
  const auto report = independence_check(family(), {Scalar(mpq_class(-3, 7)), Scalar(2), Scalar(mpq_class(1, 1000))});
  EXPECT_EQ(report.verdict, IndependenceVerdict::NotACoboundary);
  EXPECT_EQ(report.sets.size(), 3u);
}

TEST(Independence, WrongArity) {
  EXPECT_THROW(independence_check(family(), {1, 1}), Error);
}

TEST(Family, FirstMemberIsExoticAndNonSmooth) {
  const auto& fam = family();
  const auto cls = FlowClass::make(fam.alpha(), Scalar(0), fam.functions[0]);
  EXPECT_EQ(classify_bundle(cls).kind, BundleKind::ExoticProduct);
  EXPECT_EQ(classify_bundle(FlowClass::make(fam.alpha(), Scalar(1), fam.functions[0])).kind,
            BundleKind::TorusNonlinearFlow);
  // A single-set family over three modes gives enough octaves for a growth verdict.
  const auto alpha = liouville_alpha(10);
  const auto single = build_family(partition_modes(select_resonant_modes(alpha, 3), 1), alpha);
  const auto r = solve(single.functions[0], alpha);
  EXPECT_EQ(r.verdict, SolveVerdict::SolvedNonSmooth);
  for (const auto& c : single.coefficients) {
    const double log10_g = r.g.coefficient(c.k).magnitude(256).log2_abs() * 0.30102999566398119521;
    EXPECT_GT(log10_g, double(c.p) * (c.k.get_str().size() - 1));
  }
}
