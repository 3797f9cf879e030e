#include "smalldiv/flow_group.hpp"

#include "smalldiv/error.hpp"

#include <cstdlib>

namespace smalldiv {

FlowClass FlowClass::make(AlphaSpec alpha, Scalar c, PeriodicFunction delta) {
  require_irrational(alpha, "flow class");
  if (!delta.mean().is_zero()) fail(ErrorKind::InvalidArgument, "fluctuation must have mean zero");
  return FlowClass{std::move(alpha), std::move(c), std::move(delta)};
}

FlowClass FlowClass::identity(AlphaSpec alpha) { return make(std::move(alpha), Scalar(0), PeriodicFunction()); }

PeriodicFunction FlowClass::function() const { return PeriodicFunction::constant(c) + delta; }

FlowClass flow_from_function(const PeriodicFunction& f, const AlphaSpec& alpha) {
  auto [c, delta] = f.decompose();
  return FlowClass::make(alpha, std::move(c), std::move(delta));
}

FlowClass flow_add(const FlowClass& a, const FlowClass& b) {
  if (!(a.alpha == b.alpha)) {
    fail(ErrorKind::AlphaMismatch, "cannot add flow classes over " + a.alpha.describe() + " and " + b.alpha.describe());
  }
  return FlowClass{a.alpha, a.c + b.c, a.delta + b.delta};
}

FlowClass flow_inverse(const FlowClass& a) { return FlowClass{a.alpha, -a.c, -a.delta}; }

Reduction reduce_mod_coboundary(const FlowClass& a, const SolvePolicy& policy) {
  SolveResult solved = solve(a.delta, a.alpha, policy);
  if (solved.verdict == SolveVerdict::Solved) {
    PeriodicFunction g = solved.g;
    return Reduction{FlowClass{a.alpha, a.c, PeriodicFunction()}, true, std::move(solved), std::move(g)};
  }
  return Reduction{a, false, std::move(solved), std::nullopt};
}

PeriodicFunction cocycle_expand(const FlowClass& a, long m, mpfr_prec_t bits) {
  if (m == 0) return PeriodicFunction();
  const long count = std::labs(m);
  RotationEnclosure rot(a.alpha, bits);
  std::vector<std::pair<mpz_class, Coeff>> entries;
  entries.emplace_back(0, Coeff{Scalar(m) * a.c, Scalar(0)});
  for (const auto& [k, coeff] : a.delta.coeffs()) {
    // m > 0: sum_{j=0}^{m-1} e^{2 pi i k j alpha}
    // m < 0: -sum_{j=1}^{|m|} e^{-2 pi i k j alpha}
    MpFloat re(bits), im(bits), s(bits), co(bits), angle(bits);
    for (long step = 0; step < count; ++step) {
      const long j = m > 0 ? step : -(step + 1);
      if (j == 0) {
        mpfr_add_ui(re.get(), re.get(), 1, MPFR_RNDN);
        continue;
      }
      const MpFloat x = rot.centered_multiple(mpz_class(k * j)).mid();
      mpfr_const_pi(angle.get(), MPFR_RNDN);
      mpfr_mul_2ui(angle.get(), angle.get(), 1, MPFR_RNDN);
      mpfr_mul(angle.get(), angle.get(), x.get(), MPFR_RNDN);
      mpfr_sin_cos(s.get(), co.get(), angle.get(), MPFR_RNDN);
      mpfr_add(re.get(), re.get(), co.get(), MPFR_RNDN);
      mpfr_add(im.get(), im.get(), s.get(), MPFR_RNDN);
    }
    Coeff phase{Scalar(re), Scalar(im)};
    if (m < 0) phase = -phase;
    entries.emplace_back(k, coeff * phase);
  }
  return PeriodicFunction::from_coeffs(entries);
}

std::string_view to_string(BundleKind kind) noexcept {
  switch (kind) {
    case BundleKind::TrivialProduct: return "TrivialProduct";
    case BundleKind::TorusLinearFlow: return "TorusLinearFlow";
    case BundleKind::TorusNonlinearFlow: return "TorusNonlinearFlow";
    case BundleKind::ExoticProduct: return "ExoticProduct";
  }
  return "TrivialProduct";
}

BundleClassification classify_bundle(const FlowClass& a, const SolvePolicy& policy) {
  require_irrational(a.alpha, "classify_bundle");
  BundleClassification out{BundleKind::TrivialProduct, std::nullopt, reduce_mod_coboundary(a, policy)};
  const bool drift = !a.c.is_zero();
  if (out.reduction.reduced) {
    out.kind = drift ? BundleKind::TorusLinearFlow : BundleKind::TrivialProduct;
    if (drift) out.speed = Scalar(1) / a.c;
  } else {
    out.kind = drift ? BundleKind::TorusNonlinearFlow : BundleKind::ExoticProduct;
  }
  return out;
}

CylinderPoint generator_iterate(const GeneratorH& h, const MpFloat& x0, const MpFloat& t0, long m, mpfr_prec_t bits) {
  const mpfr_prec_t work = bits + 64;
  const PeriodicFunction f = PeriodicFunction::constant(h.c) + h.delta;
  MpFloat step = h.alpha.enclosure(work).mid();
  if (m < 0) step = -step;
  MpFloat x(work), t(work);
  mpfr_set(x.get(), x0.get(), MPFR_RNDN);
  mpfr_set(t.get(), t0.get(), MPFR_RNDN);
  auto move = [&] {
    mpfr_add(x.get(), x.get(), step.get(), MPFR_RNDN);
    mpfr_frac(x.get(), x.get(), MPFR_RNDN);
    if (x.sign() < 0) mpfr_add_ui(x.get(), x.get(), 1, MPFR_RNDN);
  };
  for (long i = 0; i < std::labs(m); ++i) {
    if (m > 0) {
      t = t + f.eval(x, bits);
      move();
    } else {
      move();
      t = t - f.eval(x, bits);
    }
  }
  if (m == 0) {
    mpfr_frac(x.get(), x.get(), MPFR_RNDN);
    if (x.sign() < 0) mpfr_add_ui(x.get(), x.get(), 1, MPFR_RNDN);
  }
  return {std::move(x), std::move(t)};
}

}  // namespace smalldiv
