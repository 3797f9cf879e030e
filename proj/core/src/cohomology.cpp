#include "smalldiv/cohomology.hpp"

#include "smalldiv/big_integer.hpp"
#include "smalldiv/continued_fraction.hpp"
#include "smalldiv/error.hpp"

#include <algorithm>
#include <cmath>

namespace smalldiv {

std::string_view to_string(SolveVerdict v) noexcept {
  switch (v) {
    case SolveVerdict::Solved: return "Solved";
    case SolveVerdict::SolvedNonSmooth: return "SolvedNonSmooth";
    case SolveVerdict::Obstructed: return "Obstructed";
    case SolveVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

ModeDivisor lambda_k(const RotationEnclosure& rotation, const mpz_class& k) {
  const mpfr_prec_t bits = rotation.bits();
  ModeDivisor out{k, Coeff{}, Interval::point(0.0, bits), Interval::point(0.0, bits)};
  if (k == 0) return out;
  const Interval x = rotation.centered_multiple(k);
  out.distance = rotation.distance(k);
  const mpfr_prec_t work = out.distance.precision() + 8;
  out.magnitude = Interval::point(2.0, work) * sin_monotone(Interval::pi(work) * out.distance);
  if (x.is_point() && x.lo().is_zero()) return out;  // k alpha is an integer

  // re = cos(2 pi x) - 1 = -2 sin^2(pi x) avoids cancellation for small x.
  MpFloat pi_x(work), s(work), re(work), im(work);
  mpfr_const_pi(pi_x.get(), MPFR_RNDN);
  const MpFloat mid = x.mid();
  mpfr_mul(pi_x.get(), pi_x.get(), mid.get(), MPFR_RNDN);
  mpfr_sin(s.get(), pi_x.get(), MPFR_RNDN);
  mpfr_sqr(re.get(), s.get(), MPFR_RNDN);
  mpfr_mul_si(re.get(), re.get(), -2, MPFR_RNDN);
  mpfr_mul_2ui(pi_x.get(), pi_x.get(), 1, MPFR_RNDN);
  mpfr_sin(im.get(), pi_x.get(), MPFR_RNDN);
  out.lambda = Coeff{Scalar(std::move(re)), Scalar(std::move(im))};
  return out;
}

ModeDivisor lambda_k(const AlphaSpec& alpha, const mpz_class& k, mpfr_prec_t bits) {
  return lambda_k(RotationEnclosure(alpha, bits), k);
}

PeriodicFunction delta_forward(const PeriodicFunction& g, const AlphaSpec& alpha, mpfr_prec_t bits) {
  RotationEnclosure rot(alpha, bits);
  std::vector<std::pair<mpz_class, Coeff>> entries;
  for (const auto& [k, c] : g.coeffs()) {
    if (k == 0) continue;
    entries.emplace_back(k, lambda_k(rot, k).lambda * c);
  }
  PeriodicFunction out = PeriodicFunction::from_coeffs(entries);
  return g.rule() ? out.with_rule(*g.rule()) : out;
}

namespace {

struct Inversion {
  PeriodicFunction g;
  std::vector<ModeDivisor> divisors;
  MpFloat residual;
};

Inversion invert(const PeriodicFunction& f, const AlphaSpec& alpha, mpfr_prec_t bits) {
  RotationEnclosure rot(alpha, bits);
  Inversion out{PeriodicFunction(), {}, MpFloat(bits)};
  std::vector<std::pair<mpz_class, Coeff>> entries;
  for (const auto& [k, c] : f.coeffs()) {
    if (k == 0) continue;
    ModeDivisor d = lambda_k(rot, k);
    if (d.magnitude.is_point() && d.magnitude.lo().is_zero()) {
      fail(ErrorKind::ResonantObstruction, "lambda_k = 0 at k = " + format_integer(k) + " while f(k) != 0");
    }
    if (!d.magnitude.certainly_positive()) {
      fail(ErrorKind::PrecisionExhausted, "cannot bound |lambda_k| away from 0 at k = " + format_integer(k));
    }
    Coeff gk = c / d.lambda;
    const MpFloat r = (d.lambda * gk - c).magnitude(bits);
    if (r > out.residual) out.residual = r;
    entries.emplace_back(k, std::move(gk));
    out.divisors.push_back(std::move(d));
  }
  out.g = PeriodicFunction::from_coeffs(entries);
  return out;
}

}  // namespace

PeriodicFunction invert_multiplier(const PeriodicFunction& f, const AlphaSpec& alpha, mpfr_prec_t bits) {
  return invert(f, alpha, bits).g;
}

SolveResult solve(const PeriodicFunction& f, const AlphaSpec& alpha, const SolvePolicy& policy) {
  require_irrational(alpha, "solve");
  if (policy.max_mode > 0 && f.support_bound() > policy.max_mode) {
    fail(ErrorKind::InvalidArgument, "support bound exceeds policy max_mode");
  }
  const mpfr_prec_t bits = policy.bits();
  Inversion inv = invert(f, alpha, bits);

  SolveResult out;
  out.mean = f.mean();
  out.g = f.rule() ? inv.g.with_rule(*f.rule()) : inv.g;
  out.divisors = std::move(inv.divisors);
  out.decay = decay_profile(out.g, policy.thresholds);
  out.residual = std::move(inv.residual);
  const MpFloat mean_size = abs(out.mean.to_float(bits));
  if (mean_size > out.residual) out.residual = mean_size;

  if (mean_size > MpFloat(policy.zero_mean_tol, 64)) {
    out.verdict = SolveVerdict::Obstructed;
  } else if (out.residual > MpFloat(policy.residual_tol, 64)) {
    out.verdict = SolveVerdict::Inconclusive;
  } else if (!f.rule()) {
    out.verdict = SolveVerdict::Solved;
  } else {
    switch (out.decay.verdict) {
      case DecayVerdict::RapidDecay:
        out.verdict = SolveVerdict::Solved;
        break;
      case DecayVerdict::SuperPolynomialGrowth:
        out.verdict = SolveVerdict::SolvedNonSmooth;
        break;
      case DecayVerdict::PolynomialGrowth:
        out.verdict = out.decay.exponent > 0 ? SolveVerdict::SolvedNonSmooth : SolveVerdict::Inconclusive;
        break;
      case DecayVerdict::Inconclusive:
        out.verdict = SolveVerdict::Inconclusive;
        break;
    }
  }
  return out;
}

namespace {

MpFloat alpha_value(const AlphaSpec& alpha, mpfr_prec_t bits) { return alpha.enclosure(bits).mid(); }

void advance(MpFloat& x, const MpFloat& step) {
  mpfr_add(x.get(), x.get(), step.get(), MPFR_RNDN);
  mpfr_frac(x.get(), x.get(), MPFR_RNDN);
  if (x.sign() < 0) mpfr_add_ui(x.get(), x.get(), 1, MPFR_RNDN);
}

}  // namespace

MpFloat orbit_sum(const PeriodicFunction& f, const AlphaSpec& alpha, const MpFloat& x, long m, mpfr_prec_t bits) {
  if (m < 0) fail(ErrorKind::InvalidArgument, "orbit_sum needs m >= 0");
  const mpfr_prec_t work = bits + 64;
  const MpFloat step = alpha_value(alpha, work);
  MpFloat point(work);
  mpfr_set(point.get(), x.get(), MPFR_RNDN);
  MpFloat sum(work);
  for (long j = 0; j < m; ++j) {
    sum = sum + f.eval(point, bits);
    advance(point, step);
  }
  return sum;
}

BirkhoffReport birkhoff_sum(const PeriodicFunction& f, const AlphaSpec& alpha, double x0, long n_max,
                            const SolvePolicy& policy, double tolerance) {
  if (n_max < 1) fail(ErrorKind::InvalidArgument, "birkhoff_sum needs n_max >= 1");
  const mpfr_prec_t bits = 128;
  BirkhoffReport out;
  out.n_max = n_max;
  out.x0 = x0;
  const auto [c, delta] = f.decompose();
  out.mean = c.to_double();
  const MpFloat cf = c.to_float(bits + 64);

  std::optional<PeriodicFunction> g;
  if (!alpha.is_rational()) {
    SolveResult solved = solve(delta, alpha, policy);
    if (solved.verdict == SolveVerdict::Solved) g = std::move(solved.g);
  }

  const MpFloat step = alpha_value(alpha, bits + 64);
  MpFloat point(x0, bits + 64);
  mpfr_frac(point.get(), point.get(), MPFR_RNDN);
  MpFloat s(bits + 64);
  MpFloat g0(bits), g_max(bits);
  if (g) {
    g0 = g->eval(point, bits);
    g_max = abs(g0);
  }
  double telescoping = 0.0;
  out.s.reserve(static_cast<std::size_t>(n_max));
  out.d.reserve(static_cast<std::size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) {
    s = s + f.eval(point, bits);
    advance(point, step);
    MpFloat n_c = cf * MpFloat::from_integer(n, bits + 64);
    const MpFloat d = s - n_c;
    out.s.push_back(s.to_double());
    out.d.push_back(d.to_double());
    out.sup_d = std::max(out.sup_d, std::fabs(out.d.back()));
    if (g) {
      const MpFloat gn = g->eval(point, bits);
      if (abs(gn) > g_max) g_max = abs(gn);
      telescoping = std::max(telescoping, std::fabs((d - (gn - g0)).to_double()));
    }
  }
  if (g) {
    out.bound = 2.0 * g_max.to_double();
    out.telescoping_error = telescoping;
    out.within_bound = out.sup_d <= *out.bound + tolerance;
  }
  return out;
}

std::vector<ModeDivisor> min_divisor_scan(const AlphaSpec& alpha, const mpz_class& K, mpfr_prec_t bits) {
  if (K < 1) fail(ErrorKind::InvalidArgument, "min_divisor_scan needs K >= 1");
  RotationEnclosure rot(alpha, bits);
  std::vector<ModeDivisor> out;
  std::optional<Interval> best;
  mpz_class last_q = 0;
  for (const auto& c : convergents_up_to(alpha, K)) {
    if (c.q == last_q) continue;
    last_q = c.q;
    ModeDivisor d = lambda_k(rot, c.q);
    if (best && !d.magnitude.certainly_less(*best)) {
      fail(ErrorKind::PrecisionExhausted, "cannot certify the record at k = " + format_integer(c.q));
    }
    best = d.magnitude;
    const bool resonant = d.magnitude.is_point() && d.magnitude.lo().is_zero();
    if (c.q >= 2) out.push_back(std::move(d));
    if (resonant) break;
  }
  return out;
}

}  // namespace smalldiv
