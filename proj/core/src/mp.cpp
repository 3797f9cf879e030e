#include "smalldiv/mp.hpp"

#include "smalldiv/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace smalldiv {

long bits_for_digits(long digits) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 16;
}

void ensure_wide_exponent_range() {
  thread_local bool widened = false;
  if (!widened) {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    widened = true;
  }
}

MpFloat::MpFloat(mpfr_prec_t bits) {
  ensure_wide_exponent_range();
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

MpFloat::MpFloat(double value, mpfr_prec_t bits) {
  ensure_wide_exponent_range();
  mpfr_init2(value_, std::max<mpfr_prec_t>(bits, 2));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

MpFloat::MpFloat(const MpFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

MpFloat::MpFloat(MpFloat&& other) noexcept {
  // Steal the limbs by swapping with a minimal fresh value.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

MpFloat& MpFloat::operator=(const MpFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

MpFloat& MpFloat::operator=(MpFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

MpFloat::~MpFloat() { mpfr_clear(value_); }

MpFloat MpFloat::from_integer(const mpz_class& z, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  MpFloat out(bits);
  mpfr_set_z(out.value_, z.get_mpz_t(), rnd);
  return out;
}

MpFloat MpFloat::from_rational(const mpq_class& q, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  MpFloat out(bits);
  mpfr_set_q(out.value_, q.get_mpq_t(), rnd);
  return out;
}

MpFloat MpFloat::from_string(const std::string& text, mpfr_prec_t bits) {
  MpFloat out(bits);
  if (mpfr_set_str(out.value_, text.c_str(), 10, MPFR_RNDN) != 0 || !mpfr_number_p(out.value_)) {
    fail(ErrorKind::InvalidArgument, "not a decimal number: '" + text + "'");
  }
  return out;
}

void MpFloat::round_to(mpfr_prec_t bits, mpfr_rnd_t rnd) { mpfr_prec_round(value_, bits, rnd); }

double MpFloat::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  // x = m * 2^e with 0.5 <= |m| < 1.
  long exponent = 0;
  double mantissa = mpfr_get_d_2exp(&exponent, value_, MPFR_RNDN);
  return std::log2(std::fabs(mantissa)) + static_cast<double>(exponent);
}

std::pair<mpz_class, long> MpFloat::to_dyadic() const {
  mpz_class mantissa;
  if (is_zero()) return {mantissa, 0};
  mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  // Normalize so the mantissa is odd, giving a canonical representation.
  if (mantissa != 0) {
    mp_bitcnt_t twos = mpz_scan1(mantissa.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(mantissa.get_mpz_t(), mantissa.get_mpz_t(), twos);
    exponent += static_cast<mpfr_exp_t>(twos);
  }
  return {mantissa, static_cast<long>(exponent)};
}

mpq_class MpFloat::to_rational() const {
  auto [mantissa, exponent] = to_dyadic();
  mpq_class out(mantissa);
  if (exponent >= 0) {
    mpz_mul_2exp(out.get_num_mpz_t(), out.get_num_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  out.canonicalize();
  return out;
}

std::string MpFloat::to_string(int digits) const {
  if (is_zero()) return "0";
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", std::max(digits - 1, 0), value_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

MpFloat MpFloat::operator-() const {
  MpFloat out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

int compare(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.get(), b.get()); }

int compare(const MpFloat& a, const mpq_class& b) { return mpfr_cmp_q(a.get(), b.get_mpq_t()); }

namespace {

mpfr_prec_t joint(const MpFloat& a, const MpFloat& b) { return std::max(a.precision(), b.precision()); }

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

MpFloat apply(BinaryOp op, const MpFloat& a, const MpFloat& b, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  MpFloat out(bits);
  op(out.get(), a.get(), b.get(), rnd);
  return out;
}

}  // namespace

MpFloat operator+(const MpFloat& a, const MpFloat& b) { return apply(mpfr_add, a, b, joint(a, b), MPFR_RNDN); }
MpFloat operator-(const MpFloat& a, const MpFloat& b) { return apply(mpfr_sub, a, b, joint(a, b), MPFR_RNDN); }
MpFloat operator*(const MpFloat& a, const MpFloat& b) { return apply(mpfr_mul, a, b, joint(a, b), MPFR_RNDN); }
MpFloat operator/(const MpFloat& a, const MpFloat& b) { return apply(mpfr_div, a, b, joint(a, b), MPFR_RNDN); }

MpFloat abs(const MpFloat& a) {
  MpFloat out(a.precision());
  mpfr_abs(out.get(), a.get(), MPFR_RNDN);
  return out;
}

MpFloat sqrt(const MpFloat& a) {
  MpFloat out(a.precision());
  mpfr_sqrt(out.get(), a.get(), MPFR_RNDN);
  return out;
}

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(mpfr_prec_t bits) : lo_(bits), hi_(bits) {}

Interval::Interval(MpFloat lo, MpFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.is_nan() || hi_.is_nan() || lo_ > hi_) {
    fail(ErrorKind::InvariantViolation, "malformed interval");
  }
}

mpfr_prec_t Interval::precision() const noexcept { return std::max(lo_.precision(), hi_.precision()); }

Interval Interval::point(double value, mpfr_prec_t bits) {
  return Interval(MpFloat(value, bits), MpFloat(value, bits));
}

Interval Interval::from_integer(const mpz_class& z, mpfr_prec_t bits) {
  return Interval(MpFloat::from_integer(z, bits, MPFR_RNDD), MpFloat::from_integer(z, bits, MPFR_RNDU));
}

Interval Interval::from_rational(const mpq_class& q, mpfr_prec_t bits) {
  return Interval(MpFloat::from_rational(q, bits, MPFR_RNDD), MpFloat::from_rational(q, bits, MPFR_RNDU));
}

Interval Interval::from_rationals(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t bits) {
  return Interval(MpFloat::from_rational(lo, bits, MPFR_RNDD), MpFloat::from_rational(hi, bits, MPFR_RNDU));
}

Interval Interval::pi(mpfr_prec_t bits) {
  MpFloat lo(bits), hi(bits);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::power(unsigned long base, long exponent, mpfr_prec_t bits) {
  MpFloat b(std::max<mpfr_prec_t>(bits, 64));
  mpfr_set_ui(b.get(), base, MPFR_RNDN);
  MpFloat lo(bits), hi(bits);
  mpfr_pow_si(lo.get(), b.get(), exponent, MPFR_RNDD);
  mpfr_pow_si(hi.get(), b.get(), exponent, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

MpFloat Interval::width() const {
  MpFloat out(precision());
  mpfr_sub(out.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return out;
}

MpFloat Interval::mid() const {
  MpFloat out(precision() + 1);
  mpfr_add(out.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(out.get(), out.get(), 1, MPFR_RNDN);
  out.round_to(precision());
  return out;
}

bool Interval::contains(const MpFloat& x) const { return lo_ <= x && x <= hi_; }

bool Interval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

bool Interval::overlaps(const Interval& other) const { return !(hi_ < other.lo_) && !(other.hi_ < lo_); }

Interval Interval::operator-() const {
  MpFloat lo(hi_.precision()), hi(lo_.precision());
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  const auto bits = joint(a, b);
  MpFloat lo(bits), hi(bits);
  mpfr_add(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  const auto bits = joint(a, b);
  MpFloat lo(bits), hi(bits);
  mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
  const auto bits = joint(a, b);
  const MpFloat* xs[2] = {&a.lo(), &a.hi()};
  const MpFloat* ys[2] = {&b.lo(), &b.hi()};
  MpFloat lo(bits), hi(bits), tmp(bits);
  bool first = true;
  for (const MpFloat* x : xs) {
    for (const MpFloat* y : ys) {
      mpfr_mul(tmp.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || tmp < lo) lo = tmp;
      mpfr_mul(tmp.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || tmp > hi) hi = tmp;
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) fail(ErrorKind::PrecisionExhausted, "divisor enclosure contains zero");
  const auto bits = joint(a, b);
  const MpFloat* xs[2] = {&a.lo(), &a.hi()};
  const MpFloat* ys[2] = {&b.lo(), &b.hi()};
  MpFloat lo(bits), hi(bits), tmp(bits);
  bool first = true;
  for (const MpFloat* x : xs) {
    for (const MpFloat* y : ys) {
      mpfr_div(tmp.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || tmp < lo) lo = tmp;
      mpfr_div(tmp.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || tmp > hi) hi = tmp;
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval abs(const Interval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  MpFloat hi = -a.lo();
  if (a.hi() > hi) hi = a.hi();
  return Interval(MpFloat(a.precision()), std::move(hi));
}

Interval sqrt(const Interval& a) {
  if (a.hi().sign() < 0) fail(ErrorKind::InvalidArgument, "sqrt of a negative interval");
  const auto bits = a.precision();
  MpFloat lo(bits), hi(bits);
  if (a.lo().sign() > 0) mpfr_sqrt(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval pow(const Interval& a, long n) {
  if (n == 0) return Interval::point(1.0, a.precision());
  if (a.lo().sign() < 0) fail(ErrorKind::InvalidArgument, "pow expects a nonnegative interval");
  if (n < 0 && a.lo().sign() == 0) fail(ErrorKind::PrecisionExhausted, "negative power of an interval touching zero");
  const auto bits = a.precision();
  MpFloat lo(bits), hi(bits);
  if (n > 0) {
    mpfr_pow_si(lo.get(), a.lo().get(), n, MPFR_RNDD);
    mpfr_pow_si(hi.get(), a.hi().get(), n, MPFR_RNDU);
  } else {
    mpfr_pow_si(lo.get(), a.hi().get(), n, MPFR_RNDD);
    mpfr_pow_si(hi.get(), a.lo().get(), n, MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(a.lo() < b.lo() ? a.lo() : b.lo(), a.hi() > b.hi() ? a.hi() : b.hi());
}

namespace {

// f is 1-Lipschitz; enclose f over [lo, hi] from f(mid) and the radius.
Interval lipschitz_enclosure(int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const Interval& a) {
  const auto bits = a.precision();
  MpFloat m = a.mid();
  MpFloat r1(bits), r2(bits);
  mpfr_sub(r1.get(), a.hi().get(), m.get(), MPFR_RNDU);
  mpfr_sub(r2.get(), m.get(), a.lo().get(), MPFR_RNDU);
  const MpFloat& radius = r1 > r2 ? r1 : r2;
  MpFloat lo(bits), hi(bits);
  f(lo.get(), m.get(), MPFR_RNDD);
  f(hi.get(), m.get(), MPFR_RNDU);
  mpfr_sub(lo.get(), lo.get(), radius.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi.get(), radius.get(), MPFR_RNDU);
  if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo.get(), -1, MPFR_RNDN);
  if (mpfr_cmp_si(hi.get(), 1) > 0) mpfr_set_si(hi.get(), 1, MPFR_RNDN);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval sin(const Interval& a) { return lipschitz_enclosure(mpfr_sin, a); }

Interval cos(const Interval& a) { return lipschitz_enclosure(mpfr_cos, a); }

Interval sin_monotone(const Interval& a) {
  const auto bits = a.precision();
  MpFloat lo(bits), hi(bits);
  MpFloat half_pi(bits);
  mpfr_const_pi(half_pi.get(), MPFR_RNDD);
  mpfr_div_2ui(half_pi.get(), half_pi.get(), 1, MPFR_RNDD);
  // The true argument lies in [0, pi/2]; an endpoint past pi/2 is rounding.
  if (a.lo().sign() > 0) {
    mpfr_sin(lo.get(), (a.lo() < half_pi ? a.lo() : half_pi).get(), MPFR_RNDD);
  }
  if (a.hi() >= half_pi) {
    mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
  } else {
    mpfr_sin(hi.get(), a.hi().get(), MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval rounded(const Interval& a, mpfr_prec_t bits) {
  MpFloat lo(bits), hi(bits);
  mpfr_set(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_set(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace smalldiv
