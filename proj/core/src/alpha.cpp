#include "smalldiv/alpha.hpp"

#include "smalldiv/big_integer.hpp"
#include "smalldiv/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace smalldiv {

namespace {

// Largest factorial exponent we are willing to materialize (decimal digits of
// base^(n!)); 11! fits, 12! does not.
constexpr double kMaxLiouvilleDigits = 6.0e7;

unsigned long factorial(unsigned n) {
  unsigned long out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

void normalize_surd(AlphaSpec::Surd& s) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), s.a.get_mpz_t(), s.b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.c.get_mpz_t());
  if (g > 1) {
    s.a /= g;
    s.b /= g;
    s.c /= g;
  }
  if (s.c < 0) {
    s.a = -s.a;
    s.b = -s.b;
    s.c = -s.c;
  }
}

// Moves square factors of d into b (trial division; complete for d <= 10^10,
// best effort above).
void extract_squares(mpz_class& b, mpz_class& d) {
  for (unsigned long p = 2; p <= 100000; ++p) {
    mpz_class sq = mpz_class(p) * p;
    if (sq > d) break;
    while (mpz_divisible_p(d.get_mpz_t(), sq.get_mpz_t())) {
      d /= sq;
      b *= p;
    }
  }
  if (d > 1 && is_perfect_square(d)) {
    b *= isqrt(d);
    d = 1;
  }
}

mpq_class finite_cf_value(const std::vector<mpz_class>& terms) {
  mpq_class value(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    value = mpq_class(terms[i]) + 1 / value;
  }
  value.canonicalize();
  return value;
}

// Partial quotient i of a continued-fraction spec, or nullopt past the end.
std::optional<mpz_class> cf_term(const AlphaSpec::ContinuedFraction& cf, std::size_t i) {
  if (cf.rule) return cf.rule->at(i);
  if (i < cf.prefix.size()) return cf.prefix[i];
  if (cf.period.empty()) return std::nullopt;
  return cf.period[(i - cf.prefix.size()) % cf.period.size()];
}

mpq_class parse_decimal(const std::string& text) {
  std::string s = text;
  bool negative = false;
  std::size_t pos = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string whole, frac;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char ch = s[pos];
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      (seen_point ? frac : whole) += ch;
    } else {
      fail(ErrorKind::InvalidArgument, "bad decimal literal '" + text + "'");
    }
  }
  if (whole.empty() && frac.empty()) fail(ErrorKind::InvalidArgument, "bad decimal literal '" + text + "'");
  mpz_class num(whole.empty() && frac.empty() ? std::string("0") : whole + frac, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  mpq_class out(negative ? mpz_class(-num) : num, den);
  out.canonicalize();
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

QuotientRule::QuotientRule(std::string name, std::function<mpz_class(std::size_t)> rule)
    : name_(std::move(name)), rule_(std::move(rule)) {}

mpz_class QuotientRule::at(std::size_t index) const {
  std::lock_guard<std::mutex> lock(mutex_);
  while (memo_.size() <= index) {
    mpz_class term = rule_(memo_.size());
    if (!memo_.empty() && term < 1) {
      fail(ErrorKind::InvalidArgument, "rule '" + name_ + "' produced a partial quotient < 1");
    }
    memo_.push_back(std::move(term));
  }
  return memo_[index];
}

const mpz_class& FactorialPowers::get(unsigned n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(n);
  if (it != cache_.end()) return *it->second;
  const unsigned long exponent = factorial(n);
  if (static_cast<double>(exponent) * std::log10(static_cast<double>(base_)) > kMaxLiouvilleDigits) {
    fail(ErrorKind::PrecisionExhausted, "base^(" + std::to_string(n) + "!) exceeds the digit budget");
  }
  auto value = std::make_unique<mpz_class>();
  mpz_ui_pow_ui(value->get_mpz_t(), base_, exponent);
  const mpz_class& ref = *value;
  cache_.emplace(n, std::move(value));
  return ref;
}

std::string_view to_string(AlphaKind kind) noexcept {
  switch (kind) {
    case AlphaKind::Rational: return "rational";
    case AlphaKind::QuadraticSurd: return "surd";
    case AlphaKind::ContinuedFraction: return "cf";
    case AlphaKind::Liouville: return "liouville";
    case AlphaKind::Decimal: return "decimal";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Construction

AlphaSpec AlphaSpec::rational(mpz_class p, mpz_class q) {
  if (q == 0) fail(ErrorKind::InvalidArgument, "rational alpha with zero denominator");
  mpq_class value(p, q);
  value.canonicalize();
  return AlphaSpec(Rational{value.get_num(), value.get_den()});
}

AlphaSpec AlphaSpec::surd(mpz_class a, mpz_class b, mpz_class d, mpz_class c) {
  if (c == 0) fail(ErrorKind::InvalidArgument, "surd with zero denominator c");
  if (d <= 0) fail(ErrorKind::InvalidArgument, "surd radicand d must be positive");
  if (!is_squarefree(d)) fail(ErrorKind::InvalidArgument, "surd radicand " + d.get_str() + " is not squarefree");
  Surd s{std::move(a), std::move(b), std::move(d), std::move(c)};
  normalize_surd(s);
  return AlphaSpec(s);
}

AlphaSpec AlphaSpec::continued_fraction(std::vector<mpz_class> prefix, std::vector<mpz_class> period) {
  if (prefix.empty() && period.empty()) fail(ErrorKind::InvalidArgument, "empty continued fraction");
  for (std::size_t i = 1; i < prefix.size(); ++i) {
    if (prefix[i] < 1) fail(ErrorKind::InvalidArgument, "partial quotients after the first must be >= 1");
  }
  for (const auto& t : period) {
    if (t < 1) fail(ErrorKind::InvalidArgument, "periodic partial quotients must be >= 1");
  }
  ContinuedFraction cf{std::move(prefix), std::move(period), nullptr, std::nullopt};
  if (!cf.period.empty()) {
    // y = [period; y]  =>  Q1 y^2 + (Q0 - P1) y - P0 = 0, y > 1.
    mpz_class p1 = 1, p0 = 0, q1 = 0, q0 = 1;
    for (const auto& t : cf.period) {
      mpz_class p2 = t * p1 + p0, q2 = t * q1 + q0;
      p0 = p1; p1 = p2; q0 = q1; q1 = q2;
    }
    const mpz_class u = p1 - q0;
    const mpz_class v = 2 * q1;
    const mpz_class disc = (q0 - p1) * (q0 - p1) + 4 * q1 * p0;
    // alpha = (A y + B) / (C y + D) from the prefix convergents.
    mpz_class A = 1, B = 0, C = 0, D = 1;
    for (const auto& t : cf.prefix) {
      mpz_class a2 = t * A + B, c2 = t * C + D;
      B = A; A = a2; D = C; C = c2;
    }
    const mpz_class X = A * u + B * v;
    const mpz_class Y = C * u + D * v;
    Surd s{X * Y - A * C * disc, A * Y - X * C, disc, Y * Y - C * C * disc};
    extract_squares(s.b, s.d);
    normalize_surd(s);
    cf.closed_form = s;
  }
  return AlphaSpec(std::move(cf));
}

AlphaSpec AlphaSpec::continued_fraction(std::shared_ptr<const QuotientRule> rule) {
  if (!rule) fail(ErrorKind::InvalidArgument, "null quotient rule");
  return AlphaSpec(ContinuedFraction{{}, {}, std::move(rule), std::nullopt});
}

AlphaSpec AlphaSpec::liouville(unsigned long base) {
  if (base < 2) fail(ErrorKind::InvalidArgument, "Liouville base must be >= 2");
  return AlphaSpec(Liouville{base, std::make_shared<FactorialPowers>(base)});
}

AlphaSpec AlphaSpec::decimal(std::string digits, mpq_class error) {
  if (error < 0) fail(ErrorKind::InvalidArgument, "decimal error bound must be nonnegative");
  mpq_class value = parse_decimal(digits);
  error.canonicalize();
  return AlphaSpec(Decimal{std::move(digits), std::move(value), std::move(error)});
}

AlphaKind AlphaSpec::kind() const noexcept { return static_cast<AlphaKind>(value_.index()); }

std::optional<mpq_class> AlphaSpec::exact_rational() const {
  return std::visit(
      [](const auto& v) -> std::optional<mpq_class> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return mpq_class(v.p, v.q);
        } else if constexpr (std::is_same_v<T, Surd>) {
          if (v.b == 0 || v.d == 1) {
            mpq_class out(v.a + (v.d == 1 ? v.b : mpz_class(0)), v.c);
            out.canonicalize();
            return out;
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ContinuedFraction>) {
          if (v.rule || !v.period.empty()) return std::nullopt;
          return finite_cf_value(v.prefix);
        } else if constexpr (std::is_same_v<T, Decimal>) {
          if (v.error == 0) return v.value;
          return std::nullopt;
        } else {
          return std::nullopt;
        }
      },
      value_);
}

std::optional<AlphaSpec::Surd> AlphaSpec::exact_surd() const {
  if (is_rational()) return std::nullopt;
  if (const auto* s = if_kind<Surd>()) return *s;
  if (const auto* cf = if_kind<ContinuedFraction>()) return cf->closed_form;
  return std::nullopt;
}

void require_irrational(const AlphaSpec& alpha, std::string_view operation) {
  if (alpha.is_rational()) {
    fail(ErrorKind::NotIrrational, std::string(operation) + " requires an irrational rotation number, got " + alpha.describe());
  }
}

std::string AlphaSpec::describe() const {
  std::ostringstream os;
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          os << v.p.get_str() << "/" << v.q.get_str();
        } else if constexpr (std::is_same_v<T, Surd>) {
          os << "(" << v.a.get_str() << " + " << v.b.get_str() << "*sqrt(" << v.d.get_str() << "))/" << v.c.get_str();
        } else if constexpr (std::is_same_v<T, ContinuedFraction>) {
          if (v.rule) {
            os << "cf[rule " << v.rule->name() << "]";
          } else {
            os << "cf[";
            for (std::size_t i = 0; i < v.prefix.size(); ++i) os << (i ? "," : "") << v.prefix[i].get_str();
            if (!v.period.empty()) {
              os << "; repeat ";
              for (std::size_t i = 0; i < v.period.size(); ++i) os << (i ? "," : "") << v.period[i].get_str();
            }
            os << "]";
          }
        } else if constexpr (std::is_same_v<T, Liouville>) {
          os << "sum " << v.base << "^(-n!)";
        } else {
          os << v.digits << " +/- " << v.error.get_str();
        }
      },
      value_);
  return os.str();
}

bool operator==(const AlphaSpec& a, const AlphaSpec& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case AlphaKind::Rational: {
      const auto& x = a.as<AlphaSpec::Rational>();
      const auto& y = b.as<AlphaSpec::Rational>();
      return x.p == y.p && x.q == y.q;
    }
    case AlphaKind::QuadraticSurd: {
      const auto& x = a.as<AlphaSpec::Surd>();
      const auto& y = b.as<AlphaSpec::Surd>();
      return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    case AlphaKind::ContinuedFraction: {
      const auto& x = a.as<AlphaSpec::ContinuedFraction>();
      const auto& y = b.as<AlphaSpec::ContinuedFraction>();
      if (x.rule || y.rule) return x.rule == y.rule;
      return x.prefix == y.prefix && x.period == y.period;
    }
    case AlphaKind::Liouville:
      return a.as<AlphaSpec::Liouville>().base == b.as<AlphaSpec::Liouville>().base;
    case AlphaKind::Decimal: {
      const auto& x = a.as<AlphaSpec::Decimal>();
      const auto& y = b.as<AlphaSpec::Decimal>();
      return x.value == y.value && x.error == y.error;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Liouville series

mpq_class liouville_partial_sum(unsigned long base, std::size_t terms) {
  if (terms == 0) return mpq_class(0);
  const unsigned long top = factorial(static_cast<unsigned>(terms));
  mpz_class num = 0, den;
  mpz_ui_pow_ui(den.get_mpz_t(), base, top);
  for (std::size_t n = 1; n <= terms; ++n) {
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), base, top - factorial(static_cast<unsigned>(n)));
    num += term;
  }
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

std::size_t liouville_terms_for_width(unsigned long base, const mpq_class& eps) {
  if (eps <= 0) fail(ErrorKind::InvalidArgument, "enclosure width must be positive");
  // 2 * base^{-(n+1)!} <= eps  <=>  (n+1)! * log(base) >= log(2/eps)
  const double need = std::log2(2.0) - (std::log2(eps.get_num().get_d()) - std::log2(eps.get_den().get_d()));
  const double per = std::log2(static_cast<double>(base));
  std::size_t n = 1;
  while (static_cast<double>(factorial(static_cast<unsigned>(n + 1))) * per < need) ++n;
  // Confirm exactly at the boundary.
  for (;; ++n) {
    mpz_class power;
    const unsigned long e = factorial(static_cast<unsigned>(n + 1));
    if (static_cast<double>(e) * std::log10(static_cast<double>(base)) > kMaxLiouvilleDigits) return n;
    mpz_ui_pow_ui(power.get_mpz_t(), base, e);
    if (mpq_class(2, power) <= eps) return n;
  }
}

AlphaSpec liouville_alpha(unsigned long base, std::size_t terms) {
  if (terms == 0) fail(ErrorKind::InvalidArgument, "liouville_alpha needs terms >= 1");
  return AlphaSpec::liouville(base);
}

// ---------------------------------------------------------------------------
// Enclosures

RationalEnclosure AlphaSpec::rational_enclosure(const mpq_class& eps) const {
  if (eps <= 0) fail(ErrorKind::InvalidArgument, "enclosure width must be positive");
  if (auto q = exact_rational()) return {*q, *q, 0};
  if (auto s = exact_surd()) {
    // sqrt(d) in [r/S, (r+1)/S] with S = 2^m.
    const mpz_class absb = abs(s->b);
    mp_bitcnt_t m = 1;
    mpq_class step;
    do {
      mpz_class scale = mpz_class(1) << m;
      step = mpq_class(absb, s->c * scale);
      step.canonicalize();
      m *= 2;
    } while (step > eps);
    m /= 2;
    const mpz_class scale = mpz_class(1) << m;
    const mpz_class r = isqrt(s->d * scale * scale);
    mpq_class lo(s->a * scale + s->b * r, s->c * scale);
    mpq_class hi(s->a * scale + s->b * (r + 1), s->c * scale);
    lo.canonicalize();
    hi.canonicalize();
    if (lo > hi) std::swap(lo, hi);
    return {lo, hi, 0};
  }
  if (const auto* cf = if_kind<ContinuedFraction>()) {
    // Consecutive convergents bracket alpha.
    mpz_class p1 = 1, p0 = 0, q1 = 0, q0 = 1;
    std::optional<mpq_class> prev;
    for (std::size_t i = 0;; ++i) {
      auto term = cf_term(*cf, i);
      if (!term) fail(ErrorKind::InvariantViolation, "terminating continued fraction treated as irrational");
      mpz_class p2 = *term * p1 + p0, q2 = *term * q1 + q0;
      p0 = p1; p1 = p2; q0 = q1; q1 = q2;
      mpq_class current(p1, q1);
      current.canonicalize();
      if (prev) {
        mpq_class width = abs(current - *prev);
        if (width <= eps) return {std::min(current, *prev), std::max(current, *prev), 0};
      }
      prev = current;
      if (i > 1000000) fail(ErrorKind::PrecisionExhausted, "continued fraction converges too slowly");
    }
  }
  if (const auto* lv = if_kind<Liouville>()) {
    const std::size_t n = liouville_terms_for_width(lv->base, eps);
    const unsigned long next = factorial(static_cast<unsigned>(n + 1));
    if (static_cast<double>(next) * std::log10(static_cast<double>(lv->base)) > kMaxLiouvilleDigits) {
      fail(ErrorKind::PrecisionExhausted, "Liouville enclosure beyond the digit budget");
    }
    mpq_class lo = liouville_partial_sum(lv->base, n);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), lv->base, next);
    mpq_class hi = lo + mpq_class(2, power);
    hi.canonicalize();
    return {lo, hi, n};
  }
  const auto& dec = as<Decimal>();
  if (2 * dec.error > eps) {
    fail(ErrorKind::PrecisionExhausted, "decimal literal only known to +/- " + dec.error.get_str());
  }
  return {dec.value - dec.error, dec.value + dec.error, 0};
}

Interval AlphaSpec::enclosure(mpfr_prec_t bits) const {
  const mpfr_prec_t work = bits + 64;
  if (auto q = exact_rational()) {
    const mpfr_prec_t magnitude = static_cast<mpfr_prec_t>(bit_length(abs(q->get_num())));
    return Interval::from_rational(*q, work + magnitude);
  }
  if (auto s = exact_surd()) {
    const mpfr_prec_t wide = work + static_cast<mpfr_prec_t>(bit_length(abs(s->b)) + bit_length(abs(s->a)));
    MpFloat lo(wide), hi(wide);
    const MpFloat d = MpFloat::from_integer(s->d, wide + static_cast<mpfr_prec_t>(bit_length(s->d)));
    mpfr_sqrt(lo.get(), d.get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), d.get(), MPFR_RNDU);
    Interval root(std::move(lo), std::move(hi));
    return (Interval::from_integer(s->a, wide) + Interval::from_integer(s->b, wide) * root) /
           Interval::from_integer(s->c, wide);
  }
  if (const auto* dec = if_kind<Decimal>()) {
    return Interval::from_rationals(dec->value - dec->error, dec->value + dec->error, work);
  }
  mpz_class one_over = mpz_class(1) << static_cast<mp_bitcnt_t>(bits);
  RationalEnclosure r = rational_enclosure(mpq_class(1, one_over));
  return Interval::from_rationals(r.lo, r.hi, work);
}

// ---------------------------------------------------------------------------
// RotationEnclosure

RotationEnclosure::RotationEnclosure(AlphaSpec alpha, mpfr_prec_t bits, mpfr_prec_t max_bits)
    : alpha_(std::move(alpha)), bits_(std::max<mpfr_prec_t>(bits, 32)), max_bits_(max_bits) {}

namespace {

// Shifts x by the integer nearest its midpoint; returns the shift.
mpz_class center(Interval& x) {
  MpFloat m = x.mid();
  mpz_class shift;
  mpfr_get_z(shift.get_mpz_t(), m.get(), MPFR_RNDN);
  if (shift != 0) x = x - Interval::from_integer(shift, x.precision() + static_cast<mpfr_prec_t>(bit_length(abs(shift))));
  return shift;
}

}  // namespace

Interval RotationEnclosure::generic_multiple(const mpz_class& k, mpfr_prec_t extra) const {
  const auto kbits = static_cast<mpfr_prec_t>(bit_length(abs(k)));
  Interval a = alpha_.enclosure(bits_ + kbits + extra + 16);
  Interval y = a * Interval::from_integer(k, a.precision() + kbits);
  center(y);
  return rounded(y, bits_ + extra + 64);
}

Interval RotationEnclosure::liouville_multiple(const mpz_class& k, mpz_class* integer_part) const {
  const auto& lv = alpha_.as<AlphaSpec::Liouville>();
  const unsigned long base = lv.base;
  const mpfr_prec_t work = bits_ + 64;
  const double log_base = std::log2(static_cast<double>(base));
  const double digits_upper = static_cast<double>(bit_length(k)) / log_base + 1.0;

  unsigned top = 0;  // largest n with n! <= digits_upper
  while (static_cast<double>(factorial(top + 1)) <= digits_upper) ++top;

  Interval frac = Interval::point(0.0, work);
  mpz_class whole = 0;
  if (top >= 1) {
    mpz_class rem = floor_mod(k, lv.powers->get(top));
    for (unsigned n = top; n >= 1; --n) {
      const mpz_class& power = lv.powers->get(n);
      if (n != top) rem = floor_mod(rem, power);
      if (integer_part) whole += floor_div(k, power);
      if (rem != 0) {
        MpFloat lo = MpFloat::from_integer(rem, work, MPFR_RNDD);
        MpFloat hi = MpFloat::from_integer(rem, work, MPFR_RNDU);
        mpfr_div_z(lo.get(), lo.get(), power.get_mpz_t(), MPFR_RNDD);
        mpfr_div_z(hi.get(), hi.get(), power.get_mpz_t(), MPFR_RNDU);
        frac = frac + Interval(std::move(lo), std::move(hi));
      }
    }
  }
  // Remaining terms k * base^{-n!} are < 1; sum until the tail is negligible.
  const Interval kk = Interval::from_integer(k, work);
  for (unsigned n = top + 1;; ++n) {
    if (n + 1 > 20) fail(ErrorKind::PrecisionExhausted, "Liouville tail beyond 20! terms");
    frac = frac + kk * Interval::power(base, -static_cast<long>(factorial(n)), work);
    Interval tail = Interval::from_integer(2 * k, work) * Interval::power(base, -static_cast<long>(factorial(n + 1)), work);
    MpFloat threshold = frac.lo();
    mpfr_mul_2si(threshold.get(), threshold.get(), -static_cast<long>(work), MPFR_RNDD);
    if (tail.hi() <= threshold) {
      frac = frac + Interval(MpFloat(work), tail.hi());
      break;
    }
  }
  mpz_class shift = center(frac);
  if (integer_part) *integer_part = whole + shift;
  return rounded(frac, work);
}

Interval RotationEnclosure::centered_multiple(const mpz_class& k) const {
  if (k == 0) return Interval::point(0.0, bits_);
  if (k < 0) return -centered_multiple(-k);
  if (auto q = alpha_.exact_rational()) {
    mpz_class r = floor_mod(k * q->get_num(), q->get_den());
    if (2 * r > q->get_den()) r -= q->get_den();
    return Interval::from_rational(mpq_class(r, q->get_den()), bits_ + 64);
  }
  if (alpha_.kind() == AlphaKind::Liouville) return liouville_multiple(k, nullptr);
  if (alpha_.kind() == AlphaKind::Decimal) return generic_multiple(k, 0);

  mpfr_prec_t extra = 0;
  for (;;) {
    Interval x = generic_multiple(k, extra);
    Interval mag = abs(x);
    if (!x.contains_zero()) {
      MpFloat allowed = mag.lo();
      mpfr_mul_2si(allowed.get(), allowed.get(), -static_cast<long>(bits_ - 8), MPFR_RNDD);
      if (x.width() <= allowed) return x;
    }
    const double scale = mag.hi().is_zero() ? static_cast<double>(extra + bits_) : -mag.hi().log2_abs();
    extra += std::max<mpfr_prec_t>(64, static_cast<mpfr_prec_t>(std::ceil(std::max(scale, 0.0))) + 32);
    if (extra > max_bits_) fail(ErrorKind::PrecisionExhausted, "cannot separate k*alpha from an integer at k = " + format_integer(k));
  }
}

mpz_class RotationEnclosure::nearest_integer(const mpz_class& k) const {
  if (k == 0) return 0;
  if (k < 0) return -nearest_integer(-k);
  if (auto q = alpha_.exact_rational()) {
    mpq_class value = k * *q;
    return floor_of(value + mpq_class(1, 2));
  }
  if (alpha_.kind() == AlphaKind::Liouville) {
    mpz_class whole;
    liouville_multiple(k, &whole);
    return whole;
  }
  const auto kbits = static_cast<mpfr_prec_t>(bit_length(k));
  Interval a = alpha_.enclosure(bits_ + kbits + 16);
  Interval y = a * Interval::from_integer(k, a.precision() + kbits);
  return center(y);
}

Interval RotationEnclosure::distance(const mpz_class& k) const {
  Interval x = abs(centered_multiple(k));
  const mpfr_prec_t bits = x.precision();
  MpFloat half(0.5, bits);
  MpFloat hi = x.hi() > half ? half : x.hi();
  MpFloat lo = x.lo();
  if (x.hi() > half) {
    MpFloat mirrored(bits);
    mpfr_ui_sub(mirrored.get(), 1, x.hi().get(), MPFR_RNDD);
    if (mirrored < lo) lo = mirrored;
  }
  if (lo > hi) lo = hi;
  return Interval(std::move(lo), std::move(hi));
}

DistanceEnclosure nearest_distance(const AlphaSpec& alpha, const mpz_class& k, double eps) {
  if (k == 0) fail(ErrorKind::InvalidArgument, "nearest_distance needs k != 0");
  if (!(eps > 0)) fail(ErrorKind::InvalidArgument, "nearest_distance needs eps > 0");
  const auto bits = static_cast<mpfr_prec_t>(std::ceil(-std::log2(eps))) + 16;
  RotationEnclosure rot(alpha, std::max<mpfr_prec_t>(bits, 64));
  DistanceEnclosure out{rot.distance(k), std::nullopt};
  if (auto q = alpha.exact_rational()) {
    mpz_class r = floor_mod(abs(k) * q->get_num(), q->get_den());
    mpz_class other = q->get_den() - r;
    mpq_class d(std::min(r, other), q->get_den());
    d.canonicalize();
    out.exact = d;
  }
  if (out.bounds.width() > MpFloat(eps, 64)) {
    fail(ErrorKind::PrecisionExhausted, "distance enclosure wider than requested eps");
  }
  return out;
}

}  // namespace smalldiv
