#pragma once

// Multiple-precision floating point values and outward-rounded intervals.
//
// Everything here sits on MPFR. Interval endpoints are dyadic rationals, so an
// Interval is a rational enclosure in the strict sense; MPFR's exponent range
// is widened at first use so that quantities like 10^-(11!) remain normal
// numbers rather than underflowing to zero.

#include <mpfr.h>

#include <gmpxx.h>

#include <string>
#include <utility>

namespace smalldiv {

// Bits needed to carry `digits` significant decimal digits plus guard bits.
long bits_for_digits(long digits);

// Widens the MPFR exponent range for the calling thread. Idempotent.
void ensure_wide_exponent_range();

class MpFloat {
 public:
  explicit MpFloat(mpfr_prec_t bits = 128);
  MpFloat(double value, mpfr_prec_t bits);
  MpFloat(const MpFloat& other);
  MpFloat(MpFloat&& other) noexcept;
  MpFloat& operator=(const MpFloat& other);
  MpFloat& operator=(MpFloat&& other) noexcept;
  ~MpFloat();

  static MpFloat from_integer(const mpz_class& z, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  static MpFloat from_rational(const mpq_class& q, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  // Accepts anything mpfr_set_str understands in base 10 ("1.5e-300", "-2").
  static MpFloat from_string(const std::string& text, mpfr_prec_t bits);

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  // Rounds to `bits` (in place).
  void round_to(mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_nan() const noexcept { return mpfr_nan_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  // log2|x| as a double; -inf for zero. Valid far outside double's range.
  double log2_abs() const;
  // The exact value as a rational. Only sensible when the exponent is modest.
  mpq_class to_rational() const;
  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;
  // Exact value as (mantissa, exponent) with value = mantissa * 2^exponent.
  std::pair<mpz_class, long> to_dyadic() const;

  MpFloat operator-() const;

 private:
  mpfr_t value_;
};

int compare(const MpFloat& a, const MpFloat& b);
int compare(const MpFloat& a, const mpq_class& b);
inline bool operator<(const MpFloat& a, const MpFloat& b) { return compare(a, b) < 0; }
inline bool operator>(const MpFloat& a, const MpFloat& b) { return compare(a, b) > 0; }
inline bool operator<=(const MpFloat& a, const MpFloat& b) { return compare(a, b) <= 0; }
inline bool operator>=(const MpFloat& a, const MpFloat& b) { return compare(a, b) >= 0; }
inline bool operator==(const MpFloat& a, const MpFloat& b) { return compare(a, b) == 0; }

// Round-to-nearest arithmetic at the larger operand precision.
MpFloat operator+(const MpFloat& a, const MpFloat& b);
MpFloat operator-(const MpFloat& a, const MpFloat& b);
MpFloat operator*(const MpFloat& a, const MpFloat& b);
MpFloat operator/(const MpFloat& a, const MpFloat& b);
MpFloat abs(const MpFloat& a);
MpFloat sqrt(const MpFloat& a);

// Closed interval [lo, hi] with outward rounding on every operation.
class Interval {
 public:
  explicit Interval(mpfr_prec_t bits = 128);
  Interval(MpFloat lo, MpFloat hi);

  static Interval point(double value, mpfr_prec_t bits);
  static Interval from_integer(const mpz_class& z, mpfr_prec_t bits);
  static Interval from_rational(const mpq_class& q, mpfr_prec_t bits);
  static Interval from_rationals(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t bits);
  static Interval pi(mpfr_prec_t bits);
  // base^exponent for a positive integer base and any signed exponent.
  static Interval power(unsigned long base, long exponent, mpfr_prec_t bits);

  const MpFloat& lo() const noexcept { return lo_; }
  const MpFloat& hi() const noexcept { return hi_; }
  mpfr_prec_t precision() const noexcept;

  MpFloat width() const;   // rounded up
  MpFloat mid() const;     // round to nearest
  bool contains(const MpFloat& x) const;
  bool contains_zero() const;
  bool is_point() const { return lo_ == hi_; }
  bool certainly_positive() const { return lo_.sign() > 0; }
  bool certainly_less(const Interval& other) const { return hi_ < other.lo_; }
  bool overlaps(const Interval& other) const;

  Interval operator-() const;

 private:
  MpFloat lo_;
  MpFloat hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// Throws PrecisionExhausted when the divisor straddles zero.
Interval operator/(const Interval& a, const Interval& b);
Interval abs(const Interval& a);
Interval sqrt(const Interval& a);          // requires a.lo() >= 0 (clamped)
Interval pow(const Interval& a, long n);   // requires a.lo() > 0 for n < 0
Interval hull(const Interval& a, const Interval& b);
// Enclosures of sin/cos valid for any argument; width grows with the
// argument's width (1-Lipschitz bound around the midpoint).
Interval sin(const Interval& a);
Interval cos(const Interval& a);
// sin on [0, pi/2] where it is monotone; tighter than sin().
Interval sin_monotone(const Interval& a);
// Rounds endpoints outward to `bits`.
Interval rounded(const Interval& a, mpfr_prec_t bits);

}  // namespace smalldiv
