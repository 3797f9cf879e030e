#pragma once

// Coefficient arithmetic that stays exact while inputs are rational and falls
// back to multiple-precision floats as soon as an irrational quantity (a small
// divisor, a square root) enters.

#include "smalldiv/mp.hpp"

#include <gmpxx.h>

#include <string>
#include <variant>

namespace smalldiv {

class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(long value) : value_(mpq_class(value)) {}  // NOLINT: implicit by design of literals
  explicit Scalar(mpq_class value);
  explicit Scalar(MpFloat value) : value_(std::move(value)) {}

  // Every finite double is a dyadic rational; the conversion is exact.
  static Scalar from_double(double value);

  bool is_exact() const noexcept { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& exact() const { return std::get<mpq_class>(value_); }
  MpFloat to_float(mpfr_prec_t bits) const;
  double to_double() const;
  bool is_zero() const;
  int sign() const;
  // Precision of the float payload, or 0 for exact values.
  mpfr_prec_t precision() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<mpq_class, MpFloat> value_;
};

// A complex Fourier coefficient.
struct Coeff {
  Scalar re;
  Scalar im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_exact() const { return re.is_exact() && im.is_exact(); }
  Coeff conj() const { return {re, -im}; }
  // |c| rounded to nearest at `bits`.
  MpFloat magnitude(mpfr_prec_t bits) const;

  Coeff operator-() const { return {-re, -im}; }
  friend Coeff operator+(const Coeff& a, const Coeff& b) { return {a.re + b.re, a.im + b.im}; }
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return {a.re - b.re, a.im - b.im}; }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Coeff operator*(const Scalar& s, const Coeff& c) { return {s * c.re, s * c.im}; }
  friend Coeff operator/(const Coeff& a, const Coeff& b);
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.re == b.re && a.im == b.im; }
};

}  // namespace smalldiv
