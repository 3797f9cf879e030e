#include "smalldiv/scalar.hpp"

#include "smalldiv/error.hpp"

#include <algorithm>
#include <cmath>

namespace smalldiv {

namespace {

constexpr mpfr_prec_t kExactFallbackBits = 256;

mpfr_prec_t common_bits(const Scalar& a, const Scalar& b) {
  const mpfr_prec_t bits = std::max(a.precision(), b.precision());
  return bits > 0 ? bits : kExactFallbackBits;
}

}  // namespace

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { std::get<mpq_class>(value_).canonicalize(); }

Scalar Scalar::from_double(double value) {
  if (!std::isfinite(value)) fail(ErrorKind::InvalidArgument, "non-finite coefficient");
  mpq_class q(value);
  return Scalar(q);
}

MpFloat Scalar::to_float(mpfr_prec_t bits) const {
  if (is_exact()) return MpFloat::from_rational(exact(), bits);
  MpFloat out = std::get<MpFloat>(value_);
  out.round_to(bits);
  return out;
}

double Scalar::to_double() const {
  if (is_exact()) return exact().get_d();
  return std::get<MpFloat>(value_).to_double();
}

bool Scalar::is_zero() const { return sign() == 0; }

int Scalar::sign() const {
  if (is_exact()) return sgn(exact());
  return std::get<MpFloat>(value_).sign();
}

mpfr_prec_t Scalar::precision() const {
  return is_exact() ? 0 : std::get<MpFloat>(value_).precision();
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-exact()));
  return Scalar(-std::get<MpFloat>(value_));
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (is_exact() && other.is_exact()) {
    std::get<mpq_class>(value_) += other.exact();
  } else {
    const auto bits = common_bits(*this, other);
    value_ = to_float(bits) + other.to_float(bits);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  if (is_exact() && other.is_exact()) {
    std::get<mpq_class>(value_) -= other.exact();
  } else {
    const auto bits = common_bits(*this, other);
    value_ = to_float(bits) - other.to_float(bits);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_exact() && other.is_exact()) {
    std::get<mpq_class>(value_) *= other.exact();
  } else if ((is_exact() && is_zero()) || (other.is_exact() && other.is_zero())) {
    // Exact zero annihilates; keeps sparse supports sparse.
    value_ = mpq_class(0);
  } else {
    const auto bits = common_bits(*this, other);
    value_ = to_float(bits) * other.to_float(bits);
  }
  return *this;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero coefficient");
  if (a.is_exact() && b.is_exact()) return Scalar(mpq_class(a.exact() / b.exact()));
  if (a.is_exact() && a.is_zero()) return Scalar();
  const auto bits = common_bits(a, b);
  return Scalar(a.to_float(bits) / b.to_float(bits));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  if (a.is_exact()) return compare(std::get<MpFloat>(b.value_), a.exact()) == 0;
  if (b.is_exact()) return compare(std::get<MpFloat>(a.value_), b.exact()) == 0;
  return std::get<MpFloat>(a.value_) == std::get<MpFloat>(b.value_);
}

MpFloat Coeff::magnitude(mpfr_prec_t bits) const {
  MpFloat out(bits);
  MpFloat x = re.to_float(bits);
  MpFloat y = im.to_float(bits);
  mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Coeff operator/(const Coeff& a, const Coeff& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero coefficient");
  if (b.im.is_zero()) return {a.re / b.re, a.im / b.re};
  const Scalar denom = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
}

}  // namespace smalldiv
