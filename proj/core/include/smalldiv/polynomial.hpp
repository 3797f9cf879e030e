#pragma once

// Dense univariate polynomials over Q, constant term first.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace smalldiv {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coeffs);
  static Polynomial from_integers(const std::vector<mpz_class>& coeffs);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  const mpq_class& leading() const { return coeffs_.back(); }

  mpq_class eval(const mpq_class& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  // Integer coefficients with content 1 and positive leading coefficient.
  std::vector<mpz_class> primitive() const;

  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

// Quotient and remainder; b nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);  // monic, or zero

// Sturm chain P, P', -rem(P, P'), ...
std::vector<Polynomial> sturm_sequence(const Polynomial& p);
// Distinct real roots of a nonzero polynomial.
int count_real_roots(const Polynomial& p);

// Rational roots of an integer polynomial (rational root theorem). nullopt
// when the constant or leading coefficient is too large to enumerate divisors.
std::optional<std::vector<mpq_class>> rational_roots(const std::vector<mpz_class>& coeffs);
// A monic-over-Q quadratic factor of a degree-4 integer polynomial, if any.
std::optional<Polynomial> quadratic_factor(const std::vector<mpz_class>& coeffs);

}  // namespace smalldiv
