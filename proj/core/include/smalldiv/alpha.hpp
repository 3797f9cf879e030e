#pragma once

// Rotation numbers with exact or rigorously bounded representations.

#include "smalldiv/mp.hpp"

#include <gmpxx.h>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace smalldiv {

struct RationalEnclosure {
  mpq_class lo;
  mpq_class hi;
  // Series terms consumed (Liouville inputs only).
  std::size_t terms_used = 0;

  mpq_class width() const { return hi - lo; }
};

// Partial quotients a_0, a_1, ... produced by a rule. Values are memoized;
// observable behaviour is identical to calling the rule every time.
class QuotientRule {
 public:
  QuotientRule(std::string name, std::function<mpz_class(std::size_t)> rule);

  mpz_class at(std::size_t index) const;
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  std::function<mpz_class(std::size_t)> rule_;
  mutable std::mutex mutex_;
  mutable std::vector<mpz_class> memo_;
};

// base^(n!) for the Liouville series, computed once per n and shared by all
// copies of the same AlphaSpec.
class FactorialPowers {
 public:
  explicit FactorialPowers(unsigned long base) : base_(base) {}

  const mpz_class& get(unsigned n) const;
  unsigned long base() const noexcept { return base_; }

 private:
  unsigned long base_;
  mutable std::mutex mutex_;
  mutable std::map<unsigned, std::unique_ptr<mpz_class>> cache_;
};

enum class AlphaKind { Rational, QuadraticSurd, ContinuedFraction, Liouville, Decimal };

std::string_view to_string(AlphaKind kind) noexcept;

class AlphaSpec {
 public:
  struct Rational {
    mpz_class p;
    mpz_class q;  // > 0, gcd(p, q) = 1
  };
  // (a + b sqrt(d)) / c
  struct Surd {
    mpz_class a, b, d, c;
  };
  struct ContinuedFraction {
    std::vector<mpz_class> prefix;
    std::vector<mpz_class> period;  // empty: terminating (unless rule set)
    std::shared_ptr<const QuotientRule> rule;
    std::optional<Surd> closed_form;  // derived when period is nonempty
  };
  // sum_{n >= 1} base^{-n!}
  struct Liouville {
    unsigned long base;
    std::shared_ptr<const FactorialPowers> powers;
  };
  struct Decimal {
    std::string digits;
    mpq_class value;
    mpq_class error;  // guaranteed |alpha - value| <= error
  };

  static AlphaSpec rational(mpz_class p, mpz_class q);
  static AlphaSpec surd(mpz_class a, mpz_class b, mpz_class d, mpz_class c);
  static AlphaSpec continued_fraction(std::vector<mpz_class> prefix, std::vector<mpz_class> period = {});
  static AlphaSpec continued_fraction(std::shared_ptr<const QuotientRule> rule);
  static AlphaSpec liouville(unsigned long base);
  static AlphaSpec decimal(std::string digits, mpq_class error);

  AlphaKind kind() const noexcept;
  template <typename T>
  const T& as() const { return std::get<T>(value_); }
  template <typename T>
  const T* if_kind() const noexcept { return std::get_if<T>(&value_); }

  // Known exact rational value, if any.
  std::optional<mpq_class> exact_rational() const;
  bool is_rational() const { return exact_rational().has_value(); }
  // Exact quadratic irrational value, if the representation carries one.
  std::optional<Surd> exact_surd() const;

  // Rational [lo, hi] containing alpha with hi - lo <= eps.
  // Throws PrecisionExhausted when the representation cannot deliver.
  RationalEnclosure rational_enclosure(const mpq_class& eps) const;
  // Outward-rounded enclosure at roughly `bits` bits of absolute accuracy.
  Interval enclosure(mpfr_prec_t bits) const;

  std::string describe() const;

  friend bool operator==(const AlphaSpec& a, const AlphaSpec& b);

 private:
  using Variant = std::variant<Rational, Surd, ContinuedFraction, Liouville, Decimal>;
  explicit AlphaSpec(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

// Theory-level entry points reject rational rotation numbers.
void require_irrational(const AlphaSpec& alpha, std::string_view operation);

// Liouville-type number sum_{n >= 1} base^{-n!}; the tail after n terms is
// below 2 * base^{-(n+1)!}. `terms` is a lower bound on the partial sum
// length used by enclosures.
AlphaSpec liouville_alpha(unsigned long base, std::size_t terms = 1);
// Smallest n with 2 * base^{-(n+1)!} <= eps.
std::size_t liouville_terms_for_width(unsigned long base, const mpq_class& eps);
// Exact partial sum sum_{n=1}^{terms} base^{-n!}.
mpq_class liouville_partial_sum(unsigned long base, std::size_t terms);

// Certified reduction of k*alpha modulo 1.
class RotationEnclosure {
 public:
  // `bits`: relative accuracy targeted for reduced multiples.
  RotationEnclosure(AlphaSpec alpha, mpfr_prec_t bits, mpfr_prec_t max_bits = mpfr_prec_t(1) << 26);

  // x with k*alpha - x an integer and |x| <= 1/2 (up to enclosure width).
  Interval centered_multiple(const mpz_class& k) const;
  // Integer nearest to k*alpha (ties resolved by the enclosure midpoint).
  mpz_class nearest_integer(const mpz_class& k) const;
  // ||k alpha|| enclosure, clipped to [0, 1/2].
  Interval distance(const mpz_class& k) const;

  const AlphaSpec& alpha() const noexcept { return alpha_; }
  mpfr_prec_t bits() const noexcept { return bits_; }

 private:
  Interval generic_multiple(const mpz_class& k, mpfr_prec_t extra) const;
  Interval liouville_multiple(const mpz_class& k, mpz_class* integer_part) const;

  AlphaSpec alpha_;
  mpfr_prec_t bits_;
  mpfr_prec_t max_bits_;
};

struct DistanceEnclosure {
  Interval bounds;
  std::optional<mpq_class> exact;  // set for rational alpha
};

// ||k alpha|| with enclosure width <= eps. k != 0.
DistanceEnclosure nearest_distance(const AlphaSpec& alpha, const mpz_class& k, double eps = 1e-30);

}  // namespace smalldiv
