#pragma once

// Real 1-periodic functions held as finitely supported Fourier coefficients.

#include "smalldiv/mp.hpp"
#include "smalldiv/scalar.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace smalldiv {

class PeriodicFunction {
 public:
  // Nonzero coefficients for k >= 0; k < 0 follows from g(-k) = conj(g(k)).
  using CoeffMap = std::map<mpz_class, Coeff>;

  PeriodicFunction() = default;

  // Entries may use either sign of k. Both k and -k given: they must be exact
  // conjugates, else RealityViolation. Mode 0 must be real.
  static PeriodicFunction from_coeffs(const std::vector<std::pair<mpz_class, Coeff>>& entries);
  static PeriodicFunction constant(Scalar c);
  // amplitude * cos(2 pi k x) and amplitude * sin(2 pi k x), k >= 1.
  static PeriodicFunction cosine(const mpz_class& k, Scalar amplitude = Scalar(1));
  static PeriodicFunction sine(const mpz_class& k, Scalar amplitude = Scalar(1));

  const CoeffMap& coeffs() const noexcept { return coeffs_; }
  Coeff coefficient(const mpz_class& k) const;
  // Largest |k| with a nonzero coefficient (0 for constants).
  mpz_class support_bound() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_exact() const;
  std::size_t mode_count() const noexcept { return coeffs_.size(); }

  // Name of the rule this function truncates, if it is a truncation of an
  // infinite series rather than an exact trigonometric polynomial.
  const std::optional<std::string>& rule() const noexcept { return rule_; }
  PeriodicFunction with_rule(std::string rule) const;

  // Real value at x. Terms below 2^-(bits + 16) relative to the largest are
  // skipped; k*x is reduced modulo 1 exactly.
  MpFloat eval(const MpFloat& x, mpfr_prec_t bits = 160) const;
  double eval(double x) const;

  Scalar mean() const;
  std::pair<Scalar, PeriodicFunction> decompose() const;

  PeriodicFunction operator-() const;
  friend PeriodicFunction operator+(const PeriodicFunction& a, const PeriodicFunction& b);
  friend PeriodicFunction operator-(const PeriodicFunction& a, const PeriodicFunction& b);
  friend PeriodicFunction operator*(const Scalar& s, const PeriodicFunction& f);
  // Coefficient-wise equality (rules are metadata and not compared).
  friend bool operator==(const PeriodicFunction& a, const PeriodicFunction& b);

  // "k,re,im" rows for every nonzero mode in increasing k, both signs.
  std::string to_csv(int digits = 17) const;

 private:
  void set(const mpz_class& k, Coeff c);

  CoeffMap coeffs_;
  std::optional<std::string> rule_;
};

// Decimal rendering used in CSV and reports: exact integers verbatim,
// everything else in scientific notation with `digits` significant digits.
std::string format_scalar(const Scalar& s, int digits = 17);

enum class DecayVerdict { RapidDecay, PolynomialGrowth, SuperPolynomialGrowth, Inconclusive };

std::string_view to_string(DecayVerdict v) noexcept;

struct DecayThresholds {
  double rapid_exponent = -2.0;    // fitted slope at or below this counts as rapid
  std::size_t min_octaves = 3;     // nonzero octaves needed for any verdict
  std::size_t growth_octaves = 3;  // trailing octaves inspected for growth
  double growth_step = 0.5;        // minimum increase of the apparent exponent
  long min_support = 8;            // support bound needed for any verdict
};

struct OctaveMax {
  std::size_t octave = 0;  // 2^j <= |k| < 2^{j+1}
  mpz_class k;             // mode attaining the maximum
  MpFloat magnitude;
  double log2_magnitude = 0.0;
  // log|g(k)| / log|k|; the local power-law exponent.
  double apparent_exponent = 0.0;
};

struct DecayProfile {
  double exponent = 0.0;  // least-squares slope of log2 M_j against j; NaN if undefined
  std::vector<OctaveMax> octaves;
  DecayVerdict verdict = DecayVerdict::Inconclusive;
};

DecayProfile decay_profile(const PeriodicFunction& f, const DecayThresholds& thresholds = {});

}  // namespace smalldiv
