#pragma once

// The coboundary operator (g -> g(. + alpha) - g) as a Fourier multiplier,
// its small-divisor-aware inverse and Birkhoff-sum diagnostics.

#include "smalldiv/alpha.hpp"
#include "smalldiv/periodic_function.hpp"

#include <gmpxx.h>

#include <optional>
#include <string_view>
#include <vector>

namespace smalldiv {

// lambda_k = e^{2 pi i k alpha} - 1.
struct ModeDivisor {
  mpz_class k;
  Coeff lambda;        // round-to-nearest value at the working precision
  Interval magnitude;  // certified |lambda_k| = 2 sin(pi ||k alpha||)
  Interval distance;   // certified ||k alpha||
};

ModeDivisor lambda_k(const RotationEnclosure& rotation, const mpz_class& k);
ModeDivisor lambda_k(const AlphaSpec& alpha, const mpz_class& k, mpfr_prec_t bits = 128);

// Coefficients lambda_k g(k); the mean of the result is exactly 0.
PeriodicFunction delta_forward(const PeriodicFunction& g, const AlphaSpec& alpha, mpfr_prec_t bits = 192);

struct SolvePolicy {
  double zero_mean_tol = 1e-12;
  double residual_tol = 1e-10;
  mpz_class max_mode = 0;  // 0: no limit on the support
  long precision_digits = 50;
  DecayThresholds thresholds;

  mpfr_prec_t bits() const { return bits_for_digits(precision_digits); }
};

enum class SolveVerdict { Solved, SolvedNonSmooth, Obstructed, Inconclusive };

std::string_view to_string(SolveVerdict v) noexcept;

struct SolveResult {
  PeriodicFunction g;  // candidate transfer function, mean 0
  std::vector<ModeDivisor> divisors;
  DecayProfile decay;
  SolveVerdict verdict = SolveVerdict::Inconclusive;
  MpFloat residual;  // max_k |lambda_k g(k) - f(k)|, mode 0 included
  Scalar mean;       // f(0)
};

// Solves g(x + alpha) - g(x) = f(x) mode by mode with g(0) = 0. Irrational
// alpha only. An exact trigonometric polynomial with zero mean is always
// Solved (its solution is again a trigonometric polynomial); a truncated
// series is judged by the decay of the solution.
SolveResult solve(const PeriodicFunction& f, const AlphaSpec& alpha, const SolvePolicy& policy = {});

// The bare multiplier inverse on modes k != 0; rational alpha allowed.
// ResonantObstruction when lambda_k = 0 exactly while f(k) != 0.
PeriodicFunction invert_multiplier(const PeriodicFunction& f, const AlphaSpec& alpha, mpfr_prec_t bits = 192);

struct BirkhoffReport {
  long n_max = 0;
  double x0 = 0.0;
  std::vector<double> s;  // S_1 .. S_{n_max}
  std::vector<double> d;  // D_n = S_n - n c
  double sup_d = 0.0;
  double mean = 0.0;
  // Present when the zero-mean part solves with verdict Solved.
  std::optional<double> bound;               // 2 max |g| over the orbit
  std::optional<double> telescoping_error;   // max |D_n - (g(x_n) - g(x_0))|
  bool within_bound = true;
};

BirkhoffReport birkhoff_sum(const PeriodicFunction& f, const AlphaSpec& alpha, double x0, long n_max,
                            const SolvePolicy& policy = {}, double tolerance = 1e-8);

// Sum_{j<m} f(x + j alpha) (m >= 0), evaluated pointwise.
MpFloat orbit_sum(const PeriodicFunction& f, const AlphaSpec& alpha, const MpFloat& x, long m, mpfr_prec_t bits = 160);

// Modes 2 <= k <= K where |lambda_k| reaches a new strict minimum. Records of
// ||k alpha|| occur only at continued-fraction denominators, so only those are
// evaluated; each record is certified strictly below the previous one.
std::vector<ModeDivisor> min_divisor_scan(const AlphaSpec& alpha, const mpz_class& K, mpfr_prec_t bits = 128);

}  // namespace smalldiv
