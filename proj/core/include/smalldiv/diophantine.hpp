#pragma once

// Finite-depth evidence about how well alpha is approximated by rationals.

#include "smalldiv/alpha.hpp"
#include "smalldiv/continued_fraction.hpp"

#include <gmpxx.h>

#include <string_view>
#include <vector>

namespace smalldiv {

// 0 < |n alpha - m| <= bound < 1 / n^k, certified.
struct Witness {
  unsigned k = 0;
  mpz_class n;
  mpz_class m;
  mpq_class bound;
};

enum class DiophantineVerdict { DiophantineEvidence, NonDiophantineEvidence, Inconclusive };

std::string_view to_string(DiophantineVerdict v) noexcept;

// Limits of the evidence rule.
struct DiophantineThresholds {
  std::size_t min_quotients = 6;   // quotients needed before calling them bounded
  long bounded_quotient = 1000;    // "bounded" means every examined a_i <= this
};

struct DiophantineReport {
  AlphaSpec alpha;
  std::vector<Witness> witnesses;
  std::vector<Convergent> convergents;
  DiophantineVerdict verdict = DiophantineVerdict::Inconclusive;
  mpz_class max_quotient;  // over a_1, a_2, ... of the examined convergents
};

DiophantineReport diophantine_report(const AlphaSpec& alpha, unsigned k_max, const mpz_class& n_budget,
                                     const DiophantineThresholds& thresholds = {});

// Certifies 0 < |n alpha - m| < 1/n^k for the nearest integer m; nullopt if
// the strict inequality cannot be certified.
std::optional<Witness> certify_witness(const AlphaSpec& alpha, const mpz_class& n, unsigned k);

}  // namespace smalldiv
