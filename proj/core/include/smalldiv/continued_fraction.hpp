#pragma once

// Continued fractions of rotation numbers: expansion, convergents and
// detection of eventual periodicity.

#include "smalldiv/alpha.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace smalldiv {

struct Convergent {
  mpz_class p;
  mpz_class q;
  std::size_t index = 0;
};

// First n_terms partial quotients. A rational alpha may return fewer (its
// expansion terminates). Throws PrecisionExhausted when the representation
// cannot separate a quotient boundary.
std::vector<mpz_class> cf_expand(const AlphaSpec& alpha, std::size_t n_terms);

std::vector<Convergent> convergents(const AlphaSpec& alpha, std::size_t count);
// All convergents with q <= q_max (the last may be the first with q > q_max
// when `include_next` is set).
std::vector<Convergent> convergents_up_to(const AlphaSpec& alpha, const mpz_class& q_max, bool include_next = false);
std::vector<Convergent> convergents_from_terms(const std::vector<mpz_class>& terms);

// Quotients common to every real in [lo, hi] (lo < hi), stopping at the
// first ambiguous one or after max_terms.
std::vector<mpz_class> certified_prefix(const mpq_class& lo, const mpq_class& hi, std::size_t max_terms);

// Expansion of (a + b sqrt(d)) / c by exact surd-state recurrence.
std::vector<mpz_class> surd_expand(const AlphaSpec::Surd& s, std::size_t n_terms);

struct PeriodDescription {
  std::vector<mpz_class> preperiod;
  std::vector<mpz_class> period;
  // True when established exactly (state-cycle equality), false when only
  // observed in a finite window.
  bool confirmed = false;
};

// Eventual periodicity of the expansion. depth >= 2.
std::optional<PeriodDescription> detect_quadratic(const AlphaSpec& alpha, std::size_t depth);

}  // namespace smalldiv
