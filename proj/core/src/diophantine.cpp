#include "smalldiv/diophantine.hpp"

#include "smalldiv/big_integer.hpp"
#include "smalldiv/error.hpp"

namespace smalldiv {

std::string_view to_string(DiophantineVerdict v) noexcept {
  switch (v) {
    case DiophantineVerdict::DiophantineEvidence: return "DiophantineEvidence";
    case DiophantineVerdict::NonDiophantineEvidence: return "NonDiophantineEvidence";
    case DiophantineVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::optional<Witness> certify_witness(const AlphaSpec& alpha, const mpz_class& n, unsigned k) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "witness denominator must be positive");
  // Relative accuracy is what matters: ||n alpha|| can be astronomically small.
  RotationEnclosure rot(alpha, 96);
  const Interval d = rot.distance(n);
  if (!d.certainly_positive()) return std::nullopt;
  // hi < n^{-k}  <=>  hi * n^k < 1
  mpz_class nk;
  mpz_pow_ui(nk.get_mpz_t(), n.get_mpz_t(), k);
  const mpfr_prec_t bits = d.precision() + static_cast<mpfr_prec_t>(bit_length(nk));
  MpFloat scaled(bits);
  mpfr_mul_z(scaled.get(), d.hi().get(), nk.get_mpz_t(), MPFR_RNDU);
  if (!(scaled < MpFloat(1.0, 64))) return std::nullopt;
  Witness w;
  w.k = k;
  w.n = n;
  w.m = rot.nearest_integer(n);
  w.bound = d.hi().to_rational();
  return w;
}

DiophantineReport diophantine_report(const AlphaSpec& alpha, unsigned k_max, const mpz_class& n_budget,
                                     const DiophantineThresholds& thresholds) {
  if (k_max < 1) fail(ErrorKind::InvalidArgument, "diophantine_report needs k_max >= 1");
  require_irrational(alpha, "diophantine_report");
  DiophantineReport report{alpha, {}, convergents_up_to(alpha, n_budget), DiophantineVerdict::Inconclusive, 0};

  std::vector<bool> found(k_max + 1, false);
  for (const auto& c : report.convergents) {
    if (c.index >= 1) {
      // a_i = (q_i - q_{i-2}) / q_{i-1}; recomputed from the recurrence.
      const auto& prev = report.convergents[c.index - 1];
      const mpz_class before = c.index >= 2 ? report.convergents[c.index - 2].q : mpz_class(0);
      const mpz_class a = (c.q - before) / prev.q;
      if (a > report.max_quotient) report.max_quotient = a;
    }
    if (c.q < 2) continue;  // n = 1 is a trivial witness for k = 0 only
    for (unsigned k = 1; k <= k_max; ++k) {
      if (auto w = certify_witness(alpha, c.q, k)) {
        report.witnesses.push_back(std::move(*w));
        found[k] = true;
      }
    }
  }

  bool all = k_max >= 2;
  for (unsigned k = 1; k <= k_max; ++k) all = all && found[k];
  const std::size_t examined = report.convergents.empty() ? 0 : report.convergents.size() - 1;
  const bool periodic = alpha.exact_surd().has_value();
  if (all) {
    report.verdict = DiophantineVerdict::NonDiophantineEvidence;
  } else if (periodic ||
             (examined >= thresholds.min_quotients && report.max_quotient <= thresholds.bounded_quotient)) {
    report.verdict = DiophantineVerdict::DiophantineEvidence;
  }
  return report;
}

}  // namespace smalldiv
