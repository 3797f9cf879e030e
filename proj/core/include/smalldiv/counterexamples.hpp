#pragma once

// Explicit non-coboundaries for Liouville-type rotation numbers: resonant
// modes with |lambda_k| < k^{-2p}, functions with coefficients
// |lambda_k|^{1/2} on disjoint mode sets, and certificates that the
// transfer functions grow faster than any power.

#include "smalldiv/alpha.hpp"
#include "smalldiv/periodic_function.hpp"

#include <gmpxx.h>

#include <optional>
#include <string_view>
#include <vector>

namespace smalldiv {

struct ResonantMode {
  std::size_t p = 0;  // 1-based
  mpz_class k;
  Interval magnitude;  // |lambda_k|
  Interval distance;   // ||k alpha||
};

struct ResonantModes {
  AlphaSpec alpha;
  std::vector<ResonantMode> modes;  // strictly increasing k
  mpfr_prec_t bits = 0;
  std::string source;  // how candidates were generated
};

struct SelectOptions {
  long precision_digits = 200;
  std::size_t max_cf_terms = 400;  // search budget for non-series inputs
};

// Smallest convergent denominators k_1 < ... < k_{p_max} with certified
// |lambda_{k_p}| < k_p^{-2p}. NotNonDiophantine when the budget runs out.
ResonantModes select_resonant_modes(const AlphaSpec& alpha, std::size_t p_max, const SelectOptions& options = {});

struct FamilySkeleton {
  ResonantModes modes;
  // sets[m] lists positions into modes.modes; mode p goes to set (p - 1) mod M.
  std::vector<std::vector<std::size_t>> sets;
};

FamilySkeleton partition_modes(const ResonantModes& modes, std::size_t m_count);

struct FamilyCoefficient {
  std::size_t p = 0;
  mpz_class k;
  std::size_t set = 0;
  Interval magnitude;  // |lambda_k|
  Interval root;       // |lambda_k|^{1/2}; the stored coefficient is its midpoint
  bool decay_certified = false;  // stored coefficient < k^{-p}
};

struct CounterexampleFamily {
  FamilySkeleton skeleton;
  std::vector<PeriodicFunction> functions;
  std::vector<FamilyCoefficient> coefficients;  // in mode order
  mpfr_prec_t bits = 0;

  const AlphaSpec& alpha() const { return skeleton.modes.alpha; }
  std::size_t size() const { return functions.size(); }
};

CounterexampleFamily build_family(const FamilySkeleton& skeleton, const AlphaSpec& alpha);

struct ModeCertificate {
  std::size_t p = 0;
  mpz_class k;
  double log10_ratio = 0.0;  // log10 |f(k) / lambda_k| (lower bound)
  double log10_bound = 0.0;  // log10 of the threshold (|c| k^p)
  bool certified = false;
};

enum class CertificationVerdict { NotACoboundary, CoboundaryConsistent, Degenerate };

std::string_view to_string(CertificationVerdict v) noexcept;

struct CertificationReport {
  std::vector<ModeCertificate> modes;
  CertificationVerdict verdict = CertificationVerdict::Degenerate;
};

// For each supported mode k with index p <= p_check, tries to certify
// |f(k) / lambda_k| > k^p. Without `indices`, the p-th smallest positive mode
// gets index p. Never throws for failed inequalities.
CertificationReport verify_not_coboundary(const PeriodicFunction& f, const AlphaSpec& alpha, std::size_t p_check,
                                          const std::vector<std::pair<mpz_class, std::size_t>>* indices = nullptr,
                                          mpfr_prec_t bits = 0);

// Family member m; CertificationFailed if any inequality fails.
CertificationReport verify_not_coboundary(const CounterexampleFamily& family, std::size_t m, std::size_t p_check);

enum class IndependenceVerdict { NotACoboundary, ZeroClass, Inconclusive };

std::string_view to_string(IndependenceVerdict v) noexcept;

struct SetCertificate {
  std::size_t set = 0;
  Scalar coefficient;
  CertificationReport report;
};

struct IndependenceReport {
  IndependenceVerdict verdict = IndependenceVerdict::ZeroClass;
  std::vector<SetCertificate> sets;  // one per nonzero coefficient
};

// Certifies that sum_m c_m f_m is not a coboundary whenever some c_m != 0.
IndependenceReport independence_check(const CounterexampleFamily& family, const std::vector<Scalar>& coeffs);

}  // namespace smalldiv
