#include "smalldiv/counterexamples.hpp"

#include "smalldiv/big_integer.hpp"
#include "smalldiv/cohomology.hpp"
#include "smalldiv/continued_fraction.hpp"
#include "smalldiv/error.hpp"

#include <cmath>

namespace smalldiv {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

// k^e rounded up.
MpFloat power_up(const mpz_class& k, unsigned long e, mpfr_prec_t bits) {
  MpFloat base = MpFloat::from_integer(k, bits, MPFR_RNDU);
  MpFloat out(bits);
  mpfr_pow_ui(out.get(), base.get(), e, MPFR_RNDU);
  return out;
}

// |lambda| < k^{-2p}  <=>  |lambda|.hi * k^{2p} < 1
bool certify_resonance(const Interval& magnitude, const mpz_class& k, std::size_t p, mpfr_prec_t bits) {
  MpFloat product = power_up(k, 2 * p, bits);
  mpfr_mul(product.get(), product.get(), magnitude.hi().get(), MPFR_RNDU);
  return product < MpFloat(1.0, 16);
}

MpFloat lower_abs(const Scalar& s, mpfr_prec_t bits) {
  MpFloat out(bits);
  if (s.is_exact()) {
    mpq_class a = abs(s.exact());
    mpfr_set_q(out.get(), a.get_mpq_t(), MPFR_RNDD);
  } else {
    MpFloat v = s.to_float(std::max(bits, s.precision()));
    mpfr_abs(out.get(), v.get(), MPFR_RNDD);
  }
  return out;
}

MpFloat lower_magnitude(const Coeff& c, mpfr_prec_t bits) {
  MpFloat re = lower_abs(c.re, bits), im = lower_abs(c.im, bits), out(bits);
  mpfr_hypot(out.get(), re.get(), im.get(), MPFR_RNDD);
  return out;
}

double log10_of(const MpFloat& x) { return x.log2_abs() / kLog2Of10; }

// |f(k) / lambda_k| > scale * k^p for each (k, p).
std::vector<ModeCertificate> certify_modes(const PeriodicFunction& f, const RotationEnclosure& rot,
                                           const std::vector<std::pair<mpz_class, std::size_t>>& modes,
                                           const Scalar& scale) {
  const mpfr_prec_t bits = rot.bits();
  std::vector<ModeCertificate> out;
  const MpFloat scale_up = [&] {
    MpFloat s = scale.to_float(bits + 64);
    MpFloat r(bits);
    mpfr_abs(r.get(), s.get(), MPFR_RNDU);
    return r;
  }();
  for (const auto& [k, p] : modes) {
    ModeCertificate cert;
    cert.p = p;
    cert.k = k;
    const ModeDivisor d = lambda_k(rot, k);
    MpFloat threshold = power_up(k, p, bits);
    mpfr_mul(threshold.get(), threshold.get(), scale_up.get(), MPFR_RNDU);
    cert.log10_bound = log10_of(threshold);
    if (!d.magnitude.certainly_positive()) {
      cert.log10_ratio = std::numeric_limits<double>::infinity();
      out.push_back(std::move(cert));
      continue;
    }
    MpFloat ratio = lower_magnitude(f.coefficient(k), bits);
    mpfr_div(ratio.get(), ratio.get(), d.magnitude.hi().get(), MPFR_RNDD);
    cert.log10_ratio = log10_of(ratio);
    cert.certified = ratio > threshold;
    out.push_back(std::move(cert));
  }
  return out;
}

CertificationVerdict verdict_of(const std::vector<ModeCertificate>& modes) {
  if (modes.empty()) return CertificationVerdict::Degenerate;
  for (const auto& m : modes) {
    if (!m.certified) return CertificationVerdict::CoboundaryConsistent;
  }
  return CertificationVerdict::NotACoboundary;
}

std::vector<std::pair<mpz_class, std::size_t>> set_indices(const CounterexampleFamily& family, std::size_t m) {
  std::vector<std::pair<mpz_class, std::size_t>> out;
  for (const auto& c : family.coefficients) {
    if (c.set == m) out.emplace_back(c.k, c.p);
  }
  return out;
}

}  // namespace

std::string_view to_string(CertificationVerdict v) noexcept {
  switch (v) {
    case CertificationVerdict::NotACoboundary: return "NotACoboundary";
    case CertificationVerdict::CoboundaryConsistent: return "CoboundaryConsistent";
    case CertificationVerdict::Degenerate: return "Degenerate";
  }
  return "Degenerate";
}

std::string_view to_string(IndependenceVerdict v) noexcept {
  switch (v) {
    case IndependenceVerdict::NotACoboundary: return "NotACoboundary";
    case IndependenceVerdict::ZeroClass: return "ZeroClass";
    case IndependenceVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

ResonantModes select_resonant_modes(const AlphaSpec& alpha, std::size_t p_max, const SelectOptions& options) {
  if (p_max < 1) fail(ErrorKind::InvalidArgument, "select_resonant_modes needs p_max >= 1");
  require_irrational(alpha, "select_resonant_modes");
  if (alpha.exact_surd()) {
    fail(ErrorKind::NotNonDiophantine, "quadratic irrationals have bounded partial quotients");
  }
  const mpfr_prec_t bits = bits_for_digits(options.precision_digits);
  RotationEnclosure rot(alpha, bits);
  ResonantModes out{alpha, {}, bits, ""};

  auto consider = [&](const mpz_class& k) {
    const std::size_t p = out.modes.size() + 1;
    if (!out.modes.empty() && k <= out.modes.back().k) return;
    ModeDivisor d = lambda_k(rot, k);
    if (certify_resonance(d.magnitude, k, p, bits)) {
      out.modes.push_back({p, k, std::move(d.magnitude), std::move(d.distance)});
    }
  };

  if (const auto* lv = alpha.if_kind<AlphaSpec::Liouville>()) {
    // Partial-sum denominators base^{n!}; Legendre's criterion
    // ||q alpha|| < 1/(2q) certifies each as a convergent denominator.
    out.source = "partial-sum denominators " + std::to_string(lv->base) + "^(n!) with Legendre certificate";
    for (unsigned n = 1; out.modes.size() < p_max; ++n) {
      if (n > 20) break;
      const mpz_class& q = lv->powers->get(n);
      const Interval dist = rot.distance(q);
      MpFloat scaled = MpFloat::from_integer(q, bits, MPFR_RNDU);
      mpfr_mul(scaled.get(), scaled.get(), dist.hi().get(), MPFR_RNDU);
      mpfr_mul_2ui(scaled.get(), scaled.get(), 1, MPFR_RNDU);
      if (!(scaled < MpFloat(1.0, 16))) continue;
      consider(q);
    }
  } else {
    out.source = "continued-fraction convergent denominators";
    std::vector<mpz_class> terms;
    try {
      terms = cf_expand(alpha, options.max_cf_terms);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted) throw;
    }
    mpz_class last = 0;
    for (const auto& c : convergents_from_terms(terms)) {
      if (out.modes.size() >= p_max) break;
      if (c.q < 2 || c.q == last) continue;
      last = c.q;
      consider(c.q);
    }
  }
  if (out.modes.size() < p_max) {
    fail(ErrorKind::NotNonDiophantine, "found " + std::to_string(out.modes.size()) + " of " + std::to_string(p_max) +
                                           " resonant modes within the search budget");
  }
  return out;
}

FamilySkeleton partition_modes(const ResonantModes& modes, std::size_t m_count) {
  if (m_count < 1) fail(ErrorKind::InvalidArgument, "partition needs m_count >= 1");
  if (modes.modes.empty()) fail(ErrorKind::InsufficientModes, "no resonant modes to partition");
  if (m_count > modes.modes.size()) {
    fail(ErrorKind::InsufficientModes, std::to_string(modes.modes.size()) + " modes cannot fill " + std::to_string(m_count) + " sets");
  }
  FamilySkeleton out{modes, std::vector<std::vector<std::size_t>>(m_count)};
  for (std::size_t i = 0; i < modes.modes.size(); ++i) out.sets[i % m_count].push_back(i);
  return out;
}

CounterexampleFamily build_family(const FamilySkeleton& skeleton, const AlphaSpec& alpha) {
  if (!(skeleton.modes.alpha == alpha)) fail(ErrorKind::AlphaMismatch, "skeleton was built for a different alpha");
  const mpfr_prec_t bits = skeleton.modes.bits;
  CounterexampleFamily out{skeleton, {}, {}, bits};
  const std::size_t m_count = skeleton.sets.size();
  std::vector<std::vector<std::pair<mpz_class, Coeff>>> entries(m_count);
  out.coefficients.resize(skeleton.modes.modes.size());
  for (std::size_t m = 0; m < m_count; ++m) {
    for (std::size_t index : skeleton.sets[m]) {
      const ResonantMode& mode = skeleton.modes.modes[index];
      FamilyCoefficient c;
      c.p = mode.p;
      c.k = mode.k;
      c.set = m;
      c.magnitude = mode.magnitude;
      c.root = sqrt(mode.magnitude);
      MpFloat value = c.root.mid();
      MpFloat product = power_up(mode.k, mode.p, bits);
      mpfr_mul(product.get(), product.get(), value.get(), MPFR_RNDU);
      c.decay_certified = product < MpFloat(1.0, 16);
      if (!c.decay_certified) {
        fail(ErrorKind::InvariantViolation, "coefficient at k = " + format_integer(mode.k) + " is not below k^-p");
      }
      entries[m].emplace_back(mode.k, Coeff{Scalar(std::move(value)), Scalar(0)});
      out.coefficients[index] = std::move(c);
    }
  }
  for (std::size_t m = 0; m < m_count; ++m) {
    out.functions.push_back(PeriodicFunction::from_coeffs(entries[m]).with_rule(
        "sqrt|lambda_k| on resonant set " + std::to_string(m + 1) + " of " + std::to_string(m_count)));
  }
  return out;
}

CertificationReport verify_not_coboundary(const PeriodicFunction& f, const AlphaSpec& alpha, std::size_t p_check,
                                          const std::vector<std::pair<mpz_class, std::size_t>>* indices,
                                          mpfr_prec_t bits) {
  require_irrational(alpha, "verify_not_coboundary");
  if (bits == 0) {
    bits = 128;
    for (const auto& [k, c] : f.coeffs()) bits = std::max({bits, c.re.precision(), c.im.precision()});
  }
  std::vector<std::pair<mpz_class, std::size_t>> modes;
  if (indices) {
    for (const auto& [k, p] : *indices) {
      if (p <= p_check && !f.coefficient(k).is_zero()) modes.emplace_back(k, p);
    }
  } else {
    std::size_t p = 0;
    for (const auto& [k, c] : f.coeffs()) {
      if (k == 0) continue;
      if (++p > p_check) break;
      modes.emplace_back(k, p);
    }
  }
  RotationEnclosure rot(alpha, bits);
  CertificationReport report;
  report.modes = certify_modes(f, rot, modes, Scalar(1));
  report.verdict = verdict_of(report.modes);
  return report;
}

CertificationReport verify_not_coboundary(const CounterexampleFamily& family, std::size_t m, std::size_t p_check) {
  if (m >= family.size()) fail(ErrorKind::InvalidArgument, "family has no member " + std::to_string(m));
  const auto indices = set_indices(family, m);
  CertificationReport report = verify_not_coboundary(family.functions[m], family.alpha(), p_check, &indices, family.bits);
  for (const auto& cert : report.modes) {
    if (!cert.certified) {
      fail(ErrorKind::CertificationFailed, "growth inequality not certified at k = " + format_integer(cert.k) +
                                               " (p = " + std::to_string(cert.p) + ")");
    }
  }
  return report;
}

IndependenceReport independence_check(const CounterexampleFamily& family, const std::vector<Scalar>& coeffs) {
  if (coeffs.size() != family.size()) {
    fail(ErrorKind::InvalidArgument, "expected " + std::to_string(family.size()) + " coefficients");
  }
  PeriodicFunction combination;
  for (std::size_t m = 0; m < coeffs.size(); ++m) combination = combination + coeffs[m] * family.functions[m];

  IndependenceReport report;
  RotationEnclosure rot(family.alpha(), family.bits);
  bool all = true;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m].is_zero()) continue;
    SetCertificate set{m, coeffs[m], {}};
    set.report.modes = certify_modes(combination, rot, set_indices(family, m), coeffs[m]);
    set.report.verdict = verdict_of(set.report.modes);
    all = all && set.report.verdict == CertificationVerdict::NotACoboundary;
    report.sets.push_back(std::move(set));
  }
  if (report.sets.empty()) {
    report.verdict = IndependenceVerdict::ZeroClass;
  } else {
    report.verdict = all ? IndependenceVerdict::NotACoboundary : IndependenceVerdict::Inconclusive;
  }
  return report;
}

}  // namespace smalldiv
