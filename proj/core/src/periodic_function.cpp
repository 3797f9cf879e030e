#include "smalldiv/periodic_function.hpp"

#include "smalldiv/big_integer.hpp"
#include "smalldiv/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace smalldiv {

void PeriodicFunction::set(const mpz_class& k, Coeff c) {
  if (c.is_zero()) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = std::move(c);
  }
}

PeriodicFunction PeriodicFunction::from_coeffs(const std::vector<std::pair<mpz_class, Coeff>>& entries) {
  std::map<mpz_class, Coeff> given;
  for (const auto& [k, c] : entries) {
    auto [it, fresh] = given.emplace(k, c);
    if (!fresh && !(it->second == c)) {
      fail(ErrorKind::InvalidArgument, "mode " + format_integer(k) + " given twice with different values");
    }
  }
  PeriodicFunction out;
  for (const auto& [k, c] : given) {
    if (k == 0) {
      if (!c.im.is_zero()) fail(ErrorKind::RealityViolation, "mode 0 must be real");
      out.set(k, c);
      continue;
    }
    const Coeff positive = k > 0 ? c : c.conj();
    const mpz_class key = abs(k);
    if (auto mirror = given.find(-k); mirror != given.end()) {
      if (!(mirror->second == c.conj())) {
        fail(ErrorKind::RealityViolation, "modes +/-" + format_integer(key) + " are not complex conjugates");
      }
    }
    out.set(key, positive);
  }
  return out;
}

PeriodicFunction PeriodicFunction::constant(Scalar c) {
  PeriodicFunction out;
  out.set(0, Coeff{std::move(c), Scalar(0)});
  return out;
}

PeriodicFunction PeriodicFunction::cosine(const mpz_class& k, Scalar amplitude) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "cosine needs k >= 1");
  PeriodicFunction out;
  out.set(k, Coeff{amplitude * Scalar(mpq_class(1, 2)), Scalar(0)});
  return out;
}

PeriodicFunction PeriodicFunction::sine(const mpz_class& k, Scalar amplitude) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "sine needs k >= 1");
  // sin(t) = (e^{it} - e^{-it}) / 2i, so g(k) = -i/2.
  PeriodicFunction out;
  out.set(k, Coeff{Scalar(0), amplitude * Scalar(mpq_class(-1, 2))});
  return out;
}

Coeff PeriodicFunction::coefficient(const mpz_class& k) const {
  auto it = coeffs_.find(abs(k));
  if (it == coeffs_.end()) return Coeff{};
  return k >= 0 ? it->second : it->second.conj();
}

mpz_class PeriodicFunction::support_bound() const {
  return coeffs_.empty() ? mpz_class(0) : coeffs_.rbegin()->first;
}

bool PeriodicFunction::is_exact() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& e) { return e.second.is_exact(); });
}

PeriodicFunction PeriodicFunction::with_rule(std::string rule) const {
  PeriodicFunction out = *this;
  out.rule_ = std::move(rule);
  return out;
}

MpFloat PeriodicFunction::eval(const MpFloat& x, mpfr_prec_t bits) const {
  const mpfr_prec_t work = bits + 32;
  MpFloat sum(work);
  if (coeffs_.empty()) return sum;

  double top = -std::numeric_limits<double>::infinity();
  std::vector<double> sizes;
  sizes.reserve(coeffs_.size());
  for (const auto& [k, c] : coeffs_) {
    sizes.push_back(c.magnitude(64).log2_abs());
    top = std::max(top, sizes.back());
  }
  const double cutoff = top - static_cast<double>(bits) - 16.0;

  const Interval two_pi = Interval::pi(work + 8) * Interval::point(2.0, work + 8);
  MpFloat tau = two_pi.mid();
  std::size_t i = 0;
  for (const auto& [k, c] : coeffs_) {
    if (sizes[i++] < cutoff) continue;
    if (k == 0) {
      sum = sum + c.re.to_float(work);
      continue;
    }
    // frac(k x) exactly, then the angle.
    MpFloat kx(x.precision() + static_cast<mpfr_prec_t>(bit_length(k)) + 2);
    mpfr_mul_z(kx.get(), x.get(), k.get_mpz_t(), MPFR_RNDN);
    mpfr_frac(kx.get(), kx.get(), MPFR_RNDN);
    kx.round_to(work);
    MpFloat angle = kx * tau;
    MpFloat s(work), co(work);
    mpfr_sin_cos(s.get(), co.get(), angle.get(), MPFR_RNDN);
    MpFloat term = c.re.to_float(work) * co - c.im.to_float(work) * s;
    mpfr_mul_2ui(term.get(), term.get(), 1, MPFR_RNDN);
    sum = sum + term;
  }
  return sum;
}

double PeriodicFunction::eval(double x) const { return eval(MpFloat(x, 53), 96).to_double(); }

Scalar PeriodicFunction::mean() const {
  auto it = coeffs_.find(0);
  return it == coeffs_.end() ? Scalar(0) : it->second.re;
}

std::pair<Scalar, PeriodicFunction> PeriodicFunction::decompose() const {
  PeriodicFunction delta = *this;
  delta.coeffs_.erase(0);
  return {mean(), std::move(delta)};
}

PeriodicFunction PeriodicFunction::operator-() const {
  PeriodicFunction out = *this;
  for (auto& [k, c] : out.coeffs_) c = -c;
  return out;
}

namespace {

std::optional<std::string> join_rules(const std::optional<std::string>& a, const std::optional<std::string>& b) {
  if (!a) return b;
  if (!b || *a == *b) return a;
  return *a + "+" + *b;
}

}  // namespace

PeriodicFunction operator+(const PeriodicFunction& a, const PeriodicFunction& b) {
  PeriodicFunction out = a;
  for (const auto& [k, c] : b.coeffs_) {
    auto it = out.coeffs_.find(k);
    out.set(k, it == out.coeffs_.end() ? c : it->second + c);
  }
  out.rule_ = join_rules(a.rule_, b.rule_);
  return out;
}

PeriodicFunction operator-(const PeriodicFunction& a, const PeriodicFunction& b) { return a + (-b); }

PeriodicFunction operator*(const Scalar& s, const PeriodicFunction& f) {
  PeriodicFunction out;
  out.rule_ = f.rule_;
  if (s.is_zero() && s.is_exact()) return out;
  for (const auto& [k, c] : f.coeffs_) out.set(k, s * c);
  return out;
}

bool operator==(const PeriodicFunction& a, const PeriodicFunction& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  auto i = a.coeffs_.begin();
  auto j = b.coeffs_.begin();
  for (; i != a.coeffs_.end(); ++i, ++j) {
    if (i->first != j->first || !(i->second == j->second)) return false;
  }
  return true;
}

std::string format_scalar(const Scalar& s, int digits) {
  if (s.is_exact() && s.exact().get_den() == 1) return s.exact().get_num().get_str();
  if (s.is_zero()) return "0";
  const mpfr_prec_t bits = std::max<mpfr_prec_t>(s.precision(), 128);
  return s.to_float(bits).to_string(digits);
}

std::string PeriodicFunction::to_csv(int digits) const {
  std::ostringstream os;
  os << "k,re,im\n";
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (it->first == 0) continue;
    const Coeff c = it->second.conj();
    os << "-" << format_integer(it->first) << "," << format_scalar(c.re, digits) << "," << format_scalar(c.im, digits) << "\n";
  }
  for (const auto& [k, c] : coeffs_) {
    os << format_integer(k) << "," << format_scalar(c.re, digits) << "," << format_scalar(c.im, digits) << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::string_view to_string(DecayVerdict v) noexcept {
  switch (v) {
    case DecayVerdict::RapidDecay: return "RapidDecay";
    case DecayVerdict::PolynomialGrowth: return "PolynomialGrowth";
    case DecayVerdict::SuperPolynomialGrowth: return "SuperPolynomialGrowth";
    case DecayVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

DecayProfile decay_profile(const PeriodicFunction& f, const DecayThresholds& thresholds) {
  DecayProfile out;
  out.exponent = std::numeric_limits<double>::quiet_NaN();
  for (const auto& [k, c] : f.coeffs()) {
    if (k == 0) continue;
    const std::size_t j = bit_length(k) - 1;
    MpFloat mag = c.magnitude(64);
    if (out.octaves.empty() || out.octaves.back().octave != j) {
      out.octaves.push_back({j, k, mag, 0.0, 0.0});
    } else if (mag > out.octaves.back().magnitude) {
      out.octaves.back().k = k;
      out.octaves.back().magnitude = mag;
    }
  }
  for (auto& o : out.octaves) {
    o.log2_magnitude = o.magnitude.log2_abs();
    const double log2k = MpFloat::from_integer(o.k, 64).log2_abs();
    o.apparent_exponent = log2k > 0 ? o.log2_magnitude / log2k : std::numeric_limits<double>::quiet_NaN();
  }
  const std::size_t n = out.octaves.size();
  if (n >= 2) {
    double mx = 0, my = 0;
    for (const auto& o : out.octaves) {
      mx += static_cast<double>(o.octave);
      my += o.log2_magnitude;
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0;
    for (const auto& o : out.octaves) {
      const double dx = static_cast<double>(o.octave) - mx;
      sxy += dx * (o.log2_magnitude - my);
      sxx += dx * dx;
    }
    out.exponent = sxy / sxx;
  }
  if (n < thresholds.min_octaves || f.support_bound() < thresholds.min_support) return out;

  bool monotone = true;
  for (std::size_t i = 1; i < n; ++i) monotone = monotone && out.octaves[i].magnitude <= out.octaves[i - 1].magnitude;
  if (out.exponent <= thresholds.rapid_exponent && monotone) {
    out.verdict = DecayVerdict::RapidDecay;
    return out;
  }
  bool growing = n >= thresholds.growth_octaves && thresholds.growth_octaves >= 2;
  for (std::size_t i = n - thresholds.growth_octaves + 1; growing && i < n; ++i) {
    const double step = out.octaves[i].apparent_exponent - out.octaves[i - 1].apparent_exponent;
    growing = std::isfinite(step) && step >= thresholds.growth_step;
  }
  growing = growing && out.octaves.back().apparent_exponent > 0;
  out.verdict = growing ? DecayVerdict::SuperPolynomialGrowth : DecayVerdict::PolynomialGrowth;
  return out;
}

}  // namespace smalldiv
