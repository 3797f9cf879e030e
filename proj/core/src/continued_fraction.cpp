#include "smalldiv/continued_fraction.hpp"

#include "smalldiv/big_integer.hpp"
#include "smalldiv/error.hpp"

#include <map>
#include <utility>

namespace smalldiv {

namespace {

// (P + sqrt(D)) / Q with Q | D - P^2.
struct SurdState {
  mpz_class P, Q;

  bool operator<(const SurdState& o) const {
    const int c = cmp(P, o.P);
    return c != 0 ? c < 0 : Q < o.Q;
  }
};

struct SurdStepper {
  mpz_class D;
  mpz_class root;  // isqrt(D)
  SurdState state;

  explicit SurdStepper(const AlphaSpec::Surd& s) {
    mpz_class P = s.b > 0 ? s.a : mpz_class(-s.a);
    mpz_class Q = s.b > 0 ? s.c : mpz_class(-s.c);
    D = s.b * s.b * s.d;
    const mpz_class gap = D - P * P;
    if (!mpz_divisible_p(gap.get_mpz_t(), Q.get_mpz_t())) {
      const mpz_class absq = abs(Q);
      P *= absq;
      D *= Q * Q;
      Q *= absq;
    }
    root = isqrt(D);
    state = {P, Q};
  }

  mpz_class step() {
    const mpz_class a = state.Q > 0 ? floor_div(state.P + root, state.Q) : floor_div(state.P + root + 1, state.Q);
    const mpz_class p_next = a * state.Q - state.P;
    const mpz_class q_next = (D - p_next * p_next) / state.Q;
    state = {p_next, q_next};
    return a;
  }
};

std::vector<mpz_class> euclid(mpq_class value, std::size_t limit) {
  value.canonicalize();
  std::vector<mpz_class> out;
  mpz_class num = value.get_num(), den = value.get_den();
  while (den != 0 && out.size() < limit) {
    const mpz_class q = floor_div(num, den);
    out.push_back(q);
    mpz_class r = num - q * den;
    num = den;
    den = r;
  }
  return out;
}

}  // namespace

std::vector<mpz_class> certified_prefix(const mpq_class& lo, const mpq_class& hi, std::size_t max_terms) {
  if (lo == hi) return euclid(lo, max_terms);
  if (lo > hi) fail(ErrorKind::InvalidArgument, "certified_prefix needs lo <= hi");
  // lo = a/b and hi = c/d; no gcd reductions along the way.
  mpz_class a = lo.get_num(), b = lo.get_den(), c = hi.get_num(), d = hi.get_den();
  std::vector<mpz_class> out;
  while (out.size() < max_terms) {
    const mpz_class q1 = floor_div(a, b);
    const mpz_class q2 = floor_div(c, d);
    if (q1 != q2) break;
    const mpz_class r1 = a - q1 * b;
    const mpz_class r2 = c - q2 * d;
    out.push_back(q1);
    if (r1 == 0 || r2 == 0) break;
    // x = q + r/den, next value 1/(x - q) reverses the order of the endpoints.
    mpz_class na = d, nb = r2, nc = b, nd = r1;
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
  }
  return out;
}

std::vector<mpz_class> surd_expand(const AlphaSpec::Surd& s, std::size_t n_terms) {
  SurdStepper stepper(s);
  std::vector<mpz_class> out;
  out.reserve(n_terms);
  while (out.size() < n_terms) out.push_back(stepper.step());
  return out;
}

std::vector<mpz_class> cf_expand(const AlphaSpec& alpha, std::size_t n_terms) {
  if (n_terms == 0) fail(ErrorKind::InvalidArgument, "cf_expand needs n_terms >= 1");
  if (auto q = alpha.exact_rational()) return euclid(*q, n_terms);
  if (const auto* cf = alpha.if_kind<AlphaSpec::ContinuedFraction>()) {
    std::vector<mpz_class> out;
    for (std::size_t i = 0; i < n_terms; ++i) {
      if (cf->rule) {
        out.push_back(cf->rule->at(i));
      } else if (i < cf->prefix.size()) {
        out.push_back(cf->prefix[i]);
      } else {
        out.push_back(cf->period[(i - cf->prefix.size()) % cf->period.size()]);
      }
    }
    // The representation may be non-canonical only through a leading quotient
    // of a rule; canonical form is what the caller gets either way.
    return out;
  }
  if (auto s = alpha.exact_surd()) return surd_expand(*s, n_terms);
  if (alpha.kind() == AlphaKind::Decimal) {
    const auto& dec = alpha.as<AlphaSpec::Decimal>();
    auto out = certified_prefix(dec.value - dec.error, dec.value + dec.error, n_terms);
    if (out.size() < n_terms) {
      fail(ErrorKind::PrecisionExhausted, "decimal literal determines only " + std::to_string(out.size()) + " partial quotients");
    }
    return out;
  }
  // Series-defined: tighten the enclosure until enough quotients are certified.
  for (mp_bitcnt_t bits = 64;; bits *= 2) {
    RationalEnclosure enc = alpha.rational_enclosure(mpq_class(1, mpz_class(1) << bits));
    auto out = certified_prefix(enc.lo, enc.hi, n_terms);
    if (out.size() >= n_terms) return out;
  }
}

std::vector<Convergent> convergents_from_terms(const std::vector<mpz_class>& terms) {
  std::vector<Convergent> out;
  mpz_class p1 = 1, p0 = 0, q1 = 0, q0 = 1;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    mpz_class p2 = terms[i] * p1 + p0, q2 = terms[i] * q1 + q0;
    p0 = p1; p1 = p2; q0 = q1; q1 = q2;
    out.push_back({p1, q1, i});
  }
  return out;
}

std::vector<Convergent> convergents(const AlphaSpec& alpha, std::size_t count) {
  if (count == 0) fail(ErrorKind::InvalidArgument, "convergents needs count >= 1");
  return convergents_from_terms(cf_expand(alpha, count));
}

std::vector<Convergent> convergents_up_to(const AlphaSpec& alpha, const mpz_class& q_max, bool include_next) {
  for (std::size_t n = 16;; n *= 2) {
    auto terms = cf_expand(alpha, n);
    auto all = convergents_from_terms(terms);
    const bool terminated = terms.size() < n;
    std::vector<Convergent> out;
    bool passed = false;
    for (auto& c : all) {
      if (c.q > q_max) {
        if (include_next) out.push_back(std::move(c));
        passed = true;
        break;
      }
      out.push_back(std::move(c));
    }
    if (passed || terminated) return out;
  }
}

std::optional<PeriodDescription> detect_quadratic(const AlphaSpec& alpha, std::size_t depth) {
  if (depth < 2) fail(ErrorKind::InvalidArgument, "detect_quadratic needs depth >= 2");
  if (alpha.is_rational()) return std::nullopt;
  if (auto s = alpha.exact_surd()) {
    SurdStepper stepper(*s);
    std::map<SurdState, std::size_t> seen;
    std::vector<mpz_class> terms;
    for (;;) {
      auto [it, fresh] = seen.emplace(stepper.state, terms.size());
      if (!fresh) {
        const std::size_t start = it->second;
        PeriodDescription out;
        out.preperiod.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(start));
        out.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(start), terms.end());
        out.confirmed = true;
        return out;
      }
      terms.push_back(stepper.step());
    }
  }
  std::vector<mpz_class> terms;
  try {
    terms = cf_expand(alpha, depth);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PrecisionExhausted) throw;
    return std::nullopt;
  }
  const std::size_t n = terms.size();
  // Smallest (preperiod + period) whose periodic tail covers at least half the
  // window and repeats at least twice.
  for (std::size_t total = 1; total <= n; ++total) {
    for (std::size_t len = 1; len <= total; ++len) {
      const std::size_t start = total - len;
      const std::size_t tail = n - start;
      if (tail < 2 * len || 2 * tail < n) continue;
      bool periodic = true;
      for (std::size_t i = start; i + len < n && periodic; ++i) periodic = terms[i] == terms[i + len];
      if (periodic) {
        PeriodDescription out;
        out.preperiod.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(start));
        out.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(start), terms.begin() + static_cast<std::ptrdiff_t>(total));
        out.confirmed = false;
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace smalldiv
