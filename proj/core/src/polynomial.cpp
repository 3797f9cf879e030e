#include "smalldiv/polynomial.hpp"

#include "smalldiv/big_integer.hpp"
#include "smalldiv/error.hpp"

#include <algorithm>
#include <set>

namespace smalldiv {

namespace {

// Divisor enumeration bound; larger values are not factored.
const mpz_class kDivisorLimit("1000000000000");

std::optional<std::vector<mpz_class>> positive_divisors(mpz_class n) {
  n = abs(n);
  if (n == 0 || n > kDivisorLimit) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class i = 1; i * i <= n; ++i) {
    if (mpz_divisible_p(n.get_mpz_t(), i.get_mpz_t())) {
      small.push_back(i);
      if (i * i != n) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int sign_at_infinity(const Polynomial& p, bool positive) {
  if (p.is_zero()) return 0;
  const int s = sgn(p.leading());
  return (positive || p.degree() % 2 == 0) ? s : -s;
}

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::from_integers(const std::vector<mpz_class>& coeffs) {
  std::vector<mpq_class> q;
  q.reserve(coeffs.size());
  for (const auto& c : coeffs) q.emplace_back(c);
  return Polynomial(std::move(q));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class Polynomial::eval(const mpq_class& x) const {
  mpq_class out = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x + *it;
  return out;
}

Polynomial Polynomial::derivative() const {
  std::vector<mpq_class> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<mpq_class> out = coeffs_;
  const mpq_class lead = leading();
  for (auto& c : out) c /= lead;
  return Polynomial(std::move(out));
}

std::vector<mpz_class> Polynomial::primitive() const {
  if (is_zero()) return {};
  mpz_class l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpq_class scaled = c * l;
    out.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

Polynomial operator-(const Polynomial& a) {
  std::vector<mpq_class> out = a.coeffs_;
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const mpq_class factor = rem[static_cast<std::size_t>(i)] / b.leading();
    quot[static_cast<std::size_t>(i - db)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> out{p, p.derivative()};
  while (!out.back().is_zero()) {
    const Polynomial r = divmod(out[out.size() - 2], out.back()).second;
    if (r.is_zero()) break;
    out.push_back(-r);
  }
  if (out.back().is_zero()) out.pop_back();
  return out;
}

int count_real_roots(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "zero polynomial has infinitely many roots");
  const auto chain = sturm_sequence(p);
  std::vector<int> minus, plus;
  for (const auto& q : chain) {
    minus.push_back(sign_at_infinity(q, false));
    plus.push_back(sign_at_infinity(q, true));
  }
  return variations(minus) - variations(plus);
}

std::optional<std::vector<mpq_class>> rational_roots(const std::vector<mpz_class>& coeffs) {
  const Polynomial p = Polynomial::from_integers(coeffs);
  if (p.degree() < 1) return std::vector<mpq_class>{};
  std::vector<mpz_class> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<mpq_class> roots;
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  auto nums = positive_divisors(c[shift]);
  auto dens = positive_divisors(c.back());
  if (!nums || !dens) return std::nullopt;
  std::set<mpq_class> found;
  for (const auto& n : *nums) {
    for (const auto& d : *dens) {
      for (int s : {1, -1}) {
        mpq_class x(s * n, d);
        x.canonicalize();
        if (found.count(x) == 0 && p.eval(x) == 0) found.insert(x);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

std::optional<Polynomial> quadratic_factor(const std::vector<mpz_class>& coeffs) {
  const Polynomial p = Polynomial::from_integers(coeffs);
  if (p.degree() != 4) return std::nullopt;
  // Kronecker: a factor q of degree 2 has q(x) | p(x) at x = -1, 0, 1.
  std::vector<std::vector<mpz_class>> options;
  const mpq_class xs[3] = {-1, 0, 1};
  for (const auto& x : xs) {
    const mpq_class v = p.eval(x);
    if (v == 0) return std::nullopt;  // linear factor; rational roots cover it
    auto divs = positive_divisors(v.get_num());
    if (!divs || divs->size() > 400) return std::nullopt;
    std::vector<mpz_class> signed_divs;
    for (const auto& d : *divs) {
      signed_divs.push_back(d);
      signed_divs.push_back(-d);
    }
    options.push_back(std::move(signed_divs));
  }
  for (const auto& ym : options[0]) {
    for (const auto& y0 : options[1]) {
      if (y0 < 0) continue;  // q and -q are the same factor
      for (const auto& y1 : options[2]) {
        // q(x) = a x^2 + b x + c through (-1, ym), (0, y0), (1, y1).
        const mpq_class c(y0);
        const mpq_class a = mpq_class(ym + y1 - 2 * y0, 2);
        const mpq_class b = mpq_class(y1 - ym, 2);
        if (a == 0) continue;
        const Polynomial q({c, b, a});
        if (divmod(p, q).second.is_zero()) return q.monic();
      }
    }
  }
  return std::nullopt;
}

}  // namespace smalldiv
