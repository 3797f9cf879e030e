#include "smalldiv/big_integer.hpp"

#include "smalldiv/error.hpp"

#include <cctype>
#include <cmath>

namespace smalldiv {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  if (b == 0) fail(ErrorKind::InvalidArgument, "division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class floor_mod(const mpz_class& a, const mpz_class& b) {
  if (b == 0) fail(ErrorKind::InvalidArgument, "division by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class floor_of(const mpq_class& q) { return floor_div(q.get_num(), q.get_den()); }

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "isqrt of a negative integer");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_squarefree(const mpz_class& n) {
  if (n <= 0) return false;
  static const mpz_class kLimit("1000000000000000000");
  if (n > kLimit) fail(ErrorKind::InvalidArgument, "squarefree test limited to values <= 10^18");
  static_assert(sizeof(unsigned long) >= 8, "64-bit unsigned long expected");
  unsigned long long rest = n.get_ui();
  for (unsigned long long p = 2; p <= 1000000ULL && p * p <= rest; ++p) {
    if (rest % p == 0) {
      rest /= p;
      if (rest % p == 0) return false;
    }
  }
  // What remains has no factor <= 10^6 and is at most 10^18: it is 1, a
  // prime, a product of two distinct primes, or the square of a prime.
  return !(rest > 1 && is_perfect_square(mpz_class(static_cast<unsigned long>(rest))));
}

std::size_t bit_length(const mpz_class& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

namespace {

constexpr std::size_t kCompactThresholdBits = 13607;  // ~4096 decimal digits

bool try_power_form(const mpz_class& n, unsigned long& base, unsigned long& exponent) {
  const std::size_t bits = bit_length(n);
  for (unsigned long b = 2; b <= 16; ++b) {
    const double per = std::log2(static_cast<double>(b));
    const auto guess = static_cast<unsigned long>(std::llround(static_cast<double>(bits - 1) / per));
    for (unsigned long e = guess > 0 ? guess - 1 : 0; e <= guess + 1; ++e) {
      if (e == 0) continue;
      // Cheap filter: 2-adic valuation must match.
      unsigned long twos_in_base = 0;
      for (unsigned long t = b; t % 2 == 0; t /= 2) ++twos_in_base;
      if (mpz_scan1(n.get_mpz_t(), 0) != twos_in_base * e) continue;
      const double predicted = static_cast<double>(e) * per;
      if (std::fabs(predicted - static_cast<double>(bits)) > 2.0) continue;
      mpz_class candidate;
      mpz_ui_pow_ui(candidate.get_mpz_t(), b, e);
      if (candidate == n) {
        base = b;
        exponent = e;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string format_integer(const mpz_class& n) {
  if (bit_length(n) > kCompactThresholdBits) {
    mpz_class magnitude = abs(n);
    unsigned long base = 0, exponent = 0;
    if (try_power_form(magnitude, base, exponent)) {
      return std::string(n < 0 ? "-" : "") + std::to_string(base) + "^" + std::to_string(exponent);
    }
  }
  return n.get_str();
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorKind::InvalidArgument, "empty integer literal");
  const auto caret = s.find('^');
  if (caret != std::string::npos) {
    bool negative = s[0] == '-';
    const std::string base_text = s.substr(negative ? 1 : 0, caret - (negative ? 1 : 0));
    const std::string exp_text = s.substr(caret + 1);
    mpz_class base = parse_integer(base_text);
    mpz_class exponent = parse_integer(exp_text);
    if (base < 2 || !base.fits_ulong_p() || exponent < 0 || !exponent.fits_ulong_p()) {
      fail(ErrorKind::InvalidArgument, "bad power literal '" + s + "'");
    }
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base.get_ui(), exponent.get_ui());
    return negative ? mpz_class(-out) : out;
  }
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) fail(ErrorKind::InvalidArgument, "bad integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      fail(ErrorKind::InvalidArgument, "bad integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace smalldiv
