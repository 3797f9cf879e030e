#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace smalldiv {

// Floor division and remainder with the sign convention of mathematics
// (remainder has the sign of the divisor).
mpz_class floor_div(const mpz_class& a, const mpz_class& b);
mpz_class floor_mod(const mpz_class& a, const mpz_class& b);
mpz_class floor_of(const mpq_class& q);
mpz_class isqrt(const mpz_class& n);
bool is_perfect_square(const mpz_class& n);
// Exact for n <= 10^18; larger inputs are rejected with InvalidArgument.
bool is_squarefree(const mpz_class& n);

std::size_t bit_length(const mpz_class& n);

// Decimal text, or "b^e" when the value is an exact power of a small base and
// the decimal form would be unwieldy (> 4096 digits).
std::string format_integer(const mpz_class& n);
// Accepts optional sign, decimal digits, or "b^e" / "-b^e".
mpz_class parse_integer(std::string_view text);

}  // namespace smalldiv
