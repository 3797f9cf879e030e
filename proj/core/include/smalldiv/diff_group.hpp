#pragma once

// Connected components of the diffeomorphism group of an irrational torus:
// unit ranks from a characteristic polynomial and the generating unit for a
// quadratic rotation number.

#include "smalldiv/alpha.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace smalldiv {

struct CharacteristicField {
  std::vector<mpz_class> minpoly;  // constant term first
  int degree = 0;
  int r = 0;  // real roots
  int s = 0;  // complex-conjugate pairs
  int rank = 0;
  std::string group;
  // Evidence that the polynomial is reducible (rational roots, a quadratic
  // factor) or that irreducibility could not be checked.
  std::vector<std::string> warnings;
};

// "{±1}", "{±1} x Z", "{±1} x Z^k".
std::string unit_group_name(int rank);

// RepeatedRoots when gcd(P, P') is not constant.
CharacteristicField pi0_rank(const std::vector<mpz_class>& minpoly);

// lambda = c + alpha d acting through the matrix (c, a; d, b):
// a + alpha b = alpha (c + alpha d), det = cb - ad = +/-1.
struct QuadraticUnit {
  mpz_class c, d, a, b;
  int det = 0;
  // lambda as (x + y sqrt(D)) / z.
  AlphaSpec::Surd lambda;
  // Primitive integer minimal polynomial of alpha, constant term first.
  std::vector<mpz_class> minpoly;
};

// The generator > 1 of the unit group of the ring {lambda : lambda L c L}
// for the lattice L = Z + alpha Z. NotQuadratic for non-surd input.
QuadraticUnit quadratic_unit(const AlphaSpec& alpha);

// Exact check of the stabilization identity and |det| = 1.
bool verify_unit(const AlphaSpec::Surd& alpha, const QuadraticUnit& unit);

enum class Pi0Evidence { Exact, NonQuadraticEvidence, Inconclusive };

std::string_view to_string(Pi0Evidence e) noexcept;

struct Pi0Report {
  std::string group;  // empty when inconclusive
  Pi0Evidence evidence = Pi0Evidence::Inconclusive;
  std::optional<QuadraticUnit> unit;
  std::string note;
};

Pi0Report pi0_for_alpha(const AlphaSpec& alpha, std::size_t depth = 20);

}  // namespace smalldiv
