#include "smalldiv/diff_group.hpp"

#include "smalldiv/big_integer.hpp"
#include "smalldiv/continued_fraction.hpp"
#include "smalldiv/error.hpp"
#include "smalldiv/polynomial.hpp"

namespace smalldiv {

std::string unit_group_name(int rank) {
  if (rank == 0) return "{±1}";
  if (rank == 1) return "{±1} x Z";
  return "{±1} x Z^" + std::to_string(rank);
}

CharacteristicField pi0_rank(const std::vector<mpz_class>& minpoly) {
  const Polynomial p = Polynomial::from_integers(minpoly);
  if (p.degree() < 1) fail(ErrorKind::InvalidArgument, "characteristic polynomial must have degree >= 1");
  if (gcd(p, p.derivative()).degree() > 0) fail(ErrorKind::RepeatedRoots, "polynomial has repeated roots");

  CharacteristicField out;
  out.minpoly = p.primitive();
  out.degree = p.degree();
  out.r = count_real_roots(p);
  out.s = (out.degree - out.r) / 2;
  out.rank = out.r + out.s - 1;
  out.group = unit_group_name(out.rank);
  if (out.degree >= 2) {
    if (auto roots = rational_roots(out.minpoly)) {
      for (const auto& x : *roots) out.warnings.push_back("NotIrreducibleEvidence: rational root " + x.get_str());
    } else {
      out.warnings.push_back("irreducibility not checked: coefficients too large for the rational-root test");
    }
    if (out.degree == 4) {
      if (auto q = quadratic_factor(out.minpoly)) {
        const auto& c = q->coeffs();
        out.warnings.push_back("NotIrreducibleEvidence: quadratic factor x^2 + (" + c[1].get_str() + ")x + (" +
                               c[0].get_str() + ")");
      }
    } else if (out.degree > 4) {
      out.warnings.push_back("irreducibility checked for rational roots only");
    }
  }
  return out;
}

namespace {

// x + y sqrt(D) over Q.
struct QuadElement {
  mpq_class x, y;
};

QuadElement mul(const QuadElement& u, const QuadElement& v, const mpz_class& D) {
  return {u.x * v.x + u.y * v.y * D, u.x * v.y + u.y * v.x};
}

QuadElement of_surd(const AlphaSpec::Surd& s) {
  mpq_class x(s.a, s.c), y(s.b, s.c);
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

bool equal(const QuadElement& u, const QuadElement& v) { return u.x == v.x && u.y == v.y; }

}  // namespace

bool verify_unit(const AlphaSpec::Surd& alpha, const QuadraticUnit& unit) {
  const QuadElement al = of_surd(alpha);
  const QuadElement lhs{mpq_class(unit.a) + al.x * unit.b, al.y * unit.b};
  const QuadElement lambda{mpq_class(unit.c) + al.x * unit.d, al.y * unit.d};
  const QuadElement rhs = mul(al, lambda, alpha.d);
  const mpz_class det = unit.c * unit.b - unit.a * unit.d;
  // Norm of lambda equals det.
  const mpq_class norm = lambda.x * lambda.x - lambda.y * lambda.y * alpha.d;
  return equal(lhs, rhs) && (det == 1 || det == -1) && norm == mpq_class(det) && det == unit.det;
}

QuadraticUnit quadratic_unit(const AlphaSpec& alpha) {
  const auto surd = alpha.exact_surd();
  if (!surd) fail(ErrorKind::NotQuadratic, "quadratic_unit needs a quadratic irrational, got " + alpha.describe());
  const auto& s = *surd;
  // (c alpha - a)^2 = b^2 d  =>  A alpha^2 + B alpha + C = 0, made primitive.
  mpz_class A = s.c * s.c, B = -2 * s.a * s.c, C = s.a * s.a - s.b * s.b * s.d;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), C.get_mpz_t());
  A /= g;
  B /= g;
  C /= g;

  // lambda = c + e A alpha has conjugate c + e A alpha' = c - e omega with
  // omega = -A alpha'; a unit with |lambda| > 1 has |c - e omega| < 1.
  const AlphaSpec omega = AlphaSpec::surd(-A * s.a, A * s.b, s.d, s.c);
  const Interval omega_enc = omega.enclosure(256);
  const Interval alpha_enc = alpha.enclosure(256);

  auto try_e = [&](const mpz_class& e) -> std::optional<QuadraticUnit> {
    const Interval scaled = omega_enc * Interval::from_integer(e, 512);
    mpz_class base;
    mpfr_get_z(base.get_mpz_t(), scaled.lo().get(), MPFR_RNDD);
    for (mpz_class c = base - 1; c <= base + 2; ++c) {
      const mpz_class det = c * c - B * c * e + A * C * e * e;
      if (det != 1 && det != -1) continue;
      const Interval lambda = Interval::from_integer(c, 512) + Interval::from_integer(A * e, 512) * alpha_enc;
      const Interval size = abs(lambda);
      if (!(size.lo() > MpFloat(1.0, 16))) continue;
      QuadraticUnit u;
      u.c = c;
      u.d = A * e;
      u.a = -e * C;
      u.b = c - e * B;
      u.det = static_cast<int>(det.get_si());
      if (lambda.hi().sign() < 0) {
        u.c = -u.c;
        u.d = -u.d;
        u.a = -u.a;
        u.b = -u.b;
      }
      return u;
    }
    return std::nullopt;
  };

  std::optional<QuadraticUnit> unit;
  for (long e = 1; e <= 16 && !unit; ++e) unit = try_e(e);
  if (!unit) {
    // Beyond small e the unit's coefficient is a convergent denominator of omega.
    for (std::size_t n = 32; !unit; n *= 2) {
      for (const auto& conv : convergents(omega, n)) {
        if (conv.q <= 16) continue;
        if ((unit = try_e(conv.q))) break;
      }
      if (n > (1u << 16)) fail(ErrorKind::InvariantViolation, "no unit found for " + alpha.describe());
    }
  }
  QuadraticUnit& u = *unit;
  // lambda = c + alpha d = (c s.c + d s.a + d s.b sqrt(d)) / s.c
  AlphaSpec::Surd lambda{u.c * s.c + u.d * s.a, u.d * s.b, s.d, s.c};
  mpz_class h;
  mpz_gcd(h.get_mpz_t(), lambda.a.get_mpz_t(), lambda.b.get_mpz_t());
  mpz_gcd(h.get_mpz_t(), h.get_mpz_t(), lambda.c.get_mpz_t());
  lambda.a /= h;
  lambda.b /= h;
  lambda.c /= h;
  u.lambda = lambda;
  u.minpoly = {C, B, A};
  if (!verify_unit(s, u)) fail(ErrorKind::InvariantViolation, "unit failed exact verification");
  return u;
}

std::string_view to_string(Pi0Evidence e) noexcept {
  switch (e) {
    case Pi0Evidence::Exact: return "exact";
    case Pi0Evidence::NonQuadraticEvidence: return "non-quadratic-evidence";
    case Pi0Evidence::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Pi0Report pi0_for_alpha(const AlphaSpec& alpha, std::size_t depth) {
  require_irrational(alpha, "pi0_for_alpha");
  Pi0Report out;
  if (alpha.exact_surd()) {
    out.unit = quadratic_unit(alpha);
    out.group = unit_group_name(1);
    out.evidence = Pi0Evidence::Exact;
    out.note = "quadratic rotation number; Z generated by the unit lambda = c + alpha d";
    return out;
  }
  if (alpha.kind() == AlphaKind::Decimal) {
    out.note = "a decimal literal cannot establish algebraic structure; declare the value exactly";
    return out;
  }
  const auto period = detect_quadratic(alpha, depth);
  if (period) {
    out.note = "continued fraction looks periodic within depth " + std::to_string(depth) + " but is not confirmed";
    return out;
  }
  out.group = unit_group_name(0);
  out.evidence = Pi0Evidence::NonQuadraticEvidence;
  out.note = "no periodicity within depth " + std::to_string(depth) +
             "; higher-degree algebraic values need an explicit minimal polynomial";
  return out;
}

}  // namespace smalldiv
