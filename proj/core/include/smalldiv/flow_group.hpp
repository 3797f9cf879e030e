#pragma once

// Flow classes over the irrational torus as (drift, fluctuation) pairs.

#include "smalldiv/alpha.hpp"
#include "smalldiv/cohomology.hpp"
#include "smalldiv/periodic_function.hpp"

#include <optional>
#include <string_view>

namespace smalldiv {

// (c, delta) with mean(delta) = 0 exactly; alpha irrational.
struct FlowClass {
  AlphaSpec alpha;
  Scalar c;
  PeriodicFunction delta;

  static FlowClass make(AlphaSpec alpha, Scalar c, PeriodicFunction delta);
  static FlowClass identity(AlphaSpec alpha);
  // The defining function c + delta.
  PeriodicFunction function() const;

  friend bool operator==(const FlowClass& a, const FlowClass& b) {
    return a.alpha == b.alpha && a.c == b.c && a.delta == b.delta;
  }
};

FlowClass flow_from_function(const PeriodicFunction& f, const AlphaSpec& alpha);
// Representative-level sum; AlphaMismatch when the tori differ.
FlowClass flow_add(const FlowClass& a, const FlowClass& b);
FlowClass flow_inverse(const FlowClass& a);

struct Reduction {
  FlowClass result;
  bool reduced = false;
  SolveResult evidence;
  // g with delta = g(. + alpha) - g, when reduced.
  std::optional<PeriodicFunction> witness;
};

// Drops delta when it is a smooth coboundary (solve verdict Solved).
Reduction reduce_mod_coboundary(const FlowClass& a, const SolvePolicy& policy = {});

// tau(m): x -> sum_{j<m} f(x + j alpha) for m > 0, 0 for m = 0 and
// -sum_{j=1}^{|m|} f(x - j alpha) for m < 0, as a Fourier series.
PeriodicFunction cocycle_expand(const FlowClass& a, long m, mpfr_prec_t bits = 192);

enum class BundleKind { TrivialProduct, TorusLinearFlow, TorusNonlinearFlow, ExoticProduct };

std::string_view to_string(BundleKind kind) noexcept;

struct BundleClassification {
  BundleKind kind = BundleKind::TrivialProduct;
  std::optional<Scalar> speed;  // 1/c for TorusLinearFlow
  Reduction reduction;
};

BundleClassification classify_bundle(const FlowClass& a, const SolvePolicy& policy = {});

// h(x, t) = (x + alpha, t + c + delta(x)) on the circle times the line.
struct GeneratorH {
  AlphaSpec alpha;
  Scalar c;
  PeriodicFunction delta;

  static GeneratorH from_class(const FlowClass& a) { return {a.alpha, a.c, a.delta}; }
};

struct CylinderPoint {
  MpFloat x;  // in [0, 1)
  MpFloat t;
};

// h^m(x0, t0) = (x0 + m alpha mod 1, t0 + tau(m)(x0)).
CylinderPoint generator_iterate(const GeneratorH& h, const MpFloat& x0, const MpFloat& t0, long m,
                                mpfr_prec_t bits = 160);

}  // namespace smalldiv
