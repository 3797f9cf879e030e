#pragma once

// JSON encodings of every public value. Keys are sorted (nlohmann::json's
// default map) and numbers are printed deterministically, so identical inputs
// give byte-identical documents.

#include "smalldiv/alpha.hpp"
#include "smalldiv/cohomology.hpp"
#include "smalldiv/counterexamples.hpp"
#include "smalldiv/diff_group.hpp"
#include "smalldiv/diophantine.hpp"
#include "smalldiv/flow_group.hpp"
#include "smalldiv/periodic_function.hpp"

#include <nlohmann/json.hpp>

namespace smalldiv::json_io {

using nlohmann::json;

// Integers: JSON numbers when they fit in 64 bits, strings otherwise
// (decimal, or "b^e" for huge powers). Both forms are accepted on input.
json integer(const mpz_class& n);
mpz_class parse_integer(const json& j, const char* what);

// A double rounded to 15 significant digits when representable, otherwise
// {"repr": "decimal-string", "value": "..."}.
json number(const MpFloat& x);
json number(double x);
// Exact rationals stay exact: a JSON number when the value is a double,
// "p/q" otherwise. Floats follow number().
json scalar(const Scalar& s);
// Numbers (exact as doubles), "p/q" or decimal strings (exact), or the
// decimal-string object (rounded to `bits`).
Scalar parse_scalar(const json& j, mpfr_prec_t bits, const char* what);

// Exact dyadic endpoint {"num": "...", "den": "..."} plus an approximation.
json endpoint(const MpFloat& x);
json interval(const Interval& x);
json rational(const mpq_class& q);

json to_json(const AlphaSpec& alpha);
AlphaSpec parse_alpha(const json& j);

json to_json(const PeriodicFunction& f);
PeriodicFunction parse_function(const json& j, mpfr_prec_t bits = 256);

json to_json(const SolvePolicy& policy);
SolvePolicy parse_policy(const json& j, SolvePolicy defaults = {});

json to_json(const DecayProfile& profile);
json to_json(const ModeDivisor& divisor);
json to_json(const SolveResult& result, bool with_function = true);
json to_json(const BirkhoffReport& report);

json to_json(const FlowClass& flow);
// `fallback` supplies alpha when the document has none.
FlowClass parse_flow_class(const json& j, const std::optional<AlphaSpec>& fallback, mpfr_prec_t bits = 256);
json to_json(const BundleClassification& c);

json to_json(const Convergent& c);
json to_json(const DiophantineReport& report);

json to_json(const ResonantModes& modes);
json to_json(const CounterexampleFamily& family);
json to_json(const CertificationReport& report);
json to_json(const IndependenceReport& report);

json to_json(const CharacteristicField& field);
json to_json(const QuadraticUnit& unit);
json to_json(const Pi0Report& report);

// Parses JSON text, mapping syntax errors to InvalidArgument.
json parse_text(const std::string& text, const char* what);

}  // namespace smalldiv::json_io
