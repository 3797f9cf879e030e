#include "smalldiv/json_io.hpp"

#include "smalldiv/big_integer.hpp"
#include "smalldiv/error.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace smalldiv::json_io {

namespace {

[[noreturn]] void bad(const char* what, const std::string& detail) {
  fail(ErrorKind::InvalidArgument, std::string(what) + ": " + detail);
}

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) bad(what, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(what, std::string("missing field '") + key + "'");
  return *it;
}

void only_keys(const json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) bad(what, "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) bad(what, "unknown field '" + key + "'");
  }
}

double round15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

// Exact rational from a decimal literal with optional exponent; nullopt when
// the exponent is too large to expand.
std::optional<mpq_class> exact_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool point = false, any = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      digits += ch;
      any = true;
      if (point) --scale;
    } else if (ch == '.' && !point) {
      point = true;
    } else {
      break;
    }
  }
  if (!any) return std::nullopt;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return std::nullopt;
    char* end = nullptr;
    const long e = std::strtol(text.c_str() + i + 1, &end, 10);
    if (end == text.c_str() + i + 1 || *end != '\0') return std::nullopt;
    if (std::labs(e) > 4096) return std::nullopt;
    scale += e;
  }
  mpz_class num(digits, 10), power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  mpq_class out = scale >= 0 ? mpq_class(num * power) : mpq_class(num, power);
  out.canonicalize();
  return negative ? mpq_class(-out) : out;
}

std::vector<mpz_class> integer_list(const json& j, const char* what) {
  if (!j.is_array()) bad(what, "expected an array of integers");
  std::vector<mpz_class> out;
  for (const auto& v : j) out.push_back(parse_integer(v, what));
  return out;
}

json integer_array(const std::vector<mpz_class>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(integer(x));
  return out;
}

json surd_json(const AlphaSpec::Surd& s) {
  return {{"a", integer(s.a)}, {"b", integer(s.b)}, {"d", integer(s.d)}, {"c", integer(s.c)}};
}

}  // namespace

json parse_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(what, std::string("malformed JSON (") + e.what() + ")");
  }
}

json integer(const mpz_class& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return json(n.get_si());
  return json(format_integer(n));
}

mpz_class parse_integer(const json& j, const char* what) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_number_unsigned()) return mpz_class(j.get<unsigned long>());
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (std::isfinite(d) && d == std::floor(d) && std::fabs(d) < 9007199254740992.0) return mpz_class(d);
    bad(what, "expected an integer");
  }
  if (j.is_string()) {
    try {
      return smalldiv::parse_integer(j.get<std::string>());
    } catch (const Error&) {
      bad(what, "bad integer '" + j.get<std::string>() + "'");
    }
  }
  bad(what, "expected an integer");
}

json number(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return json{{"repr", "decimal-string"}, {"value", x > 0 ? "inf" : "-inf"}};
  return json(round15(x));
}

json number(const MpFloat& x) {
  if (x.is_nan()) return nullptr;
  if (x.is_zero()) return json(0.0);
  const double l = x.log2_abs();
  if (std::isfinite(l) && l > -996.0 && l < 996.0) return json(round15(x.to_double()));
  return json{{"repr", "decimal-string"}, {"value", x.to_string(17)}};
}

json scalar(const Scalar& s) {
  if (!s.is_exact()) return number(s.to_float(s.precision()));
  const mpq_class& q = s.exact();
  if (q.get_den() == 1 && mpz_fits_slong_p(q.get_num_mpz_t())) return json(q.get_num().get_si());
  const double d = q.get_d();
  if (std::isfinite(d) && mpq_class(d) == q) return json(d);
  return json(q.get_str());
}

Scalar parse_scalar(const json& j, mpfr_prec_t bits, const char* what) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Scalar(mpq_class(parse_integer(j, what)));
  if (j.is_number_float()) return Scalar::from_double(j.get<double>());
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    if (text.find('/') != std::string::npos) {
      mpq_class q;
      if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0 || q.get_den() == 0) bad(what, "bad rational '" + text + "'");
      q.canonicalize();
      return Scalar(q);
    }
    if (auto q = exact_decimal(text)) return Scalar(*q);
    try {
      return Scalar(MpFloat::from_string(text, bits));
    } catch (const Error&) {
      bad(what, "bad number '" + text + "'");
    }
  }
  if (j.is_object()) {
    only_keys(j, {"repr", "value"}, what);
    if (field(j, "repr", what) != "decimal-string") bad(what, "unknown repr");
    const json& v = field(j, "value", what);
    if (!v.is_string()) bad(what, "decimal-string value must be a string");
    try {
      return Scalar(MpFloat::from_string(v.get<std::string>(), bits));
    } catch (const Error&) {
      bad(what, "bad decimal string");
    }
  }
  bad(what, "expected a number");
}

json rational(const mpq_class& q) {
  return {{"num", format_integer(q.get_num())}, {"den", format_integer(q.get_den())},
          {"approx", number(MpFloat::from_rational(q, 64))}};
}

json endpoint(const MpFloat& x) {
  if (x.is_zero()) return {{"num", "0"}, {"den", "1"}, {"approx", 0.0}};
  auto [mantissa, exponent] = x.to_dyadic();
  std::string num, den = "1";
  if (exponent >= 0) {
    num = exponent <= 4096 ? mpz_class(mantissa << static_cast<mp_bitcnt_t>(exponent)).get_str()
                           : mantissa.get_str() + "*2^" + std::to_string(exponent);
  } else {
    num = mantissa.get_str();
    const unsigned long e = static_cast<unsigned long>(-exponent);
    den = e <= 256 ? mpz_class(mpz_class(1) << e).get_str() : "2^" + std::to_string(e);
  }
  return {{"num", num}, {"den", den}, {"approx", number(x)}};
}

json interval(const Interval& x) { return {{"lo", endpoint(x.lo())}, {"hi", endpoint(x.hi())}}; }

// ---------------------------------------------------------------------------

json to_json(const AlphaSpec& alpha) {
  switch (alpha.kind()) {
    case AlphaKind::Rational: {
      const auto& r = alpha.as<AlphaSpec::Rational>();
      return {{"kind", "rational"}, {"p", integer(r.p)}, {"q", integer(r.q)}};
    }
    case AlphaKind::QuadraticSurd: {
      json out = surd_json(alpha.as<AlphaSpec::Surd>());
      out["kind"] = "surd";
      return out;
    }
    case AlphaKind::ContinuedFraction: {
      const auto& cf = alpha.as<AlphaSpec::ContinuedFraction>();
      if (cf.rule) return {{"kind", "cf"}, {"rule", cf.rule->name()}};
      json out{{"kind", "cf"}, {"quotients", integer_array(cf.prefix)}};
      if (!cf.period.empty()) out["period"] = integer_array(cf.period);
      return out;
    }
    case AlphaKind::Liouville:
      return {{"kind", "liouville"}, {"base", alpha.as<AlphaSpec::Liouville>().base}};
    case AlphaKind::Decimal: {
      const auto& d = alpha.as<AlphaSpec::Decimal>();
      return {{"kind", "decimal"}, {"digits", d.digits}, {"err_num", integer(d.error.get_num())},
              {"err_den", integer(d.error.get_den())}};
    }
  }
  return nullptr;
}

AlphaSpec parse_alpha(const json& j) {
  const char* what = "alpha";
  const json& kind = field(j, "kind", what);
  if (!kind.is_string()) bad(what, "'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "rational") {
    only_keys(j, {"kind", "p", "q"}, what);
    return AlphaSpec::rational(parse_integer(field(j, "p", what), what), parse_integer(field(j, "q", what), what));
  }
  if (k == "surd") {
    only_keys(j, {"kind", "a", "b", "d", "c"}, what);
    return AlphaSpec::surd(parse_integer(field(j, "a", what), what), parse_integer(field(j, "b", what), what),
                           parse_integer(field(j, "d", what), what), parse_integer(field(j, "c", what), what));
  }
  if (k == "cf") {
    only_keys(j, {"kind", "quotients", "period"}, what);
    std::vector<mpz_class> period;
    if (j.contains("period")) period = integer_list(j["period"], what);
    std::vector<mpz_class> prefix;
    if (j.contains("quotients")) prefix = integer_list(j["quotients"], what);
    return AlphaSpec::continued_fraction(std::move(prefix), std::move(period));
  }
  if (k == "liouville") {
    only_keys(j, {"kind", "base"}, what);
    const mpz_class base = parse_integer(field(j, "base", what), what);
    if (base < 2 || base > 1000000) bad(what, "liouville base must be in [2, 10^6]");
    return AlphaSpec::liouville(base.get_ui());
  }
  if (k == "decimal") {
    only_keys(j, {"kind", "digits", "err_num", "err_den"}, what);
    const json& digits = field(j, "digits", what);
    if (!digits.is_string()) bad(what, "'digits' must be a string");
    const mpz_class num = parse_integer(field(j, "err_num", what), what);
    const mpz_class den = j.contains("err_den") ? parse_integer(j["err_den"], what) : mpz_class(1);
    if (den <= 0) bad(what, "err_den must be positive");
    return AlphaSpec::decimal(digits.get<std::string>(), mpq_class(num, den));
  }
  bad(what, "unknown kind '" + k + "'");
}

json to_json(const PeriodicFunction& f) {
  json coeffs = json::array();
  for (const auto& [k, c] : f.coeffs()) {
    coeffs.push_back({{"k", integer(k)}, {"re", scalar(c.re)}, {"im", scalar(c.im)}});
  }
  json out{{"coeffs", std::move(coeffs)}};
  if (f.rule()) out["rule"] = *f.rule();
  return out;
}

PeriodicFunction parse_function(const json& j, mpfr_prec_t bits) {
  const char* what = "function";
  only_keys(j, {"coeffs", "rule"}, what);
  const json& coeffs = field(j, "coeffs", what);
  if (!coeffs.is_array()) bad(what, "'coeffs' must be an array");
  std::vector<std::pair<mpz_class, Coeff>> entries;
  for (const auto& e : coeffs) {
    only_keys(e, {"k", "re", "im"}, what);
    const mpz_class k = parse_integer(field(e, "k", what), what);
    Scalar re = e.contains("re") ? parse_scalar(e["re"], bits, what) : Scalar(0);
    Scalar im = e.contains("im") ? parse_scalar(e["im"], bits, what) : Scalar(0);
    entries.emplace_back(k, Coeff{std::move(re), std::move(im)});
  }
  PeriodicFunction f = PeriodicFunction::from_coeffs(entries);
  if (j.contains("rule")) {
    if (!j["rule"].is_string()) bad(what, "'rule' must be a string");
    f = f.with_rule(j["rule"].get<std::string>());
  }
  return f;
}

json to_json(const SolvePolicy& p) {
  return {{"zero_mean_tol", number(p.zero_mean_tol)}, {"residual_tol", number(p.residual_tol)},
          {"max_mode", integer(p.max_mode)}, {"precision_digits", p.precision_digits}};
}

SolvePolicy parse_policy(const json& j, SolvePolicy defaults) {
  const char* what = "policy";
  only_keys(j, {"zero_mean_tol", "residual_tol", "max_mode", "precision_digits"}, what);
  auto positive = [&](const char* key, double& slot) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) bad(what, std::string(key) + " must be a number");
    slot = j[key].get<double>();
    if (!(slot > 0) || !std::isfinite(slot)) bad(what, std::string(key) + " must be positive");
  };
  positive("zero_mean_tol", defaults.zero_mean_tol);
  positive("residual_tol", defaults.residual_tol);
  if (j.contains("max_mode")) {
    defaults.max_mode = parse_integer(j["max_mode"], what);
    if (defaults.max_mode < 0) bad(what, "max_mode must be >= 0");
  }
  if (j.contains("precision_digits")) {
    const mpz_class d = parse_integer(j["precision_digits"], what);
    if (d < 1 || d > 1000000) bad(what, "precision_digits must be in [1, 10^6]");
    defaults.precision_digits = d.get_si();
  }
  return defaults;
}

json to_json(const DecayProfile& profile) {
  json octaves = json::array();
  for (const auto& o : profile.octaves) {
    octaves.push_back({{"octave", o.octave},
                       {"k", integer(o.k)},
                       {"log10_max", number(o.log2_magnitude / 3.32192809488736234787)},
                       {"apparent_exponent", number(o.apparent_exponent)}});
  }
  return {{"verdict", to_string(profile.verdict)}, {"exponent", number(profile.exponent)}, {"octaves", octaves}};
}

json to_json(const ModeDivisor& d) {
  return {{"k", integer(d.k)},
          {"lambda", {{"re", scalar(d.lambda.re)}, {"im", scalar(d.lambda.im)}}},
          {"abs_lambda", number(d.magnitude.mid())},
          {"abs_lambda_enclosure", interval(d.magnitude)},
          {"distance", number(d.distance.mid())}};
}

json to_json(const SolveResult& r, bool with_function) {
  json divisors = json::array();
  for (const auto& d : r.divisors) divisors.push_back(to_json(d));
  json out{{"verdict", to_string(r.verdict)},
           {"residual", number(r.residual)},
           {"mean", scalar(r.mean)},
           {"decay", to_json(r.decay)},
           {"divisors", std::move(divisors)}};
  if (with_function) out["g"] = to_json(r.g);
  return out;
}

json to_json(const BirkhoffReport& r) {
  json out{{"n_max", r.n_max},      {"x0", number(r.x0)},         {"mean", number(r.mean)},
           {"sup_abs_D", number(r.sup_d)}, {"within_bound", r.within_bound}};
  out["bound"] = r.bound ? number(*r.bound) : json(nullptr);
  out["telescoping_error"] = r.telescoping_error ? number(*r.telescoping_error) : json(nullptr);
  return out;
}

json to_json(const FlowClass& flow) {
  return {{"alpha", to_json(flow.alpha)}, {"c", scalar(flow.c)}, {"delta", to_json(flow.delta)}};
}

FlowClass parse_flow_class(const json& j, const std::optional<AlphaSpec>& fallback, mpfr_prec_t bits) {
  const char* what = "class";
  only_keys(j, {"alpha", "c", "delta"}, what);
  std::optional<AlphaSpec> alpha = fallback;
  if (j.contains("alpha")) alpha = parse_alpha(j["alpha"]);
  if (!alpha) bad(what, "no alpha given");
  Scalar c = j.contains("c") ? parse_scalar(j["c"], bits, what) : Scalar(0);
  PeriodicFunction delta = j.contains("delta") ? parse_function(j["delta"], bits) : PeriodicFunction();
  return FlowClass::make(*alpha, std::move(c), std::move(delta));
}

json to_json(const BundleClassification& c) {
  json out{{"kind", to_string(c.kind)},
           {"reduced", c.reduction.reduced},
           {"evidence", to_json(c.reduction.evidence, false)}};
  out["speed"] = c.speed ? scalar(*c.speed) : json(nullptr);
  out["witness"] = c.reduction.witness ? to_json(*c.reduction.witness) : json(nullptr);
  return out;
}

json to_json(const Convergent& c) { return {{"p", integer(c.p)}, {"q", integer(c.q)}, {"index", c.index}}; }

json to_json(const DiophantineReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"k", w.k}, {"n", integer(w.n)}, {"m", integer(w.m)}, {"bound", rational(w.bound)}});
  }
  json convs = json::array();
  for (const auto& c : r.convergents) convs.push_back(to_json(c));
  return {{"alpha", to_json(r.alpha)},
          {"verdict", to_string(r.verdict)},
          {"max_quotient", integer(r.max_quotient)},
          {"witnesses", std::move(witnesses)},
          {"convergents", std::move(convs)}};
}

json to_json(const ResonantModes& modes) {
  json list = json::array();
  for (const auto& m : modes.modes) {
    list.push_back({{"p", m.p},
                    {"k", integer(m.k)},
                    {"abs_lambda", interval(m.magnitude)},
                    {"log10_abs_lambda", number(m.magnitude.hi().log2_abs() / 3.32192809488736234787)}});
  }
  return {{"alpha", to_json(modes.alpha)}, {"source", modes.source}, {"precision_bits", modes.bits}, {"modes", list}};
}

json to_json(const CounterexampleFamily& family) {
  json partition = json::array();
  for (const auto& set : family.skeleton.sets) {
    json ps = json::array();
    for (std::size_t i : set) ps.push_back(family.skeleton.modes.modes[i].p);
    partition.push_back(std::move(ps));
  }
  json coeffs = json::array();
  for (const auto& c : family.coefficients) {
    coeffs.push_back({{"p", c.p},
                      {"k", integer(c.k)},
                      {"set", c.set + 1},
                      {"abs_lambda", interval(c.magnitude)},
                      {"sqrt_abs_lambda", interval(c.root)},
                      {"decay_certified", c.decay_certified}});
  }
  json functions = json::array();
  for (const auto& f : family.functions) functions.push_back(to_json(f));
  return {{"alpha", to_json(family.alpha())},
          {"precision_bits", family.bits},
          {"prefix_length", family.skeleton.modes.modes.size()},
          {"source", family.skeleton.modes.source},
          {"partition", std::move(partition)},
          {"coefficients", std::move(coeffs)},
          {"functions", std::move(functions)}};
}

json to_json(const CertificationReport& report) {
  json modes = json::array();
  for (const auto& m : report.modes) {
    modes.push_back({{"p", m.p},
                     {"k", integer(m.k)},
                     {"log10_ratio", number(m.log10_ratio)},
                     {"log10_bound", number(m.log10_bound)},
                     {"certified", m.certified}});
  }
  return {{"verdict", to_string(report.verdict)}, {"modes", std::move(modes)}};
}

json to_json(const IndependenceReport& report) {
  json sets = json::array();
  std::size_t certified = 0;
  for (const auto& s : report.sets) {
    if (s.report.verdict == CertificationVerdict::NotACoboundary) ++certified;
    sets.push_back({{"set", s.set + 1}, {"coefficient", scalar(s.coefficient)}, {"report", to_json(s.report)}});
  }
  return {{"verdict", to_string(report.verdict)}, {"certified_sets", certified}, {"sets", std::move(sets)}};
}

json to_json(const CharacteristicField& f) {
  return {{"degree", f.degree}, {"r", f.r},         {"s", f.s}, {"rank", f.rank},
          {"group", f.group},   {"minpoly", integer_array(f.minpoly)}, {"warnings", f.warnings}};
}

json to_json(const QuadraticUnit& u) {
  return {{"c", integer(u.c)},
          {"d", integer(u.d)},
          {"a", integer(u.a)},
          {"b", integer(u.b)},
          {"det", u.det},
          {"matrix", json::array({json::array({integer(u.c), integer(u.a)}), json::array({integer(u.d), integer(u.b)})})},
          {"lambda", surd_json(u.lambda)},
          {"minpoly", integer_array(u.minpoly)}};
}

json to_json(const Pi0Report& r) {
  json out{{"evidence", to_string(r.evidence)}, {"note", r.note}};
  out["group"] = r.group.empty() ? json(nullptr) : json(r.group);
  out["unit"] = r.unit ? to_json(*r.unit) : json(nullptr);
  return out;
}

}  // namespace smalldiv::json_io
