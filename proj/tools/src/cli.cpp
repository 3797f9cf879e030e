#include "smalldiv_cli/cli.hpp"

#include "smalldiv/big_integer.hpp"
#include "smalldiv/error.hpp"
#include "smalldiv/json_io.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace smalldiv::cli {

namespace {

using nlohmann::json;
namespace jio = smalldiv::json_io;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

struct Options {
  std::string alpha, f, cls, other, policy, csv, plot_data, manifest, minpoly, coeffs;
  std::optional<long> precision_digits;
  std::string k_max = "3", n_budget = "1000000", K = "30";
  std::size_t depth = 20, terms = 12, p_max = 5, m_count = 3;
  std::optional<std::size_t> p_check;
  long m = 1;
  long n_max = 1000;
  double x0 = 0.0;
};

class Command {
 public:
  Command(std::string name, const Options& opt) : name_(std::move(name)), opt_(opt) {}

  // Input text from a flag value: inline JSON, @path, or a bare path.
  std::string source(const std::string& flag, const std::string& value) {
    std::string text = value;
    const auto first = value.find_first_not_of(" \t\r\n");
    const bool inline_json =
        first != std::string::npos && std::string_view("{[\"-0123456789").find(value[first]) != std::string_view::npos;
    if (!value.empty() && (value[0] == '@' || !inline_json)) {
      const std::string path = value[0] == '@' ? value.substr(1) : value;
      std::ifstream in(path, std::ios::binary);
      if (!in) throw IoError("cannot read " + path);
      std::ostringstream os;
      os << in.rdbuf();
      text = os.str();
    }
    inputs_[flag] = sha256_hex(text);
    return text;
  }

  json input_json(const std::string& flag, const std::string& value) {
    if (value.empty()) fail(ErrorKind::InvalidArgument, "missing required --" + flag);
    return jio::parse_text(source(flag, value), flag.c_str());
  }

  AlphaSpec alpha() { return jio::parse_alpha(input_json("alpha", opt_.alpha)); }
  std::optional<AlphaSpec> optional_alpha() {
    if (opt_.alpha.empty()) return std::nullopt;
    return alpha();
  }

  long precision_digits(long fallback) const {
    long digits = fallback;
    if (const char* env = std::getenv("SMALLDIV_PRECISION_DIGITS"); env && *env) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (*end != '\0' || v < 1 || v > 1000000) {
        fail(ErrorKind::InvalidArgument, "SMALLDIV_PRECISION_DIGITS must be an integer in [1, 10^6]");
      }
      digits = v;
    }
    return digits;
  }

  SolvePolicy policy() {
    SolvePolicy p;
    p.precision_digits = precision_digits(p.precision_digits);
    if (!opt_.policy.empty()) p = jio::parse_policy(input_json("policy", opt_.policy), p);
    if (opt_.precision_digits) p.precision_digits = *opt_.precision_digits;
    if (p.precision_digits < 1 || p.precision_digits > 1000000) {
      fail(ErrorKind::InvalidArgument, "--precision-digits must be in [1, 10^6]");
    }
    policy_echo_ = jio::to_json(p);
    return p;
  }

  void csv(std::string content) {
    if (!opt_.csv.empty()) files_.emplace_back(opt_.csv, std::move(content));
  }

  void plot(const std::vector<PlotSeries>& series) {
    if (opt_.plot_data.empty()) return;
    std::size_t rows = 0;
    for (const auto& s : series) rows += s.points.size();
    if (rows == 0) fail(ErrorKind::InvalidArgument, "--plot-data: nothing to plot");
    plots_ = series;
  }

  void commit(const json& doc, std::ostream& out, double seconds) {
    const std::string text = doc.dump(2) + "\n";
    for (const auto& [path, content] : files_) write(path, content);
    if (plots_) emit_plot_data(*plots_, opt_.plot_data);
    if (!opt_.manifest.empty()) {
      json manifest{{"subcommand", name_},
                    {"inputs", inputs_},
                    {"policy", policy_echo_},
                    {"tool_version", SMALLDIV_VERSION_STRING},
                    {"wall_time_s", seconds},
                    {"stdout_sha256", sha256_hex(text)}};
      write(opt_.manifest, manifest.dump(2) + "\n");
    }
    out << text;
  }

  const json& policy_echo() const { return policy_echo_; }

  static void write(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write " + path);
    file << content;
    if (!file) throw IoError("write failed for " + path);
  }

 private:
  std::string name_;
  const Options& opt_;
  json inputs_ = json::object();
  json policy_echo_ = nullptr;
  std::vector<std::pair<std::string, std::string>> files_;
  std::optional<std::vector<PlotSeries>> plots_;
};

std::string decimal(const MpFloat& x) { return x.is_zero() ? "0" : x.to_string(17); }

json quotient_list(const std::vector<mpz_class>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(jio::integer(x));
  return out;
}

mpz_class integer_flag(const std::string& name, const std::string& value) {
  try {
    return parse_integer(value);
  } catch (const Error&) {
    fail(ErrorKind::InvalidArgument, "--" + name + " expects an integer, got '" + value + "'");
  }
}

// ---------------------------------------------------------------------------

json classify_alpha(Command& cmd, const Options& opt) {
  const AlphaSpec alpha = cmd.alpha();
  json out{{"alpha", jio::to_json(alpha)}, {"kind", to_string(alpha.kind())}, {"description", alpha.describe()}};
  out["rational"] = alpha.is_rational();
  std::vector<mpz_class> terms;
  bool complete = true;
  try {
    terms = cf_expand(alpha, opt.terms);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PrecisionExhausted || alpha.kind() != AlphaKind::Decimal) throw;
    const auto& dec = alpha.as<AlphaSpec::Decimal>();
    terms = certified_prefix(dec.value - dec.error, dec.value + dec.error, opt.terms);
    complete = false;
  }
  out["cf_prefix"] = quotient_list(terms);
  out["cf_prefix_complete"] = complete;
  json convs = json::array();
  for (const auto& c : convergents_from_terms(terms)) convs.push_back(jio::to_json(c));
  out["convergents"] = convs;
  if (alpha.is_rational()) {
    out["diophantine"] = nullptr;
    out["quadratic"] = nullptr;
    return out;
  }
  const mpz_class k_max = integer_flag("k-max", opt.k_max);
  if (k_max < 1 || k_max > 64) fail(ErrorKind::InvalidArgument, "--k-max must be in [1, 64]");
  const mpz_class budget = integer_flag("n-budget", opt.n_budget);
  if (budget < 1) fail(ErrorKind::InvalidArgument, "--n-budget must be positive");
  out["diophantine"] = jio::to_json(diophantine_report(alpha, static_cast<unsigned>(k_max.get_ui()), budget));
  out["diophantine"].erase("alpha");
  if (opt.depth < 2) fail(ErrorKind::InvalidArgument, "--depth must be >= 2");
  if (auto period = detect_quadratic(alpha, opt.depth)) {
    out["quadratic"] = {{"preperiod", quotient_list(period->preperiod)},
                        {"period", quotient_list(period->period)},
                        {"confirmed", period->confirmed}};
  } else {
    out["quadratic"] = nullptr;
  }
  return out;
}

std::vector<PlotSeries> coefficient_series(const PeriodicFunction& f, const std::string& name) {
  PlotSeries s{name, {}};
  for (const auto& [k, c] : f.coeffs()) {
    if (k == 0) continue;
    s.points.emplace_back(format_integer(k), decimal(c.magnitude(64)));
  }
  return {s};
}

json solve_command(Command& cmd, const Options& opt) {
  const SolvePolicy policy = cmd.policy();
  const AlphaSpec alpha = cmd.alpha();
  const PeriodicFunction f = jio::parse_function(cmd.input_json("f", opt.f), policy.bits());
  const SolveResult result = solve(f, alpha, policy);
  json out = jio::to_json(result);
  out["alpha"] = jio::to_json(alpha);
  cmd.csv(result.g.to_csv());
  std::vector<PlotSeries> series = coefficient_series(result.g, "abs_g");
  PlotSeries lambda{"abs_lambda", {}};
  for (const auto& d : result.divisors) lambda.points.emplace_back(format_integer(d.k), decimal(d.magnitude.hi()));
  series.push_back(std::move(lambda));
  cmd.plot(series);
  return out;
}

// A class without alpha and without fluctuation is classified by its drift alone.
std::optional<json> symbolic_class(const json& j, const SolvePolicy& policy) {
  if (!j.is_object() || j.contains("alpha")) return std::nullopt;
  for (const auto& [key, value] : j.items()) {
    if (key != "c" && key != "delta") fail(ErrorKind::InvalidArgument, "class: unknown key '" + key + "'");
  }
  const PeriodicFunction delta = j.contains("delta") ? jio::parse_function(j["delta"], policy.bits()) : PeriodicFunction();
  if (!delta.coeffs().empty()) return std::nullopt;
  const Scalar c = j.contains("c") ? jio::parse_scalar(j["c"], policy.bits(), "class") : Scalar(0);
  json out{{"kind", to_string(c.is_zero() ? BundleKind::TrivialProduct : BundleKind::TorusLinearFlow)},
           {"reduced", true},
           {"evidence", nullptr},
           {"witness", nullptr}};
  out["speed"] = c.is_zero() ? json(nullptr) : jio::scalar(Scalar(1) / c);
  out["class"] = {{"alpha", nullptr}, {"c", jio::scalar(c)}, {"delta", jio::to_json(delta)}};
  return out;
}

json flow_command(Command& cmd, const Options& opt, const std::string& action) {
  const SolvePolicy policy = cmd.policy();
  const std::optional<AlphaSpec> fallback = cmd.optional_alpha();
  const json class_json = cmd.input_json("class", opt.cls);
  if (action == "classify" && !fallback) {
    if (auto out = symbolic_class(class_json, policy)) return *out;
  }
  const FlowClass a = jio::parse_flow_class(class_json, fallback, policy.bits());
  if (action == "classify") {
    json out = jio::to_json(classify_bundle(a, policy));
    out["class"] = jio::to_json(a);
    cmd.csv(a.delta.to_csv());
    return out;
  }
  FlowClass result = a;
  if (action == "add") {
    const FlowClass b = jio::parse_flow_class(cmd.input_json("other", opt.other), fallback, policy.bits());
    result = flow_add(a, b);
  } else {
    result = flow_inverse(a);
  }
  cmd.csv(result.delta.to_csv());
  return {{"class", jio::to_json(result)}};
}

json cocycle_command(Command& cmd, const Options& opt) {
  const SolvePolicy policy = cmd.policy();
  const FlowClass a = jio::parse_flow_class(cmd.input_json("class", opt.cls), cmd.optional_alpha(), policy.bits());
  const PeriodicFunction tau = cocycle_expand(a, opt.m, policy.bits());
  cmd.csv(tau.to_csv());
  PlotSeries samples{"tau", {}};
  constexpr int kSamples = 256;
  for (int j = 0; j < kSamples; ++j) {
    const MpFloat x = MpFloat::from_rational(mpq_class(j, kSamples), policy.bits());
    samples.points.emplace_back(mpq_class(j, kSamples).get_str(), decimal(tau.eval(x, policy.bits())));
  }
  cmd.plot({samples});
  return {{"m", opt.m}, {"class", jio::to_json(a)}, {"tau", jio::to_json(tau)}};
}

json birkhoff_command(Command& cmd, const Options& opt) {
  const SolvePolicy policy = cmd.policy();
  const AlphaSpec alpha = cmd.alpha();
  const PeriodicFunction f = jio::parse_function(cmd.input_json("f", opt.f), policy.bits());
  if (opt.n_max < 1 || opt.n_max > 100000000) fail(ErrorKind::InvalidArgument, "--n-max must be in [1, 10^8]");
  const BirkhoffReport report = birkhoff_sum(f, alpha, opt.x0, opt.n_max, policy);
  json out = jio::to_json(report);
  out["alpha"] = jio::to_json(alpha);
  std::ostringstream csv;
  csv << std::setprecision(17) << "n,S_n,D_n\n";
  PlotSeries d{"D_n", {}};
  for (std::size_t i = 0; i < report.d.size(); ++i) {
    csv << i + 1 << "," << report.s[i] << "," << report.d[i] << "\n";
    std::ostringstream y;
    y << std::setprecision(17) << report.d[i];
    d.points.emplace_back(std::to_string(i + 1), y.str());
  }
  cmd.csv(csv.str());
  cmd.plot({d});
  return out;
}

std::vector<Scalar> coefficient_vector(Command& cmd, const Options& opt, std::size_t size, mpfr_prec_t bits) {
  std::vector<Scalar> coeffs(size, Scalar(1));
  if (opt.coeffs.empty()) return coeffs;
  const json j = cmd.input_json("coeffs", opt.coeffs);
  if (!j.is_array() || j.size() != size) {
    fail(ErrorKind::InvalidArgument, "--coeffs must be an array of " + std::to_string(size) + " numbers");
  }
  for (std::size_t i = 0; i < size; ++i) coeffs[i] = jio::parse_scalar(j[i], bits, "coeffs");
  return coeffs;
}

json counterexample_command(Command& cmd, const Options& opt, const std::string& action) {
  SolvePolicy policy = cmd.policy();
  const AlphaSpec alpha = cmd.alpha();
  if (action == "verify" && !opt.f.empty()) {
    const PeriodicFunction f = jio::parse_function(cmd.input_json("f", opt.f), policy.bits());
    std::size_t positive = 0;
    for (const auto& [k, c] : f.coeffs()) positive += k > 0 ? 1 : 0;
    const std::size_t p_check = opt.p_check.value_or(positive);
    const CertificationReport report = verify_not_coboundary(f, alpha, p_check, nullptr, policy.bits());
    return {{"alpha", jio::to_json(alpha)}, {"p_check", p_check}, {"certificate", jio::to_json(report)}};
  }
  if (opt.p_max < 1 || opt.p_max > 64) fail(ErrorKind::InvalidArgument, "--p-max must be in [1, 64]");
  if (opt.m_count < 1 || opt.m_count > opt.p_max) fail(ErrorKind::InvalidArgument, "--m must be in [1, p-max]");
  SelectOptions select;
  select.precision_digits = std::max<long>(select.precision_digits, policy.precision_digits);
  const ResonantModes modes = select_resonant_modes(alpha, opt.p_max, select);
  const CounterexampleFamily family = build_family(partition_modes(modes, opt.m_count), alpha);
  std::ostringstream csv;
  csv << "set,p,k,coefficient\n";
  PlotSeries lambda{"log10_abs_lambda", {}};
  for (const auto& c : family.coefficients) {
    const std::string k = format_integer(c.k);
    csv << c.set << "," << c.p << "," << k << "," << decimal(c.root.mid()) << "\n";
    std::ostringstream y;
    y << std::setprecision(12) << c.magnitude.hi().log2_abs() * 0.30102999566398119521;
    lambda.points.emplace_back(k, y.str());
  }
  cmd.csv(csv.str());
  cmd.plot({lambda});
  if (action == "build") return jio::to_json(family);
  const std::size_t p_check = opt.p_check.value_or(opt.p_max);
  json certificates = json::array();
  for (std::size_t m = 0; m < family.size(); ++m) {
    certificates.push_back(jio::to_json(verify_not_coboundary(family, m, p_check)));
  }
  const std::vector<Scalar> coeffs = coefficient_vector(cmd, opt, family.size(), family.bits);
  json out{{"alpha", jio::to_json(alpha)}, {"p_max", opt.p_max}, {"m", opt.m_count}, {"p_check", p_check}};
  out["certificates"] = certificates;
  out["independence"] = jio::to_json(independence_check(family, coeffs));
  return out;
}

json pi0_command(Command& cmd, const Options& opt) {
  cmd.policy();
  if (!opt.minpoly.empty()) {
    const json j = cmd.input_json("minpoly", opt.minpoly);
    if (!j.is_array()) fail(ErrorKind::InvalidArgument, "--minpoly must be a JSON array, constant term first");
    std::vector<mpz_class> coeffs;
    for (const auto& c : j) coeffs.push_back(jio::parse_integer(c, "minpoly"));
    return jio::to_json(pi0_rank(coeffs));
  }
  if (opt.alpha.empty()) fail(ErrorKind::InvalidArgument, "pi0 needs --minpoly or --alpha");
  return jio::to_json(pi0_for_alpha(cmd.alpha(), opt.depth));
}

json scan_command(Command& cmd, const Options& opt) {
  const SolvePolicy policy = cmd.policy();
  const AlphaSpec alpha = cmd.alpha();
  const mpz_class K = integer_flag("K", opt.K);
  if (K < 1) fail(ErrorKind::InvalidArgument, "--K must be positive");
  const std::vector<ModeDivisor> records = min_divisor_scan(alpha, K, policy.bits());
  json list = json::array();
  PlotSeries series{"record", {}};
  std::ostringstream csv;
  csv << "k,magnitude,distance\n";
  for (const auto& d : records) {
    list.push_back(jio::to_json(d));
    series.points.emplace_back(format_integer(d.k), decimal(d.magnitude.hi()));
    csv << format_integer(d.k) << "," << decimal(d.magnitude.hi()) << "," << decimal(d.distance.hi()) << "\n";
  }
  cmd.csv(csv.str());
  cmd.plot({series});
  return {{"alpha", jio::to_json(alpha)}, {"K", jio::integer(K)}, {"records", list}};
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PrecisionExhausted:
      return kPrecision;
    case ErrorKind::CertificationFailed:
    case ErrorKind::InvariantViolation:
      return kInternal;
    default:
      return kValidation;
  }
}

void report(std::ostream& err, std::string_view kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ensure_wide_exponent_range();
  Options opt;
  CLI::App app{"Small-divisor analysis for rotations of the circle", "smalldiv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SMALLDIV_VERSION_STRING);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--precision-digits", opt.precision_digits, "Working precision in decimal digits");
    sub->add_option("--manifest", opt.manifest, "Write a run manifest to this path");
    sub->add_option("--policy", opt.policy, "Solve policy (JSON, @file or path)");
    sub->add_option("--csv", opt.csv, "CSV dump path");
    sub->add_option("--plot-data", opt.plot_data, "Plot series path (series,x,y)");
  };
  auto alpha_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--alpha", opt.alpha, "Rotation number (JSON, @file or path)");
    if (required) o->required();
  };

  auto* classify = app.add_subcommand("classify-alpha", "Continued fraction and Diophantine evidence");
  alpha_opt(classify, true);
  classify->add_option("--k-max", opt.k_max, "Largest exponent tested");
  classify->add_option("--n-budget", opt.n_budget, "Largest denominator examined");
  classify->add_option("--depth", opt.depth, "Quotients inspected for periodicity");
  classify->add_option("--terms", opt.terms, "Continued fraction terms printed");
  common(classify);

  auto* solve_cmd = app.add_subcommand("solve", "Solve g(x + alpha) - g(x) = f(x)");
  alpha_opt(solve_cmd, true);
  solve_cmd->add_option("--f", opt.f, "Periodic function")->required();
  common(solve_cmd);

  auto* flow = app.add_subcommand("flow", "Flow class arithmetic");
  flow->require_subcommand(1);
  std::string flow_action;
  const std::pair<const char*, const char*> flow_cmds[] = {
      {"classify", "Report the class, its trivial flag and a witness"},
      {"add", "Group product of two classes"},
      {"inverse", "Group inverse of a class"}};
  for (const auto& [name, help] : flow_cmds) {
    auto* sub = flow->add_subcommand(name, help);
    sub->add_option("--class", opt.cls, "Flow class")->required();
    if (std::string(name) == "add") sub->add_option("--other", opt.other, "Second flow class")->required();
    alpha_opt(sub, false);
    common(sub);
    sub->callback([&flow_action, name] { flow_action = name; });
  }

  auto* cocycle = app.add_subcommand("cocycle", "Expand tau(m) for a flow class");
  cocycle->add_option("--class", opt.cls, "Flow class")->required();
  cocycle->add_option("--m", opt.m, "Iterate")->required();
  alpha_opt(cocycle, false);
  common(cocycle);

  auto* birkhoff = app.add_subcommand("birkhoff", "Birkhoff sums along an orbit");
  alpha_opt(birkhoff, true);
  birkhoff->add_option("--f", opt.f, "Periodic function")->required();
  birkhoff->add_option("--x0", opt.x0, "Starting point");
  birkhoff->add_option("--n-max", opt.n_max, "Number of steps");
  common(birkhoff);

  auto* counter = app.add_subcommand("counterexample", "Resonant families outside the image");
  counter->require_subcommand(1);
  std::string counter_action;
  const std::pair<const char*, const char*> counter_cmds[] = {
      {"build", "Select resonant modes and build the family"},
      {"verify", "Certify members and their independence"}};
  for (const auto& [name, help] : counter_cmds) {
    auto* sub = counter->add_subcommand(name, help);
    alpha_opt(sub, true);
    sub->add_option("--p-max", opt.p_max, "Number of resonant modes");
    sub->add_option("--m", opt.m_count, "Number of family members");
    if (std::string(name) == "verify") {
      sub->add_option("--coeffs", opt.coeffs, "Linear combination tested for independence");
      sub->add_option("--f", opt.f, "Verify an arbitrary function instead of the family");
      sub->add_option("--p-check", opt.p_check, "Modes checked");
    }
    common(sub);
    sub->callback([&counter_action, name] { counter_action = name; });
  }

  auto* pi0 = app.add_subcommand("pi0", "Unit group rank of the characteristic field");
  pi0->add_option("--minpoly", opt.minpoly, "Integer coefficients, constant term first");
  alpha_opt(pi0, false);
  pi0->add_option("--depth", opt.depth, "Quotients inspected for periodicity");
  common(pi0);

  auto* scan = app.add_subcommand("scan-divisors", "Record small divisors up to K");
  alpha_opt(scan, true);
  scan->add_option("--K", opt.K, "Largest mode");
  common(scan);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << SMALLDIV_VERSION_STRING << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    report(err, "InvalidArgument", e.what());
    return kValidation;
  }

  std::string name;
  for (auto* sub : app.get_subcommands()) {
    name = sub->get_name();
    for (auto* inner : sub->get_subcommands()) name += " " + inner->get_name();
  }
  Command cmd(name, opt);
  const auto start = std::chrono::steady_clock::now();
  try {
    json doc;
    if (classify->parsed()) {
      cmd.policy();
      doc = classify_alpha(cmd, opt);
    } else if (solve_cmd->parsed()) {
      doc = solve_command(cmd, opt);
    } else if (flow->parsed()) {
      doc = flow_command(cmd, opt, flow_action);
    } else if (cocycle->parsed()) {
      doc = cocycle_command(cmd, opt);
    } else if (birkhoff->parsed()) {
      doc = birkhoff_command(cmd, opt);
    } else if (counter->parsed()) {
      doc = counterexample_command(cmd, opt, counter_action);
    } else if (pi0->parsed()) {
      doc = pi0_command(cmd, opt);
    } else {
      doc = scan_command(cmd, opt);
    }
    doc["policy"] = cmd.policy_echo();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    cmd.commit(doc, out, seconds);
    return kOk;
  } catch (const Error& e) {
    report(err, to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const IoError& e) {
    report(err, "IoError", e.what());
    return kIo;
  } catch (const nlohmann::json::exception& e) {
    report(err, "InvalidArgument", e.what());
    return kValidation;
  } catch (const std::exception& e) {
    report(err, "Internal", e.what());
    return kInternal;
  }
}

void emit_plot_data(const std::vector<PlotSeries>& series, const std::string& path) {
  std::size_t rows = 0;
  for (const auto& s : series) rows += s.points.size();
  if (rows == 0) fail(ErrorKind::InvalidArgument, "plot data needs at least one point");
  std::ostringstream os;
  os << "series,x,y\n";
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) os << s.name << "," << x << "," << y << "\n";
  }
  Command::write(path, os.str());
}

}  // namespace smalldiv::cli
