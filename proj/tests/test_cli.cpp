#include "smalldiv_cli/cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kGolden = SMALLDIV_GOLDEN_DIR;
const std::string kSqrt2 = R"({"kind":"surd","a":0,"b":1,"d":2,"c":1})";
const std::string kSilver = R"({"kind":"surd","a":-1,"b":1,"d":2,"c":1})";
const std::string kLiouville = R"({"kind":"liouville","base":10})";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = smalldiv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "smalldiv_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

// Compares against tests/golden/<name>; SMALLDIV_UPDATE_GOLDEN=1 rewrites it.
void expect_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(kGolden) / name;
  if (const char* update = std::getenv("SMALLDIV_UPDATE_GOLDEN"); update && std::string(update) == "1") {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  ASSERT_TRUE(fs::exists(path)) << path;
  EXPECT_EQ(slurp(path), actual) << "golden mismatch: " << name;
}

const std::string kCosine = "@" + kGolden + "/inputs/cosine_pair.json";

}  // namespace

TEST(Cli, SolveGolden) {
  const auto r = run({"solve", "--alpha", kSqrt2, "--f", kCosine});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["verdict"], "Solved");
  expect_golden("solve_sqrt2.json", r.out);
}

TEST(Cli, BarePathInput) {
  const auto r = run({"solve", "--alpha", kSqrt2, "--f", kGolden + "/inputs/cosine_pair.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, run({"solve", "--alpha", kSqrt2, "--f", kCosine}).out);
}

TEST(Cli, Pi0Golden) {
  const auto r = run({"pi0", "--minpoly", "[-2,0,0,1]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["r"], 1);
  EXPECT_EQ(j["s"], 1);
  EXPECT_EQ(j["rank"], 1);
  expect_golden("pi0_cubic.json", r.out);
}

TEST(Cli, SymbolicFlowClassify) {
  const auto r = run({"flow", "classify", "--class", R"({"c":0,"delta":{"coeffs":[]}})"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["kind"], "TrivialProduct");
  expect_golden("flow_trivial.json", r.out);
}

TEST(Cli, FlowNeedsAlphaForFluctuation) {
  const auto r = run({"flow", "classify", "--class", R"({"c":0,"delta":{"coeffs":[{"k":1,"re":1,"im":0}]}})"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, FlowAddAndInverse) {
  const auto add = run({"flow", "add", "--alpha", kSqrt2, "--class", R"({"c":1})", "--other", R"({"c":"1/2"})"});
  ASSERT_EQ(add.code, 0) << add.err;
  EXPECT_EQ(json::parse(add.out)["class"]["c"], 1.5);
  const auto inv = run({"flow", "inverse", "--alpha", kSqrt2, "--class", R"({"c":2})"});
  ASSERT_EQ(inv.code, 0) << inv.err;
  EXPECT_EQ(json::parse(inv.out)["class"]["c"], -2);
}

TEST(Cli, ClassifyLiouvilleGolden) {
  const auto r = run({"classify-alpha", "--alpha", kLiouville, "--k-max", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["diophantine"]["verdict"], "NonDiophantineEvidence");
  expect_golden("classify_liouville.json", r.out);
}

TEST(Cli, ScanPlotDataGolden) {
  const auto plot = scratch("scan.csv");
  const auto r = run({"scan-divisors", "--alpha", kSilver, "--K", "30", "--plot-data", plot.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  expect_golden("scan_silver.csv", slurp(plot));
}

TEST(Cli, BirkhoffRowCount) {
  const auto plot = scratch("birkhoff.csv");
  const auto r = run({"birkhoff", "--alpha", kSqrt2, "--f", kCosine, "--n-max", "1000", "--plot-data", plot.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(slurp(plot));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "series,x,y");
  int rows = 0;
  while (std::getline(in, line)) rows += line.rfind("D_n,", 0) == 0 ? 1 : 0;
  EXPECT_EQ(rows, 1000);
}

TEST(Cli, CounterexampleVerify) {
  const auto r = run({"counterexample", "verify", "--alpha", kLiouville, "--p-max", "5", "--m", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["independence"]["verdict"], "NotACoboundary");
  EXPECT_EQ(j["certificates"].size(), 3u);
}

TEST(Cli, CsvDump) {
  const auto csv = scratch("g.csv");
  const auto r = run({"solve", "--alpha", kSqrt2, "--f", kCosine, "--csv", csv.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string text = slurp(csv);
  EXPECT_EQ(text.rfind("k,re,im\n-3,", 0), 0u) << text;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"solve", "--alpha", R"({"kind":"rational","p":1,"q":2})", "--f", kCosine}).code, 2);
  EXPECT_EQ(run({"solve", "--alpha", "{broken", "--f", kCosine}).code, 2);
  EXPECT_EQ(run({"solve", "--alpha", kSqrt2, "--f", "@/nonexistent/f.json"}).code, 5);
  EXPECT_EQ(run({"pi0", "--minpoly", "[1,-2,1]"}).code, 2);
  const auto precision = run({"scan-divisors", "--alpha", R"({"kind":"decimal","digits":"0.41421356","err_num":1,"err_den":100000000})",
                              "--K", "10^12"});
  EXPECT_EQ(precision.code, 3) << precision.err;
  const auto err = json::parse(precision.err);
  EXPECT_EQ(err["error"], "PrecisionExhausted");
}

TEST(Cli, NoArtifactsOnFailure) {
  const auto csv = scratch("never.csv");
  const auto manifest = scratch("never.manifest.json");
  const auto r = run({"solve", "--alpha", R"({"kind":"rational","p":1,"q":2})", "--f", kCosine, "--csv", csv.string(),
                      "--manifest", manifest.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(fs::exists(csv));
  EXPECT_FALSE(fs::exists(manifest));
}

TEST(Cli, EmptyPlotIsRejected) {
  const auto plot = scratch("empty.csv");
  const auto r = run({"solve", "--alpha", kSqrt2, "--f", R"({"coeffs":[]})", "--plot-data", plot.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(fs::exists(plot));
}

TEST(Cli, DeterministicOutputAndManifest) {
  const auto m1 = scratch("m1.json"), m2 = scratch("m2.json");
  const auto a = run({"solve", "--alpha", kSqrt2, "--f", kCosine, "--manifest", m1.string()});
  const auto b = run({"solve", "--alpha", kSqrt2, "--f", kCosine, "--manifest", m2.string()});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j1 = json::parse(slurp(m1)), j2 = json::parse(slurp(m2));
  EXPECT_EQ(j1["subcommand"], "solve");
  EXPECT_EQ(j1["inputs"], j2["inputs"]);
  EXPECT_EQ(j1["stdout_sha256"], j2["stdout_sha256"]);
  EXPECT_EQ(j1["stdout_sha256"].get<std::string>().size(), 64u);
  EXPECT_EQ(j1["policy"]["precision_digits"], 50);
}

TEST(Cli, PrecisionPrecedence) {
  ::setenv("SMALLDIV_PRECISION_DIGITS", "70", 1);
  const auto env = run({"solve", "--alpha", kSqrt2, "--f", kCosine});
  const auto policy = run({"solve", "--alpha", kSqrt2, "--f", kCosine, "--policy", R"({"precision_digits":90})"});
  const auto flag = run({"solve", "--alpha", kSqrt2, "--f", kCosine, "--policy", R"({"precision_digits":90})",
                         "--precision-digits", "110"});
  ::setenv("SMALLDIV_PRECISION_DIGITS", "abc", 1);
  const auto bad = run({"solve", "--alpha", kSqrt2, "--f", kCosine});
  ::unsetenv("SMALLDIV_PRECISION_DIGITS");
  EXPECT_EQ(json::parse(env.out)["policy"]["precision_digits"], 70);
  EXPECT_EQ(json::parse(policy.out)["policy"]["precision_digits"], 90);
  EXPECT_EQ(json::parse(flag.out)["policy"]["precision_digits"], 110);
  EXPECT_EQ(bad.code, 2);
}
