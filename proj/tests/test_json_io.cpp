#include "smalldiv/error.hpp"
#include "smalldiv/json_io.hpp"

#include <gtest/gtest.h>

using namespace smalldiv;
namespace jio = smalldiv::json_io;
using nlohmann::json;

TEST(JsonIo, AlphaRoundTrips) {
  for (const char* text : {R"({"kind":"surd","a":-1,"b":1,"d":2,"c":1})", R"({"kind":"rational","p":3,"q":7})",
                           R"({"kind":"liouville","base":10})", R"({"kind":"cf","quotients":[0,1,2,3]})",
                           R"({"kind":"cf","quotients":[0],"period":[1,4]})",
                           R"({"kind":"decimal","digits":"0.4142","err_num":1,"err_den":10000})"}) {
    const auto alpha = jio::parse_alpha(json::parse(text));
    EXPECT_EQ(jio::parse_alpha(jio::to_json(alpha)), alpha) << text;
  }
}

TEST(JsonIo, AlphaValidation) {
  EXPECT_THROW(jio::parse_alpha(json::parse(R"({"kind":"surd","a":0,"b":1,"d":4,"c":1,"x":2})")), Error);
  EXPECT_THROW(jio::parse_alpha(json::parse(R"({"kind":"liouville","base":1})")), Error);
  EXPECT_THROW(jio::parse_alpha(json::parse(R"({"kind":"nope"})")), Error);
  EXPECT_THROW(jio::parse_alpha(json::parse(R"({"kind":"rational","p":1})")), Error);
}

TEST(JsonIo, FunctionRoundTrips) {
  const auto f = jio::parse_function(json::parse(R"({"coeffs":[{"k":0,"re":3,"im":0},{"k":1,"re":0.5,"im":-0.25},
                                                     {"k":7,"re":"1/3","im":"2.5e-400"}]})"));
  EXPECT_EQ(f.coefficient(1).re, Scalar(mpq_class(1, 2)));
  EXPECT_EQ(f.coefficient(7).re, Scalar(mpq_class(1, 3)));
  const auto back = jio::parse_function(jio::to_json(f));
  EXPECT_EQ(back, f);
}

TEST(JsonIo, PolicyDefaultsAndOverrides) {
  const auto p = jio::parse_policy(json::parse(R"({"residual_tol":1e-8,"precision_digits":80})"));
  EXPECT_EQ(p.residual_tol, 1e-8);
  EXPECT_EQ(p.precision_digits, 80);
  EXPECT_EQ(p.zero_mean_tol, 1e-12);
  EXPECT_THROW(jio::parse_policy(json::parse(R"({"tolerance":1})")), Error);
}

TEST(JsonIo, HugeAndTinyNumbersUseDecimalStrings) {
  MpFloat tiny(128);
  mpfr_set_ui_2exp(tiny.get(), 1, -1458594000, MPFR_RNDN);
  const json j = jio::number(tiny);
  ASSERT_TRUE(j.is_object());
  EXPECT_EQ(j["repr"], "decimal-string");
  EXPECT_NE(j["value"].get<std::string>().find("e-439"), std::string::npos);
  EXPECT_TRUE(jio::number(MpFloat(0.1, 128)).is_number());
  const MpFloat back = jio::parse_scalar(j, 128, "x").to_float(128);
  EXPECT_NEAR((back / tiny).to_double(), 1.0, 1e-15);
}

TEST(JsonIo, NumbersHaveFixedSignificantDigits) {
  EXPECT_EQ(jio::number(1.0 / 3.0).dump(), "0.333333333333333");
  EXPECT_EQ(jio::number(MpFloat(2.0, 200) / MpFloat(3.0, 200)).dump(), "0.666666666666667");
}

TEST(JsonIo, IntegersBeyondDoubleAreStrings) {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 120);
  EXPECT_EQ(jio::integer(big), "1" + std::string(120, '0'));
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 362880);
  EXPECT_EQ(jio::integer(big), "10^362880");
  EXPECT_EQ(jio::parse_integer(json("10^362880"), "k"), big);
  EXPECT_EQ(jio::integer(mpz_class(42)), 42);
}

TEST(JsonIo, ParseErrorsAreValidationErrors) {
  try {
    jio::parse_text("{not json", "alpha");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}
