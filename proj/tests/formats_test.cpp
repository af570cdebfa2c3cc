#include <gtest/gtest.h>

#include "equm/error.hpp"
#include "equm/fixtures.hpp"
#include "equm/formats.hpp"
#include "support/random_models.hpp"

namespace equm {
namespace {

NSReal eps(int k = 1) { return NSReal::eps(k); }
NSReal q(long n, long d = 1) { return NSReal(make_rational(n, d)); }

ErrorCode parse_error(std::string_view text, std::string* message = nullptr) {
  try {
    parse_model(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "model parsed";
  return ErrorCode::InvariantViolation;
}

TEST(Literal, Parse) {
  EXPECT_EQ(parse_nsreal("1/6 - 1/6*eps + eps"), q(1, 6) + q(5, 6) * eps());
  EXPECT_EQ(parse_nsreal("eps^-1"), eps(-1));
  EXPECT_TRUE(parse_nsreal("0").is_zero());
  EXPECT_EQ(parse_nsreal("-eps^-2"), -eps(-2));
  EXPECT_EQ(parse_nsreal(" 3 * eps ^ 2 "), q(3) * eps(2));
  EXPECT_EQ(parse_nsreal("+2/4"), q(1, 2));
}

TEST(Literal, Render) {
  EXPECT_EQ(render_nsreal(q(1, 6) + q(5, 6) * eps()), "1/6 + 5/6*eps");
  EXPECT_EQ(render_nsreal(NSReal{}), "0");
  EXPECT_EQ(render_nsreal(-eps(-1)), "-eps^-1");
  EXPECT_EQ(render_nsreal(q(1, 12) * eps()), "1/12*eps");
  EXPECT_EQ(render_nsreal(q(1) - eps(2)), "1 - eps^2");
  EXPECT_EQ(render_nsreal(q(-7, 2)), "-7/2");
}

TEST(Literal, Errors) {
  for (const char* bad : {"", "1/", "eps^", "1 +", "2 ** eps", "x", "1/0", "eps^1/2", "--1"}) {
    try {
      parse_nsreal(bad);
      ADD_FAILURE() << "parsed '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::SyntaxError || e.code() == ErrorCode::ZeroDenominator) << bad;
    }
  }
}

TEST(Literal, RoundTrip) {
  testing::Gen g(61);
  for (int i = 0; i < 1000; ++i) {
    const NSReal x = g.nsreal(4, -3, 3);
    const std::string text = render_nsreal(x);
    ASSERT_EQ(parse_nsreal(text), x) << text;
    ASSERT_EQ(render_nsreal(parse_nsreal(text)), text);
  }
}

TEST(Model, DiceFixture) {
  const auto doc = fixture_model("dice");
  ASSERT_TRUE(doc.states);
  EXPECT_EQ(doc.states->size(), 18u);
  int faces = 0, edges = 0;
  for (const auto& [state, b] : doc.belief) {
    if (render_nsreal(b) == "1/6 - 1/6*eps") ++faces;
    if (render_nsreal(b) == "1/12*eps") ++edges;
  }
  EXPECT_EQ(faces, 6);
  EXPECT_EQ(edges, 12);
  EXPECT_EQ(doc.acts.size(), 5u);
}

TEST(Model, EveryFixtureLoads) {
  for (const auto& [name, text] : embedded_fixtures()) EXPECT_NO_THROW(parse_model(text)) << name;
}

TEST(Model, MissingUtility) {
  std::string msg;
  EXPECT_EQ(parse_error("[model]\nregime = std\n[outcomes]\na = 1\n[lottery p]\na = 1/2\nb = 1/2\n", &msg),
            ErrorCode::SchemaError);
  EXPECT_NE(msg.find("b"), std::string::npos);
}

TEST(Model, RegimeViolations) {
  std::string msg;
  EXPECT_EQ(parse_error("[model]\nregime = ns-util\n[outcomes]\na = 1\nb = 0\n"
                        "[lottery p]\na = 1/2 + eps\nb = 1/2 - eps\n",
                        &msg),
            ErrorCode::RegimeViolation);
  EXPECT_NE(msg.find("1/2 + eps"), std::string::npos) << msg;
  EXPECT_EQ(parse_error("[model]\nregime = std\n[outcomes]\na = eps\n"), ErrorCode::RegimeViolation);
  EXPECT_EQ(parse_error("[model]\nregime = ns-prob\n[outcomes]\na = eps^-1\n"), ErrorCode::RegimeViolation);
}

TEST(Model, SchemaErrors) {
  EXPECT_EQ(parse_error("[outcomes]\na = 1\n"), ErrorCode::SchemaError);
  EXPECT_EQ(parse_error("[model]\nregime = weird\n"), ErrorCode::SchemaError);
  EXPECT_EQ(parse_error("[model]\nregime = std\n[outcomes]\na = -1\n"), ErrorCode::SchemaError);
  EXPECT_EQ(parse_error("[model]\nregime = std\n[outcomes]\na = 1\n[lottery p]\na = 1/2\n"),
            ErrorCode::SchemaError);
  EXPECT_EQ(parse_error("[model]\nregime = std\n[outcomes]\na = 1 +\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("[model]\nregime = std\n[outcomes]\na = 1\n[audit]\ngenerators = zz\n"),
            ErrorCode::UnknownId);
}

TEST(Model, SignedUtilities) {
  const auto doc = parse_model("[model]\nregime = ns-util\nsigned = true\n[outcomes]\nlow = -eps^-1\nhigh = -1\n");
  EXPECT_TRUE(doc.utility.is_signed());
  EXPECT_EQ(doc.utility.at("low"), -eps(-1));
}

TEST(Model, ResolveIds) {
  const auto doc = fixture_model("consolation");
  EXPECT_EQ(doc.resolve_lottery("magazine"), Lottery::degenerate("magazine"));
  EXPECT_EQ(doc.resolve_lottery("two_q2").probability("hawaii"), q(1, 2));
  try {
    doc.resolve_lottery("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownId);
  }
}

TEST(Report, DeterministicAndLineOriented) {
  const auto s = fixture_model("maximin3").structure();
  const auto a = render_report(run_audit(s), OutputMode::Machine);
  const auto b = render_report(run_audit(s, Execution::Serial), OutputMode::Machine);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("AUDIT regime=ns-util\n", 0), 0u);
  EXPECT_NE(a.find("VERDICT A2 FAIL "), std::string::npos);
  EXPECT_NE(a.find("\nRESULT FAIL\n"), std::string::npos);
}

}  // namespace
}  // namespace equm
