#include <gtest/gtest.h>

#include <random>

#include "multmon/parse.hpp"
#include "multmon/random.hpp"

namespace multmon {
namespace {

ParseErrorCode code_of(std::string_view text, VariableTablePtr vars = nullptr) {
  try {
    parse_ideal(text, std::move(vars));
  } catch (const ParseError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return ParseErrorCode::Syntax;
}

TEST(Parse, SixGenerators) {
  const auto parsed = parse_ideal("a^2*b*c, b^3*c, c^4, d^2*e^2, d*e*f, d*g^2");
  EXPECT_EQ(parsed.ideal.size(), 6u);
  EXPECT_EQ(parsed.ideal.variables()->names(),
            (std::vector<std::string>{"a", "b", "c", "d", "e", "f", "g"}));
  EXPECT_TRUE(parsed.notices.empty());
}

TEST(Parse, NotationVariants) {
  const auto a = parse_ideal("a^2*b*c, b^3*c").ideal;
  EXPECT_EQ(parse_ideal("a^2 b c; b^3 c").ideal, a);
  EXPECT_EQ(parse_ideal("  a^2*b*c ,b^3*c  # trailing comment").ideal, a);
  EXPECT_EQ(parse_ideal("x_1^2*x_2").ideal.to_string(), "x_1^2*x_2");
  EXPECT_EQ(parse_ideal("a*a").ideal.to_string(), "a^2");
}

TEST(Parse, Notices) {
  const auto parsed = parse_ideal("x^2, x^3");
  EXPECT_EQ(parsed.ideal.to_string(), "x^2");
  EXPECT_EQ(parsed.notices.size(), 1u);
  EXPECT_EQ(parse_ideal("x, x").notices.size(), 1u);
}

TEST(Parse, Errors) {
  EXPECT_EQ(code_of("x^0"), ParseErrorCode::ZeroExponent);
  EXPECT_EQ(code_of("x^99999999999"), ParseErrorCode::ExponentTooLarge);
  EXPECT_EQ(code_of(""), ParseErrorCode::EmptyIdeal);
  EXPECT_EQ(code_of("  # only a comment"), ParseErrorCode::EmptyIdeal);
  EXPECT_EQ(code_of("x, 1"), ParseErrorCode::UnitGenerator);
  EXPECT_EQ(code_of("x, y", parse_variable_list("x")), ParseErrorCode::UnknownVariable);
  EXPECT_EQ(code_of("x^"), ParseErrorCode::Syntax);
  EXPECT_EQ(code_of("x,,y"), ParseErrorCode::Syntax);
  EXPECT_EQ(code_of("2*x"), ParseErrorCode::Syntax);
}

TEST(Parse, ErrorPosition) {
  try {
    parse_ideal("x, y^0", nullptr, 7);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 6u);
  }
}

TEST(Parse, VariableList) {
  EXPECT_EQ(parse_variable_list("a,b, c")->names(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_THROW(parse_variable_list("a,a"), Error);
  EXPECT_THROW(parse_variable_list("a,,b"), Error);
}

TEST(Parse, ExponentMaps) {
  const std::vector<ExponentMap> gens{{{"a", 2}, {"b", 1}}, {{"b", 3}}, {{"a", 1}, {"b", 1}}};
  const auto parsed = ideal_from_exponent_maps(gens);
  EXPECT_EQ(parsed.ideal, parse_ideal("a^2*b, b^3, a*b").ideal);

  const auto code = [](std::vector<ExponentMap> g) {
    try {
      ideal_from_exponent_maps(g);
    } catch (const ParseError& e) {
      return e.code();
    }
    return ParseErrorCode::Syntax;
  };
  EXPECT_EQ(code({{{"x", 0}}}), ParseErrorCode::ZeroExponent);
  EXPECT_EQ(code({}), ParseErrorCode::EmptyIdeal);
  EXPECT_EQ(code({{{"x", 1}}, {}}), ParseErrorCode::UnitGenerator);
  EXPECT_EQ(code({{{"x", std::uint64_t{1} << 40}}}), ParseErrorCode::ExponentTooLarge);
}

TEST(ParseProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(61);
  for (int n = 0; n < 1000; ++n) {
    const auto m = random_ideal(rng, {10, 8, 12});
    const auto text = print_ideal(m);
    EXPECT_EQ(parse_ideal(text, m.variables()).ideal, m) << text;
  }
}

}  // namespace
}  // namespace multmon
