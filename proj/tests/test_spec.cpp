#include <gtest/gtest.h>

#include <random>

#include "envord/checks.hpp"
#include "envord/error.hpp"
#include "envord/format.hpp"
#include "envord/spec.hpp"
#include "oracles.hpp"

using namespace envord;

namespace {

const char* kSl2 =
    "ring Z\n"
    "basis e f h\n"
    "bracket e f = h\n"
    "bracket h e = 2*e\n"
    "bracket h f = -2*f\n"
    "split f | h e\n";

ParseError parse_error(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const ParseError& err) {
    return err;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError(0, 0, "none");
}

}  // namespace

TEST(ParseSpec, Sl2) {
  const AlgebraSpec spec = parse_spec(kSl2);
  EXPECT_EQ(spec.ring, Ring::integers());
  EXPECT_EQ(spec.basis, (std::vector<std::string>{"e", "f", "h"}));
  ASSERT_TRUE(spec.split.has_value());
  EXPECT_EQ(spec.split->first, (std::vector<BasisIndex>{1}));
  EXPECT_EQ(spec.split->second, (std::vector<BasisIndex>{2, 0}));
  auto alg = spec.build_algebra();
  auto reference = make_sl2(Ring::integers());
  EXPECT_EQ(alg->table(), reference->table());
}

TEST(ParseSpec, WrongTableParsesButFailsValidation) {
  const AlgebraSpec spec = parse_spec(
      "ring Z\nbasis e f h\nbracket e f = h\nbracket h e = 2*e\nbracket h f = -2*e\nsplit f | h e\n");
  EXPECT_FALSE(validate_algebra(*spec.build_algebra()).ok());
}

TEST(ParseSpec, SplitMustPartitionTheBasis) {
  const ParseError err = parse_error("ring Z\nbasis e f h\nsplit e | h\n");
  EXPECT_EQ(err.line(), 3);
  EXPECT_NE(std::string(err.what()).find("f unassigned"), std::string::npos) << err.what();
  EXPECT_THROW(parse_spec("ring Z\nbasis e f h\nsplit e f | f h\n"), ParseError);
}

TEST(ParseSpec, RoundTrip) {
  const AlgebraSpec spec = parse_spec(kSl2);
  const std::string printed = print_spec(spec);
  EXPECT_EQ(parse_spec(printed), spec);
  EXPECT_EQ(print_spec(parse_spec(printed)), printed);

  const AlgebraSpec q = parse_spec("ring Q\nbasis a b\nbracket a b = 1/2*a - 3/4*b\n");
  EXPECT_EQ(parse_spec(print_spec(q)), q);
  const AlgebraSpec m = parse_spec("ring Zmod 6\nbasis a b\nbracket a b = 7*a\nsplit a | b\n");
  EXPECT_EQ(m.brackets.at({0, 1})[0].coeff.to_string(), "1");
  EXPECT_EQ(parse_spec(print_spec(m)), m);
}

TEST(ParseSpec, CommentsBlankLinesAndCrlf) {
  const AlgebraSpec a = parse_spec(kSl2);
  const AlgebraSpec b = parse_spec(
      "# sl2\r\n\r\nring Z   # integers\r\nbasis e f h\r\n  bracket e f = h\r\nbracket h e = 2*e\r\n"
      "bracket h f = -2*f\r\n\tsplit f | h e\r\n");
  EXPECT_EQ(a, b);
}

TEST(ParseSpec, OppositeOrientation) {
  EXPECT_EQ(parse_spec("ring Z\nbasis a b\nbracket a b = a\nbracket b a = -a\n"),
            parse_spec("ring Z\nbasis a b\nbracket a b = a\n"));
  EXPECT_THROW(parse_spec("ring Z\nbasis a b\nbracket a b = a\nbracket b a = a\n"), ParseError);
  EXPECT_THROW(parse_spec("ring Z\nbasis a b\nbracket a b = a\nbracket a b = b\n"), ParseError);
  // a zero declaration is explicit zero
  EXPECT_TRUE(parse_spec("ring Z\nbasis a b\nbracket a b = 0\n").brackets.empty());
}

TEST(ParseSpec, ErrorsCarryLineAndColumn) {
  struct Bad {
    const char* text;
    int line;
  };
  const std::vector<Bad> cases{
      {"ring R\n", 1},
      {"ring Zmod 1\n", 1},
      {"ring Z\nbasis e e\n", 2},
      {"ring Z\nbasis e f\nbracket e g = f\n", 3},
      {"ring Z\nbasis e f\nbracket e f = 1/2*e\n", 3},
      {"ring Z\nbasis e f\nbracket e f = 3\n", 3},
      {"ring Z\nbasis e f\nbracket e f h\n", 3},
      {"ring Z\nbasis e f\nfrobnicate\n", 3},
      {"basis e f\n", 1},
      {"ring Z\n", 1},
      {"ring Z\nring Q\nbasis e\n", 2},
      {"ring Z\nbasis 9e\n", 2},
      {"ring Z\nbasis e f\nsplit e f\n", 3},
      {"ring Z\nbasis e f\nsplit e | f | \n", 3},
      {"ring Q\nbasis e f\nbracket e f = 1/0*e\n", 3},
      {"ring Z\nbasis \xc3\xa9\n", 2},
  };
  for (const auto& [text, line] : cases) {
    const ParseError err = parse_error(text);
    EXPECT_EQ(err.line(), line) << text;
    EXPECT_GE(err.column(), 1) << text;
    EXPECT_NE(std::string(err.what()).find(std::to_string(err.line()) + ":"), std::string::npos);
  }
}

TEST(ParseSpec, NeverCrashesOnRandomInput) {
  // mutations of a valid file plus raw noise: every outcome is success or ParseError
  const std::string base = kSl2;
  const std::string alphabet = "ef h*+-/|=0123456789()#\n\rZQ ringbasisbracketsplitmod\t\x01\xff";
  std::mt19937_64 rng(99);
  std::size_t errors = 0, ok = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string text = base;
    const int edits = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < edits; ++k) {
      const std::size_t pos = rng() % (text.size() + 1);
      switch (rng() % 3) {
        case 0: text.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
        case 1: if (pos < text.size()) text.erase(pos, 1); break;
        default: if (pos < text.size()) text[pos] = alphabet[rng() % alphabet.size()]; break;
      }
    }
    if (i % 10 == 0) {
      text.clear();
      for (int k = 0; k < 60; ++k) text += static_cast<char>(rng() % 256);
    }
    try {
      const AlgebraSpec spec = parse_spec(text);
      ++ok;
      EXPECT_EQ(parse_spec(print_spec(spec)), spec);
    } catch (const ParseError& err) {
      ++errors;
      EXPECT_GE(err.line(), 1);
      EXPECT_GE(err.column(), 1);
    }
  }
  EXPECT_GT(errors, 0u);
  EXPECT_GT(ok, 0u);
}

TEST(ParseExpr, Examples) {
  auto sl2 = make_sl2(Ring::integers());
  const Scalar one = Scalar::one(sl2->ring());
  const EnvElement a = parse_expr("e*f + 2*h", *sl2);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a, EnvElement::word(*sl2, {0, 1}) + EnvElement::word(*sl2, {2}, Scalar(sl2->ring(), 2L)));
  EXPECT_EQ(parse_expr("(e+f)*h", *sl2), EnvElement::word(*sl2, {0, 2}) + EnvElement::word(*sl2, {1, 2}));
  EXPECT_THROW(parse_expr("1/2*e", *sl2), ParseError);
  EXPECT_EQ(parse_expr("1", *sl2), EnvElement::one(*sl2));
  EXPECT_EQ(parse_expr("-e - -f", *sl2), EnvElement::word(*sl2, {1}) - EnvElement::word(*sl2, {0}));
  EXPECT_EQ(parse_expr("3*(e - e)", *sl2), EnvElement(*sl2));
  EXPECT_EQ(parse_expr("e*1*f", *sl2), EnvElement::word(*sl2, {0, 1}));
  EXPECT_EQ(parse_expr("2", *sl2), parse_expr("2*1", *sl2));

  auto q = make_sl2(Ring::rationals());
  EXPECT_EQ(parse_expr("1/2*e + 1/2*e", *q), EnvElement::word(*q, {0}));
  auto m4 = make_sl2(Ring::integers_mod(4));
  EXPECT_TRUE(parse_expr("4*e", *m4).is_zero());
}

TEST(ParseExpr, Errors) {
  auto sl2 = make_sl2(Ring::integers());
  for (const char* bad : {"", "e +", "g", "e**f", "(e", "e)", "e 2", "2*3*e", "e/f", "é"}) {
    try {
      parse_expr(bad, *sl2);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const ParseError& err) {
      EXPECT_EQ(err.line(), 1);
      EXPECT_GE(err.column(), 1);
    }
  }
  std::string deep(1000, '(');
  deep += "e" + std::string(1000, ')');
  EXPECT_THROW(parse_expr(deep, *sl2), ParseError);
}

TEST(ParseExpr, PrintParseRoundTrip) {
  const ExampleRegistry reg = builtin_examples();
  for (const auto& entry : reg.entries()) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      Generator gen(21, "expr", i);
      const EnvElement u = gen.env(*entry.algebra, 4);
      const std::string text = format_env_inline(u);
      const EnvElement back = parse_expr(text, *entry.algebra);
      EXPECT_EQ(back, u) << text;
      EXPECT_TRUE(env_eq(back, u));
    }
  }
}
