#include <gtest/gtest.h>

#include <random>

#include "lsk/expr.hpp"

namespace lsk {
namespace {

SyntaxError syntax_error(std::string_view text, int g) {
  try {
    parse_expression(text, g);
  } catch (const SyntaxError& e) {
    return e;
  }
  ADD_FAILURE() << "no syntax error for '" << text << "'";
  return SyntaxError(0, {}, "");
}

TEST(Expr, ParsesTwistWithPower) {
  const Expr e = parse_expression("T(c)^3(b2)", 2);
  ASSERT_EQ(e.kind, Expr::Kind::Twist);
  EXPECT_EQ(e.power, 3);
  EXPECT_EQ(e.args[0].kind, Expr::Kind::C);
  EXPECT_EQ(e.args[1].kind, Expr::Kind::Beta);
  EXPECT_EQ(e.args[1].index, 2);
  const auto sys = standard_curve_system(2);
  EXPECT_EQ(evaluate(e, sys), beta_gn(sys, 3));
}

TEST(Expr, ParsesPsiOfBetaGN) {
  const Expr e = parse_expression("psi(B[2,4])", 2);
  ASSERT_EQ(e.kind, Expr::Kind::Psi);
  EXPECT_EQ(e.args[0].kind, Expr::Kind::BetaGN);
  EXPECT_EQ(e.args[0].n, 4);
  const auto sys = standard_curve_system(2);
  EXPECT_EQ(evaluate(e, sys), apply_word(monodromy_psi(sys), beta_gn(sys, 4)));
}

TEST(Expr, UnmatchedParenthesisIsPositioned) {
  const SyntaxError e = syntax_error("T(c^3(b2)", 2);
  EXPECT_EQ(e.offset(), 3u);
  EXPECT_EQ(e.expected(), (std::set<std::string>{")"}));
  EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
}

TEST(Expr, WhitespaceInsensitive) {
  EXPECT_EQ(parse_expression(" T ( a1 ) ^ -2 ( phi[ 3 ]( b 2 ) ) ", 2).to_string(), "T(a1)^-2(phi[3](b2))");
}

TEST(Expr, RoundTripsThroughPrinting) {
  for (const char* s : {"a1", "c", "B[3,0]", "T(a2)(b3)", "T(c)^-1(psi(b3))", "phi[2](T(b1)^4(a3))"}) {
    EXPECT_EQ(parse_expression(s, 3).to_string(), s);
  }
}

TEST(Expr, IndexOutOfRange) {
  for (const char* s : {"a5", "b0", "T(a1)(b4)", "B[2,1]"}) {
    try {
      parse_expression(s, 3);
      ADD_FAILURE() << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange) << s;
    }
  }
}

TEST(Expr, ExpectedSets) {
  EXPECT_EQ(syntax_error("", 2).expected(), (std::set<std::string>{"a", "b", "c", "B[", "T(", "psi(", "phi["}));
  EXPECT_EQ(syntax_error("T(a1)b2", 2).expected(), (std::set<std::string>{"(", "^"}));
  EXPECT_EQ(syntax_error("a1 a2", 2).offset(), 3u);
  EXPECT_EQ(syntax_error("B[2;1]", 2).offset(), 3u);
  EXPECT_EQ(syntax_error("phi(a1)", 2).expected(), (std::set<std::string>{"["}));
  EXPECT_EQ(syntax_error("a", 2).expected(), (std::set<std::string>{"integer"}));
}

TEST(Expr, FuzzIsTotal) {
  std::mt19937 rng(123);
  const std::string alphabet = "abcBTpsih[](),^-0123456789 \t\x01\xff";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 24);
  const std::vector<std::string> seeds{"T(c)^3(b2)", "psi(B[2,4])", "phi[1](a1)", "T(a1)(T(b1)(a2))"};
  std::uniform_int_distribution<std::size_t> seed_pick(0, seeds.size() - 1);
  int parsed = 0;
  for (int it = 0; it < 20000; ++it) {
    std::string s;
    if (it % 2) {
      for (std::size_t k = len(rng); k > 0; --k) s += alphabet[pick(rng)];
    } else {
      s = seeds[seed_pick(rng)];
      std::uniform_int_distribution<std::size_t> at(0, s.size());
      for (int m = 0; m < 2; ++m) {
        const std::size_t p = at(rng) % (s.size() + 1);
        if (rng() % 2 && p < s.size()) s.erase(p, 1);
        else s.insert(p, 1, alphabet[pick(rng)]);
      }
    }
    try {
      parse_expression(s, 2);
      ++parsed;
    } catch (const SyntaxError& e) {
      EXPECT_LE(e.offset(), s.size());
      EXPECT_FALSE(e.expected().empty());
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange) << s;
    }
  }
  EXPECT_GT(parsed, 100);
}

TEST(Expr, DeepNestingIsADiagnosticNotACrash) {
  std::string s;
  for (int k = 0; k < 100000; ++k) s += "psi(";
  EXPECT_EQ(syntax_error(s, 2).kind(), ErrorKind::SyntaxError);
}

}  // namespace
}  // namespace lsk
