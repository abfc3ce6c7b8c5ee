#include "ncspace/expr/eval.hpp"
#include "ncspace/expr/parser.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

using namespace ncspace;
using algebra::PoincareAlgebra;

namespace {

algebra::AlgebraElement eval_text(const std::string& text, const PoincareAlgebra& alg) {
  return expr::evaluate(expr::parse(text, alg.dimension()), alg);
}

/// Random well-formed expression text over the full grammar.
class ExpressionGenerator {
public:
  ExpressionGenerator(int dimension, unsigned seed) : d_(dimension), rng_(seed) {}

  std::string expression(int depth) {
    heavy_budget_ = 2;
    return sum(depth);
  }

private:
  int d_;
  std::mt19937 rng_;
  // X, XT and M2 expand into many words; limit them so free products stay small.
  int heavy_budget_ = 0;

  std::string sum(int depth) {
    std::string out = term(depth);
    const int extra = pick(0, 2);
    for (int k = 0; k < extra; ++k) out += (pick(0, 1) ? " + " : " - ") + term(depth);
    return out;
  }

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::string idx() { return std::to_string(pick(0, d_ - 1)); }

  std::string term(int depth) {
    std::string out = factor(depth);
    const int extra = pick(0, 2);
    for (int k = 0; k < extra; ++k) out += "*" + factor(depth);
    return out;
  }

  std::string factor(int depth) {
    int choice = pick(0, depth > 0 ? 10 : 6);
    if (choice >= 5 && choice <= 7 && heavy_budget_-- <= 0) choice = 3;
    switch (choice) {
      case 0: {
        std::string s = std::to_string(pick(0, 9));
        if (pick(0, 1)) s += "/" + std::to_string(pick(1, 5));
        if (pick(0, 1)) s += "i";
        return s;
      }
      case 1:
        return "a[" + idx() + "]";
      case 2:
        return "th[" + idx() + "," + idx() + "]";
      case 3:
        return "P[" + idx() + "]";
      case 4:
        return "J[" + idx() + "," + idx() + "]";
      case 5:
        return pick(0, 1) ? "M2" : "Minv2^" + std::to_string(pick(1, 2));
      case 6:
        return "X[" + idx() + "]";
      case 7:
        return "XT[" + idx() + "]";
      case 8:
        return "comm(" + sum(depth - 1) + ", " + sum(depth - 1) + ")";
      case 9:
        return "nf(" + sum(depth - 1) + ")";
      default:
        return "(" + sum(depth - 1) + ")";
    }
  }
};

}  // namespace

TEST(Parser, ReportsOffsetAndExpectedTokens) {
  try {
    expr::parse("nf(X[1] + * 2)");
    FAIL() << "no error";
  } catch (const expr::ParseError& e) {
    EXPECT_EQ(e.offset(), 11u);
    EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "P["), e.expected().end());
  }
  try {
    expr::parse("P[1] P[2]");
    FAIL() << "no error";
  } catch (const expr::ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
    EXPECT_EQ(e.expected().back(), "end of input");
  }
  try {
    expr::parse("comm(P[1]");
    FAIL() << "no error";
  } catch (const expr::ParseError& e) {
    EXPECT_EQ(e.offset(), 10u);
  }
}

TEST(Parser, RejectsIndicesOutsideDimension) {
  EXPECT_THROW(expr::parse("P[4]", 4), expr::IndexRangeError);
  EXPECT_NO_THROW(expr::parse("P[4]", 5));
  try {
    expr::parse("J[0,  7]", 4);
    FAIL() << "no error";
  } catch (const expr::IndexRangeError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
}

TEST(Parser, RejectsZeroDenominatorAndDeepNesting) {
  EXPECT_THROW(expr::parse("1/0"), expr::ParseError);
  EXPECT_THROW(expr::parse(std::string(500, '(') + "1" + std::string(500, ')')), expr::ParseError);
  EXPECT_NO_THROW(expr::parse(std::string(50, '(') + "1" + std::string(50, ')')));
}

TEST(Parser, PrecedenceAndAssociativity) {
  const PoincareAlgebra alg(4);
  EXPECT_TRUE(alg.equals(eval_text("1 - 2 - 3", alg), alg.scalar(-4)));
  EXPECT_TRUE(alg.equals(eval_text("1 + 2*3", alg), alg.scalar(7)));
  EXPECT_TRUE(alg.equals(eval_text("09/010", alg), alg.scalar(algebra::GaussianRational::fraction(9, 10))));
  EXPECT_TRUE(alg.equals(eval_text("2i*1i", alg), alg.scalar(-2)));
  EXPECT_THROW(eval_text("2i*i", alg), expr::ParseError);
}

TEST(Eval, CanonicalOutputs) {
  const PoincareAlgebra alg(4);
  EXPECT_EQ(expr::format(eval_text("comm(P[0],P[3])", alg)), "0");
  EXPECT_EQ(expr::format(eval_text("nf(comm(J[0,1],J[0,2]))", alg)), "1i*J[1,2]");
  EXPECT_EQ(expr::format(eval_text("nf(P[2]*J[0,1])", alg)), "1*J[0,1]*P[2]");
  EXPECT_EQ(expr::format(eval_text("nf(P[1]*J[0,1])", alg)), "0 - 1i*P[0] + 1*J[0,1]*P[1]");
  EXPECT_EQ(expr::format(eval_text("0 - 3/2*a[1]*P[0]", alg)), "0 - 3/2*a[1]*P[0]");
}

TEST(Eval, CoordinateMomentumCommutatorMatchesClosedForm) {
  const PoincareAlgebra alg(4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const int metric = algebra::eta(mu, nu);
      const std::string e = metric < 0 ? "(0 - 1)" : std::to_string(metric);
      const auto lhs = eval_text("comm(X[" + std::to_string(mu) + "],P[" + std::to_string(nu) + "])", alg);
      const auto rhs = eval_text("1i*(" + e + " - Minv2*P[" + std::to_string(mu) + "]*P[" + std::to_string(nu) + "])", alg);
      EXPECT_TRUE(alg.equals(lhs, rhs));
    }
}

TEST(Eval, MassPowersCancel) {
  const PoincareAlgebra alg(4);
  EXPECT_TRUE(alg.equals(eval_text("M2^2*Minv2^2", alg), alg.unit()));
  EXPECT_TRUE(alg.equals(eval_text("M2", alg), eval_text("P[0]*P[0]-P[1]*P[1]-P[2]*P[2]-P[3]*P[3]", alg)));
}

TEST(RoundTrip, RandomExpressionsSurviveFormatParseEvaluate) {
  for (int d : {2, 3, 4}) {
    const PoincareAlgebra alg(d);
    ExpressionGenerator gen(d, 31 + static_cast<unsigned>(d));
    for (int trial = 0; trial < 120; ++trial) {
      const std::string text = gen.expression(2);
      const auto value = eval_text(text, alg);
      const std::string printed = expr::format(value);
      const auto back = eval_text(printed, alg);
      ASSERT_TRUE(alg.equals(value, back)) << text << "\n  printed: " << printed;
      EXPECT_EQ(expr::format(alg.normal_form(back)), expr::format(alg.normal_form(value)));
    }
  }
}

TEST(Fuzz, RandomTokenSoupNeverCrashes) {
  const std::vector<std::string> alphabet = {"P[", "J[", "X[", "XT[", "a[", "th[", "M2", "Minv2", "^", "comm(", "nf(",
                                             "(", ")", "[", "]", ",", "+", "-", "*", "/", "i", "0", "1", "3",
                                             "9", " ", "q", "#", "\t"};
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 14);
  const PoincareAlgebra alg(4);
  int rejected = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) text += alphabet[pick(rng)];
    try {
      const auto ast = expr::parse(text);
      (void)expr::evaluate(ast, alg);
    } catch (const expr::ParseError& e) {
      ++rejected;
      EXPECT_GE(e.offset(), 1u);
      EXPECT_LE(e.offset(), text.size() + 1);
      EXPECT_FALSE(e.expected().empty());
    } catch (const expr::IndexRangeError& e) {
      ++rejected;
      EXPECT_LE(e.offset(), text.size());
    }
  }
  EXPECT_GT(rejected, 1000);
}
