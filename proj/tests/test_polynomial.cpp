#include "paramgb/polynomial.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace paramgb;
using testing_support::poly;

namespace {

Context xy() { return VariableContext::make({"x", "y"}, {}); }
Context quad() { return VariableContext::make({"x"}, {"a", "b", "c"}); }
Context two() { return VariableContext::make({"x1", "x2"}, {"a"}); }

TEST(Context, OrderAndBlocks) {
  Context c = quad()->with_aux();
  EXPECT_EQ(c->names(), (std::vector<std::string>{"y", "x", "a", "b", "c"}));
  EXPECT_EQ(c->block_size(), 2u);
  EXPECT_TRUE(c->is_parameter(2));
  EXPECT_FALSE(c->is_parameter(1));
  EXPECT_EQ(*c->without_aux(), *quad());
  EXPECT_EQ(c->parameters_only()->names(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(c->without_parameters()->names(), (std::vector<std::string>{"y", "x"}));
}

TEST(Context, AuxNameAvoidsClash) {
  Context c = VariableContext::make({"y", "x"}, {"y0"})->with_aux();
  EXPECT_EQ(*c->aux_name(), "y1");
}

TEST(Context, RejectsDuplicates) {
  EXPECT_THROW(VariableContext::make({"x", "x"}, {}), std::invalid_argument);
  EXPECT_THROW(VariableContext::make({"x"}, {"x"}), std::invalid_argument);
  EXPECT_THROW(VariableContext::make({""}, {}), std::invalid_argument);
}

TEST(LexCompare, Examples) {
  // x > y: x^2*y vs x*y^3
  EXPECT_EQ(lex_compare(Monomial{2, 1}, Monomial{1, 3}), std::strong_ordering::greater);
  EXPECT_EQ(lex_compare(Monomial{1, 3}, Monomial{1, 3}), std::strong_ordering::equal);
  // x > a > b > c: x^2*a vs x*b
  EXPECT_EQ(lex_compare(Monomial{2, 1, 0, 0}, Monomial{1, 0, 1, 0}), std::strong_ordering::greater);
}

TEST(LexCompare, LengthMismatchThrows) {
  EXPECT_THROW(lex_compare(Monomial{1, 0}, Monomial{1, 0, 0}), std::invalid_argument);
}

TEST(LexCompare, TotalMultiplicativeWellFounded) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> e(0, 4);
  auto random_mono = [&] { return Monomial{e(rng), e(rng), e(rng), e(rng)}; };
  const Monomial one(4);
  for (int i = 0; i < 2000; ++i) {
    Monomial a = random_mono(), b = random_mono(), c = random_mono();
    auto ab = lex_compare(a, b);
    EXPECT_EQ(lex_compare(b, a), 0 <=> ab);
    if (ab < 0 && lex_compare(b, c) < 0) EXPECT_TRUE(lex_compare(a, c) < 0);
    if (ab > 0) EXPECT_TRUE(lex_compare(a * c, b * c) > 0);
    EXPECT_NE(lex_compare(one, a), std::strong_ordering::greater);
  }
}

TEST(Monomial, OverflowIsDetected) {
  Monomial big{0xFFFFFFFFu};
  EXPECT_THROW(big * Monomial{1}, std::overflow_error);
}

TEST(Monomial, DivisibilityAndLcm) {
  Monomial a{2, 1, 0}, b{1, 3, 2};
  EXPECT_EQ(a.lcm(b), (Monomial{2, 3, 2}));
  EXPECT_TRUE((Monomial{1, 1, 0}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ((Monomial{1, 0, 0}).quotient_of(a), (Monomial{1, 1, 0}));
  EXPECT_TRUE((Monomial{1, 0, 0}).coprime(Monomial{0, 2, 1}));
}

TEST(Arithmetic, Examples) {
  Context c = xy();
  EXPECT_EQ(poly(c, "(x+1)*(x+2)").to_string(), "x^2 + 3*x + 2");
  Polynomial f = poly(c, "3*x*y^2 - 1/2*y + 7");
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((f * Polynomial::constant(c, Rational(0))).size(), 0u);
}

TEST(Arithmetic, ExpandsFirstEquationOfTwoCircleFamily) {
  Polynomial f1 = poly(two(), "(x1 - a)*(x1 - 1)*(x1^2 + x2^2 - 1)");
  EXPECT_EQ(f1.to_string(),
            "x1^4 - a*x1^3 - x1^3 + x1^2*x2^2 + a*x1^2 - x1^2 - a*x1*x2^2 - x1*x2^2 + a*x1 + x1 + a*x2^2 - a");
  EXPECT_EQ(f1.total_degree(), 4u);
}

TEST(Arithmetic, ContextMismatchThrows) {
  Polynomial f = poly(xy(), "x");
  Polynomial g = poly(quad(), "x");
  EXPECT_THROW(f + g, std::invalid_argument);
  EXPECT_THROW(f * g, std::invalid_argument);
}

TEST(Arithmetic, StructurallyEqualContextsMix) {
  Polynomial f = poly(xy(), "x");
  Polynomial g = poly(xy(), "y");
  EXPECT_EQ((f + g).to_string(), "x + y");
}

TEST(LeadingTerm, Examples) {
  Polynomial f = poly(xy(), "x^2 + 3*x + 2");
  EXPECT_EQ(f.leading_monomial(), (Monomial{2, 0}));
  EXPECT_EQ(f.leading_coefficient(), Rational(1));

  Polynomial g = poly(quad(), "a*x^2 + b*x + c");
  EXPECT_EQ(g.leading_monomial(), (Monomial{2, 1, 0, 0}));
  EXPECT_EQ(g.leading_coefficient(), Rational(1));

  Polynomial h = poly(two(), "x2 - 3");
  EXPECT_EQ(h.leading_monomial(), (Monomial{0, 1, 0}));
}

TEST(LeadingTerm, ZeroThrows) { EXPECT_THROW(Polynomial(xy()).leading_term(), std::domain_error); }

TEST(Text, CanonicalForm) {
  EXPECT_EQ(poly(two(), "x1^2 - a*x1 - x1 + a").to_string(), "x1^2 - a*x1 - x1 + a");
  EXPECT_EQ(poly(xy(), "-x + 1/2").to_string(), "-x + 1/2");
  EXPECT_EQ(Polynomial(xy()).to_string(), "0");
  EXPECT_EQ(poly(quad(), "x*a*2").to_string(), "2*a*x");
}

TEST(BlockLeadingCoefficient, QuadraticOverX) {
  Polynomial f = poly(quad(), "a*x^2 + b*x + c");
  auto [mono, coeff] = block_leading_coefficient(f, 1);
  EXPECT_EQ(mono, (Monomial{2, 0, 0, 0}));
  EXPECT_EQ(coeff.to_string(), "a");
}

TEST(BlockLeadingCoefficient, AugmentedElementOfQuadratic) {
  Context c = quad()->with_aux();
  Polynomial f = poly(c, "(4*a*c - b^2)*y + 2*x*a + b");
  auto [mono, coeff] = block_leading_coefficient(f, c->block_size());
  EXPECT_EQ(mono, (Monomial{1, 0, 0, 0, 0}));
  EXPECT_EQ(coeff.to_string(), "4*a*c - b^2");
}

TEST(BlockLeadingCoefficient, SexticCoefficientOfTwoCircleFamily) {
  Context c = two()->with_aux();
  Polynomial g3 = poly(c,
                       "81*a^6*y - 162*a^5*y + 1377*a^4*y - 2592*a^3*y + 6480*a^2*y - 10368*a*y + 5184*y"
                       " - a^4*x1 - 16*a^2*x1 - 145*x1 + a^5 + 16*a^3 + 64*a + 81");
  auto [mono, coeff] = block_leading_coefficient(g3, c->block_size());
  EXPECT_EQ(mono, (Monomial{1, 0, 0, 0}));
  Polynomial expected = poly(coeff.context(), "81*(a^6 - 2*a^5 + 17*a^4 - 32*a^3 + 80*a^2 - 128*a + 64)");
  EXPECT_EQ(coeff, expected);
}

TEST(BlockLeadingCoefficient, ZeroThrows) {
  EXPECT_THROW(block_leading_coefficient(Polynomial(quad()), 1), std::domain_error);
}

TEST(BlockLeadingCoefficient, Reconstructs) {
  std::mt19937_64 rng(11);
  Context c = two()->with_aux();
  for (int i = 0; i < 200; ++i) {
    Polynomial f = testing_support::random_polynomial(rng, c, 8, 4, 9);
    if (f.is_zero()) continue;
    auto [mono, coeff] = block_leading_coefficient(f, c->block_size());
    Polynomial lifted = coeff.in_context(c).times_term(Rational(1), mono);
    Polynomial rest = f - lifted;
    for (const auto& t : rest.terms()) {
      Monomial block(c->size());
      for (std::size_t v = 0; v < c->block_size(); ++v) block.set(v, t.mono[v]);
      EXPECT_TRUE(lex_compare(block, mono) < 0);
    }
  }
}

TEST(Divide, Examples) {
  Context c = xy();
  Polynomial f = poly(c, "x^2 + 3*x + 2");
  std::vector<Polynomial> d{poly(c, "x + 1")};
  auto r = divide(f, d);
  ASSERT_EQ(r.quotients.size(), 1u);
  EXPECT_EQ(r.quotients[0].to_string(), "x + 2");
  EXPECT_TRUE(r.remainder.is_zero());

  auto empty = divide(f, std::vector<Polynomial>{});
  EXPECT_TRUE(empty.quotients.empty());
  EXPECT_EQ(empty.remainder, f);

  std::vector<Polynomial> self{f};
  auto s = divide(f, self);
  EXPECT_TRUE(s.quotients[0].is_one());
  EXPECT_TRUE(s.remainder.is_zero());
}

TEST(Divide, ReassemblesOnRandomInstances) {
  std::mt19937_64 rng(3);
  Context c = VariableContext::make({"x", "y", "z"}, {});
  for (int i = 0; i < 200; ++i) {
    Polynomial f = testing_support::random_polynomial(rng, c, 6, 4, 9);
    std::vector<Polynomial> ds;
    for (int k = 0; k < 3; ++k) {
      Polynomial g = testing_support::random_polynomial(rng, c, 3, 2, 9);
      if (!g.is_zero()) ds.push_back(g);
    }
    auto r = divide(f, ds);
    Polynomial sum = r.remainder;
    for (std::size_t k = 0; k < ds.size(); ++k) {
      sum += r.quotients[k] * ds[k];
      if (!r.quotients[k].is_zero() && !f.is_zero()) {
        EXPECT_TRUE(lex_compare((r.quotients[k] * ds[k]).leading_monomial(), f.leading_monomial()) <= 0);
      }
    }
    EXPECT_EQ(sum, f);
    for (const auto& t : r.remainder.terms()) {
      for (const auto& g : ds) EXPECT_FALSE(g.leading_monomial().divides(t.mono));
    }
  }
}

TEST(PartialDerivative, Examples) {
  EXPECT_EQ(partial_derivative(poly(quad(), "a*x^2 + b*x + c"), "x").to_string(), "2*a*x + b");
  EXPECT_TRUE(partial_derivative(poly(quad(), "c"), "x").is_zero());
  EXPECT_EQ(partial_derivative(poly(two(), "x1^2 + x2^2 - 1"), "x1").to_string(), "2*x1");
  EXPECT_THROW(partial_derivative(poly(quad(), "x"), "z"), std::invalid_argument);
}

TEST(EvaluateParameters, Examples) {
  Polynomial f = poly(quad(), "a*x^2 + b*x + c");
  ParameterPoint q1{{"a", 1}, {"b", 3}, {"c", 2}};
  ParameterPoint q2{{"a", 1}, {"b", -2}, {"c", 1}};
  EXPECT_EQ(evaluate_parameters(f, q1).to_string(), "x^2 + 3*x + 2");
  EXPECT_EQ(evaluate_parameters(f, q2).to_string(), "x^2 - 2*x + 1");
  EXPECT_EQ(evaluate_parameters(f, q1).context()->names(), (std::vector<std::string>{"x"}));

  Polynomial free = poly(quad(), "x^3 - 2");
  EXPECT_EQ(evaluate_parameters(free, q1).to_string(), "x^3 - 2");
}

TEST(EvaluateParameters, MissingAssignmentThrows) {
  Polynomial f = poly(quad(), "a*x^2 + b*x + c");
  EXPECT_THROW(evaluate_parameters(f, ParameterPoint{{"a", 1}}), std::invalid_argument);
}

TEST(EvaluateParameters, IsRingHomomorphism) {
  std::mt19937_64 rng(5);
  Context c = quad();
  for (int i = 0; i < 200; ++i) {
    Polynomial f = testing_support::random_polynomial(rng, c, 6, 3, 9);
    Polynomial g = testing_support::random_polynomial(rng, c, 6, 3, 9);
    ParameterPoint q{{"a", testing_support::random_rational(rng)},
                     {"b", testing_support::random_rational(rng)},
                     {"c", testing_support::random_rational(rng)}};
    EXPECT_EQ(evaluate_parameters(f + g, q), evaluate_parameters(f, q) + evaluate_parameters(g, q));
    EXPECT_EQ(evaluate_parameters(f * g, q), evaluate_parameters(f, q) * evaluate_parameters(g, q));
  }
}

TEST(Evaluate, ParameterOnly) {
  Context p = quad()->parameters_only();
  EXPECT_EQ(evaluate(poly(p, "4*a*c - b^2"), ParameterPoint{{"a", 1}, {"b", 3}, {"c", 2}}), Rational(-1));
}

TEST(MakePrimitive, ClearsDenominatorsAndSign) {
  EXPECT_EQ(make_primitive(poly(xy(), "-1/2*x + 1/3")).to_string(), "3*x - 2");
  EXPECT_EQ(make_primitive(poly(xy(), "6*x^2 + 4")).to_string(), "3*x^2 + 2");
}

TEST(Pow, MatchesRepeatedProduct) {
  Polynomial f = poly(xy(), "x - y + 2");
  EXPECT_EQ(f.pow(3), f * f * f);
  EXPECT_TRUE(f.pow(0).is_one());
}

}  // namespace
