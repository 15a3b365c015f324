#include "paramgb/ideal.hpp"

#include "paramgb/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace paramgb;
using testing_support::at;
using testing_support::poly;
using testing_support::polys;
using testing_support::strings;

namespace {

FamilySpec linear_family() {
  Context c = VariableContext::make({"x1", "x2"}, {"p1", "p2"});
  return FamilySpec::make(c, polys(c, {"x1 - p1", "x2 - p2"}));
}

TEST(FamilySpec, Validation) {
  Context c = VariableContext::make({"x1", "x2"}, {"a"});
  EXPECT_THROW(FamilySpec::make(c, polys(c, {"x1"})), std::invalid_argument);
  Context aux = c->with_aux();
  EXPECT_THROW(FamilySpec::make(aux, polys(aux, {"x1", "x2", "y"})), std::invalid_argument);
  Context other = VariableContext::make({"u", "v"}, {});
  std::vector<Polynomial> mixed{poly(c, "x1"), poly(other, "u")};
  EXPECT_THROW(FamilySpec::make(c, mixed), std::invalid_argument);
  FamilySpec f = FamilySpec::make(c, polys(c, {"x1", "x2"}));
  EXPECT_EQ(f.names, (std::vector<std::string>{"f1", "f2"}));
  EXPECT_EQ(f.unknowns(), 2u);
  EXPECT_EQ(f.parameters(), 1u);
}

TEST(JacobianDeterminant, Quadratic) {
  EXPECT_EQ(jacobian_determinant(testing_support::quadratic_family()).to_string(), "2*a*x + b");
}

TEST(JacobianDeterminant, TwoCircleMatchesCofactorFormula) {
  FamilySpec f = testing_support::two_circle_family();
  const Polynomial &f1 = f.polynomials[0], &f2 = f.polynomials[1];
  Polynomial expected = partial_derivative(f1, "x1") * partial_derivative(f2, "x2") -
                        partial_derivative(f2, "x1") * partial_derivative(f1, "x2");
  EXPECT_EQ(jacobian_determinant(f), expected);
}

TEST(JacobianDeterminant, LinearFamilyIsOne) { EXPECT_TRUE(jacobian_determinant(linear_family()).is_one()); }

TEST(JacobianDeterminant, ThreeByThreeMatchesSarrus) {
  Context c = VariableContext::make({"x", "y", "z"}, {"p"});
  FamilySpec f = FamilySpec::make(c, polys(c, {"x*y + z", "y^2 - p*x", "x*z + y*z^2"}));
  auto d = [&](int i, const char* v) { return partial_derivative(f.polynomials[i], v); };
  Polynomial sarrus = d(0, "x") * d(1, "y") * d(2, "z") + d(0, "y") * d(1, "z") * d(2, "x") +
                      d(0, "z") * d(1, "x") * d(2, "y") - d(0, "z") * d(1, "y") * d(2, "x") -
                      d(0, "y") * d(1, "x") * d(2, "z") - d(0, "x") * d(1, "z") * d(2, "y");
  EXPECT_EQ(jacobian_determinant(f), sarrus);
}

TEST(Saturate, Quadratic) {
  SaturationResult sat = saturate(testing_support::quadratic_family());
  EXPECT_EQ(strings(sat.saturated_basis.elements()), (std::vector<std::string>{"a*x^2 + b*x + c"}));
  EXPECT_EQ(sat.augmented_basis.size(), 4u);
  ASSERT_EQ(sat.leading_coefficients.size(), 4u);
  std::vector<std::string> coeffs;
  for (const auto& lc : sat.leading_coefficients) {
    EXPECT_FALSE(lc.coefficient.is_zero());
    coeffs.push_back(lc.coefficient.to_string());
  }
  std::sort(coeffs.begin(), coeffs.end());
  EXPECT_EQ(coeffs, (std::vector<std::string>{"2*a", "4*a*c - b^2", "a", "b"}));
}

TEST(Saturate, TwoCircle) {
  SaturationResult sat = saturate(testing_support::two_circle_family());
  EXPECT_EQ(strings(sat.saturated_basis.elements()), (std::vector<std::string>{"x2 - 3", "x1^2 - a*x1 - x1 + a"}));
  EXPECT_TRUE(check_generic_regularity(sat));
}

TEST(Saturate, ByOneGivesBasisOfIdeal) {
  FamilySpec f = testing_support::two_circle_family();
  SaturationResult sat = saturate(f.polynomials, Polynomial::constant(f.context, Rational(1)));
  EXPECT_EQ(sat.saturated_basis, buchberger(f.polynomials));
}

TEST(Saturate, ByZeroThrows) {
  Context c = VariableContext::make({"x"}, {"p"});
  FamilySpec f = FamilySpec::make(c, polys(c, {"p"}));
  try {
    saturate(f);
    FAIL() << "no exception";
  } catch (const AlgebraError& e) {
    EXPECT_STREQ(e.what(), "saturation by zero");
  }
}

TEST(CheckGenericRegularity, BundledFamilies) {
  EXPECT_TRUE(check_generic_regularity(saturate(testing_support::quadratic_family())));
  EXPECT_TRUE(check_generic_regularity(saturate(testing_support::two_circle_family())));
}

TEST(CheckGenericRegularity, DoubleRootFamilyHasNoRegularZeros) {
  // (x - p)^2 never has a simple root, so the saturation is the unit ideal.
  Context c = VariableContext::make({"x"}, {"p"});
  FamilySpec f = FamilySpec::make(c, polys(c, {"(x - p)^2"}));
  SaturationResult sat = saturate(f);
  EXPECT_TRUE(contains_one(sat.saturated_basis));
  EXPECT_FALSE(check_generic_regularity(sat));
}

TEST(CheckGenericRegularity, ParameterConstraintInSaturation) {
  // x*p - 1 = 0 and x*p*(p - 2) = 0 force p = 2 on every regular zero.
  Context c = VariableContext::make({"x"}, {"p"});
  std::vector<Polynomial> gens = polys(c, {"x*p - 1", "p - 2"});
  SaturationResult sat = saturate(gens, poly(c, "p"));
  EXPECT_FALSE(check_generic_regularity(sat));
}

TEST(SpecializeSaturated, Examples) {
  FamilySpec q = testing_support::quadratic_family();
  EXPECT_EQ(strings(specialize_saturated(q, at(q, "a=1,b=3,c=2")).elements()),
            (std::vector<std::string>{"x^2 + 3*x + 2"}));
  EXPECT_TRUE(contains_one(specialize_saturated(q, at(q, "a=1,b=-2,c=1"))));
  FamilySpec t = testing_support::two_circle_family();
  EXPECT_EQ(strings(specialize_saturated(t, at(t, "a=2")).elements()),
            (std::vector<std::string>{"x2 - 3", "x1^2 - 3*x1 + 2"}));
  EXPECT_FALSE(specialize_saturated(t, at(t, "a=2")).context()->has_aux());
}

TEST(SpecializeSaturated, VanishingJacobianAtPoint) {
  // h = 2ax + b is identically zero at a = b = 0.
  FamilySpec q = testing_support::quadratic_family();
  EXPECT_TRUE(contains_one(specialize_saturated(q, at(q, "a=0,b=0,c=5"))));
}

TEST(SpecializeBasis, GuardPasses) {
  FamilySpec q = testing_support::quadratic_family();
  SaturationResult sat = saturate(q);
  auto out = specialize_basis(sat, at(q, "a=1,b=3,c=2"));
  ASSERT_TRUE(std::holds_alternative<GroebnerBasis>(out));
  EXPECT_EQ(strings(std::get<GroebnerBasis>(out).elements()), (std::vector<std::string>{"x^2 + 3*x + 2"}));
}

TEST(SpecializeBasis, GuardFailsOnDoubleRoot) {
  FamilySpec q = testing_support::quadratic_family();
  SaturationResult sat = saturate(q);
  auto out = specialize_basis(sat, at(q, "a=1,b=-2,c=1"));
  ASSERT_TRUE(std::holds_alternative<GuardFailure>(out));
  const auto& v = std::get<GuardFailure>(out).vanishing;
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].coefficient.to_string(), "4*a*c - b^2");
  EXPECT_FALSE(guard_passes(sat, at(q, "a=1,b=-2,c=1")));
}

TEST(SpecializeBasis, GuardFailsAtCollision) {
  FamilySpec t = testing_support::two_circle_family();
  SaturationResult sat = saturate(t);
  auto out = specialize_basis(sat, at(t, "a=1"));
  ASSERT_TRUE(std::holds_alternative<GuardFailure>(out));
  Polynomial c = std::get<GuardFailure>(out).vanishing.at(0).coefficient;
  EXPECT_EQ(evaluate(c, at(t, "a=1")), Rational(0));
}

TEST(SpecializeBasis, SpuriousFactorStillGuards) {
  // b = 0 is not a true discriminant point, but b is a leading coefficient.
  FamilySpec q = testing_support::quadratic_family();
  auto out = specialize_basis(saturate(q), at(q, "a=1,b=0,c=-4"));
  ASSERT_TRUE(std::holds_alternative<GuardFailure>(out));
  EXPECT_EQ(strings(specialize_saturated(q, at(q, "a=1,b=0,c=-4")).elements()),
            (std::vector<std::string>{"x^2 - 4"}));
}

TEST(Sampler, RangesAndDeterminism) {
  ParameterSampler s1(42), s2(42), s3(42, 1);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    Rational a = s1.sample_value(), b = s2.sample_value(), c = s3.sample_value();
    EXPECT_EQ(a, b);
    differs = differs || a != c;
    EXPECT_LE(abs(a.numerator()), Integer(ParameterSampler::kNumeratorBound));
    EXPECT_LE(a.denominator(), Integer(ParameterSampler::kDenominatorBound));
  }
  EXPECT_TRUE(differs);
}

// Property tests over both bundled families.
class FamilyProperties : public ::testing::TestWithParam<const char*> {
 protected:
  FamilySpec family() const { return testing_support::load_family(GetParam()); }
};

TEST_P(FamilyProperties, SaturationMembershipCertificate) {
  FamilySpec f = family();
  SaturationResult sat = saturate(f);
  GroebnerBasis ideal = buchberger(f.polynomials);
  for (const auto& g : sat.saturated_basis.elements()) {
    bool found = false;
    Polynomial power = g;
    for (int l = 1; l <= 20 && !found; ++l) {
      power *= sat.jacobian;
      found = normal_form(power, ideal).is_zero();
    }
    EXPECT_TRUE(found) << g;
  }
}

TEST_P(FamilyProperties, IdealContainedInSaturation) {
  FamilySpec f = family();
  SaturationResult sat = saturate(f);
  for (const auto& p : f.polynomials) {
    EXPECT_TRUE(normal_form(p.in_context(sat.augmented_basis.context()), sat.augmented_basis).is_zero());
    EXPECT_TRUE(normal_form(p, sat.saturated_basis).is_zero());
  }
}

TEST_P(FamilyProperties, CommutationAtGenericPoints) {
  FamilySpec f = family();
  SaturationResult sat = saturate(f);
  ParameterSampler sampler(2024);
  int checked = 0;
  while (checked < 20) {
    ParameterPoint q = sampler.sample(*f.context);
    auto out = specialize_basis(sat, q);
    if (!std::holds_alternative<GroebnerBasis>(out)) continue;
    EXPECT_EQ(std::get<GroebnerBasis>(out), specialize_saturated(f, q)) << to_string(q);
    ++checked;
  }
}

TEST_P(FamilyProperties, OneDirectionalContainmentEverywhere) {
  FamilySpec f = family();
  SaturationResult sat = saturate(f);
  std::vector<ParameterPoint> points;
  if (f.parameters() == 1) {
    points = {at(f, "a=1"), at(f, "a=0"), at(f, "a=3")};
  } else {
    points = {at(f, "a=1,b=-2,c=1"), at(f, "a=1,b=0,c=-4"), at(f, "a=0,b=2,c=1"), at(f, "a=0,b=0,c=0")};
  }
  ParameterSampler sampler(7);
  for (int i = 0; i < 5; ++i) points.push_back(sampler.sample(*f.context));
  for (const auto& q : points) {
    GroebnerBasis direct = specialize_saturated(f, q);
    for (const auto& g : sat.saturated_basis.elements()) {
      EXPECT_TRUE(normal_form(evaluate_parameters(g, q), direct).is_zero()) << to_string(q);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Bundled, FamilyProperties, ::testing::Values("example1.fam", "example2.fam"),
                         [](const auto& info) { return std::string(info.param[7] == '1' ? "Quadratic" : "TwoCircle"); });

}  // namespace
