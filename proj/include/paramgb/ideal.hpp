#pragma once

// Saturation of a family's ideal by its Jacobian determinant and the two ways
// of specializing it at a parameter point:
//
//   * specialize_basis: evaluate the parametric basis of I:J^inf at q, valid
//     when no leading coefficient of the augmented basis vanishes at q;
//   * specialize_saturated: evaluate the generators first, then saturate.

#include "paramgb/groebner.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace paramgb {

/// n polynomials in n unknowns with k parameters.
struct FamilySpec {
  Context context;  // x and p variables, no auxiliary variable
  std::vector<Polynomial> polynomials;
  std::vector<std::string> names;  // equation labels, f1..fn by default

  /// Validates squareness and shared context. Throws std::invalid_argument.
  static FamilySpec make(Context ctx, std::vector<Polynomial> polys,
                         std::vector<std::string> names = {});

  std::size_t unknowns() const { return context->x_vars().size(); }
  std::size_t parameters() const { return context->p_vars().size(); }
};

/// Leading coefficient c_i(p) of one augmented-basis element, taken over the
/// {y} ∪ x block.
struct ParameterLeadingCoefficient {
  std::size_t element;
  Monomial block_monomial;
  Polynomial coefficient;  // over the parameters-only context
};

struct SaturationResult {
  Polynomial jacobian;                 // the saturating polynomial h
  GroebnerBasis augmented_basis;       // of I + <1 - y h>, context with y
  GroebnerBasis saturated_basis;       // of I : h^inf, context without y
  std::vector<ParameterLeadingCoefficient> leading_coefficients;  // one per augmented element
};

Polynomial jacobian_determinant(const FamilySpec& family);

/// Rabinowitsch saturation. Throws AlgebraError("saturation by zero") for h = 0.
SaturationResult saturate(std::span<const Polynomial> generators, const Polynomial& h);
SaturationResult saturate(const FamilySpec& family);

/// False iff the saturated ideal meets the parameter subring, in which case
/// the family has no generic regular zeros.
bool check_generic_regularity(const SaturationResult& sat);

/// Reduced basis of I_q : J_q^inf computed from scratch at q, over the unknowns.
GroebnerBasis specialize_saturated(const FamilySpec& family, const ParameterPoint& q);
GroebnerBasis specialize_saturated(const FamilySpec& family, const Polynomial& h,
                                   const ParameterPoint& q);

struct GuardFailure {
  std::vector<ParameterLeadingCoefficient> vanishing;
};

using SpecializationOutcome = std::variant<GroebnerBasis, GuardFailure>;

/// Leading coefficients of the augmented basis that vanish at q.
std::vector<ParameterLeadingCoefficient> vanishing_coefficients(const SaturationResult& sat,
                                                                const ParameterPoint& q);
bool guard_passes(const SaturationResult& sat, const ParameterPoint& q);

/// phi_q of the saturated basis, reduced, when the guard holds at q.
SpecializationOutcome specialize_basis(const SaturationResult& sat, const ParameterPoint& q);

/// Random rational parameter points: numerators uniform in [-10^4, 10^4],
/// denominators uniform in [1, 10^3].
class ParameterSampler {
 public:
  static constexpr long kNumeratorBound = 10'000;
  static constexpr long kDenominatorBound = 1'000;

  ParameterSampler(std::uint64_t seed, std::uint64_t stream = 0);

  Rational sample_value();
  ParameterPoint sample(const VariableContext& ctx);

 private:
  std::mt19937_64 engine_;
};

}  // namespace paramgb
