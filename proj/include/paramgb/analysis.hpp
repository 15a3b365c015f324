#pragma once

// Discriminants, standard monomials and regular-zero counts for a family.

#include "paramgb/ideal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace paramgb {

struct StandardMonomialSet {
  std::vector<Monomial> monomials;  // ascending lex
  std::size_t count() const { return monomials.size(); }
};

/// Monomials outside the leading-term ideal of a zero-dimensional basis over
/// the unknowns only. {1} gives the empty set. Throws
/// AlgebraError("positive-dimensional ideal") otherwise.
StandardMonomialSet standard_monomials(const GroebnerBasis& g);

/// Number of regular zeros of F(x; q), as the standard-monomial count of
/// I_q : J_q^inf.
std::size_t regular_zero_count(const FamilySpec& family, const ParameterPoint& q);
std::size_t regular_zero_count(const FamilySpec& family, const Polynomial& h, const ParameterPoint& q);

/// Jacobian and (when h != 0) saturation of a family, computed once.
struct FamilyAnalysis {
  FamilySpec family;
  Polynomial jacobian;
  std::optional<SaturationResult> saturation;  // empty iff jacobian == 0

  explicit FamilyAnalysis(FamilySpec f);
  /// False when h = 0 or the saturation meets the parameter subring.
  bool generically_regular() const;
};

struct DiscriminantReport {
  bool generically_regular = false;
  std::optional<std::string> diagnostic;
  /// Nonconstant c_i(p), primitive, deduplicated, in basis order.
  std::vector<Polynomial> raw_factors;
  Polynomial raw_product;
  /// Pairwise coprime squarefree factors of raw_product; single parameter only.
  std::optional<std::vector<Polynomial>> squarefree_factors;
  std::size_t generic_count = 0;
  std::optional<ParameterPoint> sample_point;
};

inline constexpr int kMaxGenericResamples = 100;

DiscriminantReport discriminant(const FamilyAnalysis& analysis, std::uint64_t seed = 0);
DiscriminantReport discriminant(const FamilySpec& family, std::uint64_t seed = 0);

struct VerifyOptions {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t on_delta_per_factor = 2;
};

struct CountSample {
  ParameterPoint point;
  std::size_t count = 0;
  bool ok = false;
  std::optional<Polynomial> factor;  // the discriminant factor vanishing here, for on-Δ samples
};

struct VerificationReport {
  std::size_t generic_count = 0;
  DiscriminantReport discriminant;
  std::vector<CountSample> off_delta;
  std::vector<CountSample> on_delta;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// Checks that the regular-zero count equals N at `trials` random points off
/// the discriminant, and never exceeds N at rational points on it.
/// Throws std::invalid_argument for trials == 0.
VerificationReport verify_continuation_theorem(const FamilySpec& family, std::size_t trials,
                                               const VerifyOptions& options = {});

}  // namespace paramgb
