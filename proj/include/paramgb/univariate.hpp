#pragma once

// Dense univariate polynomials over Q, used for the single-parameter
// squarefree reduction of discriminants.

#include "paramgb/polynomial.hpp"

#include <vector>

namespace paramgb::univariate {

/// Coefficients in ascending degree; no trailing zeros; zero is empty.
using Dense = std::vector<Rational>;

/// f must involve at most the single variable `var` of its context.
Dense from_polynomial(const Polynomial& f, std::size_t var);
Polynomial to_polynomial(const Dense& f, const Context& ctx, std::size_t var);

int degree(const Dense& f);  // -1 for zero
Dense trim(Dense f);
Dense derivative(const Dense& f);
Dense multiply(const Dense& a, const Dense& b);
Dense subtract(const Dense& a, const Dense& b);

struct QuotientRemainder {
  Dense quotient;
  Dense remainder;
};
QuotientRemainder divmod(const Dense& a, const Dense& b);

/// Monic gcd; gcd(0, 0) = 0.
Dense gcd(const Dense& a, const Dense& b);

/// f / gcd(f, f'), monic.
Dense squarefree_part(const Dense& f);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Dense& f);

Rational evaluate(const Dense& f, const Rational& x);

/// Splits the product of `factors` into pairwise coprime squarefree factors
/// with the same zero set, peeling off linear factors at rational roots.
/// Results are primitive with positive leading coefficient, sorted by degree.
std::vector<Dense> coprime_squarefree_factors(const std::vector<Dense>& factors);

/// Integer content 1, positive leading coefficient.
Dense primitive(const Dense& f);

}  // namespace paramgb::univariate
