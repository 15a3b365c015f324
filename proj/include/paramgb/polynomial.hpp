#pragma once

// Sparse multivariate polynomials over the rationals under the lex order
//
//   y > x_1 > ... > x_n > p_1 > ... > p_k
//
// where y is an optional auxiliary variable, x are the unknowns and p the
// parameters of a family.

#include "paramgb/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace paramgb {

class VariableContext;
using Context = std::shared_ptr<const VariableContext>;

/// Variable names in order. Immutable; shared between polynomials.
class VariableContext {
 public:
  /// Throws std::invalid_argument on duplicate or empty names.
  static Context make(std::vector<std::string> x_vars, std::vector<std::string> p_vars,
                      std::optional<std::string> aux = std::nullopt);

  const std::vector<std::string>& x_vars() const { return x_vars_; }
  const std::vector<std::string>& p_vars() const { return p_vars_; }
  bool has_aux() const { return aux_.has_value(); }
  const std::optional<std::string>& aux_name() const { return aux_; }

  /// All variables, largest first.
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::size_t aux_count() const { return has_aux() ? 1 : 0; }
  /// Number of leading variables forming the {y} ∪ x block.
  std::size_t block_size() const { return aux_count() + x_vars_.size(); }
  std::size_t first_parameter() const { return block_size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool is_parameter(std::size_t index) const { return index >= block_size(); }

  /// Same variables plus an auxiliary variable named "y" (or a fresh variant
  /// of it when "y" is already taken).
  Context with_aux() const;
  Context without_aux() const;
  Context without_parameters() const;
  Context parameters_only() const;

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.names_ == b.names_ && a.x_vars_.size() == b.x_vars_.size() && a.aux_ == b.aux_;
  }

 private:
  VariableContext() = default;
  std::vector<std::string> x_vars_;
  std::vector<std::string> p_vars_;
  std::optional<std::string> aux_;
  std::vector<std::string> names_;
};

bool same_context(const Context& a, const Context& b);

/// Exponent vector, one slot per context variable.
class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint32_t, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(Exponents exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::uint32_t e) { exps_[i] = e; }
  const Exponents& exponents() const { return exps_; }

  bool is_one() const;
  std::uint64_t total_degree() const;
  /// True iff every variable outside [begin, end) has exponent zero.
  bool supported_in(std::size_t begin, std::size_t end) const;

  /// Throws std::overflow_error when an exponent leaves the 32-bit range.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Exponents exps_;
};

/// Lexicographic comparison in context order. Throws std::invalid_argument on
/// length mismatch.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Rational coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  explicit Polynomial(Context ctx) : ctx_(std::move(ctx)) {}
  /// Sorts and combines; zero coefficients are dropped.
  Polynomial(Context ctx, std::vector<Term> terms);

  static Polynomial constant(Context ctx, const Rational& c);
  /// Throws std::invalid_argument for an unknown name.
  static Polynomial variable(Context ctx, std::string_view name);

  const Context& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff.is_one(); }

  /// Throw std::domain_error for the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coeff; }

  std::uint32_t degree_in(std::size_t var) const;
  std::uint64_t total_degree() const;
  /// True iff every term only involves variables in [begin, end).
  bool supported_in(std::size_t begin, std::size_t end) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  /// Re-expresses the polynomial over another context, matching variables by
  /// name. Throws std::invalid_argument if a used variable is missing.
  Polynomial in_context(const Context& target) const;

  /// Canonical text: terms descending, parameters printed before the other
  /// variables inside each term, e.g. `x1^2 - a*x1 - x1 + a`.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void require_same_context(const Polynomial& o) const;
  Context ctx_;
  std::vector<Term> terms_;  // strictly descending
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Strict total order on polynomials (by terms, lex then coefficient).
std::strong_ordering compare(const Polynomial& a, const Polynomial& b);

/// Integer coefficients with content 1 and a positive leading coefficient.
Polynomial make_primitive(const Polynomial& f);

struct BlockLeadingCoefficient {
  Monomial block_monomial;  // zero outside the block
  Polynomial coefficient;   // over the remaining variables' context
};

/// Splits off the greatest block part y^b x^a of f and the polynomial c in the
/// remaining variables such that f = c * y^b x^a + (smaller block parts).
/// `block_size` counts the leading context variables forming the block.
BlockLeadingCoefficient block_leading_coefficient(const Polynomial& f, std::size_t block_size);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: reduces leading terms first, trying divisors in
/// list order.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);

Polynomial partial_derivative(const Polynomial& f, std::string_view var);
Polynomial partial_derivative(const Polynomial& f, std::size_t var);

using ParameterPoint = std::map<std::string, Rational>;

/// Substitutes q for the parameters. The result lives in the context without
/// parameters. Throws std::invalid_argument on a missing assignment.
Polynomial evaluate_parameters(const Polynomial& f, const ParameterPoint& q);

/// Evaluates a parameter-only polynomial.
Rational evaluate(const Polynomial& f, const ParameterPoint& q);

Rational pow(const Rational& base, std::uint32_t e);

std::string to_string(const ParameterPoint& q);

}  // namespace paramgb
