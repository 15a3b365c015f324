#pragma once

// Reduced lex Gröbner bases via Buchberger's algorithm.
//
// Elements of a GroebnerBasis are canonically scaled (integer coefficients,
// content 1, positive leading coefficient) and sorted by leading monomial,
// smallest first. Two bases of the same ideal in the same context therefore
// compare equal structurally.

#include "paramgb/polynomial.hpp"

#include <span>
#include <string>
#include <vector>

namespace paramgb {

class GroebnerBasis {
 public:
  explicit GroebnerBasis(Context ctx) : ctx_(std::move(ctx)) {}

  /// Wraps polynomials that already form a Gröbner basis and brings them into
  /// reduced canonical form. No S-pair completion happens here.
  static GroebnerBasis from_groebner_set(Context ctx, std::vector<Polynomial> elements);

  const Context& context() const { return ctx_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Polynomial& operator[](std::size_t i) const { return elements_[i]; }

  std::string to_string() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_context(a.ctx_, b.ctx_) && a.elements_ == b.elements_;
  }

 private:
  Context ctx_;
  std::vector<Polynomial> elements_;
};

std::ostream& operator<<(std::ostream& os, const GroebnerBasis& g);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t zero_reductions = 0;
};

/// S-polynomial whose construction cancels the leading terms of f and g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Gröbner basis of the ideal generated by `generators`.
/// Throws std::invalid_argument for an empty list or mixed contexts.
GroebnerBasis buchberger(std::span<const Polynomial> generators, BuchbergerStats* stats = nullptr);

/// Fully reduced remainder of f modulo the divisors.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

bool ideal_contains(const GroebnerBasis& g, const Polynomial& f);

/// True iff the reduced basis is {1}.
bool contains_one(const GroebnerBasis& g);

/// Checks Buchberger's criterion directly: every S-pair reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> elements);

/// Elements involving only the variables in `keep`, which must name a tail of
/// the context order. The result lives in the context of the kept variables.
GroebnerBasis intersect_with_subring(const GroebnerBasis& g, std::span<const std::string> keep);

}  // namespace paramgb
