#include "paramgb/ideal.hpp"

#include "paramgb/errors.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace paramgb {

FamilySpec FamilySpec::make(Context ctx, std::vector<Polynomial> polys, std::vector<std::string> names) {
  if (ctx->has_aux()) throw std::invalid_argument("family context must not contain an auxiliary variable");
  if (polys.size() != ctx->x_vars().size()) {
    throw std::invalid_argument("nonsquare system: " + std::to_string(polys.size()) + " equations in " +
                                std::to_string(ctx->x_vars().size()) + " unknowns");
  }
  for (const auto& p : polys) {
    if (!same_context(p.context(), ctx)) throw std::invalid_argument("polynomial context mismatch");
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < polys.size(); ++i) names.push_back("f" + std::to_string(i + 1));
  }
  if (names.size() != polys.size()) throw std::invalid_argument("one name per equation required");
  return FamilySpec{std::move(ctx), std::move(polys), std::move(names)};
}

Polynomial jacobian_determinant(const FamilySpec& family) {
  const std::size_t n = family.unknowns();
  if (n >= 32) throw std::invalid_argument("too many unknowns for the Jacobian determinant");
  std::vector<std::vector<Polynomial>> jac(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(partial_derivative(family.polynomials[i], j));
  }
  // Laplace expansion along rows, memoized on the set of remaining columns.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto minor = [&](auto&& self, std::uint32_t cols) -> Polynomial {
    if (cols == 0) return Polynomial::constant(family.context, Rational(1));
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(cols));
    Polynomial det(family.context);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      if (!jac[row][c].is_zero()) {
        Polynomial term = jac[row][c] * self(self, cols & ~(1u << c));
        det = sign > 0 ? det + term : det - term;
      }
      sign = -sign;
    }
    memo.emplace(cols, det);
    return det;
  };
  return minor(minor, n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

namespace {

std::vector<ParameterLeadingCoefficient> leading_coefficients_of(const GroebnerBasis& g) {
  std::vector<ParameterLeadingCoefficient> out;
  const std::size_t block = g.context()->block_size();
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto blc = block_leading_coefficient(g[i], block);
    out.push_back({i, std::move(blc.block_monomial), std::move(blc.coefficient)});
  }
  return out;
}

// Reduced basis of <gens> + <1 - y h> over ctx extended by y, plus the
// elimination of y.
std::pair<GroebnerBasis, GroebnerBasis> rabinowitsch(const Context& ctx,
                                                     std::span<const Polynomial> gens,
                                                     const Polynomial& h) {
  Context aug = ctx->with_aux();
  std::vector<Polynomial> all;
  for (const auto& g : gens) {
    if (!same_context(g.context(), ctx)) throw std::invalid_argument("polynomial context mismatch");
    all.push_back(g.in_context(aug));
  }
  Polynomial y = Polynomial::variable(aug, *aug->aux_name());
  all.push_back(Polynomial::constant(aug, Rational(1)) - y * h.in_context(aug));
  GroebnerBasis augmented = buchberger(all);
  std::vector<std::string> keep = ctx->names();
  GroebnerBasis eliminated = intersect_with_subring(augmented, keep);
  return {std::move(augmented), std::move(eliminated)};
}

}  // namespace

SaturationResult saturate(std::span<const Polynomial> generators, const Polynomial& h) {
  if (h.is_zero()) throw AlgebraError("saturation by zero");
  const Context& ctx = h.context();
  if (ctx->has_aux()) throw std::invalid_argument("context already has an auxiliary variable");
  auto [augmented, saturated] = rabinowitsch(ctx, generators, h);
  auto coeffs = leading_coefficients_of(augmented);
  return SaturationResult{h, std::move(augmented), std::move(saturated), std::move(coeffs)};
}

SaturationResult saturate(const FamilySpec& family) {
  return saturate(family.polynomials, jacobian_determinant(family));
}

bool check_generic_regularity(const SaturationResult& sat) {
  const auto& ctx = *sat.saturated_basis.context();
  for (const auto& g : sat.saturated_basis.elements()) {
    if (g.supported_in(ctx.first_parameter(), ctx.size())) return false;
  }
  return true;
}

GroebnerBasis specialize_saturated(const FamilySpec& family, const Polynomial& h, const ParameterPoint& q) {
  Context xs = family.context->without_parameters();
  std::vector<Polynomial> gens;
  for (const auto& f : family.polynomials) gens.push_back(evaluate_parameters(f, q));
  // h_q = 0 is allowed here: 1 - y*0 = 1 and the saturation is the unit ideal.
  return rabinowitsch(xs, gens, evaluate_parameters(h, q)).second;
}

GroebnerBasis specialize_saturated(const FamilySpec& family, const ParameterPoint& q) {
  return specialize_saturated(family, jacobian_determinant(family), q);
}

std::vector<ParameterLeadingCoefficient> vanishing_coefficients(const SaturationResult& sat,
                                                                const ParameterPoint& q) {
  std::vector<ParameterLeadingCoefficient> out;
  for (const auto& lc : sat.leading_coefficients) {
    if (evaluate(lc.coefficient, q).is_zero()) out.push_back(lc);
  }
  return out;
}

bool guard_passes(const SaturationResult& sat, const ParameterPoint& q) {
  for (const auto& lc : sat.leading_coefficients) {
    if (evaluate(lc.coefficient, q).is_zero()) return false;
  }
  return true;
}

SpecializationOutcome specialize_basis(const SaturationResult& sat, const ParameterPoint& q) {
  auto vanishing = vanishing_coefficients(sat, q);
  if (!vanishing.empty()) return GuardFailure{std::move(vanishing)};
  Context xs = sat.saturated_basis.context()->without_parameters();
  std::vector<Polynomial> images;
  // A parameter-only element passes the guard only if it is nonzero at q, and
  // then its image makes the specialized ideal the unit ideal.
  for (const auto& g : sat.saturated_basis.elements()) images.push_back(evaluate_parameters(g, q));
  // The images form a Gröbner basis but need not be reduced.
  return GroebnerBasis::from_groebner_set(xs, std::move(images));
}

ParameterSampler::ParameterSampler(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

Rational ParameterSampler::sample_value() {
  std::uniform_int_distribution<long> num(-kNumeratorBound, kNumeratorBound);
  std::uniform_int_distribution<long> den(1, kDenominatorBound);
  long n = num(engine_);
  long d = den(engine_);
  return Rational::normalize(Integer(n), Integer(d));
}

ParameterPoint ParameterSampler::sample(const VariableContext& ctx) {
  ParameterPoint q;
  for (const auto& p : ctx.p_vars()) q[p] = sample_value();
  return q;
}

}  // namespace paramgb
