#include "paramgb/analysis.hpp"

#include "paramgb/errors.hpp"
#include "paramgb/univariate.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace paramgb {

StandardMonomialSet standard_monomials(const GroebnerBasis& g) {
  const auto& ctx = *g.context();
  if (ctx.has_aux() || !ctx.p_vars().empty()) {
    throw std::invalid_argument("standard monomials need a basis over the unknowns only");
  }
  StandardMonomialSet out;
  if (contains_one(g)) return out;
  const std::size_t n = ctx.size();
  std::vector<std::uint32_t> bound(n, std::numeric_limits<std::uint32_t>::max());
  for (const auto& e : g.elements()) {
    const Monomial& m = e.leading_monomial();
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0 && m.supported_in(i, i + 1)) bound[i] = std::min(bound[i], m[i]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bound[i] == std::numeric_limits<std::uint32_t>::max()) {
      throw AlgebraError("positive-dimensional ideal");
    }
  }
  Monomial cur(n);
  auto visit = [&](auto&& self, std::size_t var) -> void {
    if (var == n) {
      for (const auto& e : g.elements()) {
        if (e.leading_monomial().divides(cur)) return;
      }
      out.monomials.push_back(cur);
      return;
    }
    for (std::uint32_t d = 0; d < bound[var]; ++d) {
      cur.set(var, d);
      self(self, var + 1);
    }
    cur.set(var, 0);
  };
  visit(visit, 0);
  std::sort(out.monomials.begin(), out.monomials.end(),
            [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) < 0; });
  return out;
}

std::size_t regular_zero_count(const FamilySpec& family, const Polynomial& h, const ParameterPoint& q) {
  GroebnerBasis g = specialize_saturated(family, h, q);
  try {
    return standard_monomials(g).count();
  } catch (const AlgebraError&) {
    // Regular zeros are isolated, so this signals an internal inconsistency.
    throw AlgebraError("specialized saturated ideal is positive-dimensional at " + to_string(q));
  }
}

std::size_t regular_zero_count(const FamilySpec& family, const ParameterPoint& q) {
  return regular_zero_count(family, jacobian_determinant(family), q);
}

FamilyAnalysis::FamilyAnalysis(FamilySpec f)
    : family(std::move(f)), jacobian(jacobian_determinant(family)) {
  if (!jacobian.is_zero()) saturation = saturate(family.polynomials, jacobian);
}

bool FamilyAnalysis::generically_regular() const {
  return saturation.has_value() && check_generic_regularity(*saturation);
}

DiscriminantReport discriminant(const FamilyAnalysis& analysis, std::uint64_t seed) {
  const FamilySpec& family = analysis.family;
  Context pctx = family.context->parameters_only();
  DiscriminantReport report{.raw_product = Polynomial::constant(pctx, Rational(1))};
  if (!analysis.saturation) {
    report.diagnostic = "Jacobian determinant vanishes identically; no system has regular zeros";
    return report;
  }
  const SaturationResult& sat = *analysis.saturation;
  if (!check_generic_regularity(sat)) {
    report.diagnostic = "saturated ideal meets the parameter ring; no system has regular zeros";
    return report;
  }
  report.generically_regular = true;

  for (const auto& lc : sat.leading_coefficients) {
    if (lc.coefficient.is_constant()) continue;
    Polynomial c = make_primitive(lc.coefficient.in_context(pctx));
    if (std::find(report.raw_factors.begin(), report.raw_factors.end(), c) == report.raw_factors.end()) {
      report.raw_factors.push_back(c);
    }
  }
  for (const auto& c : report.raw_factors) report.raw_product *= c;

  if (family.parameters() == 1) {
    std::vector<univariate::Dense> dense;
    for (const auto& c : report.raw_factors) dense.push_back(univariate::from_polynomial(c, 0));
    std::vector<Polynomial> sqf;
    for (const auto& d : univariate::coprime_squarefree_factors(dense)) {
      sqf.push_back(univariate::to_polynomial(d, pctx, 0));
    }
    report.squarefree_factors = std::move(sqf);
  }

  ParameterSampler sampler(seed);
  for (int attempt = 0; attempt < kMaxGenericResamples; ++attempt) {
    ParameterPoint q = sampler.sample(*family.context);
    auto outcome = specialize_basis(sat, q);
    if (auto* basis = std::get_if<GroebnerBasis>(&outcome)) {
      report.generic_count = standard_monomials(*basis).count();
      report.sample_point = std::move(q);
      return report;
    }
  }
  throw AlgebraError("no generic parameter point found after " + std::to_string(kMaxGenericResamples) +
                     " samples");
}

DiscriminantReport discriminant(const FamilySpec& family, std::uint64_t seed) {
  return discriminant(FamilyAnalysis(family), seed);
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += jobs) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Rational points on V(c): all parameters but one are sampled and the
// remaining univariate polynomial is solved over Q.
std::vector<ParameterPoint> rational_points_on(const Polynomial& c, const VariableContext& family_ctx,
                                               ParameterSampler& sampler, std::size_t wanted) {
  std::vector<ParameterPoint> points;
  const auto& params = family_ctx.p_vars();
  for (std::size_t j = 0; j < params.size() && points.size() < wanted; ++j) {
    if (!c.involves(j)) continue;
    for (int attempt = 0; attempt < 3 && points.size() < wanted; ++attempt) {
      ParameterPoint q = sampler.sample(family_ctx);
      // Substitute everything except p_j by turning p_j into an unknown.
      std::vector<std::string> others;
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (i != j) others.push_back(params[i]);
      }
      Context split = VariableContext::make({params[j]}, others);
      Polynomial restricted = evaluate_parameters(c.in_context(split), q);
      auto roots = univariate::rational_roots(univariate::from_polynomial(restricted, 0));
      for (const auto& r : roots) {
        if (points.size() >= wanted) break;
        q[params[j]] = r;
        if (std::find(points.begin(), points.end(), q) == points.end()) points.push_back(q);
      }
      if (params.size() == 1) break;
    }
  }
  return points;
}

}  // namespace

VerificationReport verify_continuation_theorem(const FamilySpec& family, std::size_t trials,
                                               const VerifyOptions& options) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  FamilyAnalysis analysis(family);
  VerificationReport report{.discriminant = discriminant(analysis, options.seed)};
  const std::size_t n_generic = report.discriminant.generic_count;
  report.generic_count = n_generic;

  ParameterSampler sampler(options.seed, 1);
  for (std::size_t t = 0; t < trials; ++t) {
    bool found = false;
    for (int attempt = 0; attempt < kMaxGenericResamples && !found; ++attempt) {
      ParameterPoint q = sampler.sample(*family.context);
      if (!analysis.saturation || guard_passes(*analysis.saturation, q)) {
        report.off_delta.push_back({std::move(q), 0, false, std::nullopt});
        found = true;
      }
    }
    if (!found) throw AlgebraError("no parameter point off the discriminant found");
  }

  ParameterSampler on_sampler(options.seed, 2);
  for (const auto& c : report.discriminant.raw_factors) {
    for (auto& q : rational_points_on(c, *family.context, on_sampler, options.on_delta_per_factor)) {
      report.on_delta.push_back({std::move(q), 0, false, c});
    }
  }

  const Polynomial& h = analysis.jacobian;
  parallel_for(report.off_delta.size(), options.jobs, [&](std::size_t i) {
    auto& s = report.off_delta[i];
    s.count = regular_zero_count(family, h, s.point);
    s.ok = s.count == n_generic;
  });
  parallel_for(report.on_delta.size(), options.jobs, [&](std::size_t i) {
    auto& s = report.on_delta[i];
    s.count = regular_zero_count(family, h, s.point);
    s.ok = s.count <= n_generic;
  });

  for (const auto& s : report.off_delta) {
    if (!s.ok) {
      report.violations.push_back("off-discriminant point " + to_string(s.point) + " has " +
                                  std::to_string(s.count) + " regular zeros, expected " +
                                  std::to_string(n_generic));
    }
  }
  for (const auto& s : report.on_delta) {
    if (!s.ok) {
      report.violations.push_back("discriminant point " + to_string(s.point) + " has " +
                                  std::to_string(s.count) + " regular zeros, more than " +
                                  std::to_string(n_generic));
    }
  }
  return report;
}

}  // namespace paramgb
