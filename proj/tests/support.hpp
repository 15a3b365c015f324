#pragma once

#include "paramgb/family_parser.hpp"
#include "paramgb/groebner.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

using namespace paramgb;

inline std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

// Parses `text` as a polynomial over ctx, by way of a padded family file.
inline Polynomial poly(const Context& ctx, const std::string& text) {
  std::vector<std::string> unknowns;
  if (ctx->has_aux()) unknowns.push_back(*ctx->aux_name());
  for (const auto& x : ctx->x_vars()) unknowns.push_back(x);
  if (unknowns.empty()) unknowns.push_back("unused_unknown");
  std::string src = "vars: " + join(unknowns) + "\nparams: " + join(ctx->p_vars()) + "\nf0 = " + text + "\n";
  for (std::size_t i = 1; i < unknowns.size(); ++i) src += "f" + std::to_string(i) + " = 0\n";
  return parse_family(src).polynomials[0].in_context(ctx);
}

inline std::vector<Polynomial> polys(const Context& ctx, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(ctx, t));
  return out;
}

inline std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

inline FamilySpec load_family(const std::string& name) {
  std::ifstream in(std::string(PARAMGB_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_family(ss.str());
}

inline FamilySpec quadratic_family() { return load_family("example1.fam"); }
inline FamilySpec two_circle_family() { return load_family("example2.fam"); }

inline ParameterPoint at(const FamilySpec& f, const std::string& text) {
  return parse_parameter_point(text, *f.context);
}

// Random polynomial with at most `max_terms` terms, total degree <= max_degree
// and integer coefficients in [-bound, bound].
inline Polynomial random_polynomial(std::mt19937_64& rng, const Context& ctx, int max_terms, int max_degree,
                                    long bound) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::uniform_int_distribution<std::size_t> var(0, ctx->size() - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Term> terms;
  for (int t = nterms(rng); t > 0; --t) {
    Monomial m(ctx->size());
    for (int d = deg(rng); d > 0; --d) {
      std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    terms.push_back({Rational(coeff(rng)), m});
  }
  return Polynomial(ctx, std::move(terms));
}

inline Rational random_rational(std::mt19937_64& rng, long bound = 50) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return Rational::normalize(num(rng), den(rng));
}

}  // namespace testing_support
