#include "paramgb/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace paramgb {

// ---------------------------------------------------------------- contexts

Context VariableContext::make(std::vector<std::string> x_vars, std::vector<std::string> p_vars,
                              std::optional<std::string> aux) {
  auto ctx = std::shared_ptr<VariableContext>(new VariableContext());
  ctx->x_vars_ = std::move(x_vars);
  ctx->p_vars_ = std::move(p_vars);
  ctx->aux_ = std::move(aux);
  if (ctx->aux_) ctx->names_.push_back(*ctx->aux_);
  ctx->names_.insert(ctx->names_.end(), ctx->x_vars_.begin(), ctx->x_vars_.end());
  ctx->names_.insert(ctx->names_.end(), ctx->p_vars_.begin(), ctx->p_vars_.end());
  std::set<std::string> seen;
  for (const auto& n : ctx->names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  return ctx;
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Context VariableContext::with_aux() const {
  std::string name = "y";
  for (int i = 0; index_of(name); ++i) name = "y" + std::to_string(i);
  return make(x_vars_, p_vars_, name);
}

Context VariableContext::without_aux() const { return make(x_vars_, p_vars_); }

Context VariableContext::without_parameters() const { return make(x_vars_, {}, aux_); }

Context VariableContext::parameters_only() const { return make({}, p_vars_); }

bool same_context(const Context& a, const Context& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------- monomials

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::supported_in(std::size_t begin, std::size_t end) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if ((i < begin || i >= end) && exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (size() != o.size()) throw std::invalid_argument("monomial context mismatch");
  Exponents r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t s = std::uint64_t{exps_[i]} + o.exps_[i];
    if (s > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("exponent overflow");
    r[i] = static_cast<std::uint32_t>(s);
  }
  return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Exponents r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r[i] = o.exps_[i] - exps_[i];
  return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& o) const {
  Exponents r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r[i] = std::max(exps_[i], o.exps_[i]);
  return Monomial(std::move(r));
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  }
  return true;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial context mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return lex_compare(a.mono, b.mono) > 0; }

// Sorts descending and merges equal monomials, dropping zeros.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// a + sign*b on sorted term lists.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && lex_compare(a[i].mono, b[j].mono) > 0)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || lex_compare(a[i].mono, b[j].mono) < 0) {
      out.push_back({subtract ? -b[j].coeff : b[j].coeff, b[j].mono});
      ++j;
    } else {
      Rational c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({std::move(c), a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- polynomials

Polynomial::Polynomial(Context ctx, std::vector<Term> terms) : ctx_(std::move(ctx)) {
  for (const auto& t : terms) {
    if (t.mono.size() != ctx_->size()) throw std::invalid_argument("monomial context mismatch");
  }
  terms_ = canonicalize(std::move(terms));
}

Polynomial Polynomial::constant(Context ctx, const Rational& c) {
  Polynomial p(ctx);
  if (!c.is_zero()) p.terms_.push_back({c, Monomial(ctx->size())});
  return p;
}

Polynomial Polynomial::variable(Context ctx, std::string_view name) {
  auto idx = ctx->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  Monomial m(ctx->size());
  m.set(*idx, 1);
  Polynomial p(ctx);
  p.terms_.push_back({Rational(1), std::move(m)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

bool Polynomial::supported_in(std::size_t begin, std::size_t end) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.supported_in(begin, end); });
}

void Polynomial::require_same_context(const Polynomial& o) const {
  if (!same_context(ctx_, o.ctx_)) throw std::invalid_argument("polynomial context mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({-t.coeff, t.mono});
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_context(o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_context(o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_context(b);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.coeff * t.coeff, s.mono * t.mono});
  }
  Polynomial r(a.ctx_);
  r.terms_ = canonicalize(std::move(prod));
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ctx_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono});
  return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  Polynomial r(ctx_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the lex order of terms.
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ctx_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::in_context(const Context& target) const {
  if (same_context(ctx_, target)) {
    Polynomial r = *this;
    r.ctx_ = target;
    return r;
  }
  std::vector<std::optional<std::size_t>> map(ctx_->size());
  for (std::size_t i = 0; i < ctx_->size(); ++i) map[i] = target->index_of(ctx_->names()[i]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) {
        throw std::invalid_argument("variable '" + ctx_->names()[i] + "' not in target context");
      }
      m.set(*map[i], t.mono[i]);
    }
    out.push_back({t.coeff, std::move(m)});
  }
  return Polynomial(target, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

namespace {

void append_factor(std::string& out, const std::string& name, std::uint32_t e) {
  if (!out.empty()) out += '*';
  out += name;
  if (e > 1) out += '^' + std::to_string(e);
}

std::string monomial_text(const VariableContext& ctx, const Monomial& m) {
  std::string out;
  for (std::size_t i = ctx.first_parameter(); i < ctx.size(); ++i) {
    if (m[i] != 0) append_factor(out, ctx.names()[i], m[i]);
  }
  for (std::size_t i = 0; i < ctx.first_parameter(); ++i) {
    if (m[i] != 0) append_factor(out, ctx.names()[i], m[i]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    bool negative = t.coeff.sign() < 0;
    if (k == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = negative ? -t.coeff : t.coeff;
    std::string mono = monomial_text(*ctx_, t.mono);
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

std::strong_ordering compare(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    if (auto c = lex_compare(ta[i].mono, tb[i].mono); c != 0) return c;
    if (auto c = ta[i].coeff <=> tb[i].coeff; c != 0) return c;
  }
  return ta.size() <=> tb.size();
}

Polynomial make_primitive(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer den(1);
  for (const auto& t : f.terms()) den = lcm(den, t.coeff.denominator());
  Integer content(0);
  for (const auto& t : f.terms()) {
    content = gcd(content, (t.coeff * Rational(den)).numerator());
  }
  Rational scale = Rational::normalize(den, content);
  if (f.leading_coefficient().sign() < 0) scale = -scale;
  return f.scaled(scale);
}

BlockLeadingCoefficient block_leading_coefficient(const Polynomial& f, std::size_t block_size) {
  const auto& ctx = *f.context();
  if (block_size > ctx.size()) throw std::invalid_argument("block exceeds context");
  const Monomial& lead = f.leading_monomial();
  auto block_part = [&](const Monomial& m) {
    Monomial b(ctx.size());
    for (std::size_t i = 0; i < block_size; ++i) b.set(i, m[i]);
    return b;
  };
  Monomial block = block_part(lead);

  std::vector<std::string> rest(ctx.names().begin() + static_cast<std::ptrdiff_t>(block_size),
                                ctx.names().end());
  // The remaining variables keep their x/p role so parameters stay parameters.
  std::vector<std::string> rest_x, rest_p;
  for (std::size_t i = block_size; i < ctx.size(); ++i) {
    (ctx.is_parameter(i) ? rest_p : rest_x).push_back(ctx.names()[i]);
  }
  Context rest_ctx = VariableContext::make(std::move(rest_x), std::move(rest_p));

  std::vector<Term> coeff_terms;
  for (const auto& t : f.terms()) {
    // Terms sharing the leading block part are contiguous at the front.
    if (block_part(t.mono) != block) break;
    Monomial m(rest_ctx->size());
    for (std::size_t i = block_size; i < ctx.size(); ++i) m.set(i - block_size, t.mono[i]);
    coeff_terms.push_back({t.coeff, std::move(m)});
  }
  return {std::move(block), Polynomial(rest_ctx, std::move(coeff_terms))};
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  DivisionResult out{{}, Polynomial(f.context())};
  for (const auto& g : divisors) {
    if (!same_context(g.context(), f.context())) throw std::invalid_argument("polynomial context mismatch");
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    out.quotients.emplace_back(f.context());
  }
  std::vector<Term> rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& g = divisors[i];
      if (!g.leading_monomial().divides(lt.mono)) continue;
      Rational c = lt.coeff / g.leading_coefficient();
      Monomial m = g.leading_monomial().quotient_of(lt.mono);
      out.quotients[i] += Polynomial(f.context(), {{c, m}});
      p -= g.times_term(c, m);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      p -= Polynomial(f.context(), {lt});
    }
  }
  out.remainder = Polynomial(f.context(), std::move(rem));
  return out;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.context()->size()) throw std::invalid_argument("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.mono[var] == 0) continue;
    Monomial m = t.mono;
    m.set(var, t.mono[var] - 1);
    out.push_back({t.coeff * Rational(static_cast<long>(t.mono[var])), std::move(m)});
  }
  return Polynomial(f.context(), std::move(out));
}

Polynomial partial_derivative(const Polynomial& f, std::string_view var) {
  auto idx = f.context()->index_of(var);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
  return partial_derivative(f, *idx);
}

Rational pow(const Rational& base, std::uint32_t e) {
  Rational r(1), b = base;
  while (e > 0) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e > 0) b *= b;
  }
  return r;
}

Polynomial evaluate_parameters(const Polynomial& f, const ParameterPoint& q) {
  const auto& ctx = *f.context();
  std::vector<Rational> values;
  for (const auto& name : ctx.p_vars()) {
    auto it = q.find(name);
    if (it == q.end()) throw std::invalid_argument("no value for parameter '" + name + "'");
    values.push_back(it->second);
  }
  Context target = ctx.without_parameters();
  const std::size_t first = ctx.first_parameter();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (t.mono[first + j] != 0) c *= pow(values[j], t.mono[first + j]);
    }
    Monomial m(target->size());
    for (std::size_t i = 0; i < first; ++i) m.set(i, t.mono[i]);
    out.push_back({std::move(c), std::move(m)});
  }
  return Polynomial(target, std::move(out));
}

Rational evaluate(const Polynomial& f, const ParameterPoint& q) {
  const auto& ctx = *f.context();
  if (!f.supported_in(ctx.first_parameter(), ctx.size())) {
    throw std::invalid_argument("polynomial involves non-parameter variables");
  }
  Polynomial v = evaluate_parameters(f, q);
  return v.is_zero() ? Rational(0) : v.leading_coefficient();
}

std::string to_string(const ParameterPoint& q) {
  std::string out;
  for (const auto& [name, value] : q) {
    if (!out.empty()) out += ',';
    out += name + "=" + value.to_string();
  }
  return out;
}

}  // namespace paramgb
