#include "paramgb/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace paramgb::univariate {

Dense trim(Dense f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

int degree(const Dense& f) { return static_cast<int>(f.size()) - 1; }

Dense from_polynomial(const Polynomial& f, std::size_t var) {
  if (!f.supported_in(var, var + 1)) throw std::invalid_argument("polynomial is not univariate");
  Dense out(f.is_zero() ? 0 : f.degree_in(var) + 1);
  for (const auto& t : f.terms()) out[t.mono[var]] = t.coeff;
  return trim(std::move(out));
}

Polynomial to_polynomial(const Dense& f, const Context& ctx, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Monomial m(ctx->size());
    m.set(var, static_cast<std::uint32_t>(i));
    terms.push_back({f[i], std::move(m)});
  }
  return Polynomial(ctx, std::move(terms));
}

Dense derivative(const Dense& f) {
  Dense out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * Rational(static_cast<long>(i)));
  return trim(std::move(out));
}

Dense multiply(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return trim(std::move(out));
}

Dense subtract(const Dense& a, const Dense& b) {
  Dense out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return trim(std::move(out));
}

QuotientRemainder divmod(const Dense& a, const Dense& b) {
  if (b.empty()) throw std::domain_error("division by zero");
  Dense rem = trim(a);
  if (rem.size() < b.size()) return {{}, rem};
  Dense quot(rem.size() - b.size() + 1);
  const Rational lead_inv = b.back().inv();
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    Rational c = rem.back() * lead_inv;
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    rem = trim(std::move(rem));
  }
  return {trim(std::move(quot)), rem};
}

namespace {

Dense monic(Dense f) {
  if (f.empty()) return f;
  Rational inv = f.back().inv();
  for (auto& c : f) c *= inv;
  return f;
}

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  if (!n.fits_long()) return {};
  const long v = n.to_long();
  // Trial division; desk-scale coefficients keep this cheap.
  if (v > 1'000'000'000'000L) return {};
  for (long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.emplace_back(d);
    if (d != v / d) large.emplace_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

Dense gcd(const Dense& a, const Dense& b) {
  Dense x = trim(a), y = trim(b);
  while (!y.empty()) {
    Dense r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(std::move(x));
}

Dense squarefree_part(const Dense& f) {
  Dense g = gcd(f, derivative(f));
  return monic(divmod(f, g).quotient);
}

Rational evaluate(const Dense& f, const Rational& x) {
  Rational acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Dense primitive(const Dense& f) {
  Dense g = trim(f);
  if (g.empty()) return g;
  Integer den(1);
  for (const auto& c : g) den = lcm(den, c.denominator());
  Integer content(0);
  for (const auto& c : g) content = gcd(content, (c * Rational(den)).numerator());
  Rational scale = Rational::normalize(den, content);
  if (g.back().sign() < 0) scale = -scale;
  for (auto& c : g) c *= scale;
  return g;
}

std::vector<Rational> rational_roots(const Dense& f) {
  Dense g = primitive(f);
  std::vector<Rational> roots;
  if (degree(g) < 1) return roots;
  std::size_t low = 0;
  while (low < g.size() && g[low].is_zero()) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    g.erase(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (degree(g) >= 1) {
    auto nums = divisors(g.front().numerator());
    auto dens = divisors(g.back().numerator());
    for (const auto& p : nums) {
      for (const auto& q : dens) {
        for (int s : {1, -1}) {
          Rational r = Rational::normalize(s > 0 ? p : -p, q);
          if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
          if (evaluate(g, r).is_zero()) roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Dense> coprime_squarefree_factors(const std::vector<Dense>& factors) {
  std::vector<Dense> parts;
  for (const auto& f : factors) {
    if (degree(trim(f)) >= 1) parts.push_back(squarefree_part(f));
  }
  // Refine to a pairwise coprime family; total degree strictly decreases on
  // every split, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < parts.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < parts.size() && !changed; ++j) {
        Dense g = gcd(parts[i], parts[j]);
        if (degree(g) < 1) continue;
        Dense a = divmod(parts[i], g).quotient;
        Dense b = divmod(parts[j], g).quotient;
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(j));
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto* p : {&g, &a, &b}) {
          if (degree(*p) >= 1) parts.push_back(monic(std::move(*p)));
        }
        changed = true;
      }
    }
  }
  std::vector<Dense> out;
  for (auto& p : parts) {
    Dense rest = p;
    for (const auto& r : rational_roots(p)) {
      Dense linear{-r, Rational(1)};
      rest = divmod(rest, linear).quotient;
      out.push_back(primitive(linear));
    }
    if (degree(rest) >= 1) out.push_back(primitive(rest));
  }
  std::sort(out.begin(), out.end(), [](const Dense& a, const Dense& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace paramgb::univariate
