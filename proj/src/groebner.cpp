#include "paramgb/groebner.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

namespace paramgb {

namespace {

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

bool leading_less(const Polynomial& a, const Polynomial& b) {
  return lex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
}

// Working polynomial for reductions; keyed by monomial so subtraction of a
// multiple of a divisor costs O(|divisor| log |f|).
class Accumulator {
 public:
  explicit Accumulator(const Polynomial& f) {
    for (const auto& t : f.terms()) terms_.emplace_hint(terms_.end(), t.mono, t.coeff);
  }
  bool empty() const { return terms_.empty(); }
  std::pair<Monomial, Rational> pop_leading() {
    auto node = terms_.extract(terms_.begin());
    return {std::move(node.key()), std::move(node.mapped())};
  }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  // this -= c * m * g, skipping the leading term of g which is known to cancel.
  void subtract_tail(const Rational& c, const Monomial& m, const Polynomial& g) {
    const auto& gt = g.terms();
    for (std::size_t i = 1; i < gt.size(); ++i) {
      Monomial mono = gt[i].mono * m;
      Rational delta = gt[i].coeff * c;
      auto [it, inserted] = terms_.try_emplace(std::move(mono));
      it->second -= delta;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  std::map<Monomial, Rational, LexGreater> terms_;
};

const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    if (g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

// Keeps only elements whose leading monomial is not divisible by another's;
// for equal leading monomials the first occurrence wins.
std::vector<Polynomial> minimalize(std::vector<Polynomial> elems) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Monomial& mi = elems[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < elems.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mj = elems[j].leading_monomial();
      if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(elems[i]);
  }
  return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    if (!same_context(g.context(), f.context())) throw std::invalid_argument("polynomial context mismatch");
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  }
  Accumulator work(f);
  std::vector<Term> rem;
  while (!work.empty()) {
    const Polynomial* g = find_reducer(work.leading_monomial(), divisors);
    if (g == nullptr) {
      auto [m, c] = work.pop_leading();
      rem.push_back({std::move(c), std::move(m)});
      continue;
    }
    auto [m, c] = work.pop_leading();
    Rational factor = c / g->leading_coefficient();
    Monomial shift = g->leading_monomial().quotient_of(m);
    work.subtract_tail(factor, shift, *g);
  }
  // Terms were emitted in descending order; the constructor keeps them.
  return Polynomial(f.context(), std::move(rem));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  return normal_form(f, std::span<const Polynomial>(g.elements()));
}

bool ideal_contains(const GroebnerBasis& g, const Polynomial& f) { return normal_form(f, g).is_zero(); }

bool contains_one(const GroebnerBasis& g) { return g.size() == 1 && g[0].is_one(); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (!same_context(f.context(), g.context())) throw std::invalid_argument("polynomial context mismatch");
  const Monomial& mf = f.leading_monomial();
  const Monomial& mg = g.leading_monomial();
  Monomial l = mf.lcm(mg);
  return f.times_term(f.leading_coefficient().inv(), mf.quotient_of(l)) -
         g.times_term(g.leading_coefficient().inv(), mg.quotient_of(l));
}

bool is_groebner_basis(std::span<const Polynomial> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!normal_form(s_polynomial(elements[i], elements[j]), elements).is_zero()) return false;
    }
  }
  return true;
}

GroebnerBasis GroebnerBasis::from_groebner_set(Context ctx, std::vector<Polynomial> elements) {
  GroebnerBasis out(ctx);
  std::erase_if(elements, [](const Polynomial& p) { return p.is_zero(); });
  for (const auto& e : elements) {
    if (!same_context(e.context(), ctx)) throw std::invalid_argument("polynomial context mismatch");
    if (e.is_constant()) {
      out.elements_ = {Polynomial::constant(ctx, Rational(1))};
      return out;
    }
  }
  std::vector<Polynomial> minimal = minimalize(std::move(elements));
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    // The leading term is irreducible in a minimal basis, so only the tail changes.
    reduced.push_back(make_primitive(normal_form(minimal[i], others)));
  }
  std::sort(reduced.begin(), reduced.end(), leading_less);
  out.elements_ = std::move(reduced);
  return out;
}

std::string GroebnerBasis::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ", ";
    out += elements_[i].to_string();
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const GroebnerBasis& g) { return os << g.to_string(); }

GroebnerBasis buchberger(std::span<const Polynomial> generators, BuchbergerStats* stats) {
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  Context ctx = generators.front().context();
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (!same_context(g.context(), ctx)) throw std::invalid_argument("polynomial context mismatch");
    if (g.is_zero()) continue;
    if (g.is_constant()) return GroebnerBasis::from_groebner_set(ctx, {g});
    basis.push_back(make_primitive(g));
  }

  // Pending pairs keyed by (lcm, j, i): the normal strategy picks the
  // smallest lcm first; ties resolve by index for determinism.
  struct PairKey {
    Monomial lcm;
    std::size_t j, i;
    bool operator<(const PairKey& o) const {
      if (auto c = lex_compare(lcm, o.lcm); c != 0) return c < 0;
      return std::tie(j, i) < std::tie(o.j, o.i);
    }
  };
  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.insert({basis[i].leading_monomial().lcm(basis[j].leading_monomial()), j, i});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    PairKey pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pair.i, pair.j});
    ++st.pairs_considered;

    const Polynomial& f = basis[pair.i];
    const Polynomial& g = basis[pair.j];
    if (f.leading_monomial().coprime(g.leading_monomial())) {
      ++st.pairs_skipped_coprime;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (basis[k].leading_monomial().divides(pair.lcm) && !is_pending(pair.i, k) &&
          !is_pending(pair.j, k)) {
        chain = true;
      }
    }
    if (chain) {
      ++st.pairs_skipped_chain;
      continue;
    }

    Polynomial r = normal_form(s_polynomial(f, g), basis);
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    if (r.is_constant()) return GroebnerBasis::from_groebner_set(ctx, {r});
    basis.push_back(make_primitive(r));
    add_pairs_for(basis.size() - 1);
  }
  return GroebnerBasis::from_groebner_set(ctx, std::move(basis));
}

GroebnerBasis intersect_with_subring(const GroebnerBasis& g, std::span<const std::string> keep) {
  const auto& ctx = *g.context();
  if (keep.size() > ctx.size()) throw std::invalid_argument("keep set larger than the context");
  const std::size_t begin = ctx.size() - keep.size();
  std::set<std::string> wanted(keep.begin(), keep.end());
  if (wanted.size() != keep.size()) throw std::invalid_argument("duplicate variable in keep set");
  for (std::size_t i = begin; i < ctx.size(); ++i) {
    if (!wanted.count(ctx.names()[i])) {
      throw std::invalid_argument("keep set is not a tail of the variable order");
    }
  }
  std::vector<std::string> xs, ps;
  std::optional<std::string> aux;
  for (std::size_t i = begin; i < ctx.size(); ++i) {
    const auto& name = ctx.names()[i];
    if (ctx.is_parameter(i)) {
      ps.push_back(name);
    } else if (ctx.has_aux() && i == 0) {
      aux = name;
    } else {
      xs.push_back(name);
    }
  }
  Context sub = VariableContext::make(std::move(xs), std::move(ps), std::move(aux));
  std::vector<Polynomial> kept;
  for (const auto& e : g.elements()) {
    if (e.supported_in(begin, ctx.size())) kept.push_back(e.in_context(sub));
  }
  // Already reduced and canonical; the wrapper only re-checks the shape.
  return GroebnerBasis::from_groebner_set(sub, std::move(kept));
}

}  // namespace paramgb
