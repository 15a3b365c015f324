#include "paramgb/numeric.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>

namespace paramgb {

namespace {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

Complex ipow(Complex z, std::uint32_t e) {
  Complex r(1.0, 0.0);
  while (e > 0) {
    if (e & 1u) r *= z;
    e >>= 1u;
    if (e > 0) z *= z;
  }
  return r;
}

// Polynomial over the family context evaluated at complex x and p.
class CompiledPolynomial {
 public:
  CompiledPolynomial() = default;
  explicit CompiledPolynomial(const Polynomial& f) {
    for (const auto& t : f.terms()) {
      terms_.push_back({Complex(t.coeff.to_double(), 0.0),
                        std::vector<std::uint32_t>(t.mono.exponents().begin(), t.mono.exponents().end())});
    }
  }

  Complex operator()(std::span<const Complex> vars) const {
    Complex sum(0.0, 0.0);
    for (const auto& t : terms_) {
      Complex v = t.coeff;
      for (std::size_t i = 0; i < t.exps.size(); ++i) {
        if (t.exps[i] != 0) v *= ipow(vars[i], t.exps[i]);
      }
      sum += v;
    }
    return sum;
  }

 private:
  struct CompiledTerm {
    Complex coeff;
    std::vector<std::uint32_t> exps;
  };
  std::vector<CompiledTerm> terms_;
};

// F, dF/dx and dF/dp of a family, evaluable at complex parameters.
class NumericFamily {
 public:
  explicit NumericFamily(const FamilySpec& family)
      : n_(family.unknowns()), k_(family.parameters()) {
    for (const auto& f : family.polynomials) {
      f_.emplace_back(f);
      for (std::size_t j = 0; j < n_ + k_; ++j) partials_.emplace_back(partial_derivative(f, j));
    }
  }

  std::size_t unknowns() const { return n_; }

  CVector value(const CVector& x, const CVector& p) const {
    auto vars = pack(x, p);
    CVector out(n_);
    for (std::size_t i = 0; i < n_; ++i) out(static_cast<Eigen::Index>(i)) = f_[i](vars);
    return out;
  }

  CMatrix jacobian_x(const CVector& x, const CVector& p) const { return block(x, p, 0, n_); }
  CMatrix jacobian_p(const CVector& x, const CVector& p) const { return block(x, p, n_, k_); }

 private:
  std::vector<Complex> pack(const CVector& x, const CVector& p) const {
    std::vector<Complex> vars(x.data(), x.data() + x.size());
    vars.insert(vars.end(), p.data(), p.data() + p.size());
    return vars;
  }

  CMatrix block(const CVector& x, const CVector& p, std::size_t first, std::size_t cols) const {
    auto vars = pack(x, p);
    CMatrix out(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = partials_[i * (n_ + k_) + first + j](vars);
      }
    }
    return out;
  }

  std::size_t n_, k_;
  std::vector<CompiledPolynomial> f_;
  std::vector<CompiledPolynomial> partials_;  // row-major, n x (n + k)
};

CVector to_vector(const ComplexPoint& p) {
  CVector v(static_cast<Eigen::Index>(p.coords.size()));
  for (std::size_t i = 0; i < p.coords.size(); ++i) v(static_cast<Eigen::Index>(i)) = p.coords[i];
  return v;
}

ComplexPoint to_point(const CVector& v) { return {std::vector<Complex>(v.data(), v.data() + v.size())}; }

CVector parameter_vector(const FamilySpec& family, const ParameterPoint& q) {
  CVector v(static_cast<Eigen::Index>(family.parameters()));
  for (std::size_t i = 0; i < family.parameters(); ++i) {
    const auto& name = family.context->p_vars()[i];
    auto it = q.find(name);
    if (it == q.end()) throw std::invalid_argument("no value for parameter '" + name + "'");
    v(static_cast<Eigen::Index>(i)) = Complex(it->second.to_double(), 0.0);
  }
  return v;
}

double inf_norm(const CMatrix& a) {
  double best = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) best = std::max(best, a.row(i).cwiseAbs().sum());
  return best;
}

// max(1, ||A||) * ||A^-1||, infinite for an exactly singular A.
double scaled_condition(const CMatrix& a) {
  if (a.rows() == 0) return 1.0;
  Eigen::FullPivLU<CMatrix> lu(a);
  if (!lu.isInvertible()) return std::numeric_limits<double>::infinity();
  return std::max(1.0, inf_norm(a)) * inf_norm(lu.inverse());
}

std::optional<CVector> solve(const CMatrix& a, const CVector& b) {
  Eigen::FullPivLU<CMatrix> lu(a);
  if (!lu.isInvertible()) return std::nullopt;
  CVector x = lu.solve(b);
  if (!x.allFinite()) return std::nullopt;
  return x;
}

double determinant_magnitude(const CMatrix& a) {
  if (a.rows() == 0) return 1.0;
  return std::abs(a.determinant());
}

}  // namespace

double distance(const ComplexPoint& a, const ComplexPoint& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) s += std::norm(a.coords[i] - b.coords[i]);
  return std::sqrt(s);
}

// ---------------------------------------------------------------- roots

std::vector<Complex> univariate_roots(std::span<const Complex> coeffs) {
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == Complex(0.0, 0.0)) --deg;
  if (deg < 2) throw std::invalid_argument("root finding needs degree at least 1");
  const int d = static_cast<int>(deg) - 1;
  std::vector<Complex> a(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(deg));
  double norm = 0;
  for (const auto& c : a) norm += std::norm(c);
  norm = std::sqrt(norm);

  auto eval = [&](Complex z, Complex& dp, double& scale) {
    Complex p = a[static_cast<std::size_t>(d)];
    dp = 0;
    scale = std::abs(p);
    for (int i = d - 1; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + a[static_cast<std::size_t>(i)];
      scale = scale * std::abs(z) + std::abs(a[static_cast<std::size_t>(i)]);
    }
    return p;
  };

  // Cauchy bound radius, angles offset to avoid symmetric stalls.
  double radius = 0;
  for (int i = 0; i < d; ++i) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(i)] / a.back()));
  radius = 1.0 + radius;
  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    double angle = 2.0 * std::numbers::pi * k / d + 0.4 + 0.05 * k;
    z[static_cast<std::size_t>(k)] = std::polar(radius * 0.5, angle);
  }

  constexpr int kMaxIterations = 2000;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<bool> done(static_cast<std::size_t>(d), false);
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (done[k]) continue;
      Complex dp;
      double scale;
      Complex p = eval(z[k], dp, scale);
      if (std::abs(p) <= 4 * kEps * scale) {
        done[k] = true;
        continue;
      }
      all_done = false;
      Complex ratio = p / dp;
      Complex sum(0.0, 0.0);
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      }
      Complex step = ratio / (1.0 - ratio * sum);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) z[k] -= step;
    }
    if (all_done) break;
  }

  for (const auto& r : z) {
    Complex dp;
    double scale;
    // Outside the unit disk the residual is taken on the reversed polynomial.
    const double growth = std::pow(std::max(1.0, std::abs(r)), d);
    if (!(std::abs(eval(r, dp, scale)) / (norm * growth) < kRootResidualBound)) {
      throw RootFindingError("root finder did not converge", z);
    }
  }
  std::sort(z.begin(), z.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return z;
}

std::vector<Complex> univariate_roots(const Polynomial& f) {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < f.context()->size(); ++i) {
    if (!f.involves(i)) continue;
    if (var) throw std::invalid_argument("polynomial is not univariate");
    var = i;
  }
  if (!var) throw std::invalid_argument("root finding needs degree at least 1");
  std::vector<Complex> coeffs(f.degree_in(*var) + 1);
  for (const auto& t : f.terms()) coeffs[t.mono[*var]] = Complex(t.coeff.to_double(), 0.0);
  return univariate_roots(coeffs);
}

std::vector<ComplexPoint> solve_triangular(const GroebnerBasis& g) {
  const auto& ctx = *g.context();
  if (ctx.has_aux() || !ctx.p_vars().empty()) {
    throw std::invalid_argument("triangular solving needs a basis over the unknowns only");
  }
  if (contains_one(g)) return {};
  const std::size_t n = ctx.size();
  std::vector<const Polynomial*> solver(n, nullptr);
  for (const auto& e : g.elements()) {
    const Monomial& lm = e.leading_monomial();
    std::size_t top = 0;
    while (top < n && lm[top] == 0) ++top;
    if (top == n || solver[top] != nullptr || !lm.supported_in(top, top + 1)) {
      throw AlgebraError("unsupported shape");
    }
    solver[top] = &e;
  }
  if (std::find(solver.begin(), solver.end(), nullptr) != solver.end()) {
    throw AlgebraError("unsupported shape");
  }

  std::vector<std::vector<Complex>> partial{std::vector<Complex>(n)};
  for (std::size_t var = n; var-- > 0;) {
    const Polynomial& e = *solver[var];
    std::vector<std::vector<Complex>> next;
    for (const auto& sol : partial) {
      std::vector<Complex> coeffs(e.degree_in(var) + 1, Complex(0.0, 0.0));
      for (const auto& t : e.terms()) {
        Complex c(t.coeff.to_double(), 0.0);
        for (std::size_t j = var + 1; j < n; ++j) {
          if (t.mono[j] != 0) c *= ipow(sol[j], t.mono[j]);
        }
        coeffs[t.mono[var]] += c;
      }
      for (const auto& r : univariate_roots(coeffs)) {
        auto extended = sol;
        extended[var] = r;
        next.push_back(std::move(extended));
      }
    }
    partial = std::move(next);
  }
  std::vector<ComplexPoint> out;
  for (auto& s : partial) out.push_back({std::move(s)});
  return out;
}

std::vector<ComplexPoint> cluster_points(const std::vector<ComplexPoint>& points, double radius) {
  std::vector<ComplexPoint> out;
  for (const auto& p : points) {
    bool seen = std::any_of(out.begin(), out.end(), [&](const ComplexPoint& o) { return distance(o, p) < radius; });
    if (!seen) out.push_back(p);
  }
  return out;
}

double jacobian_magnitude(const FamilySpec& family, const ParameterPoint& q, const ComplexPoint& x) {
  NumericFamily nf(family);
  return determinant_magnitude(nf.jacobian_x(to_vector(x), parameter_vector(family, q)));
}

std::size_t verify_count_numerically(const FamilySpec& family, const ParameterPoint& q) {
  auto points = cluster_points(solve_triangular(specialize_saturated(family, q)));
  NumericFamily nf(family);
  CVector p = parameter_vector(family, q);
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [&](const ComplexPoint& x) {
    return determinant_magnitude(nf.jacobian_x(to_vector(x), p)) > kRegularJacobianBound;
  }));
}

// ---------------------------------------------------------------- tracking

std::string to_string(TrackStatus s) {
  switch (s) {
    case TrackStatus::converged: return "converged";
    case TrackStatus::diverged: return "diverged";
    case TrackStatus::singular_encounter: return "singular-encounter";
  }
  return "unknown";
}

namespace {

class Homotopy {
 public:
  Homotopy(const FamilySpec& family, const ParameterPoint& q_target, const ParameterPoint& q_start,
           const TrackerSettings& cfg)
      : nf_(family), target_(parameter_vector(family, q_target)), start_(parameter_vector(family, q_start)) {
    detour_ = CVector::Zero(target_.size());
    const double spread = (start_ - target_).cwiseAbs().maxCoeff();
    if (cfg.complex_detour && target_.size() > 0 && spread > 0) {
      std::mt19937_64 engine(cfg.detour_seed);
      std::uniform_real_distribution<double> angle(0.25, std::numbers::pi - 0.25);
      for (Eigen::Index i = 0; i < detour_.size(); ++i) detour_(i) = std::polar(spread, angle(engine));
    }
  }

  bool constant() const { return (start_ - target_).cwiseAbs().maxCoeff() == 0; }

  CVector parameters(double t) const { return (1 - t) * target_ + t * start_ + (t * (1 - t)) * detour_; }
  CVector parameter_velocity(double t) const { return (start_ - target_) + (1 - 2 * t) * detour_; }

  CVector value(const CVector& x, double t) const { return nf_.value(x, parameters(t)); }
  CMatrix jacobian(const CVector& x, double t) const { return nf_.jacobian_x(x, parameters(t)); }

  // dx/dt along the solution curve.
  std::optional<CVector> velocity(const CVector& x, double t) const {
    CVector p = parameters(t);
    CVector ht = nf_.jacobian_p(x, p) * parameter_velocity(t);
    return solve(nf_.jacobian_x(x, p), -ht);
  }

 private:
  NumericFamily nf_;
  CVector target_, start_, detour_;
};

struct NewtonOutcome {
  CVector x;
  bool converged;
};

NewtonOutcome newton(const Homotopy& h, CVector x, double t, double tol, int max_iter) {
  for (int i = 0; i < max_iter; ++i) {
    auto dx = solve(h.jacobian(x, t), -h.value(x, t));
    if (!dx) return {x, false};
    x += *dx;
    if (dx->norm() <= tol * (1.0 + x.norm())) return {x, true};
  }
  return {x, false};
}

std::optional<CVector> rk4(const Homotopy& h, const CVector& x, double t, double step) {
  // Integrates from t to t - step.
  auto k1 = h.velocity(x, t);
  if (!k1) return std::nullopt;
  auto k2 = h.velocity(x - (step / 2) * *k1, t - step / 2);
  if (!k2) return std::nullopt;
  auto k3 = h.velocity(x - (step / 2) * *k2, t - step / 2);
  if (!k3) return std::nullopt;
  auto k4 = h.velocity(x - step * *k3, t - step);
  if (!k4) return std::nullopt;
  CVector out = x - (step / 6) * (*k1 + 2.0 * *k2 + 2.0 * *k3 + *k4);
  if (!out.allFinite()) return std::nullopt;
  return out;
}

}  // namespace

TrackResult track_path(const FamilySpec& family, const ParameterPoint& q_target, const ParameterPoint& q_start,
                       const ComplexPoint& x0, const TrackerSettings& cfg) {
  if (x0.coords.size() != family.unknowns()) throw std::invalid_argument("start point has the wrong dimension");
  Homotopy h(family, q_target, q_start, cfg);
  TrackResult result;
  result.start = x0;

  CVector x = to_vector(x0);
  if (h.value(x, 1.0).norm() >= cfg.start_tolerance) {
    auto refined = newton(h, x, 1.0, cfg.corrector_tolerance, cfg.max_corrector_iterations);
    x = refined.x;
    if (!x.allFinite() || h.value(x, 1.0).norm() >= cfg.start_tolerance) {
      throw std::invalid_argument("start point is not an approximate zero of the start system");
    }
  }

  auto finish = [&](TrackStatus status, double t) {
    result.end = to_point(x);
    result.t_reached = t;
    result.final_residual = h.value(x, t).norm();
    result.end_jacobian = determinant_magnitude(h.jacobian(x, t));
    result.status = status;
    return result;
  };

  double t = 1.0;
  if (h.constant()) {
    auto corrected = newton(h, x, 0.0, cfg.corrector_tolerance, cfg.max_corrector_iterations);
    if (corrected.x.allFinite()) x = corrected.x;
    result.steps = 1;
    t = 0.0;
  } else {
    double dt = cfg.initial_step;
    int successes = 0;
    while (t > 0) {
      if (result.steps >= cfg.max_steps) return finish(TrackStatus::diverged, t);
      const double step = std::min(dt, t);
      const double t_next = step == t ? 0.0 : t - step;
      bool accepted = false;
      if (auto predicted = rk4(h, x, t, step)) {
        auto corrected = newton(h, *predicted, t_next, cfg.corrector_tolerance, cfg.max_corrector_iterations);
        if (corrected.converged && corrected.x.allFinite()) {
          x = corrected.x;
          t = t_next;
          accepted = true;
        }
      }
      if (accepted) {
        ++result.steps;
        if (++successes >= cfg.successes_before_doubling) {
          dt = std::min(2 * dt, cfg.max_step);
          successes = 0;
        }
        if (scaled_condition(h.jacobian(x, t)) > cfg.singular_threshold) {
          return finish(TrackStatus::singular_encounter, t);
        }
      } else {
        successes = 0;
        dt /= 2;
        if (dt < cfg.min_step) {
          // Step underflow next to a near-singular Jacobian is a singular
          // endpoint or branch point; anything else is a failed path.
          bool near_singular = scaled_condition(h.jacobian(x, t)) > std::sqrt(cfg.singular_threshold);
          return finish(near_singular ? TrackStatus::singular_encounter : TrackStatus::diverged, t);
        }
      }
    }
  }

  // Final polish on the target system; tolerance failures only affect status.
  auto polished = newton(h, x, 0.0, cfg.corrector_tolerance, cfg.max_corrector_iterations);
  if (polished.x.allFinite() && h.value(polished.x, 0.0).norm() <= h.value(x, 0.0).norm()) x = polished.x;
  TrackResult out = finish(TrackStatus::converged, 0.0);
  if (!(out.final_residual < cfg.end_tolerance)) out.status = TrackStatus::diverged;
  return out;
}

}  // namespace paramgb
