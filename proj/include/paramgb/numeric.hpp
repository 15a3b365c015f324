#pragma once

// Floating-point witnesses for the symbolic results: univariate root finding,
// back-substitution in triangular lex bases, and parameter-homotopy path
// tracking along the Davidenko ODE
//
//   H_x(x, t) x'(t) + H_t(x, t) = 0,   H(x, t) = F(x; q(t)),
//
// from t = 1 (start parameters) to t = 0 (target parameters).

#include "paramgb/errors.hpp"
#include "paramgb/ideal.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace paramgb {

using Complex = std::complex<double>;

struct ComplexPoint {
  std::vector<Complex> coords;
};

double distance(const ComplexPoint& a, const ComplexPoint& b);

class RootFindingError : public AlgebraError {
 public:
  RootFindingError(const std::string& what, std::vector<Complex> partial)
      : AlgebraError(what), partial_(std::move(partial)) {}
  const std::vector<Complex>& partial_roots() const { return partial_; }

 private:
  std::vector<Complex> partial_;
};

inline constexpr double kRootResidualBound = 1e-10;
inline constexpr double kClusterRadius = 1e-6;
inline constexpr double kRegularJacobianBound = 1e-8;

/// All roots of sum_i coeffs[i] z^i with multiplicity (Aberth–Ehrlich).
/// Each root satisfies |f(z)| / (||f||_2 max(1, |z|)^deg) < kRootResidualBound.
/// Throws std::invalid_argument for degree < 1, RootFindingError on stall.
std::vector<Complex> univariate_roots(std::span<const Complex> coeffs);
/// f must involve at most one variable.
std::vector<Complex> univariate_roots(const Polynomial& f);

/// Back-substitution in a zero-dimensional lex basis over the unknowns in
/// which each variable is the top variable of exactly one element, whose
/// leading monomial is a pure power. Throws AlgebraError("unsupported shape").
std::vector<ComplexPoint> solve_triangular(const GroebnerBasis& g);

/// Merges points closer than `radius`, keeping the first of each cluster.
std::vector<ComplexPoint> cluster_points(const std::vector<ComplexPoint>& points,
                                         double radius = kClusterRadius);

/// |det dF/dx| of F(x; q) at a complex point.
double jacobian_magnitude(const FamilySpec& family, const ParameterPoint& q, const ComplexPoint& x);

/// Regular zeros of F(x; q) counted numerically from the specialized
/// saturated basis: distinct points (cluster radius 1e-6) with
/// |det dF/dx| > 1e-8.
std::size_t verify_count_numerically(const FamilySpec& family, const ParameterPoint& q);

struct TrackerSettings {
  double corrector_tolerance = 1e-12;
  double end_tolerance = 1e-8;
  double start_tolerance = 1e-8;
  double initial_step = 1e-2;
  double min_step = 1e-12;
  double max_step = 0.1;
  int successes_before_doubling = 3;
  int max_corrector_iterations = 4;
  int max_steps = 100'000;
  /// Scaled condition number above which the path is declared singular.
  double singular_threshold = 1e10;
  /// Bends the parameter path into complex space by t(1-t)*w so that real
  /// start and target points do not force a real path through the
  /// discriminant. w vanishes when start and target coincide.
  bool complex_detour = true;
  std::uint64_t detour_seed = 0;
};

enum class TrackStatus { converged, diverged, singular_encounter };

std::string to_string(TrackStatus s);

struct TrackResult {
  ComplexPoint start;
  ComplexPoint end;
  TrackStatus status = TrackStatus::diverged;
  int steps = 0;
  double final_residual = 0;  // ||F(end; q_target)||_2, or at the last t reached
  double t_reached = 1;
  double end_jacobian = 0;  // |det H_x| at the last point
};

/// Tracks x0, an approximate zero of F(x; q_start), to a zero of F(x; q_target).
/// Throws std::invalid_argument when x0 is not an approximate start zero.
TrackResult track_path(const FamilySpec& family, const ParameterPoint& q_target,
                       const ParameterPoint& q_start, const ComplexPoint& x0,
                       const TrackerSettings& cfg = {});

}  // namespace paramgb
