#pragma once

#include <array>
#include <vector>

#include "tcost/market.hpp"

namespace tcost {

// Risky-weight profile w across the no-trade region: the solution of
//
//   w'(y) + (1-gamma) w(y)^2 + (2 mu/sigma^2 - 1) w(y)
//         - (mu^2 - lambda^2)/(gamma sigma^4) = 0,
//   w(0) = (mu - lambda)/(gamma sigma^2),
//
// evaluated through the closed tanh/tan/coth form of the active branch.
// Near gamma = 1 the closed forms divide by gamma-1, so the LogUtility branch
// integrates the ODE with a fixed-step classical RK4 scheme instead.
//
// w is also the optimal risky fraction in the equivalent frictionless market,
// so value() stays between the buy and sell weights on the no-trade interval.
// Negative lambda is accepted (the closed forms extend analytically); the
// solver itself only produces lambda >= 0. Evaluators are immutable and
// thread-safe.
class WeightCurve {
 public:
  WeightCurve(const ValidatedSpec& spec, double lambda);

  // w(y). Throws PoleEncountered if the tan/coth argument crosses a
  // singularity between 0 and y.
  double value(double y) const;

  // w'(y), evaluated through the defining ODE at w(y).
  double slope(double y) const;

  SolutionBranch branch() const { return branch_; }
  double coef_a() const { return a_; }
  double coef_b() const { return b_; }
  double lambda() const { return lambda_; }
  const ValidatedSpec& spec() const { return spec_; }

 private:
  double log_utility_value(double y) const;

  ValidatedSpec spec_;
  double lambda_;
  SolutionBranch branch_;
  double a_ = 0.0;     // sqrt(|discriminant|)
  double b_ = 0.0;     // 1/2 - mu/sigma^2 + (gamma-1)(mu-lambda)/(gamma sigma^2)
  double arg0_ = 0.0;  // atan(b/a), atanh(b/a) or acoth(b/a)
  double quad_ = 0.0;  // (mu^2 - lambda^2)/(gamma sigma^4), the ODE constant

  // LogUtility branch: cached RK4 grid over the extended no-trade interval.
  double grid_lo_ = 0.0;
  double grid_step_ = 0.0;
  std::vector<double> grid_w_;
};

// Trading boundaries as risky/safe value ratios. Throws BoundarySingular when
// gamma sigma^2 - (mu +/- lambda) vanishes (risky weight of one).
double buy_ratio(const ValidatedSpec& spec, double lambda);   // at the buy side
double sell_ratio(const ValidatedSpec& spec, double lambda);  // at the sell side

// log(sell_ratio / buy_ratio); negative when the position is levered
// (merton > 1), zero in the frictionless limit.
double boundary_log_span(const ValidatedSpec& spec, double lambda);

// Terminal boundary mismatch f(lambda, eps) = w(lambda, log(u/l)) -
// (mu+lambda)/(gamma sigma^2). The gap is its root in lambda.
double boundary_residual(const ValidatedSpec& spec, double lambda);

// Fractional power series for the gap: order 1 gives the eps^(1/3) term,
// order 2 adds the eps term.
double gap_series(const ValidatedSpec& spec, int order);

struct GapSolution {
  ValidatedSpec spec;
  double lambda = 0.0;
  double l = 0.0;          // buy-side risky/safe ratio
  double u = 0.0;          // sell-side risky/safe ratio
  double pi_minus = 0.0;   // buy-boundary risky weight (ask prices)
  double pi_plus = 0.0;    // sell-boundary risky weight (bid prices)
  double log_ratio = 0.0;  // log(u/l)
  SolutionBranch branch = SolutionBranch::Tan;
  double residual = 0.0;   // |f| at the returned lambda
  int iterations = 0;

  WeightCurve curve() const { return WeightCurve(spec, lambda); }
  bool levered() const { return spec.merton() > 1.0; }
  // Oriented interval endpoints: [min(0, log_ratio), max(0, log_ratio)].
  double y_lo() const { return log_ratio < 0.0 ? log_ratio : 0.0; }
  double y_hi() const { return log_ratio < 0.0 ? 0.0 : log_ratio; }
};

// Solves the scalar boundary condition for the gap with bracketed Brent
// (absolute tolerance 1e-12 on lambda, residual polished below 1e-12).
// eps = 0 and the unit-Merton case return lambda = 0 immediately. Throws
// NoBracket when no sign change exists up to the leverage-consistency cap
// (spread too large for the small-spread theory).
GapSolution solve_gap(const ValidatedSpec& spec);

// Cross-check of the weight curve's mixed partial derivatives at
// (lambda, y) = (0, 0) against their closed forms, using Richardson-
// extrapolated central differences with steps 1e-3 and 5e-4.
struct DerivativeTableReport {
  std::array<const char*, 9> names;
  std::array<double, 9> exact;
  std::array<double, 9> estimated;
  std::array<double, 9> rel_error;
  double max_rel_error = 0.0;
};

DerivativeTableReport derivative_table_check(const ValidatedSpec& spec);

}  // namespace tcost
