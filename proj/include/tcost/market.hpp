#pragma once

#include <string>

namespace tcost {

// Market and preference parameters. All rates are annualized decimals (no
// percent handling): mu and r per year, sigma per sqrt-year, eps is the
// relative bid-ask spread (bid = (1-eps)*ask).
struct MarketSpec {
  double r = 0.0;      // safe rate
  double mu = 0.0;     // expected excess return of the risky asset, > 0
  double sigma = 0.0;  // volatility, > 0
  double gamma = 0.0;  // relative risk aversion, > 0
  double eps = 0.0;    // relative bid-ask spread, in [0, 1)
};

// Closed-form branch of the no-trade weight curve, plus the two degenerate
// regimes that bypass it.
enum class SolutionBranch {
  Tanh,        // negative discriminant, |b| < a
  Tan,         // positive discriminant
  Coth,        // negative discriminant, |b| > a
  UnitMerton,  // merton weight = 1: buy and hold, gap = 0
  LogUtility,  // gamma ~ 1: numerical ODE integration instead of closed form
};

const char* to_string(SolutionBranch branch);

// |merton - 1| below this is treated as the buy-and-hold degenerate case.
inline constexpr double kUnitMertonTol = 1e-10;
// |gamma - 1| below this routes to numerical integration of the weight ODE.
inline constexpr double kLogUtilityTol = 1e-6;

// Parameter set that passed validation, with the Merton weight and the
// lambda=0 discriminant precomputed. Immutable; safe to share across threads.
class ValidatedSpec {
 public:
  const MarketSpec& market() const { return m_; }
  double r() const { return m_.r; }
  double mu() const { return m_.mu; }
  double sigma() const { return m_.sigma; }
  double gamma() const { return m_.gamma; }
  double eps() const { return m_.eps; }

  double merton() const { return merton_; }             // mu / (gamma sigma^2)
  double mean_variance() const { return mvr_; }         // mu / sigma^2
  double gamma_sigma2() const { return gs2_; }          // gamma sigma^2
  bool is_unit_merton() const;
  bool is_log_utility() const;

  // Discriminant (gamma-1)(mu^2-lambda^2)/(gamma sigma^4) - (1/2 - mu/sigma^2)^2
  // of the weight ODE; its sign picks the closed-form branch.
  double discriminant(double lambda) const;
  double discriminant_sign0() const { return disc_sign0_; }

 private:
  friend ValidatedSpec validate(const MarketSpec& spec);
  explicit ValidatedSpec(const MarketSpec& m);

  MarketSpec m_;
  double merton_ = 0.0;
  double mvr_ = 0.0;
  double gs2_ = 0.0;
  double disc_sign0_ = 0.0;
};

// Checks mu > 0, sigma > 0, gamma > 0, 0 <= eps < 1. Throws a named Error
// (NegativeExcessReturn, NonpositiveVolatility, NonpositiveRiskAversion,
// SpreadOutOfRange) on violation.
ValidatedSpec validate(const MarketSpec& spec);

// Picks the branch at a given gap value. Exactly one branch fires for valid
// specs with lambda in [0, mu). Throws DiscriminantDegenerate when the
// discriminant is too close to zero for the closed forms to be trusted.
SolutionBranch classify(const ValidatedSpec& spec, double lambda);

}  // namespace tcost
