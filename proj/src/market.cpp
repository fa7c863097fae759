#include "tcost/market.hpp"

#include <cmath>
#include <sstream>

#include "tcost/errors.hpp"

namespace tcost {

const char* to_string(SolutionBranch branch) {
  switch (branch) {
    case SolutionBranch::Tanh: return "tanh";
    case SolutionBranch::Tan: return "tan";
    case SolutionBranch::Coth: return "coth";
    case SolutionBranch::UnitMerton: return "unit-merton";
    case SolutionBranch::LogUtility: return "log-utility";
  }
  return "?";
}

ValidatedSpec::ValidatedSpec(const MarketSpec& m) : m_(m) {
  gs2_ = m_.gamma * m_.sigma * m_.sigma;
  mvr_ = m_.mu / (m_.sigma * m_.sigma);
  merton_ = m_.mu / gs2_;
  const double d0 = discriminant(0.0);
  disc_sign0_ = d0 > 0.0 ? 1.0 : (d0 < 0.0 ? -1.0 : 0.0);
}

bool ValidatedSpec::is_unit_merton() const {
  return std::abs(merton_ - 1.0) < kUnitMertonTol;
}

bool ValidatedSpec::is_log_utility() const {
  return std::abs(m_.gamma - 1.0) < kLogUtilityTol;
}

double ValidatedSpec::discriminant(double lambda) const {
  const double s2 = m_.sigma * m_.sigma;
  const double half_minus_m = 0.5 - mvr_;
  return (m_.gamma - 1.0) * (m_.mu * m_.mu - lambda * lambda) /
             (m_.gamma * s2 * s2) -
         half_minus_m * half_minus_m;
}

ValidatedSpec validate(const MarketSpec& spec) {
  auto fail = [&](const char* name, const char* cond) {
    std::ostringstream os;
    os << cond << " (r=" << spec.r << ", mu=" << spec.mu
       << ", sigma=" << spec.sigma << ", gamma=" << spec.gamma
       << ", eps=" << spec.eps << ")";
    throw Error(name, os.str());
  };
  if (!(spec.mu > 0.0)) fail("NegativeExcessReturn", "require mu > 0");
  if (!(spec.sigma > 0.0)) fail("NonpositiveVolatility", "require sigma > 0");
  if (!(spec.gamma > 0.0)) fail("NonpositiveRiskAversion", "require gamma > 0");
  if (!(spec.eps >= 0.0 && spec.eps < 1.0))
    fail("SpreadOutOfRange", "require 0 <= eps < 1");
  ValidatedSpec v(spec);
  if (!std::isfinite(v.merton()) || !(v.merton() > 0.0))
    fail("NegativeExcessReturn", "merton weight must be finite and positive");
  return v;
}

SolutionBranch classify(const ValidatedSpec& spec, double lambda) {
  if (spec.is_unit_merton()) return SolutionBranch::UnitMerton;
  if (spec.is_log_utility()) return SolutionBranch::LogUtility;

  const double d = spec.discriminant(lambda);
  const double s2 = spec.sigma() * spec.sigma();
  const double t1 = std::abs((spec.gamma() - 1.0) *
                             (spec.mu() * spec.mu() - lambda * lambda) /
                             (spec.gamma() * s2 * s2));
  const double t2 = (0.5 - spec.mean_variance()) * (0.5 - spec.mean_variance());
  const double scale = std::max(t1, t2);
  if (std::abs(d) <= 1e-12 * scale) {
    std::ostringstream os;
    os << "discriminant " << d << " within tolerance of zero at lambda="
       << lambda;
    throw Error("DiscriminantDegenerate", os.str());
  }
  if (d > 0.0) return SolutionBranch::Tan;

  // Negative discriminant: tanh needs |b/a| < 1, coth needs |b/a| > 1.
  // At lambda=0 this reduces to the (gamma, merton) predicate since
  // b^2 - a^2 = (gamma-1) * merton * (1 - merton).
  const double a = std::sqrt(-d);
  const double b = 0.5 - spec.mean_variance() +
                   (spec.gamma() - 1.0) * (spec.mu() - lambda) / spec.gamma_sigma2();
  return std::abs(b) < a ? SolutionBranch::Tanh : SolutionBranch::Coth;
}

}  // namespace tcost
