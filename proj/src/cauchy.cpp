// Cauchy score transform implementations.
#include "tcct/cauchy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "tcct/special.hpp"

namespace tcct {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double cauchy_transform(double p) {
  if (std::isnan(p) || p < 0.0 || p > 1.0) {
    throw std::domain_error("cauchy_transform requires p in [0,1]");
  }
  if (p == 0.5) return 0.0;
  // Reflect onto (0, 0.5); 1 - p is exact for p >= 0.5 (Sterbenz).
  const bool lower = p < 0.5;
  const double q = lower ? p : 1.0 - p;
  const double sign = lower ? 1.0 : -1.0;
  if (q == 0.0) return sign * kInf;
  if (q < 1e-15) return sign / (q * kPi);
  // tan((0.5 - q)*pi) = 1/tan(q*pi); the identity avoids evaluating tan near
  // its pole and keeps relative precision for small q.
  return sign / std::tan(q * kPi);
}

double cauchy_survival(double t) {
  if (std::isnan(t)) throw std::domain_error("cauchy_survival: NaN statistic");
  if (t == kInf) return 0.0;
  if (t == -kInf) return 1.0;
  if (t > 1e15) return 1.0 / (t * kPi);
  if (t > 1.0) return std::atan(1.0 / t) / kPi;
  if (t < -1.0) return 1.0 - std::atan(-1.0 / t) / kPi;
  return 0.5 - std::atan(t) / kPi;
}

double h_transform(double x) {
  if (!std::isfinite(x)) throw std::domain_error("h_transform requires finite x");
  // 2*Phi(|x|) - 1.5 = 0.5 - erfc(|x|/sqrt(2)), so h is the Cauchy transform
  // of the two-sided normal p-value. At x = 0 that p-value is 1, giving -inf.
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  return cauchy_transform(erfc_rational(std::fabs(x) * kInvSqrt2));
}

double f_transform(double x) {
  const double h = h_transform(x);
  return h > 0.0 ? h : 0.0;
}

}  // namespace tcct
