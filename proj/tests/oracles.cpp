// Reference computations for the tests.
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {
namespace {

constexpr double kPi = std::numbers::pi;

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double m, double b,
                     double fa, double fm, double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  // Stop on the accuracy criterion, at the depth cap, or once delta sits at
  // evaluation-noise scale. Integrands built from exp() of large cancelling
  // exponents are only reproducible to ~1e-13 relative, so deltas below
  // 1e-12 of the local values are rounding jitter and splitting further
  // cannot help; both delta and the halved tolerance shrink with the
  // interval, so the race would otherwise never end.
  const double noise =
      1e-12 * (std::fabs(left) + std::fabs(right) + std::fabs(whole));
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol || std::fabs(delta) <= noise) {
    return left + right + delta / 15.0;
  }
  return adaptive_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) throw std::domain_error("quantile needs p in (0,1)");
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double ks_uniform(std::vector<double> sample) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double hi = (static_cast<double>(i) + 1.0) / n - sample[i];
    const double lo = sample[i] - static_cast<double>(i) / n;
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

double ks_threshold(double level, std::size_t n) {
  return std::sqrt(-std::log(level / 2.0) / 2.0) / std::sqrt(static_cast<double>(n));
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = simpson(a, b, fa, fm, fb);
  return adaptive_step(f, a, m, b, fa, fm, fb, whole, tol, 60);
}

double chisq_sf_quadrature(double x, int df) {
  const double k = 0.5 * df;
  const double log_norm = -k * std::log(2.0) - std::lgamma(k);
  const auto density = [&](double u) {
    if (u <= 0.0) return 0.0;
    return std::exp(log_norm + (k - 1.0) * std::log(u) - 0.5 * u);
  };
  // Integrate out to a point where the remaining tail is negligible.
  const double upper = std::max(x, static_cast<double>(df)) + 60.0 * std::sqrt(2.0 * df) + 60.0;
  if (x >= upper) return 0.0;
  return integrate(density, x, upper, 1e-14);
}

double truncated_pair_tail(double t) {
  // z(s): the threshold with f(|V|) > s iff |V| > z(s); from the identity
  // P(f > s) = two-sided normal tail at z(s) = erfc(z/sqrt2).
  const auto z_of = [](double s) {
    const double target = 0.75 + std::atan(s) / (2.0 * kPi);
    return normal_quantile(target);
  };
  const auto f_of = [](double u) {
    const double psi = std::erfc(u / std::sqrt(2.0));  // two-sided p-value
    if (psi >= 0.5) return 0.0;
    return 1.0 / std::tan(psi * kPi);
  };
  const double s = 2.0 * t;
  const double u0 = z_of(0.0);
  const double z2t = z_of(s);
  const double q2t = std::erfc(z2t / std::sqrt(2.0));
  const auto integrand = [&](double u) {
    const double density = 2.0 * std::exp(-0.5 * u * u) / std::sqrt(2.0 * kPi);
    const double rem = std::max(s - f_of(u), 0.0);
    return density * std::erfc(z_of(rem) / std::sqrt(2.0));
  };
  const double middle = integrate(integrand, u0, z2t, 1e-13);
  // P(|X| <= u0) * q(2t) + middle + P(|X| > z(2t)) * 1.
  return 0.5 * q2t + middle + q2t;
}

}  // namespace oracle
