// Elementary hypothesis test implementations.
#include "tcct/elementary.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tcct/special.hpp"

namespace tcct {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_sample(std::span<const double> response, std::span<const double> covariate,
                     size_t min_n) {
  if (response.size() != covariate.size()) {
    throw std::invalid_argument("response and covariate lengths differ");
  }
  if (response.size() < min_n) throw std::domain_error("sample too small");
  for (double v : response) {
    if (std::isnan(v)) throw std::domain_error("NaN in response");
  }
  for (double v : covariate) {
    if (std::isnan(v)) throw std::domain_error("NaN in covariate");
  }
}

double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

struct LogisticInfo {
  double i00, i01, i11;
};

LogisticInfo logistic_information(std::span<const double> y, std::span<const double> x,
                                  double b0, double b1) {
  LogisticInfo info{0.0, 0.0, 0.0};
  for (size_t j = 0; j < y.size(); ++j) {
    const double mu = 1.0 / (1.0 + std::exp(-(b0 + b1 * x[j])));
    const double w = mu * (1.0 - mu);
    info.i00 += w;
    info.i01 += w * x[j];
    info.i11 += w * x[j] * x[j];
  }
  return info;
}

// Re-maximize the intercept alone with the slope held fixed (used after a
// separation clamp). One-dimensional Newton on the intercept score.
double refit_intercept(std::span<const double> y, std::span<const double> x, double b1) {
  const double ybar = mean_of(y);
  double b0 = std::log(ybar / (1.0 - ybar));
  for (int iter = 0; iter < 50; ++iter) {
    double score = 0.0;
    double info = 0.0;
    for (size_t j = 0; j < y.size(); ++j) {
      const double mu = 1.0 / (1.0 + std::exp(-(b0 + b1 * x[j])));
      score += y[j] - mu;
      info += mu * (1.0 - mu);
    }
    if (std::fabs(score) < 1e-8 || info <= 0.0) break;
    b0 += score / info;
    if (b0 > 40.0) b0 = 40.0;
    if (b0 < -40.0) b0 = -40.0;
  }
  return b0;
}

}  // namespace

const char* note_name(TestNote n) {
  switch (n) {
    case TestNote::kNone: return "";
    case TestNote::kConstantResponse: return "CONSTANT_RESPONSE";
    case TestNote::kSeparation: return "SEPARATION";
    case TestNote::kTooFewNonzero: return "TOO_FEW_NONZERO";
  }
  return "";
}

TestOutcome ols_slope_test(std::span<const double> response, std::span<const double> covariate) {
  validate_sample(response, covariate, 3);
  const size_t n = response.size();
  const double xbar = mean_of(covariate);
  const double ybar = mean_of(response);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t j = 0; j < n; ++j) {
    const double dx = covariate[j] - xbar;
    const double dy = response[j] - ybar;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw std::domain_error("constant covariate");
  const double slope = sxy / sxx;
  // Explicit residual pass: subtracting slope*sxy from syy loses all digits
  // when the fit is near-perfect.
  double rss = 0.0;
  for (size_t j = 0; j < n; ++j) {
    const double r = (response[j] - ybar) - slope * (covariate[j] - xbar);
    rss += r * r;
  }
  const int df = static_cast<int>(n) - 2;
  if (rss <= 1e-12 * syy || syy == 0.0) {
    if (slope != 0.0) {
      return TestOutcome{slope > 0.0 ? kInf : -kInf, 0.0, Sided::kTwoSided, df,
                         TestNote::kConstantResponse};
    }
    return TestOutcome{0.0, 1.0, Sided::kTwoSided, df, TestNote::kConstantResponse};
  }
  const double se = std::sqrt(rss / df / sxx);
  const double t = slope / se;
  const double p = 2.0 * student_t_sf(std::fabs(t), df);
  return TestOutcome{t, p > 1.0 ? 1.0 : p, Sided::kTwoSided, df, TestNote::kNone};
}

TestOutcome one_sided_mean_test(std::span<const double> y) {
  if (y.size() < 2) throw std::domain_error("one_sided_mean_test requires n >= 2");
  for (double v : y) {
    if (std::isnan(v)) throw std::domain_error("NaN in sample");
  }
  const size_t n = y.size();
  const double ybar = mean_of(y);
  double ss = 0.0;
  for (double v : y) {
    const double d = v - ybar;
    ss += d * d;
  }
  if (ss == 0.0) throw std::domain_error("degenerate sample: zero variance");
  const int df = static_cast<int>(n) - 1;
  const double s = std::sqrt(ss / df);
  const double t = std::sqrt(static_cast<double>(n)) * ybar / s;
  return TestOutcome{t, student_t_sf(t, df), Sided::kOneSidedGreater, df, TestNote::kNone};
}

TestOutcome logistic_wald_test(std::span<const double> response, std::span<const double> covariate) {
  validate_sample(response, covariate, 3);
  const size_t n = response.size();
  bool any0 = false, any1 = false;
  for (double v : response) {
    if (v == 0.0) {
      any0 = true;
    } else if (v == 1.0) {
      any1 = true;
    } else {
      throw std::domain_error("logistic response entries must be 0 or 1");
    }
  }
  if (!any0 || !any1) {
    return TestOutcome{0.0, 1.0, Sided::kTwoSided, std::nullopt, TestNote::kConstantResponse};
  }
  double cmin = covariate[0], cmax = covariate[0];
  for (double v : covariate) {
    cmin = std::min(cmin, v);
    cmax = std::max(cmax, v);
  }
  if (cmin == cmax) throw std::domain_error("constant covariate");

  const double ybar = mean_of(response);
  double b0 = std::log(ybar / (1.0 - ybar));
  double b1 = 0.0;
  bool separated = false;
  for (int iter = 0; iter < 50; ++iter) {
    double s0 = 0.0, s1 = 0.0;
    for (size_t j = 0; j < n; ++j) {
      const double mu = 1.0 / (1.0 + std::exp(-(b0 + b1 * covariate[j])));
      const double r = response[j] - mu;
      s0 += r;
      s1 += r * covariate[j];
    }
    if (std::max(std::fabs(s0), std::fabs(s1)) < 1e-8) break;
    const LogisticInfo info = logistic_information(response, covariate, b0, b1);
    const double det = info.i00 * info.i11 - info.i01 * info.i01;
    if (det <= 0.0 || !std::isfinite(det)) {
      separated = true;
      break;
    }
    b0 += (info.i11 * s0 - info.i01 * s1) / det;
    b1 += (info.i00 * s1 - info.i01 * s0) / det;
    if (std::fabs(b1) > 15.0) {
      separated = true;
      break;
    }
  }
  if (separated) {
    b1 = b1 > 0.0 ? 15.0 : -15.0;
    b0 = refit_intercept(response, covariate, b1);
  }
  const LogisticInfo info = logistic_information(response, covariate, b0, b1);
  const double det = info.i00 * info.i11 - info.i01 * info.i01;
  const double se = std::sqrt(info.i00 / det);
  const double z = b1 / se;
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  const double p = erfc_rational(std::fabs(z) * kInvSqrt2);
  return TestOutcome{z, p, Sided::kTwoSided, std::nullopt,
                     separated ? TestNote::kSeparation : TestNote::kNone};
}

std::pair<TestOutcome, TestOutcome> two_part_test(std::span<const double> response,
                                                  std::span<const double> covariate) {
  validate_sample(response, covariate, 3);
  std::vector<double> indicator(response.size());
  std::vector<double> y_nz, x_nz;
  for (size_t j = 0; j < response.size(); ++j) {
    const bool nz = response[j] != 0.0;
    indicator[j] = nz ? 1.0 : 0.0;
    if (nz) {
      y_nz.push_back(response[j]);
      x_nz.push_back(covariate[j]);
    }
  }
  const TestOutcome part1 = logistic_wald_test(indicator, covariate);
  bool constant_x = true;
  for (double v : x_nz) {
    if (v != x_nz.front()) {
      constant_x = false;
      break;
    }
  }
  if (y_nz.size() < 3 || constant_x) {
    const TestOutcome part2{0.0, 1.0, Sided::kTwoSided, std::nullopt, TestNote::kTooFewNonzero};
    return {part1, part2};
  }
  return {part1, ols_slope_test(y_nz, x_nz)};
}

}  // namespace tcct
