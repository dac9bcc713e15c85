// Per-coordinate hypothesis tests feeding the combiners: simple-regression
// slope t-test, one-sided one-sample t-test, logistic Wald test, and the
// two-part (hurdle) test for zero-inflated responses.
#pragma once

#include <optional>
#include <span>
#include <utility>

namespace tcct {

enum class Sided { kOneSidedGreater, kTwoSided };

enum class TestNote { kNone, kConstantResponse, kSeparation, kTooFewNonzero };

struct TestOutcome {
  double statistic;
  double p_value;
  Sided sided;
  std::optional<int> df;
  TestNote note = TestNote::kNone;
};

const char* note_name(TestNote n);

// Two-sided t-test of the slope in simple linear regression of response on
// covariate. Requires n >= 3 matched finite samples and a non-constant
// covariate. Zero residual variance yields note kConstantResponse with p = 0
// when the slope is nonzero and p = 1 otherwise.
TestOutcome ols_slope_test(std::span<const double> response, std::span<const double> covariate);

// One-sample t-test of mean <= 0 against mean > 0. Requires n >= 2 and
// nonzero sample variance.
TestOutcome one_sided_mean_test(std::span<const double> y);

// Wald test of the slope in intercept + slope logistic regression fitted by
// Newton-Raphson (at most 50 iterations; converged when every score
// component is below 1e-8 in magnitude). Responses must be exactly 0 or 1.
// A constant response returns p = 1 with note kConstantResponse; a slope
// escaping past |b| = 15 is clamped there with note kSeparation and the Wald
// p computed at the clamped fit.
TestOutcome logistic_wald_test(std::span<const double> response, std::span<const double> covariate);

// Two-part test: first the logistic Wald test on the nonzero indicator of
// the response, then the slope t-test on the nonzero subsample. A nonzero
// subsample with fewer than 3 points or a constant covariate makes part two
// p = 1 with note kTooFewNonzero.
std::pair<TestOutcome, TestOutcome> two_part_test(std::span<const double> response,
                                                  std::span<const double> covariate);

}  // namespace tcct
