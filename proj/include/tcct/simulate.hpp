// Seeded Monte Carlo scenario runners: rejection-rate tables for the
// regression designs, the one-sided mean power curve, and the Beta-sampled
// power heatmap. Replication r always draws from stream (seed, r), so counts
// are independent of execution order and thread count.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tcct/combine.hpp"

namespace tcct {

inline constexpr std::uint64_t kDefaultSeed = 20240;

struct ScenarioConfig {
  int d = 100;
  int n = 100;
  double rho = 0.0;
  double effect = 0.0;
  std::vector<double> alpha_levels{0.05, 0.01, 0.001, 0.0001};
  long replications = 2000;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Method> methods{Method::kTcct, Method::kCct, Method::kFisher, Method::kTippett};
};

struct RejectionRow {
  double effect;
  double rho;
  double alpha;
  Method method;
  long rejections;
  long replications;

  double rate() const { return static_cast<double>(rejections) / static_cast<double>(replications); }
  double se() const;
};

struct RejectionTable {
  std::vector<RejectionRow> rows;
};

// Per replication: draw one random +/-1 covariate vector shared by all d
// tests, exchangeable-rho error vectors per subject, responses
// y = effect * x + eps, then the slope t-test per coordinate and every
// requested combiner on the d p-values. A replication rejects at alpha when
// the combined p-value is <= alpha.
RejectionTable run_regression_scenario(const ScenarioConfig& cfg);

// Same mechanics restricted to the TMin and Tippett methods; both see the
// identical p-value draws.
RejectionTable run_tmin_comparison(const ScenarioConfig& cfg);

struct PowerCurve {
  std::vector<double> c_values;
  std::vector<double> tcct_power;
  std::vector<double> cct_power;
  long replications;
  std::uint64_t seed;
};

// Per (c, replication): means equally spaced over [-c, c], n normal draws
// per mean, one-sided mean tests combined at level 0.05.
PowerCurve run_one_sided_curve(std::span<const double> c_grid, int d, int n, long reps,
                               std::uint64_t seed);

struct PowerHeatmap {
  std::vector<double> shape1;  // first Beta shape, one per row
  std::vector<double> shape2;  // second Beta shape, one per column
  std::vector<double> tcct_power;  // row-major [i * shape2.size() + j]
  std::vector<double> cct_power;
  std::vector<double> gain;  // tcct_power - cct_power
  long replications;
  double alpha_level;
  std::uint64_t seed;
};

// Per cell and replication: d iid Beta(shape1, shape2) draws treated as
// p-values, combined with the truncated and plain Cauchy methods.
PowerHeatmap run_beta_heatmap(std::span<const double> shape1_grid,
                              std::span<const double> shape2_grid, int d, long reps,
                              double alpha_level, std::uint64_t seed);

// Default 20x20 heatmap grid: 0.1, 0.2, ..., 2.0.
std::vector<double> default_heatmap_grid();

}  // namespace tcct
