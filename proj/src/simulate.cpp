// Monte Carlo scenario runner implementations.
#include "tcct/simulate.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "tcct/elementary.hpp"
#include "tcct/rng.hpp"

namespace tcct {
namespace {

void validate_config(const ScenarioConfig& cfg) {
  if (cfg.d < 1) throw std::invalid_argument("d must be >= 1");
  if (cfg.n < 3) throw std::invalid_argument("n must be >= 3");
  if (std::isnan(cfg.rho) || cfg.rho < 0.0 || cfg.rho > 1.0) {
    throw std::invalid_argument("rho must lie in [0,1]");
  }
  if (!std::isfinite(cfg.effect)) throw std::invalid_argument("effect must be finite");
  if (cfg.replications < 1) throw std::invalid_argument("replications must be >= 1");
  if (cfg.alpha_levels.empty()) throw std::invalid_argument("at least one alpha level required");
  for (double a : cfg.alpha_levels) {
    if (!(a > 0.0) || !(a < 1.0)) throw std::invalid_argument("alpha levels must lie in (0,1)");
  }
  if (cfg.methods.empty()) throw std::invalid_argument("at least one method required");
}

// Runs body(lo, hi, counts) over [0, reps) split into contiguous chunks, one
// per thread, and sums the integer count vectors. Replication streams are
// derived from the replication index, so the partition never changes results.
void run_chunked(long reps, std::vector<long>& counts,
                 const std::function<void(long, long, std::vector<long>&)>& body) {
  unsigned hw = std::thread::hardware_concurrency();
  long want = static_cast<long>(hw == 0 ? 1 : hw);
  long n_threads = std::min(want, std::max(1L, reps / 256));
  if (n_threads <= 1) {
    body(0, reps, counts);
    return;
  }
  std::vector<std::vector<long>> local(static_cast<size_t>(n_threads),
                                       std::vector<long>(counts.size(), 0));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(n_threads));
  for (long t = 0; t < n_threads; ++t) {
    const long lo = reps * t / n_threads;
    const long hi = reps * (t + 1) / n_threads;
    pool.emplace_back([&body, &local, t, lo, hi] { body(lo, hi, local[static_cast<size_t>(t)]); });
  }
  for (auto& th : pool) th.join();
  for (const auto& l : local) {
    for (size_t i = 0; i < counts.size(); ++i) counts[i] += l[i];
  }
}

// One regression replication: p-values for the d coordinate tests.
void regression_pvalues(RngStream& rng, const ScenarioConfig& cfg, std::vector<double>& x,
                        std::vector<double>& eps, std::vector<double>& y,
                        std::vector<double>& pvals) {
  const size_t n = static_cast<size_t>(cfg.n);
  const size_t d = static_cast<size_t>(cfg.d);
  // Random +/-1 assignment shared by all d tests; redraw a degenerate
  // (constant) vector so the slope test is always defined.
  for (;;) {
    bool seen_lo = false, seen_hi = false;
    for (size_t j = 0; j < n; ++j) {
      x[j] = rng.uniform01() < 0.5 ? -1.0 : 1.0;
      (x[j] < 0.0 ? seen_lo : seen_hi) = true;
    }
    if (seen_lo && seen_hi) break;
  }
  for (size_t j = 0; j < n; ++j) {
    sample_exchangeable_normal(rng, cfg.rho, std::span<double>(eps.data() + j * d, d));
  }
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < n; ++j) y[j] = cfg.effect * x[j] + eps[j * d + i];
    pvals[i] = ols_slope_test(y, x).p_value;
  }
}

RejectionTable run_rejection_grid(const ScenarioConfig& cfg) {
  validate_config(cfg);
  const size_t n_methods = cfg.methods.size();
  const size_t n_alphas = cfg.alpha_levels.size();
  std::vector<long> counts(n_methods * n_alphas, 0);

  run_chunked(cfg.replications, counts, [&cfg, n_methods, n_alphas](long lo, long hi,
                                                                    std::vector<long>& out) {
    std::vector<double> x(static_cast<size_t>(cfg.n));
    std::vector<double> eps(static_cast<size_t>(cfg.n) * static_cast<size_t>(cfg.d));
    std::vector<double> y(static_cast<size_t>(cfg.n));
    std::vector<double> pvals(static_cast<size_t>(cfg.d));
    for (long r = lo; r < hi; ++r) {
      RngStream rng(cfg.seed, static_cast<std::uint64_t>(r));
      regression_pvalues(rng, cfg, x, eps, y, pvals);
      for (size_t m = 0; m < n_methods; ++m) {
        double p;
        try {
          p = combine(cfg.methods[m], pvals).p_combined;
        } catch (const CctIndeterminateError&) {
          continue;  // indeterminate statistic never counts as a rejection
        }
        for (size_t a = 0; a < n_alphas; ++a) {
          if (p <= cfg.alpha_levels[a]) ++out[m * n_alphas + a];
        }
      }
    }
  });

  RejectionTable table;
  table.rows.reserve(counts.size());
  for (size_t m = 0; m < n_methods; ++m) {
    for (size_t a = 0; a < n_alphas; ++a) {
      table.rows.push_back(RejectionRow{cfg.effect, cfg.rho, cfg.alpha_levels[a], cfg.methods[m],
                                        counts[m * n_alphas + a], cfg.replications});
    }
  }
  return table;
}

}  // namespace

double RejectionRow::se() const {
  const double r = rate();
  return std::sqrt(r * (1.0 - r) / static_cast<double>(replications));
}

RejectionTable run_regression_scenario(const ScenarioConfig& cfg) { return run_rejection_grid(cfg); }

RejectionTable run_tmin_comparison(const ScenarioConfig& cfg) {
  ScenarioConfig c = cfg;
  c.methods = {Method::kTMin, Method::kTippett};
  return run_rejection_grid(c);
}

PowerCurve run_one_sided_curve(std::span<const double> c_grid, int d, int n, long reps,
                               std::uint64_t seed) {
  if (c_grid.empty()) throw std::invalid_argument("c grid must be nonempty");
  for (double c : c_grid) {
    if (std::isnan(c) || c < 0.0 || c > 0.45) {
      throw std::invalid_argument("c values must lie in [0, 0.45]");
    }
  }
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (reps < 1) throw std::invalid_argument("replications must be >= 1");
  constexpr double kAlpha = 0.05;

  PowerCurve curve;
  curve.c_values.assign(c_grid.begin(), c_grid.end());
  curve.replications = reps;
  curve.seed = seed;
  for (size_t ci = 0; ci < c_grid.size(); ++ci) {
    const double c = c_grid[ci];
    std::vector<double> mus(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
      mus[static_cast<size_t>(k)] =
          d == 1 ? -c : -c + 2.0 * c * static_cast<double>(k) / static_cast<double>(d - 1);
    }
    std::vector<long> counts(2, 0);
    run_chunked(reps, counts, [&](long lo, long hi, std::vector<long>& out) {
      std::vector<double> y(static_cast<size_t>(n));
      std::vector<double> pvals(static_cast<size_t>(d));
      for (long r = lo; r < hi; ++r) {
        RngStream rng(seed, ci * static_cast<std::uint64_t>(reps) + static_cast<std::uint64_t>(r));
        for (int k = 0; k < d; ++k) {
          for (int j = 0; j < n; ++j) y[static_cast<size_t>(j)] = mus[static_cast<size_t>(k)] + rng.normal();
          pvals[static_cast<size_t>(k)] = one_sided_mean_test(y).p_value;
        }
        if (tcct(pvals).p_combined <= kAlpha) ++out[0];
        try {
          if (cct(pvals).p_combined <= kAlpha) ++out[1];
        } catch (const CctIndeterminateError&) {
        }
      }
    });
    curve.tcct_power.push_back(static_cast<double>(counts[0]) / static_cast<double>(reps));
    curve.cct_power.push_back(static_cast<double>(counts[1]) / static_cast<double>(reps));
  }
  return curve;
}

PowerHeatmap run_beta_heatmap(std::span<const double> shape1_grid,
                              std::span<const double> shape2_grid, int d, long reps,
                              double alpha_level, std::uint64_t seed) {
  if (shape1_grid.empty() || shape2_grid.empty()) {
    throw std::invalid_argument("heatmap grids must be nonempty");
  }
  for (double s : shape1_grid) {
    if (!(s > 0.0)) throw std::invalid_argument("Beta shapes must be positive");
  }
  for (double s : shape2_grid) {
    if (!(s > 0.0)) throw std::invalid_argument("Beta shapes must be positive");
  }
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (reps < 1) throw std::invalid_argument("replications must be >= 1");
  if (!(alpha_level > 0.0) || !(alpha_level < 1.0)) {
    throw std::invalid_argument("alpha level must lie in (0,1)");
  }

  PowerHeatmap map;
  map.shape1.assign(shape1_grid.begin(), shape1_grid.end());
  map.shape2.assign(shape2_grid.begin(), shape2_grid.end());
  map.replications = reps;
  map.alpha_level = alpha_level;
  map.seed = seed;
  const size_t n2 = shape2_grid.size();
  for (size_t i = 0; i < shape1_grid.size(); ++i) {
    for (size_t j = 0; j < n2; ++j) {
      std::vector<long> counts(2, 0);
      const std::uint64_t cell = (i * n2 + j) * static_cast<std::uint64_t>(reps);
      run_chunked(reps, counts, [&](long lo, long hi, std::vector<long>& out) {
        std::vector<double> pvals(static_cast<size_t>(d));
        for (long r = lo; r < hi; ++r) {
          RngStream rng(seed, cell + static_cast<std::uint64_t>(r));
          for (int k = 0; k < d; ++k) {
            pvals[static_cast<size_t>(k)] = sample_beta(rng, shape1_grid[i], shape2_grid[j]);
          }
          if (tcct(pvals).p_combined <= alpha_level) ++out[0];
          try {
            if (cct(pvals).p_combined <= alpha_level) ++out[1];
          } catch (const CctIndeterminateError&) {
          }
        }
      });
      const double pt = static_cast<double>(counts[0]) / static_cast<double>(reps);
      const double pc = static_cast<double>(counts[1]) / static_cast<double>(reps);
      map.tcct_power.push_back(pt);
      map.cct_power.push_back(pc);
      map.gain.push_back(pt - pc);
    }
  }
  return map;
}

std::vector<double> default_heatmap_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 20; ++i) g.push_back(static_cast<double>(i) / 10.0);
  return g;
}

}  // namespace tcct
