// CLI wiring and report/table file emission.
#include "tcct/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tcct/csv.hpp"
#include "tcct/pipeline.hpp"
#include "tcct/simulate.hpp"
#include "tcct/svg.hpp"
#include "tcct/version.hpp"

namespace tcct {
namespace {

std::vector<Method> parse_methods(const std::string& spec) {
  std::vector<Method> methods;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto m = parse_method(token);
    if (!m) throw UsageError("unknown method: " + token);
    methods.push_back(*m);
  }
  if (methods.empty()) throw UsageError("no methods requested");
  return methods;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("TCCT_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  std::uint64_t value = 0;
  const char* end = env + std::string_view(env).size();
  const auto res = std::from_chars(env, end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    throw UsageError(std::string("TCCT_SEED is not an unsigned integer: ") + env);
  }
  return value;
}

// Canonical method ordering for emitted tables.
int method_rank(const std::string& name) {
  if (name == "TCCT") return 0;
  if (name == "CCT") return 1;
  if (name == "Fisher") return 2;
  if (name == "Tippett") return 3;
  return 4;
}

std::string render_rejection_table(const std::vector<RejectionRow>& rows,
                                   const ScenarioConfig& cfg) {
  std::vector<RejectionRow> sorted = rows;
  std::sort(sorted.begin(), sorted.end(), [](const RejectionRow& a, const RejectionRow& b) {
    if (a.effect != b.effect) return a.effect < b.effect;
    if (a.rho != b.rho) return a.rho < b.rho;
    if (a.alpha != b.alpha) return a.alpha > b.alpha;
    return method_rank(method_name(a.method)) < method_rank(method_name(b.method));
  });
  std::string out;
  out += "# version: " + std::string(kVersion) + "\n";
  out += "# seed: " + std::to_string(cfg.seed) + "\n";
  out += "# d: " + std::to_string(cfg.d) + "\n";
  out += "# n: " + std::to_string(cfg.n) + "\n";
  out += "effect,rho,alpha,method,rejections,replications,rate,se\n";
  for (const RejectionRow& row : sorted) {
    out += format_double(row.effect) + "," + format_double(row.rho) + "," +
           format_double(row.alpha) + "," + method_name(row.method) + "," +
           std::to_string(row.rejections) + "," + std::to_string(row.replications) + "," +
           format_double(row.rate()) + "," + format_double(row.se()) + "\n";
  }
  return out;
}

struct SimOptions {
  int d = 100;
  int n = 100;
  std::optional<double> rho;
  std::optional<double> effect;
  std::vector<double> alphas;
  std::optional<long> reps;
  std::optional<std::uint64_t> seed;
  std::vector<double> c_values;
  bool full_scale = false;
  std::string output_dir = ".";
};

void add_sim_options(CLI::App* cmd, SimOptions& opt, bool with_c) {
  cmd->add_option("--d", opt.d, "number of combined tests");
  cmd->add_option("--n", opt.n, "per-test sample size");
  cmd->add_option("--rho", opt.rho, "single correlation instead of the 0,0.3,0.6,0.9 grid");
  cmd->add_option("--effect", opt.effect, "regression slope");
  cmd->add_option("--alpha", opt.alphas, "significance levels")->delimiter(',');
  cmd->add_option("--reps", opt.reps, "Monte Carlo replications");
  cmd->add_option("--seed", opt.seed, "RNG seed (default from TCCT_SEED or 20240)");
  cmd->add_flag("--full-scale", opt.full_scale, "replication counts used for the reference tables");
  cmd->add_option("--output-dir", opt.output_dir, "directory for emitted files");
  if (with_c) {
    cmd->add_option("--c", opt.c_values, "mean half-ranges for the power curve")->delimiter(',');
  }
}

std::filesystem::path prepare_output_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) throw UsageError("cannot create output directory: " + dir);
  return p;
}

void run_rejection_command(const SimOptions& opt, const char* file_name,
                           std::vector<double> effects, bool tmin, long full_scale_reps) {
  ScenarioConfig base;
  base.d = opt.d;
  base.n = opt.n;
  base.alpha_levels = opt.alphas.empty()
                          ? std::vector<double>{0.05, 0.01, 0.001, 0.0001}
                          : opt.alphas;
  base.replications = opt.reps.value_or(opt.full_scale ? full_scale_reps : 2000);
  base.seed = opt.seed ? *opt.seed : default_seed();
  if (opt.effect) effects = {*opt.effect};
  const std::vector<double> rhos =
      opt.rho ? std::vector<double>{*opt.rho} : std::vector<double>{0.0, 0.3, 0.6, 0.9};

  std::vector<RejectionRow> rows;
  for (double effect : effects) {
    for (double rho : rhos) {
      ScenarioConfig cfg = base;
      cfg.effect = effect;
      cfg.rho = rho;
      const RejectionTable t = tmin ? run_tmin_comparison(cfg) : run_regression_scenario(cfg);
      rows.insert(rows.end(), t.rows.begin(), t.rows.end());
    }
  }
  const auto dir = prepare_output_dir(opt.output_dir);
  write_file((dir / file_name).string(), render_rejection_table(rows, base));
}

void run_figure1(const SimOptions& opt) {
  std::vector<double> c_grid = opt.c_values;
  if (c_grid.empty()) {
    for (int i = 0; i <= 9; ++i) c_grid.push_back(0.05 * i);
  }
  const long reps = opt.reps.value_or(opt.full_scale ? 10000 : 2000);
  const std::uint64_t seed = opt.seed ? *opt.seed : default_seed();
  const PowerCurve curve = run_one_sided_curve(c_grid, opt.d, opt.n, reps, seed);

  std::string csv;
  csv += "# version: " + std::string(kVersion) + "\n";
  csv += "# seed: " + std::to_string(seed) + "\n";
  csv += "# replications: " + std::to_string(reps) + "\n";
  csv += "c,tcct_power,cct_power\n";
  for (size_t i = 0; i < curve.c_values.size(); ++i) {
    csv += format_double(curve.c_values[i]) + "," + format_double(curve.tcct_power[i]) + "," +
           format_double(curve.cct_power[i]) + "\n";
  }
  LineChartSpec chart;
  chart.title = "Power of combined one-sided mean tests";
  chart.x_label = "c (means span [-c, c])";
  chart.y_label = "power at level 0.05";
  chart.x = curve.c_values;
  chart.series = {LineSeries{"TCCT", "#c0392b", curve.tcct_power},
                  LineSeries{"CCT", "#2c6fbb", curve.cct_power}};
  const auto dir = prepare_output_dir(opt.output_dir);
  write_file((dir / "figure1.csv").string(), csv);
  write_file((dir / "figure1.svg").string(), svg_line_chart(chart));
}

void run_figure2(const SimOptions& opt) {
  const long reps = opt.reps.value_or(opt.full_scale ? 10000 : 2000);
  const std::uint64_t seed = opt.seed ? *opt.seed : default_seed();
  double level = 0.05;
  if (!opt.alphas.empty()) {
    if (opt.alphas.size() != 1) throw UsageError("figure2 takes a single --alpha level");
    level = opt.alphas.front();
  }
  const std::vector<double> grid = default_heatmap_grid();
  const PowerHeatmap map = run_beta_heatmap(grid, grid, opt.d, reps, level, seed);

  std::string csv;
  csv += "# version: " + std::string(kVersion) + "\n";
  csv += "# seed: " + std::to_string(seed) + "\n";
  csv += "# replications: " + std::to_string(reps) + "\n";
  csv += "# alpha_level: " + format_double(level) + "\n";
  csv += "shape1,shape2,tcct_power,cct_power,gain\n";
  const size_t n2 = map.shape2.size();
  for (size_t i = 0; i < map.shape1.size(); ++i) {
    for (size_t j = 0; j < n2; ++j) {
      csv += format_double(map.shape1[i]) + "," + format_double(map.shape2[j]) + "," +
             format_double(map.tcct_power[i * n2 + j]) + "," +
             format_double(map.cct_power[i * n2 + j]) + "," +
             format_double(map.gain[i * n2 + j]) + "\n";
    }
  }
  HeatmapSpec heat;
  heat.title = "Power gain of truncation (level " + format_double(level) + ")";
  heat.x_label = "Beta shape 2";
  heat.y_label = "Beta shape 1";
  heat.x_coords = map.shape2;
  heat.y_coords = map.shape1;
  heat.values = map.gain;
  heat.v_min = 0.0;
  heat.v_max = 1.0;
  const auto dir = prepare_output_dir(opt.output_dir);
  write_file((dir / "figure2.csv").string(), csv);
  write_file((dir / "figure2.svg").string(), svg_heatmap(heat));
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Combine correlated p-values with truncated Cauchy and baseline methods"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(0, 1);

  // combine
  std::string in_path, group_col, p_col, weight_col, out_path;
  std::string methods_spec = "tcct,cct";
  CLI::App* combine_cmd = app.add_subcommand("combine", "combine grouped p-values from a CSV");
  combine_cmd->add_option("--input", in_path, "input CSV")->required();
  combine_cmd->add_option("--group-col", group_col, "grouping column name")->required();
  combine_cmd->add_option("--p-col", p_col, "p-value column name")->required();
  combine_cmd->add_option("--weight-col", weight_col, "optional weight column name");
  combine_cmd->add_option("--methods", methods_spec, "comma list: tcct,cct,fisher,tippett,tmin");
  combine_cmd->add_option("--output", out_path, "output CSV")->required();

  // longitudinal
  std::string lon_in, lon_mode, lon_out;
  std::string lon_methods = "tcct,cct";
  CLI::App* lon_cmd = app.add_subcommand("longitudinal", "pooled tests over (feature, timepoint) cells");
  lon_cmd->add_option("--input", lon_in, "input CSV with unit_id,timepoint,feature,response,covariate")
      ->required();
  lon_cmd->add_option("--mode", lon_mode, "one-part or two-part")
      ->required()
      ->check(CLI::IsMember({"one-part", "two-part"}));
  lon_cmd->add_option("--methods", lon_methods, "comma list: tcct,cct,fisher,tippett,tmin");
  lon_cmd->add_option("--output", lon_out, "output CSV (per-cell table goes to <output>.cells.csv)")
      ->required();

  // simulate
  CLI::App* sim_cmd = app.add_subcommand("simulate", "run seeded Monte Carlo scenarios");
  sim_cmd->require_subcommand(1);
  SimOptions t1, t2, ta1, f1, f2;
  CLI::App* t1_cmd = sim_cmd->add_subcommand("table1", "null rejection rates, four methods");
  add_sim_options(t1_cmd, t1, false);
  CLI::App* t2_cmd = sim_cmd->add_subcommand("table2", "power at slope 0.25, four methods");
  add_sim_options(t2_cmd, t2, false);
  CLI::App* ta1_cmd = sim_cmd->add_subcommand("tableA1", "minimum-p methods, null and power");
  add_sim_options(ta1_cmd, ta1, false);
  CLI::App* f1_cmd = sim_cmd->add_subcommand("figure1", "one-sided mean power curve");
  add_sim_options(f1_cmd, f1, true);
  CLI::App* f2_cmd = sim_cmd->add_subcommand("figure2", "Beta-sampled power gain heatmap");
  add_sim_options(f2_cmd, f2, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*combine_cmd) {
      const std::vector<Method> methods = parse_methods(methods_spec);
      const GroupedPTable table = load_grouped_pvalues(in_path, group_col, p_col, weight_col);
      RunReport report = run_grouped_combine(table, methods);
      write_file(out_path, render_run_report(report));
    } else if (*lon_cmd) {
      const std::vector<Method> methods = parse_methods(lon_methods);
      const std::vector<LongitudinalRow> rows = load_longitudinal(lon_in);
      const LongitudinalResult result = run_longitudinal(rows, lon_mode == "two-part", methods);
      write_file(lon_out, render_run_report(result.report));
      write_file(lon_out + ".cells.csv", render_longitudinal_cells(result.cells));
    } else if (*t1_cmd) {
      run_rejection_command(t1, "table1.csv", {0.0}, false, 100000);
    } else if (*t2_cmd) {
      run_rejection_command(t2, "table2.csv", {0.25}, false, 10000);
    } else if (*ta1_cmd) {
      run_rejection_command(ta1, "tableA1.csv", {0.0, 0.25}, true, 10000);
    } else if (*f1_cmd) {
      run_figure1(f1);
    } else if (*f2_cmd) {
      run_figure2(f2);
    } else {
      std::cerr << app.help() << std::flush;
      return 2;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace tcct
