// Pipeline implementations.
#include "tcct/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <tuple>

#include "tcct/csv.hpp"
#include "tcct/elementary.hpp"
#include "tcct/version.hpp"

namespace tcct {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double parse_field_double(const std::string& field, long line_no, const std::string& what) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  double value = 0.0;
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end || field.empty()) {
    throw DataError("line " + std::to_string(line_no) + ": cannot parse " + what + " '" + field +
                    "'");
  }
  return value;
}

int require_column(const CsvTable& table, const std::string& name) {
  const int idx = table.column(name);
  if (idx < 0) throw UsageError("missing column: " + name);
  return idx;
}

std::string field_or_empty(const std::vector<std::string>& row, int idx) {
  return idx >= 0 && static_cast<size_t>(idx) < row.size() ? row[static_cast<size_t>(idx)] : "";
}

}  // namespace

GroupedPTable load_grouped_pvalues(const std::string& path, const std::string& group_col,
                                   const std::string& p_col, const std::string& weight_col) {
  CsvTable csv;
  try {
    csv = read_csv(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  const int gi = require_column(csv, group_col);
  const int pi = require_column(csv, p_col);
  const int wi = weight_col.empty() ? -1 : require_column(csv, weight_col);

  GroupedPTable table;
  table.has_weights = wi >= 0;
  table.rows.reserve(csv.rows.size());
  for (size_t r = 0; r < csv.rows.size(); ++r) {
    const long line_no = csv.line_numbers[r];
    GroupedPRow row;
    row.group = field_or_empty(csv.rows[r], gi);
    row.test_id = std::to_string(r + 1);
    row.p = parse_field_double(field_or_empty(csv.rows[r], pi), line_no, "p-value");
    if (std::isnan(row.p) || row.p < 0.0 || row.p > 1.0) {
      throw DataError("line " + std::to_string(line_no) + ": p-value outside [0,1]");
    }
    if (wi >= 0) {
      row.weight = parse_field_double(field_or_empty(csv.rows[r], wi), line_no, "weight");
      if (std::isnan(row.weight) || row.weight < 0.0) {
        throw DataError("line " + std::to_string(line_no) + ": weight must be nonnegative");
      }
    } else {
      row.weight = 1.0;
    }
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) throw DataError("no data rows in " + path);
  return table;
}

RunReport run_grouped_combine(const GroupedPTable& table, const std::vector<Method>& methods) {
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const GroupedPRow& row : table.rows) {
    auto& [ps, ws] = groups[row.group];
    ps.push_back(row.p);
    ws.push_back(row.weight);
  }

  RunReport report;
  report.weights_policy = table.has_weights ? "normalized" : "uniform";
  report.version = kVersion;
  for (auto& [group, data] : groups) {
    auto& [ps, ws] = data;
    std::span<const double> weights;
    if (table.has_weights) {
      double sum = 0.0;
      for (double w : ws) sum += w;
      if (sum <= 0.0) throw DataError("group '" + group + "': weights sum to zero");
      for (double& w : ws) w /= sum;
      weights = ws;
    }
    for (Method m : methods) {
      RunReportRow row;
      row.group = group;
      row.method = method_name(m);
      try {
        const CombinedResult res = combine(m, ps, weights);
        row.statistic = res.statistic;
        row.p_combined = res.p_combined;
        row.flags = res.flags;
      } catch (const CctIndeterminateError&) {
        row.statistic = kNan;
        row.p_combined = kNan;
        row.flags = kFlagDegenerateInput;
      }
      report.rows.push_back(std::move(row));
    }
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const RunReportRow& a, const RunReportRow& b) {
    return a.group != b.group ? a.group < b.group : a.method < b.method;
  });
  return report;
}

std::string render_run_report(const RunReport& report) {
  std::string out;
  out += "# version: " + report.version + "\n";
  out += "# weights: " + report.weights_policy + "\n";
  out += "# seed: " + std::to_string(report.seed) + "\n";
  out += "group,method,statistic,p_combined,flags\n";
  for (const RunReportRow& row : report.rows) {
    out += csv_escape(row.group) + "," + row.method + "," + format_double(row.statistic) + "," +
           format_double(row.p_combined) + "," + flags_to_string(row.flags) + "\n";
  }
  return out;
}

std::vector<LongitudinalRow> load_longitudinal(const std::string& path) {
  CsvTable csv;
  try {
    csv = read_csv(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  const int ui = require_column(csv, "unit_id");
  const int ti = require_column(csv, "timepoint");
  const int fi = require_column(csv, "feature");
  const int ri = require_column(csv, "response");
  const int ci = require_column(csv, "covariate");

  std::vector<LongitudinalRow> rows;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (size_t r = 0; r < csv.rows.size(); ++r) {
    const long line_no = csv.line_numbers[r];
    LongitudinalRow row;
    row.unit = field_or_empty(csv.rows[r], ui);
    row.timepoint = field_or_empty(csv.rows[r], ti);
    row.feature = field_or_empty(csv.rows[r], fi);
    row.response = parse_field_double(field_or_empty(csv.rows[r], ri), line_no, "response");
    row.covariate = parse_field_double(field_or_empty(csv.rows[r], ci), line_no, "covariate");
    if (!seen.insert({row.unit, row.timepoint, row.feature}).second) {
      throw DataError("line " + std::to_string(line_no) +
                      ": duplicate (unit, timepoint, feature) observation");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError("no data rows in " + path);
  return rows;
}

LongitudinalResult run_longitudinal(const std::vector<LongitudinalRow>& rows, bool two_part,
                                    const std::vector<Method>& methods) {
  if (two_part) {
    for (const LongitudinalRow& row : rows) {
      if (row.covariate != 0.0 && row.covariate != 1.0) {
        throw DataError("two-part mode requires a 0/1 covariate");
      }
    }
  }
  // Cells keyed by (feature, timepoint); observations sorted by unit id so
  // results do not depend on input row order.
  std::map<std::pair<std::string, std::string>,
           std::map<std::string, std::pair<double, double>>>
      cells;
  for (const LongitudinalRow& row : rows) {
    cells[{row.feature, row.timepoint}][row.unit] = {row.response, row.covariate};
  }

  LongitudinalResult result;
  std::vector<double> pooled;
  auto push_cell = [&](const std::string& feature, const std::string& timepoint,
                       const std::string& part, const TestOutcome& outcome) {
    result.cells.push_back(LongitudinalCell{feature, timepoint, part, outcome.statistic,
                                            outcome.p_value, note_name(outcome.note)});
    pooled.push_back(outcome.p_value);
  };
  auto push_untestable = [&](const std::string& feature, const std::string& timepoint,
                             const std::string& part) {
    result.cells.push_back(LongitudinalCell{feature, timepoint, part, kNan, 1.0, "UNTESTABLE"});
    pooled.push_back(1.0);
  };

  for (const auto& [key, units] : cells) {
    std::vector<double> y, x;
    y.reserve(units.size());
    x.reserve(units.size());
    for (const auto& [unit, obs] : units) {
      y.push_back(obs.first);
      x.push_back(obs.second);
    }
    const auto& [feature, timepoint] = key;
    if (two_part) {
      try {
        const auto [part1, part2] = two_part_test(y, x);
        push_cell(feature, timepoint, "prevalence", part1);
        push_cell(feature, timepoint, "magnitude", part2);
      } catch (const std::exception&) {
        push_untestable(feature, timepoint, "prevalence");
        push_untestable(feature, timepoint, "magnitude");
      }
    } else {
      try {
        push_cell(feature, timepoint, "slope", ols_slope_test(y, x));
      } catch (const std::exception&) {
        push_untestable(feature, timepoint, "slope");
      }
    }
  }
  std::sort(result.cells.begin(), result.cells.end(),
            [](const LongitudinalCell& a, const LongitudinalCell& b) {
              if (a.feature != b.feature) return a.feature < b.feature;
              if (a.timepoint != b.timepoint) return a.timepoint < b.timepoint;
              return a.part < b.part;
            });
  // Pool in the same sorted order the side table reports.
  pooled.clear();
  for (const LongitudinalCell& cell : result.cells) pooled.push_back(cell.p_value);

  result.report.weights_policy = "uniform";
  result.report.version = kVersion;
  const std::string group = two_part ? "two-part" : "one-part";
  for (Method m : methods) {
    RunReportRow row;
    row.group = group;
    row.method = method_name(m);
    try {
      const CombinedResult res = combine(m, pooled);
      row.statistic = res.statistic;
      row.p_combined = res.p_combined;
      row.flags = res.flags;
    } catch (const CctIndeterminateError&) {
      row.statistic = kNan;
      row.p_combined = kNan;
      row.flags = kFlagDegenerateInput;
    }
    result.report.rows.push_back(std::move(row));
  }
  std::sort(result.report.rows.begin(), result.report.rows.end(),
            [](const RunReportRow& a, const RunReportRow& b) {
              return a.group != b.group ? a.group < b.group : a.method < b.method;
            });
  return result;
}

std::string render_longitudinal_cells(const std::vector<LongitudinalCell>& cells) {
  std::string out = "# version: " + std::string(kVersion) + "\n";
  out += "feature,timepoint,part,statistic,p_value,note\n";
  for (const LongitudinalCell& cell : cells) {
    out += csv_escape(cell.feature) + "," + csv_escape(cell.timepoint) + "," + cell.part + "," +
           format_double(cell.statistic) + "," + format_double(cell.p_value) + "," + cell.note +
           "\n";
  }
  return out;
}

}  // namespace tcct
