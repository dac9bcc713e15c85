// CSV ingestion pipelines: grouped p-value combination and the longitudinal
// one-part/two-part pipeline, plus report emission.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcct/combine.hpp"

namespace tcct {

// Bad invocation or file shape (missing column, unknown method): exit 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed data content (unparseable or out-of-range value): exit 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

struct GroupedPRow {
  std::string group;
  std::string test_id;
  double p;
  double weight;  // meaningful only when has_weights below
};

struct GroupedPTable {
  std::vector<GroupedPRow> rows;
  bool has_weights = false;
};

// Loads group/p(/weight) columns from a CSV file. weight_col may be empty.
// Missing columns throw UsageError naming the column; bad numeric fields
// throw DataError naming the file line.
GroupedPTable load_grouped_pvalues(const std::string& path, const std::string& group_col,
                                   const std::string& p_col, const std::string& weight_col);

struct RunReportRow {
  std::string group;
  std::string method;
  double statistic;   // NaN renders as an empty field
  double p_combined;  // NaN renders as an empty field
  unsigned flags;
};

struct RunReport {
  std::vector<RunReportRow> rows;
  std::string weights_policy;  // "uniform" or "normalized"
  std::uint64_t seed = 0;
  std::string version;
};

// Combines each group's p-values with every requested method. Supplied
// weights are normalized to sum 1 within each group. A group where the plain
// Cauchy statistic is indeterminate gets a DEGENERATE_INPUT row with empty
// statistic and p fields. Rows come back sorted by (group, method).
RunReport run_grouped_combine(const GroupedPTable& table, const std::vector<Method>& methods);

// Serializes a report as CSV with leading '#' metadata lines.
std::string render_run_report(const RunReport& report);

struct LongitudinalRow {
  std::string unit;
  std::string timepoint;
  std::string feature;
  double response;
  double covariate;
};

// Requires columns unit_id, timepoint, feature, response, covariate and
// unique (unit, timepoint, feature) triples.
std::vector<LongitudinalRow> load_longitudinal(const std::string& path);

struct LongitudinalCell {
  std::string feature;
  std::string timepoint;
  std::string part;  // "slope", "prevalence", or "magnitude"
  double statistic;  // NaN when untestable
  double p_value;
  std::string note;
};

struct LongitudinalResult {
  std::vector<LongitudinalCell> cells;  // sorted by (feature, timepoint, part)
  RunReport report;                     // one pooled row per method
};

// Runs the per-(feature, timepoint) tests (slope test in one-part mode, the
// hurdle pair in two-part mode), pools every resulting p-value, and combines
// the pool with each method. Untestable cells contribute p = 1 and never
// abort the pipeline. two_part requires a 0/1 covariate.
LongitudinalResult run_longitudinal(const std::vector<LongitudinalRow>& rows, bool two_part,
                                    const std::vector<Method>& methods);

std::string render_longitudinal_cells(const std::vector<LongitudinalCell>& cells);

}  // namespace tcct
