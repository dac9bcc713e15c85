// Minimal CSV reading/writing and deterministic number formatting.
#pragma once

#include <string>
#include <vector>

namespace tcct {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // 1-based file line number of each data row, for error messages.
  std::vector<long> line_numbers;

  // Index of a header column, or -1 when absent.
  int column(const std::string& name) const;
};

// Parses a comma-separated file with a header row. Double-quoted fields may
// contain commas and doubled quotes; lines starting with '#' are skipped.
// Throws std::runtime_error when the file cannot be read.
CsvTable read_csv(const std::string& path);

// Shortest decimal string that round-trips to the same double. NaN renders
// as an empty field.
std::string format_double(double v);

// CSV-quotes a field when it contains a comma, quote, or newline.
std::string csv_escape(const std::string& field);

// Writes content to path atomically enough for our purposes (truncate +
// write); throws std::runtime_error on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace tcct
