#pragma once

#include <string>
#include <utility>
#include <vector>

namespace transgeo {

/// 17 significant digits, '.' decimal separator regardless of locale;
/// "null" for non-finite values when `json` is set.
std::string format_number(double v, bool json = false);

/// A rectangular numeric table with named columns.
///
/// CSV: one header line, then one line per row.
/// JSON: {"name": ..., "metadata": {...}, "columns": [...], "rows": [[...], ...]}.
struct DataTable {
  std::string name;
  std::vector<std::pair<std::string, double>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string to_csv() const;
  std::string to_json() const;
};

std::string json_string(const std::string& s);

}  // namespace transgeo
