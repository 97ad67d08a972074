#include "transgeo/io.hpp"

#include <charconv>
#include <cmath>

namespace transgeo {

std::string format_number(double v, bool json) {
  if (!std::isfinite(v)) {
    if (json) return "null";
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  }
  v += 0.0;  // no negative zero
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string DataTable::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_number(row[i]);
    out += '\n';
  }
  return out;
}

std::string DataTable::to_json() const {
  std::string out = "{\"name\":" + json_string(name) + ",\"metadata\":{";
  for (std::size_t i = 0; i < metadata.size(); ++i)
    out += (i ? "," : "") + json_string(metadata[i].first) + ":" + format_number(metadata[i].second, true);
  out += "},\"columns\":[";
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + json_string(columns[i]);
  out += "],\"rows\":[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t i = 0; i < rows[r].size(); ++i)
      out += (i ? "," : "") + format_number(rows[r][i], true);
    out += "]";
  }
  return out + "]}\n";
}

}  // namespace transgeo
