#pragma once

// Minimal CSV support for the numeric time-series files this project
// reads and writes. Cells never contain commas or quotes, so no quoting
// is implemented. Doubles are rendered with shortest round-trip
// formatting, which keeps outputs byte-stable across runs.

#include <optional>
#include <string>
#include <vector>

namespace epu {

std::string format_double(double v);

struct csv_table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 if absent
};

// Reads a whole CSV file. Throws data_error on missing file or ragged rows.
csv_table read_csv(const std::string& path);

class csv_writer {
 public:
  explicit csv_writer(const std::string& path);
  ~csv_writer();

  csv_writer(const csv_writer&) = delete;
  csv_writer& operator=(const csv_writer&) = delete;

  void row(const std::vector<std::string>& cells);
  void close();

 private:
  struct impl;
  impl* impl_;
};

inline std::string cell(double v) { return format_double(v); }
inline std::string cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

}  // namespace epu
