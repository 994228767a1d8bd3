#pragma once

// Calendar dates and the integer month axis used throughout the pipeline.
// A month id is year*12 + (month-1), so consecutive months differ by 1
// across year boundaries.

#include <string>
#include <string_view>

namespace epu {

struct civil_date {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31

  bool operator==(const civil_date&) const = default;
};

bool is_valid_date(const civil_date& d);

// Parses "YYYY-MM-DD". Throws data_error on malformed input or an
// impossible calendar date; `context` is prepended to the message.
civil_date parse_date(std::string_view s, const std::string& context = {});

int month_id(int year, int month);
inline int month_id(const civil_date& d) { return month_id(d.year, d.month); }

// Parses "YYYY-MM" into a month id. Throws data_error.
int parse_month(std::string_view s, const std::string& context = {});

// Formats a month id back to "YYYY-MM".
std::string format_month(int id);

std::string format_date(const civil_date& d);

}  // namespace epu
