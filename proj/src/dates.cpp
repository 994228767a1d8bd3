#include "epu/dates.hpp"

#include <array>
#include <charconv>

#include "epu/errors.hpp"

namespace epu {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr std::array<int, 12> days = {31, 28, 31, 30, 31, 30,
                                               31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return days[m - 1];
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

[[noreturn]] void fail(const std::string& context, std::string_view what,
                       std::string_view input) {
  std::string msg;
  if (!context.empty()) msg = context + ": ";
  msg += std::string(what) + " '" + std::string(input) + "'";
  throw data_error(msg);
}

}  // namespace

bool is_valid_date(const civil_date& d) {
  if (d.month < 1 || d.month > 12) return false;
  if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return false;
  return true;
}

civil_date parse_date(std::string_view s, const std::string& context) {
  civil_date d;
  if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
      !parse_int(s.substr(0, 4), d.year) || !parse_int(s.substr(5, 2), d.month) ||
      !parse_int(s.substr(8, 2), d.day))
    fail(context, "malformed date", s);
  if (!is_valid_date(d)) fail(context, "invalid date", s);
  return d;
}

int month_id(int year, int month) { return year * 12 + (month - 1); }

int parse_month(std::string_view s, const std::string& context) {
  int y = 0, m = 0;
  if (s.size() != 7 || s[4] != '-' || !parse_int(s.substr(0, 4), y) ||
      !parse_int(s.substr(5, 2), m))
    fail(context, "malformed month", s);
  if (m < 1 || m > 12) fail(context, "invalid month", s);
  return month_id(y, m);
}

std::string format_month(int id) {
  int y = id / 12, m = id % 12;
  if (m < 0) {  // handles negative ids consistently
    m += 12;
    --y;
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "%04d-%02d", y, m + 1);
  return buf;
}

std::string format_date(const civil_date& d) {
  char buf[12];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

}  // namespace epu
