#include "opinionkb/date.hpp"

#include <cstdio>

#include "opinionkb/errors.hpp"

namespace opinionkb {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static const int table[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return table[m - 1];
}

bool parse_fixed_int(std::string_view s, size_t pos, size_t len, int& out) {
  int v = 0;
  for (size_t i = pos; i < pos + len; ++i) {
    if (i >= s.size() || s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = v;
  return true;
}

}  // namespace

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::optional<Date> Date::try_parse(std::string_view iso) {
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
  Date d;
  if (!parse_fixed_int(iso, 0, 4, d.year) || !parse_fixed_int(iso, 5, 2, d.month) ||
      !parse_fixed_int(iso, 8, 2, d.day)) {
    return std::nullopt;
  }
  if (d.month < 1 || d.month > 12) return std::nullopt;
  if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return std::nullopt;
  return d;
}

Date Date::parse(std::string_view iso) {
  auto d = try_parse(iso);
  if (!d) throw ArgumentError("not an ISO-8601 calendar day: \"" + std::string(iso) + "\"");
  return *d;
}

}  // namespace opinionkb
