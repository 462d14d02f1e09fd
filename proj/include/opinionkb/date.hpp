#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace opinionkb {

/// Calendar date (no time of day); serialized as ISO-8601 YYYY-MM-DD.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;

  std::string to_string() const;

  /// Throws ArgumentError when the text is not a valid ISO-8601 day.
  static Date parse(std::string_view iso);
  static std::optional<Date> try_parse(std::string_view iso);
};

}  // namespace opinionkb
