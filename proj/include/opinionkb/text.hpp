#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace opinionkb {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

/// Canonical text normalization shared by the metric and agreement paths:
/// trim, strip enclosing quote pairs, collapse whitespace runs to single
/// spaces, lowercase. Idempotent.
std::string normalize_text(std::string_view s);

/// Case-insensitive substring test (ASCII folding).
bool contains_ci(std::string_view haystack, std::string_view needle);

uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

}  // namespace opinionkb
