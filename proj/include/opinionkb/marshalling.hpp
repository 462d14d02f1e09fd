#pragma once

#include <functional>
#include <string>
#include <vector>

#include "opinionkb/json.hpp"
#include "opinionkb/opinion_schema.hpp"

namespace opinionkb {

enum class WarningKind {
  span_not_in_text,
  duplicate_opinion,
  excess_truncated,
  invalid_tail_dropped,
};

std::string to_string(WarningKind kind);

struct MarshalWarning {
  int opinion_index = 0;
  std::string component;  // leaf name for span warnings, empty otherwise
  WarningKind kind = WarningKind::span_not_in_text;

  bool operator==(const MarshalWarning&) const = default;
};

struct MarshalResult {
  std::vector<OpinionRecord> opinions;
  std::vector<MarshalWarning> warnings;
  int attempts_used = 1;
};

enum class RepairStrategy { reprompt_with_error, truncate_to_valid_prefix };

struct RepairPolicy {
  int max_attempts = 2;  // repair attempts beyond the first call (3 calls total)
  RepairStrategy strategy = RepairStrategy::reprompt_with_error;
};

/// Produces a replacement completion given the failed raw text and the error.
using RepromptFn = std::function<std::string(const std::string& raw, const std::string& error)>;

/// Annotation density cap shared with the sampling protocol's combined
/// outlier bound.
inline constexpr int kDefaultMaxOpinions = 4;

/// Locates the first top-level array or object literal in the completion
/// (free-text reasoning preambles are tolerated either way; with CoT one is
/// expected) and parses it. Accepts JSON extended with Python-style literals
/// (single-quoted strings, None/True/False, trailing commas). A single object
/// is wrapped in a one-element array.
Json extract_payload(const std::string& raw, bool cot_enabled);

/// Full completion-to-records path: extract, validate each element, warn on
/// spans absent from the source text, drop exact duplicates, cap the list.
/// On parse failure runs the repair loop per policy; throws
/// MarshalFailureError carrying every attempt once exhausted.
MarshalResult marshal(const std::string& raw, const DataModelSchema& schema,
                      const std::string& source_text, const RepairPolicy& policy,
                      const RepromptFn& reprompt, int max_opinions = kDefaultMaxOpinions);

}  // namespace opinionkb
