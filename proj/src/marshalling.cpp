#include "opinionkb/marshalling.hpp"

#include <cctype>
#include <map>
#include <set>

#include "opinionkb/errors.hpp"
#include "opinionkb/text.hpp"

namespace opinionkb {

std::string to_string(WarningKind kind) {
  switch (kind) {
    case WarningKind::span_not_in_text: return "span_not_in_text";
    case WarningKind::duplicate_opinion: return "duplicate_opinion";
    case WarningKind::excess_truncated: return "excess_truncated";
    case WarningKind::invalid_tail_dropped: return "invalid_tail_dropped";
  }
  return "span_not_in_text";
}

namespace {

/// Recursive-descent parser for one value in LLM-completion dialect:
/// JSON plus single-quoted strings, Python None/True/False and trailing
/// commas. Parses exactly one value and records where it ended.
class ValueParser {
 public:
  explicit ValueParser(std::string_view text, size_t pos) : text_(text), pos_(pos) {}

  Json parse_value() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    switch (c) {
      case '{': return parse_object();
      case '[': return parse_array();
      case '"':
      case '\'': return Json(parse_string());
      default:
        if (c == '-' || (c >= '0' && c <= '9')) return parse_number();
        return parse_word();
    }
  }

  size_t pos() const { return pos_; }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw PayloadParseError(message, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Json parse_object() {
    expect('{');
    Json obj = Json::object();
    skip_ws();
    if (peek() == '}') {
      ++pos_;
      return obj;
    }
    while (true) {
      skip_ws();
      if (peek() != '"' && peek() != '\'') fail("expected object key");
      std::string key = parse_string();
      skip_ws();
      expect(':');
      obj[key] = parse_value();
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        skip_ws();
        if (peek() == '}') {  // trailing comma
          ++pos_;
          return obj;
        }
        continue;
      }
      expect('}');
      return obj;
    }
  }

  Json parse_array() {
    expect('[');
    Json arr = Json::array();
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return arr;
    }
    while (true) {
      arr.push_back(parse_value());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        skip_ws();
        if (peek() == ']') {  // trailing comma
          ++pos_;
          return arr;
        }
        continue;
      }
      expect(']');
      return arr;
    }
  }

  std::string parse_string() {
    char delim = text_[pos_];
    ++pos_;
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated string");
      char c = text_[pos_++];
      if (c == delim) return out;
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (pos_ >= text_.size()) fail("unterminated escape");
      char e = text_[pos_++];
      switch (e) {
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        case 'b': out.push_back('\b'); break;
        case 'f': out.push_back('\f'); break;
        case '/': out.push_back('/'); break;
        case '\\': out.push_back('\\'); break;
        case '"': out.push_back('"'); break;
        case '\'': out.push_back('\''); break;
        case 'u': out.append(parse_unicode_escape()); break;
        default: fail(std::string("unsupported escape \\") + e);
      }
    }
  }

  std::string parse_unicode_escape() {
    if (pos_ + 4 > text_.size()) fail("truncated \\u escape");
    unsigned code = 0;
    for (int i = 0; i < 4; ++i) {
      char c = text_[pos_++];
      code <<= 4;
      if (c >= '0' && c <= '9') code |= static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f') code |= static_cast<unsigned>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') code |= static_cast<unsigned>(c - 'A' + 10);
      else fail("bad hex digit in \\u escape");
    }
    // UTF-8 encode the BMP code point (surrogate pairs are passed through as-is).
    std::string out;
    if (code < 0x80) {
      out.push_back(static_cast<char>(code));
    } else if (code < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (code >> 6)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xE0 | (code >> 12)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    }
    return out;
  }

  Json parse_number() {
    size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == 'e' || text_[pos_] == 'E' || text_[pos_] == '+' ||
            (text_[pos_] == '-' && (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    const std::string token(text_.substr(start, pos_ - start));
    try {
      if (token.find_first_of(".eE") == std::string::npos) {
        return Json(static_cast<int64_t>(std::stoll(token)));
      }
      return Json(std::stod(token));
    } catch (const std::exception&) {
      pos_ = start;
      fail("malformed number \"" + token + "\"");
    }
  }

  Json parse_word() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string word(text_.substr(start, pos_ - start));
    if (word == "true" || word == "True") return Json(true);
    if (word == "false" || word == "False") return Json(false);
    if (word == "null" || word == "None") return Json(nullptr);
    pos_ = start;
    fail("unexpected token \"" + (word.empty() ? std::string(1, peek()) : word) + "\"");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

bool is_blank(const std::optional<std::string>& v) { return !v.has_value(); }

}  // namespace

Json extract_payload(const std::string& raw, bool cot_enabled) {
  // The literal scan tolerates a reasoning preamble whether or not CoT was
  // requested; completions routinely carry chatter either way.
  (void)cot_enabled;
  const size_t start = raw.find_first_of("[{");
  if (start == std::string::npos) throw PayloadMissingError(raw);
  ValueParser parser(raw, start);
  Json payload = parser.parse_value();
  if (payload.is_object()) {
    Json wrapped = Json::array();
    wrapped.push_back(std::move(payload));
    return wrapped;
  }
  return payload;
}

MarshalResult marshal(const std::string& raw, const DataModelSchema& schema,
                      const std::string& source_text, const RepairPolicy& policy,
                      const RepromptFn& reprompt, int max_opinions) {
  std::vector<std::string> attempts{raw};
  std::string last_error;

  const int total_calls = 1 + std::max(0, policy.max_attempts);
  for (int attempt = 1; attempt <= total_calls; ++attempt) {
    const std::string& current = attempts.back();
    std::vector<OpinionRecord> records;
    std::vector<MarshalWarning> warnings;
    bool parsed = false;
    try {
      Json payload = extract_payload(current, /*cot_enabled=*/true);
      if (!payload.is_array()) {
        throw StructureError("payload must be an array of opinion objects");
      }
      for (size_t i = 0; i < payload.size(); ++i) {
        try {
          records.push_back(parse_opinion(payload[i], schema));
        } catch (const Error& element_error) {
          if (policy.strategy == RepairStrategy::truncate_to_valid_prefix) {
            warnings.push_back({static_cast<int>(i), "", WarningKind::invalid_tail_dropped});
            break;
          }
          throw StructureError("opinion " + std::to_string(i) + ": " + element_error.what());
        }
      }
      parsed = true;
    } catch (const Error& e) {
      last_error = e.what();
    }

    if (!parsed) {
      const bool can_retry = policy.strategy == RepairStrategy::reprompt_with_error &&
                             attempt < total_calls && reprompt != nullptr;
      if (!can_retry) throw MarshalFailureError(last_error, attempts);
      attempts.push_back(reprompt(current, last_error));
      continue;
    }

    MarshalResult result;
    result.attempts_used = attempt;
    result.warnings = std::move(warnings);

    // Span sanity: keep hallucinated spans but flag them.
    for (size_t i = 0; i < records.size(); ++i) {
      auto raw_values = raw_leaf_values(records[i], schema);
      for (size_t leaf = 0; leaf < schema.leaf_components.size(); ++leaf) {
        const LeafComponent& component = schema.leaf_components[leaf];
        if (component.kind != LeafKind::span || is_blank(raw_values[leaf])) continue;
        if (!contains_ci(source_text, trim(*raw_values[leaf]))) {
          result.warnings.push_back(
              {static_cast<int>(i), component.name, WarningKind::span_not_in_text});
        }
      }
    }

    // Exact-duplicate removal on normalized leaf vectors, first occurrence wins.
    std::set<std::vector<std::optional<std::string>>> seen;
    std::vector<OpinionRecord> unique;
    for (size_t i = 0; i < records.size(); ++i) {
      auto key = leaf_values(records[i], schema);
      if (!seen.insert(std::move(key)).second) {
        result.warnings.push_back({static_cast<int>(i), "", WarningKind::duplicate_opinion});
        continue;
      }
      unique.push_back(std::move(records[i]));
    }

    if (max_opinions >= 0 && unique.size() > static_cast<size_t>(max_opinions)) {
      for (size_t i = static_cast<size_t>(max_opinions); i < unique.size(); ++i) {
        result.warnings.push_back({static_cast<int>(i), "", WarningKind::excess_truncated});
      }
      unique.resize(static_cast<size_t>(max_opinions));
    }

    result.opinions = std::move(unique);
    return result;
  }
  throw MarshalFailureError(last_error, attempts);
}

}  // namespace opinionkb
