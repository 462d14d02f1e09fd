#include "opinionkb/opinion_schema.hpp"

#include <algorithm>
#include <array>

#include "opinionkb/errors.hpp"
#include "opinionkb/text.hpp"

namespace opinionkb {

std::string to_string(SentimentPolarity p) {
  switch (p) {
    case SentimentPolarity::positive: return "positive";
    case SentimentPolarity::negative: return "negative";
    case SentimentPolarity::neutral: return "neutral";
  }
  return "neutral";
}

std::string to_string(SentimentIntensity i) {
  switch (i) {
    case SentimentIntensity::strong: return "strong";
    case SentimentIntensity::average: return "average";
    case SentimentIntensity::weak: return "weak";
  }
  return "average";
}

SentimentPolarity parse_polarity(std::string_view text, std::string_view field) {
  const std::string t = to_lower(trim(text));
  if (t == "positive") return SentimentPolarity::positive;
  if (t == "negative") return SentimentPolarity::negative;
  if (t == "neutral") return SentimentPolarity::neutral;
  throw EnumError(std::string(field), std::string(text));
}

SentimentIntensity parse_intensity(std::string_view text, std::string_view field) {
  const std::string t = to_lower(trim(text));
  if (t == "strong") return SentimentIntensity::strong;
  if (t == "average") return SentimentIntensity::average;
  if (t == "weak") return SentimentIntensity::weak;
  throw EnumError(std::string(field), std::string(text));
}

std::string to_string(DataModelId id) {
  switch (id) {
    case DataModelId::ssa: return "ssa";
    case DataModelId::acos: return "acos";
    case DataModelId::uoc: return "uoc";
  }
  return "ssa";
}

DataModelId parse_data_model(std::string_view text) {
  const std::string t = to_lower(trim(text));
  if (t == "ssa") return DataModelId::ssa;
  if (t == "acos") return DataModelId::acos;
  if (t == "uoc" || t == "uoce") return DataModelId::uoc;
  throw ArgumentError("unknown data model \"" + std::string(text) + "\" (expected ssa, acos or uoc)");
}

DataModelId model_of(const OpinionRecord& record) {
  if (std::holds_alternative<SsaTuple>(record)) return DataModelId::ssa;
  if (std::holds_alternative<AcosQuad>(record)) return DataModelId::acos;
  return DataModelId::uoc;
}

const LeafComponent* DataModelSchema::find_leaf(std::string_view name) const {
  for (const auto& leaf : leaf_components) {
    if (leaf.name == name) return &leaf;
  }
  return nullptr;
}

bool DataModelSchema::maps_concept(std::string_view concept_name) const {
  return std::any_of(leaf_components.begin(), leaf_components.end(),
                     [&](const LeafComponent& c) { return c.concept_name == concept_name; });
}

const DataModelSchema& schema_for(DataModelId id) {
  static const DataModelSchema ssa{
      DataModelId::ssa,
      {
          {"holder", LeafKind::span, true, "holder_span"},
          {"target", LeafKind::span, true, "target"},
          {"polarity", LeafKind::enum_value, false, "sentiment_polarity"},
          {"expression", LeafKind::span, true, "sentiment_expression"},
          {"intensity", LeafKind::enum_value, true, "sentiment_intensity"},
      }};
  static const DataModelSchema acos{
      DataModelId::acos,
      {
          {"aspect_term", LeafKind::span, true, "aspect_term"},
          {"category_entity", LeafKind::label, false, "entity"},
          {"category_attribute", LeafKind::label, false, "category"},
          {"opinion_span", LeafKind::span, true, "sentiment_expression"},
          {"polarity", LeafKind::enum_value, false, "sentiment_polarity"},
      }};
  static const DataModelSchema uoc{
      DataModelId::uoc,
      {
          {"entity", LeafKind::label, false, "entity"},
          {"holder_span", LeafKind::span, true, "holder_span"},
          {"holder_entity", LeafKind::label, true, "holder_entity"},
          {"aspect_term", LeafKind::span, true, "aspect_term"},
          {"aspect_category", LeafKind::label, false, "category"},
          {"polarity", LeafKind::enum_value, false, "sentiment_polarity"},
          {"expression", LeafKind::span, true, "sentiment_expression"},
          {"intensity", LeafKind::enum_value, true, "sentiment_intensity"},
          {"reason", LeafKind::label, true, "reason"},
          {"qualifier", LeafKind::label, true, "qualifier"},
      }};
  switch (id) {
    case DataModelId::ssa: return ssa;
    case DataModelId::acos: return acos;
    case DataModelId::uoc: return uoc;
  }
  return ssa;
}

namespace {

using OptText = std::optional<std::string>;

OptText opt(const std::string& s) { return OptText(s); }

std::vector<OptText> ssa_leaves(const SsaTuple& t) {
  return {t.holder, t.target, opt(to_string(t.sentiment.polarity)), t.sentiment.expression,
          t.sentiment.intensity ? opt(to_string(*t.sentiment.intensity)) : std::nullopt};
}

std::vector<OptText> acos_leaves(const AcosQuad& q) {
  return {q.aspect_term, opt(q.category_entity), opt(q.category_attribute), q.opinion_span,
          opt(to_string(q.polarity))};
}

std::vector<OptText> uoc_leaves(const UocOpinion& u) {
  return {opt(u.entity),
          u.holder_span,
          u.holder_entity,
          u.aspect_term,
          opt(u.aspect_category),
          opt(to_string(u.sentiment.polarity)),
          u.sentiment.expression,
          u.sentiment.intensity ? opt(to_string(*u.sentiment.intensity)) : std::nullopt,
          u.reason,
          u.qualifier};
}

void check_model(const OpinionRecord& record, const DataModelSchema& schema) {
  if (model_of(record) != schema.model_id) {
    throw SchemaMismatchError("record is a " + to_string(model_of(record)) +
                              " opinion but the schema describes " + to_string(schema.model_id));
  }
}

// -- parse helpers ------------------------------------------------------------

void require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) {
    throw StructureError(where + " must be an object, got " + std::string(j.type_name()));
  }
}

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& key = it.key();
    bool known = std::any_of(allowed.begin(), allowed.end(),
                             [&](const char* k) { return key == k; });
    if (!known) throw StructureError("unknown key \"" + key + "\" in " + where);
  }
}

/// Optional text field: missing, null or blank read as absent.
OptText get_opt_text(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw StructureError("field \"" + where + "\" must be a string or null");
  }
  std::string value = it->get<std::string>();
  if (trim(value).empty()) return std::nullopt;
  return value;
}

std::string get_required_label(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    throw StructureError("missing required field \"" + where + "\"");
  }
  if (!it->is_string()) throw StructureError("field \"" + where + "\" must be a string");
  std::string value = it->get<std::string>();
  if (trim(value).empty()) {
    throw StructureError("field \"" + where + "\" must be non-empty");
  }
  return value;
}

SentimentPolarity get_required_polarity(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    throw StructureError("missing required field \"" + where + "\"");
  }
  if (!it->is_string()) throw StructureError("field \"" + where + "\" must be a string");
  return parse_polarity(it->get<std::string>(), where);
}

std::optional<SentimentIntensity> get_opt_intensity(const Json& obj, const char* key,
                                                    const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw StructureError("field \"" + where + "\" must be a string or null");
  }
  std::string value = it->get<std::string>();
  if (trim(value).empty()) return std::nullopt;
  return parse_intensity(value, where);
}

Sentiment parse_sentiment_object(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_keys(j, {"polarity", "expression", "intensity"}, where);
  Sentiment s;
  s.polarity = get_required_polarity(j, "polarity", where + ".polarity");
  s.expression = get_opt_text(j, "expression", where + ".expression");
  s.intensity = get_opt_intensity(j, "intensity", where + ".intensity");
  return s;
}

SsaTuple parse_ssa(const Json& j) {
  reject_unknown_keys(j, {"sentiment", "target", "holder"}, "ssa record");
  SsaTuple t;
  auto sent = j.find("sentiment");
  if (sent == j.end() || sent->is_null()) {
    throw StructureError("missing required field \"sentiment\"");
  }
  t.sentiment = parse_sentiment_object(*sent, "sentiment");
  t.target = get_opt_text(j, "target", "target");
  t.holder = get_opt_text(j, "holder", "holder");
  if (!t.target && !t.sentiment.expression) {
    throw StructureError("ssa tuple has no anchor: target and sentiment.expression both absent");
  }
  return t;
}

AcosQuad parse_acos(const Json& j) {
  reject_unknown_keys(j, {"sentiment", "aspect_term", "aspect_category", "opinion_span"},
                      "acos record");
  AcosQuad q;
  auto sent = j.find("sentiment");
  if (sent == j.end() || sent->is_null()) {
    throw StructureError("missing required field \"sentiment\"");
  }
  if (!sent->is_string()) {
    throw StructureError("field \"sentiment\" must be a polarity string in acos records");
  }
  q.polarity = parse_polarity(sent->get<std::string>(), "sentiment");
  auto cat = j.find("aspect_category");
  if (cat == j.end() || cat->is_null()) {
    throw StructureError("missing required field \"aspect_category\"");
  }
  require_object(*cat, "aspect_category");
  reject_unknown_keys(*cat, {"entity", "entity_attribute"}, "aspect_category");
  q.category_entity = get_required_label(*cat, "entity", "aspect_category.entity");
  q.category_attribute =
      get_required_label(*cat, "entity_attribute", "aspect_category.entity_attribute");
  q.aspect_term = get_opt_text(j, "aspect_term", "aspect_term");
  q.opinion_span = get_opt_text(j, "opinion_span", "opinion_span");
  return q;
}

UocOpinion parse_uoc(const Json& j) {
  reject_unknown_keys(j, {"entity", "holder", "aspect", "sentiment", "reason", "qualifier"},
                      "uoc record");
  UocOpinion u;
  u.entity = get_required_label(j, "entity", "entity");
  auto holder = j.find("holder");
  if (holder != j.end() && !holder->is_null()) {
    require_object(*holder, "holder");
    reject_unknown_keys(*holder, {"holder_span", "holder_entity"}, "holder");
    u.holder_span = get_opt_text(*holder, "holder_span", "holder.holder_span");
    u.holder_entity = get_opt_text(*holder, "holder_entity", "holder.holder_entity");
  }
  auto aspect = j.find("aspect");
  if (aspect == j.end() || aspect->is_null()) {
    throw StructureError("missing required field \"aspect\"");
  }
  require_object(*aspect, "aspect");
  reject_unknown_keys(*aspect, {"term", "category"}, "aspect");
  u.aspect_term = get_opt_text(*aspect, "term", "aspect.term");
  u.aspect_category = get_required_label(*aspect, "category", "aspect.category");
  auto sent = j.find("sentiment");
  if (sent == j.end() || sent->is_null()) {
    throw StructureError("missing required field \"sentiment\"");
  }
  u.sentiment = parse_sentiment_object(*sent, "sentiment");
  u.reason = get_opt_text(j, "reason", "reason");
  u.qualifier = get_opt_text(j, "qualifier", "qualifier");
  return u;
}

Json null_or(const OptText& v) { return v ? Json(*v) : Json(nullptr); }

Json sentiment_to_json(const Sentiment& s) {
  Json j = Json::object();
  j["polarity"] = to_string(s.polarity);
  j["expression"] = null_or(s.expression);
  j["intensity"] = s.intensity ? Json(to_string(*s.intensity)) : Json(nullptr);
  return j;
}

}  // namespace

std::vector<std::optional<std::string>> raw_leaf_values(const OpinionRecord& record,
                                                        const DataModelSchema& schema) {
  check_model(record, schema);
  return std::visit(
      [](const auto& r) -> std::vector<OptText> {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, SsaTuple>) return ssa_leaves(r);
        else if constexpr (std::is_same_v<T, AcosQuad>) return acos_leaves(r);
        else return uoc_leaves(r);
      },
      record);
}

std::vector<std::optional<std::string>> leaf_values(const OpinionRecord& record,
                                                    const DataModelSchema& schema) {
  auto values = raw_leaf_values(record, schema);
  for (auto& v : values) {
    if (v) v = normalize_text(*v);
  }
  return values;
}

OpinionRecord parse_opinion(const Json& record, const DataModelSchema& schema) {
  require_object(record, "opinion record");
  switch (schema.model_id) {
    case DataModelId::ssa: return parse_ssa(record);
    case DataModelId::acos: return parse_acos(record);
    case DataModelId::uoc: return parse_uoc(record);
  }
  throw ArgumentError("unreachable data model");
}

Json serialize_opinion(const OpinionRecord& record) {
  return std::visit(
      [](const auto& r) -> Json {
        using T = std::decay_t<decltype(r)>;
        Json j = Json::object();
        if constexpr (std::is_same_v<T, SsaTuple>) {
          j["sentiment"] = sentiment_to_json(r.sentiment);
          j["target"] = null_or(r.target);
          j["holder"] = null_or(r.holder);
        } else if constexpr (std::is_same_v<T, AcosQuad>) {
          j["sentiment"] = to_string(r.polarity);
          j["aspect_term"] = null_or(r.aspect_term);
          j["aspect_category"] = Json{{"entity", r.category_entity},
                                      {"entity_attribute", r.category_attribute}};
          j["opinion_span"] = null_or(r.opinion_span);
        } else {
          j["entity"] = r.entity;
          j["holder"] = Json{{"holder_span", null_or(r.holder_span)},
                             {"holder_entity", null_or(r.holder_entity)}};
          j["aspect"] = Json{{"term", null_or(r.aspect_term)}, {"category", r.aspect_category}};
          j["sentiment"] = sentiment_to_json(r.sentiment);
          j["reason"] = null_or(r.reason);
          j["qualifier"] = null_or(r.qualifier);
        }
        return j;
      },
      record);
}

}  // namespace opinionkb
