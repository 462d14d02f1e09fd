#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opinionkb/json.hpp"

namespace opinionkb {

enum class SentimentPolarity { positive, negative, neutral };
enum class SentimentIntensity { strong, average, weak };

std::string to_string(SentimentPolarity p);
std::string to_string(SentimentIntensity i);

/// Case-insensitive; throws EnumError naming the field on unknown literals.
SentimentPolarity parse_polarity(std::string_view text, std::string_view field = "polarity");
SentimentIntensity parse_intensity(std::string_view text, std::string_view field = "intensity");

/// Composite sentiment: polarity plus optional verbatim expression and intensity.
struct Sentiment {
  SentimentPolarity polarity = SentimentPolarity::neutral;
  std::optional<std::string> expression;
  std::optional<SentimentIntensity> intensity;

  bool operator==(const Sentiment&) const = default;
};

/// Aspect-Category-Opinion-Sentiment quadruple. Absent aspect_term or
/// opinion_span encodes an implicit aspect/opinion.
struct AcosQuad {
  std::optional<std::string> aspect_term;
  std::string category_entity;
  std::string category_attribute;
  std::optional<std::string> opinion_span;
  SentimentPolarity polarity = SentimentPolarity::neutral;

  bool operator==(const AcosQuad&) const = default;
};

/// Structured Sentiment Analysis tuple: holder, target, sentiment spans.
struct SsaTuple {
  std::optional<std::string> holder;
  std::optional<std::string> target;
  Sentiment sentiment;

  bool operator==(const SsaTuple&) const = default;
};

/// Unified Opinion Concepts record; brings together the SSA and ACOS facets
/// plus reason and qualifier.
struct UocOpinion {
  std::string entity;
  std::optional<std::string> holder_span;
  std::optional<std::string> holder_entity;
  std::optional<std::string> aspect_term;
  std::string aspect_category;
  Sentiment sentiment;
  std::optional<std::string> reason;
  std::optional<std::string> qualifier;

  bool operator==(const UocOpinion&) const = default;
};

using OpinionRecord = std::variant<SsaTuple, AcosQuad, UocOpinion>;

enum class DataModelId { ssa, acos, uoc };

std::string to_string(DataModelId id);
DataModelId parse_data_model(std::string_view text);
DataModelId model_of(const OpinionRecord& record);

enum class LeafKind { span, label, enum_value };

struct LeafComponent {
  std::string name;
  LeafKind kind = LeafKind::span;
  bool optional = true;
  std::string concept_name;  // agreement concept this leaf feeds
};

/// Declarative description of a data model's comparable leaf components.
/// Drives marshalling, the metric, and agreement.
struct DataModelSchema {
  DataModelId model_id = DataModelId::ssa;
  std::vector<LeafComponent> leaf_components;

  size_t leaf_count() const { return leaf_components.size(); }
  const LeafComponent* find_leaf(std::string_view name) const;
  bool maps_concept(std::string_view concept_name) const;
};

/// Canonical schema singletons: ssa → 5 leaves, acos → 5, uoc → 10.
const DataModelSchema& schema_for(DataModelId id);

/// Ordered leaf projection with canonical normalization (lowercase, trimmed,
/// whitespace collapsed, enclosing quotes stripped). Size always equals the
/// schema's leaf count; absent components are nullopt.
std::vector<std::optional<std::string>> leaf_values(const OpinionRecord& record,
                                                    const DataModelSchema& schema);

/// Like leaf_values but verbatim (no normalization); enums render lowercase.
std::vector<std::optional<std::string>> raw_leaf_values(const OpinionRecord& record,
                                                        const DataModelSchema& schema);

/// Validates a value tree against the schema. Unknown keys are rejected,
/// missing optional keys read as null, enum literals are case-insensitive,
/// empty-after-trim strings in optional fields read as absent.
OpinionRecord parse_opinion(const Json& record, const DataModelSchema& schema);

/// Canonical serialized form, Table-layout key names, explicit nulls.
/// parse_opinion(serialize_opinion(x)) == x for every valid record.
Json serialize_opinion(const OpinionRecord& record);

}  // namespace opinionkb
