#pragma once

#include <string>
#include <vector>

#include "opinionkb/json.hpp"
#include "opinionkb/opinion_schema.hpp"

namespace opinionkb {

/// One evaluation unit: a text's gold opinion set and the predicted set.
struct EvalInstance {
  std::string instance_id;
  std::vector<OpinionRecord> gold;
  std::vector<OpinionRecord> predicted;
};

struct AlignedPair {
  int gold_index = 0;
  int pred_index = 0;
  double overlap = 0.0;
};

/// One-to-one matching without replacement; zero-overlap pairs are dropped.
struct Alignment {
  std::vector<AlignedPair> pairs;
  double total_overlap = 0.0;
};

struct MetricReport {
  double tp = 0.0;
  long n_pred = 0;
  long n_gold = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct ComparePolicy {
  bool null_matches_null = true;
};

/// Number of leaf positions whose normalized values agree. Degree of
/// agreement f = leaf_match_count / leaf count; exposing the integer keeps
/// alignment arithmetic exact.
int leaf_match_count(const OpinionRecord& pred, const OpinionRecord& gold,
                     const DataModelSchema& schema, const ComparePolicy& policy);

/// f(pred, gold) in [0,1]: matching leaf positions over the schema's fixed
/// leaf-component count. Symmetric in its arguments.
double overlap(const OpinionRecord& pred, const OpinionRecord& gold,
               const DataModelSchema& schema, const ComparePolicy& policy);

/// Maximum-total-overlap one-to-one matching, solved exactly.
Alignment align(const EvalInstance& instance, const DataModelSchema& schema,
                const ComparePolicy& policy);

/// Corpus-level TP / precision / recall / F1 over optimal per-instance
/// alignments. Zero-denominator conventions: an empty side scores 0 against
/// a non-empty one; two empty corpora score 1.
MetricReport corpus_metric(const std::vector<EvalInstance>& instances,
                           const DataModelSchema& schema, const ComparePolicy& policy);

/// Flat report document: full-precision values plus ×100 two-decimal renderings.
Json metric_report_to_json(const MetricReport& report);
std::string render_metric_report(const MetricReport& report);

/// Two-decimal percentage string (value × 100).
std::string percent_string(double fraction);

}  // namespace opinionkb
