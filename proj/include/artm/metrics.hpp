#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "artm/corpus.hpp"

namespace artm {

/// An association rule over vocabulary column indices. Both sides are kept
/// sorted ascending and duplicate-free; this sorted form is the canonical
/// archive key.
struct Rule {
  std::vector<int> antecedent;
  std::vector<int> consequent;

  bool operator==(const Rule&) const = default;
  bool operator<(const Rule& other) const;
};

/// True iff both sides are nonempty, internally sorted/unique, disjoint,
/// and all indices lie below m.
bool rule_is_valid(const Rule& rule, std::size_t m);

struct RuleMetrics {
  double support = 0.0;
  double confidence = 0.0;
  double aws_raw = 0.0;
  double aws_norm = 0.0;
  double fitness = 0.0;
};

struct Thresholds {
  double s_min = 0.0;
  double c_min = 0.0;
};

enum class AwsMode { normalized, raw };

/// Weighting of the fitness terms; the default treats all three equally.
struct FitnessWeights {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
};

/// True iff the term occurs in the document, regardless of its weight.
bool presence(const TransactionDatabase& db, std::size_t doc, int term);

/// Number of documents in which every listed term is present. An empty
/// term list counts all documents.
std::int64_t count_docs_with_all(const TransactionDatabase& db, std::span<const int> terms);

/// supp(X => Y) = n(X u Y) / N.
double support(const TransactionDatabase& db, const Rule& rule);

/// conf(X => Y) = n(X u Y) / n(X); zero when n(X) = 0.
double confidence(const TransactionDatabase& db, const Rule& rule);

struct AwsValue {
  double raw = 0.0;   // sum of the selected columns' weight mass
  double norm = 0.0;  // raw / aws_max(k_cap), in [0,1]; 0 when the normaliser is 0
};

/// Aggregate weight sum of the selected terms. k_cap is the rule-size cap
/// whose aws_max normalises the raw value.
AwsValue aws(const TransactionDatabase& db, std::span<const int> terms, std::size_t k_cap);

/// Full metrics for one rule under the given weighting.
RuleMetrics score_rule(const TransactionDatabase& db, const Rule& rule, std::size_t k_cap,
                       const FitnessWeights& weights = {}, AwsMode mode = AwsMode::normalized);

struct ScoredRule {
  Rule rule;
  RuleMetrics metrics;
};

/// Exhaustive enumeration of every rule with 2 <= |X u Y| <= k_max over all
/// nonempty bipartitions, filtered by the thresholds, in canonical order
/// (antecedent-major). Guarded against large vocabularies: throws
/// std::invalid_argument when M > 15 unless force is set.
std::vector<ScoredRule> enumerate_rules(const TransactionDatabase& db, int k_max,
                                        const Thresholds& thresholds,
                                        const FitnessWeights& weights = {},
                                        AwsMode mode = AwsMode::normalized,
                                        bool force = false);

}  // namespace artm
