#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "artm/metrics.hpp"
#include "artm/pso.hpp"

namespace artm {

struct MinerConfig {
  int k = 5;  // maximum number of terms in a rule
  FitnessWeights weights{};
  Thresholds thresholds{};
  int num_runs = 5;
  pso::Params pso{};  // dim is forced to k+1
  AwsMode aws_mode = AwsMode::normalized;

  /// Throws std::invalid_argument on k < 2, non-positive weight sum,
  /// thresholds outside [0,1] or invalid swarm parameters.
  void validate() const;
};

/// Result of mapping a position in [0,1]^(k+1) to a rule. The first k
/// components select candidate terms (duplicates collapse, first occurrence
/// kept); fewer than two distinct terms makes the position infeasible.
/// The last component picks the cut point among the n-1 positions of the
/// n distinct terms.
struct DecodedRule {
  bool feasible = false;
  std::vector<int> distinct_terms;  // first-occurrence order
  int cut_point = 0;                // in [1, n-1] when feasible
  Rule rule;                        // canonical form when feasible
};

/// Pure genotype->phenotype mapping; total over [0,1]^(k+1).
DecodedRule decode(std::span<const double> position, int k, int m);

/// Weighted mean of support, confidence and AWS; 0 for infeasible
/// decodes. In normalized mode with nonnegative weights the
/// value lies in [0,1].
double fitness(const TransactionDatabase& db, const DecodedRule& decoded,
               const MinerConfig& config);

struct ArchiveEntry {
  Rule rule;
  RuleMetrics metrics;
  std::int64_t order = 0;  // insertion counter
};

/// Deduplicated store of mined rules, keyed by the canonical rule. Only
/// rules with positive support that pass the thresholds are admitted;
/// the first insertion of a key wins (duplicates carry identical metrics).
class RuleArchive {
 public:
  bool insert_if_absent(const Rule& rule, const RuleMetrics& metrics);
  bool contains(const Rule& rule) const { return entries_.count(rule) != 0; }
  std::size_t size() const { return entries_.size(); }
  const std::map<Rule, ArchiveEntry>& entries() const { return entries_; }

  /// Output order: fitness descending, ties by support descending, then
  /// canonical key ascending.
  std::vector<ArchiveEntry> ranked() const;

 private:
  std::map<Rule, ArchiveEntry> entries_;
  std::int64_t next_order_ = 0;
};

struct RunStatistics {
  std::size_t rule_count = 0;
  double avg_antecedent_len = 0.0;  // 0 when the archive is empty
  double avg_consequent_len = 0.0;
};

struct MiningResult {
  RuleArchive archive;
  RunStatistics stats;
  std::vector<std::vector<double>> histories;  // one per run
};

/// Executes num_runs independent swarm runs (seed + run index each),
/// harvesting every evaluated position into the archive. Runs execute in
/// parallel; the merged archive does not depend on thread count.
MiningResult mine(const TransactionDatabase& db, const MinerConfig& config);

RunStatistics statistics(const RuleArchive& archive);

/// mine() once per k value with the swarm dimension adjusted to k+1.
std::vector<MiningResult> sweep(const TransactionDatabase& db, const MinerConfig& base,
                                std::span<const int> k_values);

}  // namespace artm
