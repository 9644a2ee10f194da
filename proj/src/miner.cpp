#include "artm/miner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace artm {

void MinerConfig::validate() const {
  if (k < 2) throw std::invalid_argument("miner: k must be at least 2");
  if (weights.alpha < 0.0 || weights.beta < 0.0 || weights.gamma < 0.0 ||
      weights.alpha + weights.beta + weights.gamma <= 0.0) {
    throw std::invalid_argument("miner: fitness weights must be nonnegative with positive sum");
  }
  if (thresholds.s_min < 0.0 || thresholds.s_min > 1.0 || thresholds.c_min < 0.0 ||
      thresholds.c_min > 1.0) {
    throw std::invalid_argument("miner: thresholds must lie in [0,1]");
  }
  if (num_runs < 1) throw std::invalid_argument("miner: num_runs must be at least 1");
  pso::Params p = pso;
  p.dim = k + 1;
  p.validate();
}

DecodedRule decode(std::span<const double> position, int k, int m) {
  DecodedRule d;
  d.distinct_terms.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const int term = std::min(static_cast<int>(std::floor(position[static_cast<std::size_t>(j)] *
                                                          static_cast<double>(m))),
                              m - 1);
    if (std::find(d.distinct_terms.begin(), d.distinct_terms.end(), term) ==
        d.distinct_terms.end()) {
      d.distinct_terms.push_back(term);
    }
  }
  const int n = static_cast<int>(d.distinct_terms.size());
  if (n < 2) return d;  // infeasible

  const double cut_component = position[static_cast<std::size_t>(k)];
  d.cut_point =
      1 + std::min(static_cast<int>(std::floor(cut_component * static_cast<double>(n - 1))),
                   n - 2);
  d.feasible = true;
  d.rule.antecedent.assign(d.distinct_terms.begin(), d.distinct_terms.begin() + d.cut_point);
  d.rule.consequent.assign(d.distinct_terms.begin() + d.cut_point, d.distinct_terms.end());
  std::sort(d.rule.antecedent.begin(), d.rule.antecedent.end());
  std::sort(d.rule.consequent.begin(), d.rule.consequent.end());
  return d;
}

double fitness(const TransactionDatabase& db, const DecodedRule& decoded,
               const MinerConfig& config) {
  if (!decoded.feasible) return 0.0;
  return score_rule(db, decoded.rule, static_cast<std::size_t>(config.k), config.weights,
                    config.aws_mode)
      .fitness;
}

bool RuleArchive::insert_if_absent(const Rule& rule, const RuleMetrics& metrics) {
  auto [it, inserted] = entries_.try_emplace(rule, ArchiveEntry{rule, metrics, next_order_});
  if (inserted) ++next_order_;
  return inserted;
}

std::vector<ArchiveEntry> RuleArchive::ranked() const {
  std::vector<ArchiveEntry> out;
  out.reserve(entries_.size());
  for (const auto& [rule, entry] : entries_) out.push_back(entry);
  std::sort(out.begin(), out.end(), [](const ArchiveEntry& a, const ArchiveEntry& b) {
    if (a.metrics.fitness != b.metrics.fitness) return a.metrics.fitness > b.metrics.fitness;
    if (a.metrics.support != b.metrics.support) return a.metrics.support > b.metrics.support;
    return a.rule < b.rule;
  });
  return out;
}

RunStatistics statistics(const RuleArchive& archive) {
  RunStatistics s;
  s.rule_count = archive.size();
  if (archive.size() == 0) return s;
  double ant = 0.0;
  double cons = 0.0;
  for (const auto& [rule, entry] : archive.entries()) {
    ant += static_cast<double>(rule.antecedent.size());
    cons += static_cast<double>(rule.consequent.size());
  }
  s.avg_antecedent_len = ant / static_cast<double>(archive.size());
  s.avg_consequent_len = cons / static_cast<double>(archive.size());
  return s;
}

namespace {

struct RunOutput {
  std::map<Rule, RuleMetrics> rules;  // canonical key, first-seen metrics
  std::vector<double> history;
};

RunOutput execute_run(const TransactionDatabase& db, const MinerConfig& config,
                      std::uint64_t seed) {
  const int m = static_cast<int>(db.term_count());
  pso::Params params = config.pso;
  params.dim = config.k + 1;
  params.seed = seed;

  RunOutput out;
  // The hook fires directly after each evaluation, so the decode and score
  // computed by the objective can be handed over without recomputation.
  DecodedRule last_decoded;
  RuleMetrics last_metrics;
  auto objective = [&](std::span<const double> position) {
    last_decoded = decode(position, config.k, m);
    if (!last_decoded.feasible) {
      last_metrics = RuleMetrics{};
      return 0.0;
    }
    last_metrics = score_rule(db, last_decoded.rule, static_cast<std::size_t>(config.k),
                              config.weights, config.aws_mode);
    return last_metrics.fitness;
  };
  auto harvest = [&](std::span<const double> /*position*/, double /*fitness*/) {
    if (!last_decoded.feasible) return;
    if (last_metrics.support <= 0.0) return;
    if (last_metrics.support < config.thresholds.s_min) return;
    if (last_metrics.confidence < config.thresholds.c_min) return;
    out.rules.try_emplace(last_decoded.rule, last_metrics);
  };

  pso::RunResult result = pso::run(params, objective, harvest);
  out.history = std::move(result.history);
  return out;
}

}  // namespace

MiningResult mine(const TransactionDatabase& db, const MinerConfig& config) {
  config.validate();
  if (db.term_count() < 2) {
    throw std::invalid_argument("miner: at least 2 vocabulary terms are required");
  }

  std::vector<RunOutput> runs(static_cast<std::size_t>(config.num_runs));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(config.num_runs); ++r) {
    runs[static_cast<std::size_t>(r)] =
        execute_run(db, config, config.pso.seed + static_cast<std::uint64_t>(r));
  }

  // Merging in run order keeps the archive independent of thread count;
  // duplicate keys carry identical metrics, so content is order-free too.
  MiningResult result;
  for (auto& run : runs) {
    for (auto& [rule, metrics] : run.rules) result.archive.insert_if_absent(rule, metrics);
    result.histories.push_back(std::move(run.history));
  }
  result.stats = statistics(result.archive);
  return result;
}

std::vector<MiningResult> sweep(const TransactionDatabase& db, const MinerConfig& base,
                                std::span<const int> k_values) {
  std::vector<MiningResult> results;
  results.reserve(k_values.size());
  for (int k : k_values) {
    MinerConfig config = base;
    config.k = k;
    config.pso.dim = k + 1;
    results.push_back(mine(db, config));
  }
  return results;
}

}  // namespace artm
