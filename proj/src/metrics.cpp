#include "artm/metrics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace artm {

bool Rule::operator<(const Rule& other) const {
  if (antecedent != other.antecedent) return antecedent < other.antecedent;
  return consequent < other.consequent;
}

namespace {

bool sorted_unique_in_range(const std::vector<int>& v, std::size_t m) {
  if (v.empty()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || static_cast<std::size_t>(v[i]) >= m) return false;
    if (i > 0 && v[i - 1] >= v[i]) return false;
  }
  return true;
}

std::vector<int> term_union(const Rule& rule) {
  std::vector<int> u;
  u.reserve(rule.antecedent.size() + rule.consequent.size());
  std::set_union(rule.antecedent.begin(), rule.antecedent.end(), rule.consequent.begin(),
                 rule.consequent.end(), std::back_inserter(u));
  return u;
}

}  // namespace

bool rule_is_valid(const Rule& rule, std::size_t m) {
  if (!sorted_unique_in_range(rule.antecedent, m)) return false;
  if (!sorted_unique_in_range(rule.consequent, m)) return false;
  std::vector<int> both;
  std::set_intersection(rule.antecedent.begin(), rule.antecedent.end(),
                        rule.consequent.begin(), rule.consequent.end(),
                        std::back_inserter(both));
  return both.empty();
}

bool presence(const TransactionDatabase& db, std::size_t doc, int term) {
  return db.present(doc, term);
}

// Hot path: called three times per fitness evaluation, frequently from
// inside the per-run parallel loop, so it stays a plain serial scan.
std::int64_t count_docs_with_all(const TransactionDatabase& db, std::span<const int> terms) {
  if (terms.empty()) return static_cast<std::int64_t>(db.doc_count());
  const std::size_t blocks = db.blocks_per_column();
  std::int64_t count = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::uint64_t word = ~0ull;
    for (int t : terms) word &= db.column_bits(t)[b];
    count += std::popcount(word);
  }
  return count;
}

double support(const TransactionDatabase& db, const Rule& rule) {
  const std::vector<int> u = term_union(rule);
  return static_cast<double>(count_docs_with_all(db, u)) /
         static_cast<double>(db.doc_count());
}

double confidence(const TransactionDatabase& db, const Rule& rule) {
  const std::int64_t n_x = count_docs_with_all(db, rule.antecedent);
  if (n_x == 0) return 0.0;
  const std::vector<int> u = term_union(rule);
  return static_cast<double>(count_docs_with_all(db, u)) / static_cast<double>(n_x);
}

AwsValue aws(const TransactionDatabase& db, std::span<const int> terms, std::size_t k_cap) {
  AwsValue v;
  // Summation order is ascending term index so results are reproducible.
  if (std::is_sorted(terms.begin(), terms.end())) {
    for (int t : terms) v.raw += db.column_sum(t);
  } else {
    std::vector<int> sorted(terms.begin(), terms.end());
    std::sort(sorted.begin(), sorted.end());
    for (int t : sorted) v.raw += db.column_sum(t);
  }
  const double max = db.aws_max(k_cap);
  v.norm = max > 0.0 ? v.raw / max : 0.0;
  return v;
}

RuleMetrics score_rule(const TransactionDatabase& db, const Rule& rule, std::size_t k_cap,
                       const FitnessWeights& weights, AwsMode mode) {
  RuleMetrics m;
  const std::vector<int> u = term_union(rule);
  const std::int64_t n_union = count_docs_with_all(db, u);
  const std::int64_t n_x = count_docs_with_all(db, rule.antecedent);
  m.support = static_cast<double>(n_union) / static_cast<double>(db.doc_count());
  m.confidence = n_x == 0 ? 0.0 : static_cast<double>(n_union) / static_cast<double>(n_x);
  const AwsValue a = aws(db, u, k_cap);
  m.aws_raw = a.raw;
  m.aws_norm = a.norm;
  const double aws_term = mode == AwsMode::normalized ? m.aws_norm : m.aws_raw;
  m.fitness = (weights.alpha * m.support + weights.beta * m.confidence +
               weights.gamma * aws_term) /
              (weights.alpha + weights.beta + weights.gamma);
  return m;
}

std::vector<ScoredRule> enumerate_rules(const TransactionDatabase& db, int k_max,
                                        const Thresholds& thresholds,
                                        const FitnessWeights& weights, AwsMode mode,
                                        bool force) {
  const std::size_t m = db.term_count();
  if (m > 15 && !force) {
    throw std::invalid_argument(
        "enumerate_rules: vocabulary size " + std::to_string(m) +
        " exceeds the brute-force guard of 15 terms (pass force to override)");
  }
  if (m > 25) {
    throw std::invalid_argument("enumerate_rules: vocabulary size " + std::to_string(m) +
                                " is too large to enumerate even when forced");
  }
  if (k_max < 2) throw std::invalid_argument("enumerate_rules: k_max must be at least 2");

  std::vector<ScoredRule> out;
  const std::uint64_t full = (1ull << m) - 1;
  for (std::uint64_t set = 1; set <= full; ++set) {
    const int size = std::popcount(set);
    if (size < 2 || size > k_max) continue;
    std::vector<int> members;
    members.reserve(static_cast<std::size_t>(size));
    for (std::size_t j = 0; j < m; ++j) {
      if (set & (1ull << j)) members.push_back(static_cast<int>(j));
    }
    // Every nonempty proper sub-bipartition of the member set.
    const std::uint32_t sub_full = (1u << size) - 1;
    for (std::uint32_t sub = 1; sub < sub_full; ++sub) {
      Rule rule;
      for (int b = 0; b < size; ++b) {
        if (sub & (1u << b)) {
          rule.antecedent.push_back(members[static_cast<std::size_t>(b)]);
        } else {
          rule.consequent.push_back(members[static_cast<std::size_t>(b)]);
        }
      }
      RuleMetrics metrics =
          score_rule(db, rule, static_cast<std::size_t>(k_max), weights, mode);
      if (metrics.support < thresholds.s_min || metrics.confidence < thresholds.c_min) {
        continue;
      }
      out.push_back({std::move(rule), metrics});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ScoredRule& a, const ScoredRule& b) { return a.rule < b.rule; });
  return out;
}

}  // namespace artm
