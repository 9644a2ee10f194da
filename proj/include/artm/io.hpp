#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "artm/corpus.hpp"
#include "artm/miner.hpp"

namespace artm {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads every regular file in `dir` as one UTF-8 document (filename =
/// document id), in byte-lexicographic filename order.
std::vector<RawDocument> read_text_directory(const std::filesystem::path& dir);

/// Reads a JSON-lines feed file. Each record may carry title, description,
/// link, date and content; text = title + " " + description + " " + content.
/// Record ids are the 1-based line numbers ("feed-000001", ...).
std::vector<RawDocument> read_jsonl_feed(const std::filesystem::path& path);

/// Transaction-database JSON: n_docs, vocabulary and row-sparse weight
/// triplets [doc, term, weight] at full precision. The format is documented
/// in the README.
void save_db_json(const TransactionDatabase& db, const std::filesystem::path& path);
TransactionDatabase load_db_json(const std::filesystem::path& path);

/// A rule rendered with vocabulary strings, ready for display.
struct DisplayRule {
  std::vector<std::string> antecedent;
  std::vector<std::string> consequent;
  RuleMetrics metrics;
};

std::vector<DisplayRule> to_display_rules(const std::vector<ArchiveEntry>& entries,
                                          const Vocabulary& vocab);

/// CSV columns: antecedent, consequent (terms joined by " ∧ "), support,
/// confidence, aws_raw, aws_norm, fitness.
void write_rules_csv(const std::vector<DisplayRule>& rules, const std::filesystem::path& path);
void write_rules_json(const std::vector<DisplayRule>& rules, const std::filesystem::path& path);

/// Reads rules back from either format (sniffed from the content).
std::vector<DisplayRule> read_rules(const std::filesystem::path& path);

/// Per-run convergence histories as CSV rows (run, generation, best_fitness).
void write_history_csv(const std::vector<std::vector<double>>& histories,
                       const std::filesystem::path& path);

/// Round-trip decimal formatting for doubles ("%.17g").
std::string format_double(double value);

}  // namespace artm
