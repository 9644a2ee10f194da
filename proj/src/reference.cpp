#include "artm/reference.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace artm::ref {

TransactionDatabase build_transaction_db(const std::vector<TokenizedDocument>& docs,
                                         const Vocabulary& vocab,
                                         std::vector<std::string>* dropped) {
  TransactionDatabase db;
  db.vocab_ = vocab;
  for (const auto& doc : docs) {
    if (doc.tokens.empty()) {
      if (dropped) dropped->push_back(doc.id);
      continue;
    }
    db.rows_.emplace_back();
    db.n_docs_ += 1;
  }
  if (db.n_docs_ == 0) {
    throw EmptyCorpusError("corpus is empty after preprocessing: no documents retained");
  }

  const std::int64_t n = static_cast<std::int64_t>(db.n_docs_);
  std::size_t row = 0;
  for (const auto& doc : docs) {
    if (doc.tokens.empty()) continue;
    std::map<std::string, std::int64_t> counts;
    for (const auto& token : doc.tokens) ++counts[token];
    for (std::size_t j = 0; j < vocab.size(); ++j) {
      auto it = counts.find(vocab.terms[j]);
      if (it == counts.end()) continue;
      const double tf = static_cast<double>(it->second) /
                        static_cast<double>(doc.tokens.size());
      const double w = tf * inverse_term_frequency(vocab.doc_frequency[j], n);
      if (w > 0.0) db.rows_[row].push_back({static_cast<int>(j), w});
    }
    ++row;
  }
  db.finalize();
  return db;
}

namespace {

bool present_rowscan(const TransactionDatabase& db, std::size_t doc, int term) {
  if (db.weight(doc, term) > 0.0) return true;
  return db.vocabulary().doc_frequency[static_cast<std::size_t>(term)] ==
         static_cast<std::int64_t>(db.doc_count());
}

}  // namespace

std::int64_t count_docs_with_all(const TransactionDatabase& db, std::span<const int> terms) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < db.doc_count(); ++i) {
    bool all = true;
    for (int t : terms) {
      if (!present_rowscan(db, i, t)) {
        all = false;
        break;
      }
    }
    if (all) ++count;
  }
  return count;
}

namespace {

std::vector<int> term_union(const Rule& rule) {
  std::vector<int> u = rule.antecedent;
  u.insert(u.end(), rule.consequent.begin(), rule.consequent.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

}  // namespace

double support(const TransactionDatabase& db, const Rule& rule) {
  return static_cast<double>(ref::count_docs_with_all(db, term_union(rule))) /
         static_cast<double>(db.doc_count());
}

double confidence(const TransactionDatabase& db, const Rule& rule) {
  const std::int64_t n_x = ref::count_docs_with_all(db, rule.antecedent);
  if (n_x == 0) return 0.0;
  return static_cast<double>(ref::count_docs_with_all(db, term_union(rule))) /
         static_cast<double>(n_x);
}

std::vector<double> column_sums(const TransactionDatabase& db) {
  std::vector<double> sums(db.term_count(), 0.0);
  for (std::size_t i = 0; i < db.doc_count(); ++i) {
    for (const WeightEntry& e : db.row(i)) {
      sums[static_cast<std::size_t>(e.term)] += e.weight;
    }
  }
  return sums;
}

}  // namespace artm::ref
