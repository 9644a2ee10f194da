#include "artm/corpus.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>

namespace artm {

namespace {

bool is_token_char(unsigned char c) { return std::isalnum(c) != 0; }

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (is_token_char(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> remove_stop_words(std::vector<std::string> tokens,
                                           const StopWordList& stops) {
  std::erase_if(tokens, [&](const std::string& t) { return stops.contains(t); });
  return tokens;
}

void StopWordList::insert(std::string word) { words_.insert(std::move(word)); }

StopWordList StopWordList::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stop-word file: " + path.string());
  StopWordList list;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string word = trim(line.substr(0, line.find('#')));
    if (word.empty()) continue;
    for (char& c : word) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        throw std::runtime_error("stop-word file " + path.string() + ", line " +
                                 std::to_string(lineno) + ": entry contains whitespace");
      }
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    list.insert(std::move(word));
  }
  return list;
}

std::optional<int> Vocabulary::find(const std::string& term) const {
  auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Vocabulary::rebuild_index() {
  index_.clear();
  index_.reserve(terms.size());
  for (std::size_t j = 0; j < terms.size(); ++j) index_.emplace(terms[j], static_cast<int>(j));
}

Vocabulary build_vocabulary(const std::vector<TokenizedDocument>& docs, std::size_t v_max) {
  if (v_max == 0) throw std::invalid_argument("build_vocabulary: v_max must be positive");
  struct Counts {
    std::int64_t occurrences = 0;
    std::int64_t doc_frequency = 0;
  };
  std::map<std::string, Counts> counts;
  for (const auto& doc : docs) {
    std::map<std::string, std::int64_t> local;
    for (const auto& token : doc.tokens) ++local[token];
    for (const auto& [term, n] : local) {
      auto& c = counts[term];
      c.occurrences += n;
      c.doc_frequency += 1;
    }
  }
  if (counts.empty()) {
    throw EmptyCorpusError("corpus is empty after preprocessing: no terms to index");
  }

  // counts iterates terms in ascending lexicographic order, so a stable
  // sort by descending occurrences yields the required tie-break.
  std::vector<std::pair<std::string, Counts>> order(counts.begin(), counts.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.second.occurrences > b.second.occurrences;
  });
  if (order.size() > v_max) order.resize(v_max);

  Vocabulary vocab;
  vocab.terms.reserve(order.size());
  vocab.occurrences.reserve(order.size());
  vocab.doc_frequency.reserve(order.size());
  for (auto& [term, c] : order) {
    vocab.terms.push_back(std::move(term));
    vocab.occurrences.push_back(c.occurrences);
    vocab.doc_frequency.push_back(c.doc_frequency);
  }
  vocab.rebuild_index();
  return vocab;
}

double term_frequency(const std::vector<std::string>& doc, const std::string& term) {
  if (doc.empty()) {
    throw std::invalid_argument("term_frequency: document is empty after preprocessing");
  }
  std::int64_t n = std::count(doc.begin(), doc.end(), term);
  return static_cast<double>(n) / static_cast<double>(doc.size());
}

double inverse_term_frequency(std::int64_t n_docs_with_term, std::int64_t n_docs) {
  if (n_docs_with_term <= 0) {
    throw std::invalid_argument("inverse_term_frequency: term occurs in no document");
  }
  if (n_docs_with_term > n_docs) {
    throw std::invalid_argument("inverse_term_frequency: document frequency exceeds corpus size");
  }
  return std::fabs(std::log(static_cast<double>(n_docs_with_term) /
                            static_cast<double>(n_docs)));
}

double TransactionDatabase::weight(std::size_t doc, int term) const {
  const auto& r = rows_[doc];
  auto it = std::lower_bound(r.begin(), r.end(), term,
                             [](const WeightEntry& e, int t) { return e.term < t; });
  if (it != r.end() && it->term == term) return it->weight;
  return 0.0;
}

bool TransactionDatabase::present(std::size_t doc, int term) const {
  const std::uint64_t* col = column_bits(term);
  return (col[doc >> 6] >> (doc & 63)) & 1u;
}

std::int64_t TransactionDatabase::docs_with_term(int term) const {
  const std::uint64_t* col = column_bits(term);
  std::int64_t count = 0;
  for (std::size_t b = 0; b < blocks_; ++b) count += std::popcount(col[b]);
  return count;
}

double TransactionDatabase::aws_max(std::size_t k) const {
  if (sorted_sum_prefix_.empty()) return 0.0;
  return sorted_sum_prefix_[std::min(k, sorted_sum_prefix_.size() - 1)];
}

void TransactionDatabase::finalize() {
  const std::size_t m = vocab_.size();
  blocks_ = (n_docs_ + 63) / 64;
  presence_.assign(m * blocks_, 0);
  column_sums_.assign(m, 0.0);

  // Accumulation runs in ascending document order per column, so the sums
  // do not depend on thread count.
  for (std::size_t i = 0; i < n_docs_; ++i) {
    for (const WeightEntry& e : rows_[i]) {
      presence_[static_cast<std::size_t>(e.term) * blocks_ + (i >> 6)] |= 1ull << (i & 63);
      column_sums_[static_cast<std::size_t>(e.term)] += e.weight;
    }
  }
  // A term occurring in every document has zero weight everywhere; its
  // column is filled so presence counts still see it.
  const std::uint64_t tail =
      (n_docs_ & 63) ? ((1ull << (n_docs_ & 63)) - 1) : ~0ull;
  for (std::size_t j = 0; j < m; ++j) {
    if (vocab_.doc_frequency[j] == static_cast<std::int64_t>(n_docs_)) {
      std::uint64_t* col = presence_.data() + j * blocks_;
      for (std::size_t b = 0; b + 1 < blocks_; ++b) col[b] = ~0ull;
      if (blocks_ > 0) col[blocks_ - 1] = tail;
    }
  }

  std::vector<double> sorted = column_sums_;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  sorted_sum_prefix_.assign(sorted.size() + 1, 0.0);
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    sorted_sum_prefix_[j + 1] = sorted_sum_prefix_[j] + sorted[j];
  }
}

TransactionDatabase build_transaction_db(const std::vector<TokenizedDocument>& docs,
                                         const Vocabulary& vocab,
                                         std::vector<std::string>* dropped) {
  std::vector<const TokenizedDocument*> retained;
  retained.reserve(docs.size());
  for (const auto& doc : docs) {
    if (doc.tokens.empty()) {
      if (dropped) dropped->push_back(doc.id);
    } else {
      retained.push_back(&doc);
    }
  }
  if (retained.empty()) {
    throw EmptyCorpusError("corpus is empty after preprocessing: no documents retained");
  }

  const std::int64_t n = static_cast<std::int64_t>(retained.size());
  std::vector<double> itf(vocab.size());
  for (std::size_t j = 0; j < vocab.size(); ++j) {
    itf[j] = inverse_term_frequency(vocab.doc_frequency[j], n);
  }

  TransactionDatabase db;
  db.n_docs_ = retained.size();
  db.vocab_ = vocab;
  db.rows_.resize(retained.size());

#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(retained.size()); ++i) {
    const auto& tokens = retained[static_cast<std::size_t>(i)]->tokens;
    // Out-of-vocabulary tokens still count towards the document length.
    const double len = static_cast<double>(tokens.size());
    std::map<int, std::int64_t> term_counts;
    for (const auto& token : tokens) {
      if (auto j = vocab.find(token)) ++term_counts[*j];
    }
    auto& row = db.rows_[static_cast<std::size_t>(i)];
    row.reserve(term_counts.size());
    for (const auto& [j, count] : term_counts) {
      double w = (static_cast<double>(count) / len) * itf[static_cast<std::size_t>(j)];
      if (w > 0.0) row.push_back({j, w});
    }
  }

  db.finalize();
  return db;
}

std::vector<std::pair<std::string, std::int64_t>> top_terms(const Vocabulary& vocab,
                                                            std::size_t k) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  const std::size_t n = std::min(k, vocab.size());
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.emplace_back(vocab.terms[j], vocab.occurrences[j]);
  return out;
}

std::vector<TokenizedDocument> prepare_corpus(const std::vector<RawDocument>& docs,
                                              const StopWordList& stops) {
  // Tokenization is allocation-bound and does not profit from threads;
  // the parallelism lives in the weight computation downstream.
  std::vector<TokenizedDocument> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) {
    out.push_back({doc.id, remove_stop_words(tokenize(doc.text), stops)});
  }
  return out;
}

}  // namespace artm
