#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace artm {

/// Thrown when a corpus contains no usable tokens after preprocessing.
class EmptyCorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A document as ingested: identifier plus raw text. For feed records the
/// text is the concatenation of title, description and content; link and
/// date are carried along as metadata and never mined.
struct RawDocument {
  std::string id;
  std::string text;
  std::string link;
  std::string date;
};

struct TokenizedDocument {
  std::string id;
  std::vector<std::string> tokens;
};

/// Lowercase words excluded during preprocessing.
class StopWordList {
 public:
  StopWordList() = default;

  /// Bundled English list (articles, connectives, conjunctions,
  /// auxiliary verbs and similar function words).
  static StopWordList defaults();

  /// Reads a UTF-8 file, one lowercase word per line, '#' comments and
  /// blank lines allowed. Throws std::runtime_error on words containing
  /// whitespace or unreadable files.
  static StopWordList from_file(const std::filesystem::path& path);

  void insert(std::string word);
  bool contains(const std::string& word) const { return words_.count(word) != 0; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

/// Splits text into lowercase tokens. Every non-alphanumeric byte acts as
/// a separator; digits are kept. Empty input yields an empty list.
std::vector<std::string> tokenize(std::string_view text);

/// Drops every token contained in `stops`, preserving order.
std::vector<std::string> remove_stop_words(std::vector<std::string> tokens,
                                           const StopWordList& stops);

/// Corpus vocabulary: at most v_max terms, ordered by descending total
/// occurrence count with lexicographic tie-break, so that index j is the
/// column id of term j in the transaction database.
struct Vocabulary {
  std::vector<std::string> terms;
  std::vector<std::int64_t> occurrences;    // total occurrences across corpus
  std::vector<std::int64_t> doc_frequency;  // number of documents containing the term

  std::size_t size() const { return terms.size(); }

  /// Column index of `term`, or nullopt if the term was not retained.
  std::optional<int> find(const std::string& term) const;

  /// Recomputes the term -> column lookup; call after filling the vectors.
  void rebuild_index();

 private:
  std::unordered_map<std::string, int> index_;
};

/// Counts terms over a tokenized corpus and retains the v_max most frequent
/// ones. Throws EmptyCorpusError when every document is empty.
Vocabulary build_vocabulary(const std::vector<TokenizedDocument>& docs, std::size_t v_max);

/// n(doc, term) / |doc|. Throws std::invalid_argument on an empty document.
double term_frequency(const std::vector<std::string>& doc, const std::string& term);

/// |ln(n_docs_with_term / n_docs)|. Throws std::invalid_argument when
/// n_docs_with_term is zero or exceeds n_docs.
double inverse_term_frequency(std::int64_t n_docs_with_term, std::int64_t n_docs);

struct WeightEntry {
  int term;
  double weight;  // strictly positive; zero weights are implicit
};

/// The weighted transaction database: one row per retained document, one
/// column per vocabulary term, entries w[i][j] = TF(i,j) * ITF(j).
///
/// Rows store only strictly positive weights. A per-column occurrence
/// bitmask is kept alongside so that terms occurring in every document
/// (whose ITF, hence weight, is zero) still count as present for the
/// support and confidence counts.
class TransactionDatabase {
 public:
  std::size_t doc_count() const { return n_docs_; }
  std::size_t term_count() const { return vocab_.size(); }
  const Vocabulary& vocabulary() const { return vocab_; }

  const std::vector<WeightEntry>& row(std::size_t doc) const { return rows_[doc]; }

  /// w[doc][term]; zero when the term has no entry in the row.
  double weight(std::size_t doc, int term) const;

  /// True iff the term occurs in the document (independent of its weight).
  bool present(std::size_t doc, int term) const;

  /// Number of documents whose bit is set in the term's column.
  std::int64_t docs_with_term(int term) const;

  const std::uint64_t* column_bits(int term) const {
    return presence_.data() + static_cast<std::size_t>(term) * blocks_;
  }
  std::size_t blocks_per_column() const { return blocks_; }

  double column_sum(int term) const { return column_sums_[static_cast<std::size_t>(term)]; }

  /// Sum of the k largest column sums; the AWS normaliser for term cap k.
  double aws_max(std::size_t k) const;

  /// Builds presence bitmasks, column sums and the AWS normaliser table
  /// from rows_. Must be called after rows_ and vocab_ are in place.
  void finalize();

  std::size_t n_docs_ = 0;
  Vocabulary vocab_;
  std::vector<std::vector<WeightEntry>> rows_;

 private:
  std::size_t blocks_ = 0;
  std::vector<std::uint64_t> presence_;      // column-major, blocks_ words per term
  std::vector<double> column_sums_;
  std::vector<double> sorted_sum_prefix_;    // prefix sums of column sums, descending
};

/// Computes the weighted transaction database for `docs` against `vocab`.
/// Documents empty after preprocessing are dropped (their ids appended to
/// *dropped when given); throws EmptyCorpusError when nothing remains.
TransactionDatabase build_transaction_db(const std::vector<TokenizedDocument>& docs,
                                         const Vocabulary& vocab,
                                         std::vector<std::string>* dropped = nullptr);

/// First min(k, M) vocabulary entries as (term, occurrence count).
std::vector<std::pair<std::string, std::int64_t>> top_terms(const Vocabulary& vocab,
                                                            std::size_t k);

/// tokenize + remove_stop_words over a whole corpus.
std::vector<TokenizedDocument> prepare_corpus(const std::vector<RawDocument>& docs,
                                              const StopWordList& stops);

}  // namespace artm
