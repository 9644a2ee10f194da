#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "artm/corpus.hpp"

namespace artm::testing {

inline std::vector<TokenizedDocument> make_docs(
    const std::vector<std::vector<std::string>>& token_lists) {
  std::vector<TokenizedDocument> docs;
  for (std::size_t i = 0; i < token_lists.size(); ++i) {
    docs.push_back({"doc" + std::to_string(i), token_lists[i]});
  }
  return docs;
}

inline TransactionDatabase make_db(const std::vector<std::vector<std::string>>& token_lists,
                                   std::size_t v_max = 1000) {
  auto docs = make_docs(token_lists);
  return build_transaction_db(docs, build_vocabulary(docs, v_max));
}

/// Random token corpus over a small alphabet t0..t<n_terms-1>.
inline std::vector<TokenizedDocument> random_corpus(std::mt19937_64& rng, std::size_t n_docs,
                                                    std::size_t n_terms,
                                                    std::size_t max_doc_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_doc_len);
  std::uniform_int_distribution<std::size_t> term(0, n_terms - 1);
  std::vector<std::vector<std::string>> lists(n_docs);
  for (auto& doc : lists) {
    const std::size_t l = len(rng);
    for (std::size_t i = 0; i < l; ++i) doc.push_back("t" + std::to_string(term(rng)));
  }
  return make_docs(lists);
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            ("artm-" + tag + "-" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace artm::testing
