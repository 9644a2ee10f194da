#pragma once

// Serial reference implementations of the parallel kernels. These walk the
// row-major representation directly (no bitmasks, no OpenMP) and exist so
// tests can cross-check the fast paths and the benchmark can compare them.

#include <cstdint>
#include <span>
#include <vector>

#include "artm/corpus.hpp"
#include "artm/metrics.hpp"

namespace artm::ref {

/// Serial transaction-database build; must match artm::build_transaction_db
/// bit for bit.
TransactionDatabase build_transaction_db(const std::vector<TokenizedDocument>& docs,
                                         const Vocabulary& vocab,
                                         std::vector<std::string>* dropped = nullptr);

/// Row-scan document count: a term is present when its weight is positive
/// or its document frequency equals N.
std::int64_t count_docs_with_all(const TransactionDatabase& db, std::span<const int> terms);

double support(const TransactionDatabase& db, const Rule& rule);
double confidence(const TransactionDatabase& db, const Rule& rule);

/// Per-column weight mass, accumulated in document order.
std::vector<double> column_sums(const TransactionDatabase& db);

}  // namespace artm::ref
