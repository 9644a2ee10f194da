// Kernel benchmark: times the OpenMP paths against the serial reference
// implementations on a synthetic corpus and verifies they agree.
//
//   artm_bench [--docs N] [--terms M] [--tokens L] [--seed S]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "artm/metrics.hpp"
#include "artm/miner.hpp"
#include "artm/reference.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool agree) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx  %s\n", kernel, serial_ms, parallel_ms,
              serial_ms / parallel_ms, agree ? "ok" : "MISMATCH");
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool rows_equal(const artm::TransactionDatabase& a, const artm::TransactionDatabase& b) {
  if (a.doc_count() != b.doc_count()) return false;
  for (std::size_t i = 0; i < a.doc_count(); ++i) {
    if (a.row(i).size() != b.row(i).size()) return false;
    for (std::size_t e = 0; e < a.row(i).size(); ++e) {
      if (a.row(i)[e].term != b.row(i)[e].term) return false;
      if (a.row(i)[e].weight != b.row(i)[e].weight) return false;
    }
  }
  return true;
}

bool archives_equal(const artm::RuleArchive& a, const artm::RuleArchive& b) {
  if (a.size() != b.size()) return false;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  for (; ia != a.entries().end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return false;
    if (ia->second.metrics.fitness != ib->second.metrics.fitness) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n_docs = 20000;
  std::size_t n_terms = 2000;
  std::size_t tokens_per_doc = 80;
  std::uint64_t seed = 1;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    const char* value = argv[i + 1];
    if (flag == "--docs") n_docs = std::strtoull(value, nullptr, 10);
    if (flag == "--terms") n_terms = std::strtoull(value, nullptr, 10);
    if (flag == "--tokens") tokens_per_doc = std::strtoull(value, nullptr, 10);
    if (flag == "--seed") seed = std::strtoull(value, nullptr, 10);
  }

  std::printf("corpus: %zu docs x %zu tokens, up to %zu terms, %d threads\n\n", n_docs,
              tokens_per_doc, n_terms, max_threads());

  // Raw text for the preprocessing kernel, skewed so term counts vary.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<artm::RawDocument> raw(n_docs);
  for (std::size_t i = 0; i < n_docs; ++i) {
    raw[i].id = "doc" + std::to_string(i);
    std::string text;
    for (std::size_t t = 0; t < tokens_per_doc; ++t) {
      const double u = unit(rng);
      text += "w" + std::to_string(static_cast<std::size_t>(
                        u * u * static_cast<double>(n_terms)));
      text += (t % 9 == 7) ? ", the " : " ";
    }
    raw[i].text = std::move(text);
  }

  std::printf("%-28s %13s %13s %9s\n", "kernel", "reference", "kernel", "ratio");

  const auto stops = artm::StopWordList::defaults();
  auto docs = artm::prepare_corpus(raw, stops);
  auto vocab = artm::build_vocabulary(docs, n_terms);

  // Transaction-database build: the serial reference against the production
  // kernel (indexed lookups, OpenMP over rows).
  auto t0 = Clock::now();
  auto db_serial = artm::ref::build_transaction_db(docs, vocab);
  const double build_serial = ms_since(t0);
  t0 = Clock::now();
  auto db = artm::build_transaction_db(docs, vocab);
  const double build_parallel = ms_since(t0);
  report("build_transaction_db", build_serial, build_parallel, rows_equal(db, db_serial));

  // Support counting: row scan vs bitmask AND/popcount.
  std::uniform_int_distribution<int> pick(0, static_cast<int>(db.term_count()) - 1);
  std::vector<std::vector<int>> queries(400);
  for (auto& q : queries) {
    for (int t = 0; t < 3; ++t) q.push_back(pick(rng));
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
  }
  t0 = Clock::now();
  std::int64_t total_serial = 0;
  for (const auto& q : queries) total_serial += artm::ref::count_docs_with_all(db, q);
  const double count_serial = ms_since(t0);
  t0 = Clock::now();
  std::int64_t total_fast = 0;
  for (const auto& q : queries) total_fast += artm::count_docs_with_all(db, q);
  const double count_fast = ms_since(t0);
  report("count_docs_with_all (x400)", count_serial, count_fast, total_serial == total_fast);

  // Multi-run mining: one thread vs all threads.
  artm::MinerConfig config;
  config.num_runs = 5;
  config.pso.n_fes = 4000;
  config.pso.seed = 11;
#ifdef _OPENMP
  const int original_threads = max_threads();
  omp_set_num_threads(1);
  t0 = Clock::now();
  auto result_serial = artm::mine(db, config);
  const double mine_serial = ms_since(t0);
  omp_set_num_threads(original_threads);
  t0 = Clock::now();
  auto result_parallel = artm::mine(db, config);
  const double mine_parallel = ms_since(t0);
  report("mine (5 runs)", mine_serial, mine_parallel,
         archives_equal(result_serial.archive, result_parallel.archive));
#else
  t0 = Clock::now();
  auto result = artm::mine(db, config);
  const double mine_ms = ms_since(t0);
  report("mine (5 runs)", mine_ms, mine_ms, result.archive.size() > 0);
#endif

  return 0;
}
