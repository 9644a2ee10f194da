#include <fstream>
#include <random>

#include "artm/io.hpp"
#include "artm/reference.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace artm;
using artm::testing::TempDir;

namespace {

bool db_equal(const TransactionDatabase& a, const TransactionDatabase& b) {
  if (a.doc_count() != b.doc_count() || a.term_count() != b.term_count()) return false;
  if (a.vocabulary().terms != b.vocabulary().terms) return false;
  if (a.vocabulary().occurrences != b.vocabulary().occurrences) return false;
  if (a.vocabulary().doc_frequency != b.vocabulary().doc_frequency) return false;
  for (std::size_t i = 0; i < a.doc_count(); ++i) {
    if (a.row(i).size() != b.row(i).size()) return false;
    for (std::size_t e = 0; e < a.row(i).size(); ++e) {
      if (a.row(i)[e].term != b.row(i)[e].term) return false;
      if (a.row(i)[e].weight != b.row(i)[e].weight) return false;  // bitwise
    }
  }
  for (std::size_t j = 0; j < a.term_count(); ++j) {
    const int t = static_cast<int>(j);
    if (a.column_sum(t) != b.column_sum(t)) return false;
    for (std::size_t i = 0; i < a.doc_count(); ++i) {
      if (a.present(i, t) != b.present(i, t)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("database JSON round trip is exact") {
  std::mt19937_64 rng(83);
  TempDir dir("dbio");
  for (int round = 0; round < 5; ++round) {
    auto docs = artm::testing::random_corpus(rng, 30, 14, 16);
    auto db = build_transaction_db(docs, build_vocabulary(docs, 12));
    const auto path = dir.path() / ("db" + std::to_string(round) + ".json");
    save_db_json(db, path);
    auto loaded = load_db_json(path);
    CHECK(db_equal(db, loaded));

    // Re-saving the loaded database reproduces the file byte for byte.
    const auto path2 = dir.path() / "resaved.json";
    save_db_json(loaded, path2);
    std::ifstream a(path, std::ios::binary), b(path2, std::ios::binary);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
  }
}

TEST_CASE("load_db_json validates its input") {
  TempDir dir("dbbad");
  const auto path = dir.path() / "bad.json";

  SUBCASE("missing file") { CHECK_THROWS_AS(load_db_json(path), IoError); }
  SUBCASE("not json") {
    std::ofstream(path) << "definitely not json";
    CHECK_THROWS_AS(load_db_json(path), IoError);
  }
  SUBCASE("wrong format tag") {
    std::ofstream(path) << R"({"format":"other","n_docs":1})";
    CHECK_THROWS_AS(load_db_json(path), IoError);
  }
  SUBCASE("inconsistent vocabulary") {
    std::ofstream(path) << R"({"format":"artm-db","version":1,"n_docs":2,
      "vocabulary":{"terms":["a","b"],"occurrences":[2],"doc_frequency":[1,1]},
      "weights":[]})";
    CHECK_THROWS_AS(load_db_json(path), IoError);
  }
  SUBCASE("nonpositive weight") {
    std::ofstream(path) << R"({"format":"artm-db","version":1,"n_docs":2,
      "vocabulary":{"terms":["a","b"],"occurrences":[2,1],"doc_frequency":[1,1]},
      "weights":[[0,0,-0.5]]})";
    CHECK_THROWS_AS(load_db_json(path), IoError);
  }
}

TEST_CASE("text directory ingestion") {
  TempDir dir("txt");
  std::ofstream(dir.path() / "b.txt") << "Bike gear.";
  std::ofstream(dir.path() / "a.txt") << "The race!";
  std::ofstream(dir.path() / "c.txt") << "Swim...";
  auto docs = read_text_directory(dir.path());
  REQUIRE(docs.size() == 3);
  CHECK(docs[0].id == "a.txt");
  CHECK(docs[1].id == "b.txt");
  CHECK(docs[2].id == "c.txt");
  CHECK(docs[0].text == "The race!");
  CHECK_THROWS_AS(read_text_directory(dir.path() / "missing"), IoError);
}

TEST_CASE("jsonl feed ingestion") {
  TempDir dir("jsonl");
  const auto path = dir.path() / "feed.jsonl";
  {
    std::ofstream out(path);
    out << R"({"title":"Race day","description":"A hard race","link":"http://x","date":"2020-01-01","content":"We raced."})"
        << "\n";
    out << "\n";  // blank lines are skipped
    out << R"({"title":"Swim","content":"Open water."})" << "\n";
  }
  auto docs = read_jsonl_feed(path);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].id == "feed-000001");
  CHECK(docs[0].text == "Race day A hard race We raced.");
  CHECK(docs[0].link == "http://x");
  CHECK(docs[0].date == "2020-01-01");
  CHECK(docs[1].id == "feed-000003");
  CHECK(docs[1].text == "Swim  Open water.");  // missing description

  SUBCASE("malformed line reports its number") {
    std::ofstream(path, std::ios::app) << "{broken\n";
    CHECK_THROWS_WITH_AS(read_jsonl_feed(path), doctest::Contains("line 4"), IoError);
  }
}

TEST_CASE("rules serialization") {
  std::vector<DisplayRule> rules(2);
  rules[0].antecedent = {"championship", "skills"};
  rules[0].consequent = {"race", "technical"};
  rules[0].metrics = {0.25, 0.8, 1.5, 0.3, 0.45};
  rules[1].antecedent = {"great"};
  rules[1].consequent = {"year"};
  rules[1].metrics = {2.0 / 3.0, 1.0, 0.0, 0.0, 5.0 / 9.0};

  TempDir dir("rules");
  SUBCASE("csv round trip") {
    const auto path = dir.path() / "rules.csv";
    write_rules_csv(rules, path);
    auto back = read_rules(path);
    REQUIRE(back.size() == 2);
    CHECK(back[0].antecedent == rules[0].antecedent);
    CHECK(back[0].consequent == rules[0].consequent);
    CHECK(back[0].metrics.support == rules[0].metrics.support);
    CHECK(back[1].metrics.support == rules[1].metrics.support);  // %.17g round trip
    CHECK(back[1].metrics.fitness == rules[1].metrics.fitness);
  }
  SUBCASE("json round trip") {
    const auto path = dir.path() / "rules.json";
    write_rules_json(rules, path);
    auto back = read_rules(path);
    REQUIRE(back.size() == 2);
    CHECK(back[0].antecedent == rules[0].antecedent);
    CHECK(back[1].metrics.confidence == 1.0);
    CHECK(back[1].metrics.support == rules[1].metrics.support);
  }
  SUBCASE("missing rules file") {
    CHECK_THROWS_AS(read_rules(dir.path() / "none.csv"), IoError);
  }
}

TEST_CASE("display rules follow the archive ranking") {
  auto db = artm::testing::make_db({{"a", "b", "c"}, {"b", "c"}, {"a", "c", "b"}});
  RuleArchive archive;
  RuleMetrics low;
  low.fitness = 0.1;
  low.support = 0.5;
  RuleMetrics high;
  high.fitness = 0.9;
  high.support = 0.5;
  RuleMetrics mid_a;
  mid_a.fitness = 0.5;
  mid_a.support = 0.7;
  RuleMetrics mid_b;
  mid_b.fitness = 0.5;
  mid_b.support = 0.2;
  archive.insert_if_absent({{0}, {1}}, low);
  archive.insert_if_absent({{1}, {2}}, high);
  archive.insert_if_absent({{0}, {2}}, mid_a);
  archive.insert_if_absent({{2}, {0}}, mid_b);

  auto ranked = archive.ranked();
  REQUIRE(ranked.size() == 4);
  CHECK(ranked[0].metrics.fitness == 0.9);
  CHECK(ranked[1].metrics.fitness == 0.5);
  CHECK(ranked[1].metrics.support == 0.7);  // support breaks the tie
  CHECK(ranked[2].metrics.support == 0.2);
  CHECK(ranked[3].metrics.fitness == 0.1);

  auto display = to_display_rules(ranked, db.vocabulary());
  REQUIRE(display.size() == 4);
  CHECK(display[0].antecedent.size() == 1);
}

TEST_CASE("history CSV") {
  TempDir dir("hist");
  const auto path = dir.path() / "history.csv";
  write_history_csv({{0.5, 0.75, 0.75}, {0.25}}, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "run,generation,best_fitness");
  std::getline(in, line);
  CHECK(line == "0,0,0.5");
  std::getline(in, line);
  CHECK(line == "0,1,0.75");
}

TEST_CASE("format_double round trips") {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = dist(rng);
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
}
