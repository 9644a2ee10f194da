#include "artm/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace artm {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path.string());
  out << content;
  if (!out) throw IoError("failed writing file: " + path.string());
}

std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += " ∧ ";
    out += terms[i];
  }
  return out;
}

std::vector<std::string> split_terms(const std::string& joined) {
  std::vector<std::string> out;
  const std::string sep = " ∧ ";
  std::size_t start = 0;
  while (true) {
    std::size_t pos = joined.find(sep, start);
    if (pos == std::string::npos) break;
    out.push_back(joined.substr(start, pos - start));
    start = pos + sep.size();
  }
  if (start < joined.size()) out.push_back(joined.substr(start));
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::vector<RawDocument> read_text_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError("corpus path is not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
    return a.filename().string() < b.filename().string();
  });
  std::vector<RawDocument> docs;
  docs.reserve(files.size());
  for (const auto& file : files) {
    docs.push_back({file.filename().string(), read_file(file), "", ""});
  }
  return docs;
}

std::vector<RawDocument> read_jsonl_feed(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open feed file: " + path.string());
  std::vector<RawDocument> docs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw IoError("feed file " + path.string() + ", line " + std::to_string(lineno) +
                    ": " + e.what());
    }
    if (!record.is_object()) {
      throw IoError("feed file " + path.string() + ", line " + std::to_string(lineno) +
                    ": record is not a JSON object");
    }
    auto field = [&](const char* name) -> std::string {
      auto it = record.find(name);
      if (it == record.end() || !it->is_string()) return {};
      return it->get<std::string>();
    };
    RawDocument doc;
    char id[32];
    std::snprintf(id, sizeof(id), "feed-%06zu", lineno);
    doc.id = id;
    doc.text = field("title") + " " + field("description") + " " + field("content");
    doc.link = field("link");
    doc.date = field("date");
    docs.push_back(std::move(doc));
  }
  return docs;
}

void save_db_json(const TransactionDatabase& db, const std::filesystem::path& path) {
  json doc;
  doc["format"] = "artm-db";
  doc["version"] = 1;
  doc["n_docs"] = db.doc_count();
  doc["vocabulary"] = {
      {"terms", db.vocabulary().terms},
      {"occurrences", db.vocabulary().occurrences},
      {"doc_frequency", db.vocabulary().doc_frequency},
  };
  json weights = json::array();
  for (std::size_t i = 0; i < db.doc_count(); ++i) {
    for (const WeightEntry& e : db.row(i)) {
      weights.push_back(json::array({i, e.term, e.weight}));
    }
  }
  doc["weights"] = std::move(weights);
  write_file(path, doc.dump(1) + "\n");
}

TransactionDatabase load_db_json(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw IoError("cannot parse database file " + path.string() + ": " + e.what());
  }
  try {
    if (doc.value("format", "") != "artm-db") {
      throw IoError("not a transaction-database file (missing format tag)");
    }
    TransactionDatabase db;
    db.n_docs_ = doc.at("n_docs").get<std::size_t>();
    if (db.n_docs_ == 0) throw IoError("database has no documents");
    const json& vocab = doc.at("vocabulary");
    db.vocab_.terms = vocab.at("terms").get<std::vector<std::string>>();
    db.vocab_.occurrences = vocab.at("occurrences").get<std::vector<std::int64_t>>();
    db.vocab_.doc_frequency = vocab.at("doc_frequency").get<std::vector<std::int64_t>>();
    const std::size_t m = db.vocab_.terms.size();
    if (db.vocab_.occurrences.size() != m || db.vocab_.doc_frequency.size() != m) {
      throw IoError("vocabulary arrays have mismatched lengths");
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (db.vocab_.doc_frequency[j] < 1 ||
          db.vocab_.doc_frequency[j] > static_cast<std::int64_t>(db.n_docs_) ||
          db.vocab_.occurrences[j] < db.vocab_.doc_frequency[j]) {
        throw IoError("vocabulary counts violate invariants at term " + std::to_string(j));
      }
    }
    db.vocab_.rebuild_index();
    db.rows_.resize(db.n_docs_);
    for (const json& triplet : doc.at("weights")) {
      const std::size_t i = triplet.at(0).get<std::size_t>();
      const int j = triplet.at(1).get<int>();
      const double w = triplet.at(2).get<double>();
      if (i >= db.n_docs_ || j < 0 || static_cast<std::size_t>(j) >= m) {
        throw IoError("weight triplet indices out of range");
      }
      if (!(w > 0.0) || !std::isfinite(w)) {
        throw IoError("weight triplets must be finite and strictly positive");
      }
      db.rows_[i].push_back({j, w});
    }
    for (auto& row : db.rows_) {
      std::sort(row.begin(), row.end(),
                [](const WeightEntry& a, const WeightEntry& b) { return a.term < b.term; });
      for (std::size_t e = 1; e < row.size(); ++e) {
        if (row[e - 1].term == row[e].term) throw IoError("duplicate weight triplet");
      }
    }
    db.finalize();
    return db;
  } catch (const json::exception& e) {
    throw IoError("malformed database file " + path.string() + ": " + e.what());
  }
}

std::vector<DisplayRule> to_display_rules(const std::vector<ArchiveEntry>& entries,
                                          const Vocabulary& vocab) {
  std::vector<DisplayRule> out;
  out.reserve(entries.size());
  for (const auto& entry : entries) {
    DisplayRule r;
    for (int t : entry.rule.antecedent) r.antecedent.push_back(vocab.terms[static_cast<std::size_t>(t)]);
    for (int t : entry.rule.consequent) r.consequent.push_back(vocab.terms[static_cast<std::size_t>(t)]);
    r.metrics = entry.metrics;
    out.push_back(std::move(r));
  }
  return out;
}

void write_rules_csv(const std::vector<DisplayRule>& rules,
                     const std::filesystem::path& path) {
  std::string out = "antecedent,consequent,support,confidence,aws_raw,aws_norm,fitness\n";
  for (const auto& r : rules) {
    out += join_terms(r.antecedent) + "," + join_terms(r.consequent) + "," +
           format_double(r.metrics.support) + "," + format_double(r.metrics.confidence) + "," +
           format_double(r.metrics.aws_raw) + "," + format_double(r.metrics.aws_norm) + "," +
           format_double(r.metrics.fitness) + "\n";
  }
  write_file(path, out);
}

void write_rules_json(const std::vector<DisplayRule>& rules,
                      const std::filesystem::path& path) {
  json doc;
  doc["format"] = "artm-rules";
  doc["version"] = 1;
  json list = json::array();
  for (const auto& r : rules) {
    list.push_back({
        {"antecedent", r.antecedent},
        {"consequent", r.consequent},
        {"support", r.metrics.support},
        {"confidence", r.metrics.confidence},
        {"aws_raw", r.metrics.aws_raw},
        {"aws_norm", r.metrics.aws_norm},
        {"fitness", r.metrics.fitness},
    });
  }
  doc["rules"] = std::move(list);
  write_file(path, doc.dump(1) + "\n");
}

namespace {

std::vector<DisplayRule> parse_rules_csv(const std::string& content,
                                         const std::filesystem::path& path) {
  std::vector<DisplayRule> out;
  std::istringstream in(content);
  std::string line;
  bool header = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t pos = line.find(',', start);
      if (pos == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    if (fields.size() != 7) {
      throw IoError("rules file " + path.string() + ", line " + std::to_string(lineno) +
                    ": expected 7 columns");
    }
    DisplayRule r;
    r.antecedent = split_terms(fields[0]);
    r.consequent = split_terms(fields[1]);
    r.metrics.support = std::stod(fields[2]);
    r.metrics.confidence = std::stod(fields[3]);
    r.metrics.aws_raw = std::stod(fields[4]);
    r.metrics.aws_norm = std::stod(fields[5]);
    r.metrics.fitness = std::stod(fields[6]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<DisplayRule> parse_rules_json(const std::string& content,
                                          const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(content);
  } catch (const json::exception& e) {
    throw IoError("cannot parse rules file " + path.string() + ": " + e.what());
  }
  try {
    if (doc.value("format", "") != "artm-rules") {
      throw IoError("not a rules file (missing format tag)");
    }
    std::vector<DisplayRule> out;
    for (const json& item : doc.at("rules")) {
      DisplayRule r;
      r.antecedent = item.at("antecedent").get<std::vector<std::string>>();
      r.consequent = item.at("consequent").get<std::vector<std::string>>();
      r.metrics.support = item.at("support").get<double>();
      r.metrics.confidence = item.at("confidence").get<double>();
      r.metrics.aws_raw = item.at("aws_raw").get<double>();
      r.metrics.aws_norm = item.at("aws_norm").get<double>();
      r.metrics.fitness = item.at("fitness").get<double>();
      out.push_back(std::move(r));
    }
    return out;
  } catch (const json::exception& e) {
    throw IoError("malformed rules file " + path.string() + ": " + e.what());
  }
}

}  // namespace

std::vector<DisplayRule> read_rules(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  const std::size_t first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    return parse_rules_json(content, path);
  }
  return parse_rules_csv(content, path);
}

void write_history_csv(const std::vector<std::vector<double>>& histories,
                       const std::filesystem::path& path) {
  std::string out = "run,generation,best_fitness\n";
  for (std::size_t r = 0; r < histories.size(); ++r) {
    for (std::size_t g = 0; g < histories[r].size(); ++g) {
      out += std::to_string(r) + "," + std::to_string(g) + "," +
             format_double(histories[r][g]) + "\n";
    }
  }
  write_file(path, out);
}

}  // namespace artm
