#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "artm/io.hpp"
#include "artm/miner.hpp"

namespace {

// Exit codes: 0 ok, 1 I/O failure, 2 empty corpus, 3 invalid configuration.
constexpr int kExitIo = 1;
constexpr int kExitEmptyCorpus = 2;
constexpr int kExitBadConfig = 3;

struct MineFlags {
  std::string db_path;
  std::string out_path = "rules.csv";
  std::string format = "csv";
  std::string history_out;
  std::string dump_dir;
  std::string k_range;
  std::string config_path;
  artm::MinerConfig config;
  std::string aws_mode = "normalized";
};

void add_miner_options(CLI::App* cmd, MineFlags& flags) {
  cmd->add_option("--np", flags.config.pso.np, "Swarm population size");
  cmd->add_option("--c1", flags.config.pso.c1, "Social weight (attraction to global best)");
  cmd->add_option("--c2", flags.config.pso.c2, "Cognitive weight (attraction to personal best)");
  cmd->add_option("--inertia", flags.config.pso.inertia, "Velocity retention factor");
  cmd->add_option("--nfes", flags.config.pso.n_fes, "Fitness evaluation budget per run");
  cmd->add_option("--runs", flags.config.num_runs, "Independent runs");
  cmd->add_option("--seed", flags.config.pso.seed, "Base RNG seed (run r uses seed+r)");
  cmd->add_option("--alpha", flags.config.weights.alpha, "Support weight in the fitness");
  cmd->add_option("--beta", flags.config.weights.beta, "Confidence weight in the fitness");
  cmd->add_option("--gamma", flags.config.weights.gamma, "AWS weight in the fitness");
  cmd->add_option("--smin", flags.config.thresholds.s_min, "Minimum support");
  cmd->add_option("--cmin", flags.config.thresholds.c_min, "Minimum confidence");
  cmd->add_option("--aws-mode", flags.aws_mode, "AWS term in the fitness: normalized|raw")
      ->check(CLI::IsMember({"normalized", "raw"}));
  cmd->add_option("--config", flags.config_path,
                  "Key-value config file; command-line flags take precedence");
}

// Applies `key = value` lines from the config file to every option the user
// did not pass on the command line.
void merge_config_file(const CLI::App* cmd, MineFlags& flags) {
  if (flags.config_path.empty()) return;
  std::ifstream in(flags.config_path);
  if (!in) throw artm::IoError("cannot open config file: " + flags.config_path);

  auto flag_given = [&](const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string{};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config file line " + std::to_string(lineno) +
                                  ": expected key=value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (flag_given("--" + key)) continue;
    try {
      if (key == "np") {
        flags.config.pso.np = std::stoi(value);
      } else if (key == "c1") {
        flags.config.pso.c1 = std::stod(value);
      } else if (key == "c2") {
        flags.config.pso.c2 = std::stod(value);
      } else if (key == "inertia") {
        flags.config.pso.inertia = std::stod(value);
      } else if (key == "nfes") {
        flags.config.pso.n_fes = std::stoll(value);
      } else if (key == "runs") {
        flags.config.num_runs = std::stoi(value);
      } else if (key == "seed") {
        flags.config.pso.seed = std::stoull(value);
      } else if (key == "k") {
        flags.config.k = std::stoi(value);
      } else if (key == "alpha") {
        flags.config.weights.alpha = std::stod(value);
      } else if (key == "beta") {
        flags.config.weights.beta = std::stod(value);
      } else if (key == "gamma") {
        flags.config.weights.gamma = std::stod(value);
      } else if (key == "smin") {
        flags.config.thresholds.s_min = std::stod(value);
      } else if (key == "cmin") {
        flags.config.thresholds.c_min = std::stod(value);
      } else if (key == "aws-mode") {
        if (value != "normalized" && value != "raw") throw std::invalid_argument(value);
        flags.aws_mode = value;
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("config file line " + std::to_string(lineno) +
                                  ": cannot parse '" + key + " = " + value + "'");
    }
  }
}

void apply_aws_mode(MineFlags& flags) {
  flags.config.aws_mode =
      flags.aws_mode == "raw" ? artm::AwsMode::raw : artm::AwsMode::normalized;
}

std::string fixed3(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", v);
  return buffer;
}

void print_stats_table(const std::vector<int>& ks,
                       const std::vector<artm::RunStatistics>& stats) {
  const char* row_labels[3] = {"No. Rules", "Avg Ant.", "Avg Cons."};
  std::vector<std::vector<std::string>> cells(4);
  cells[0].push_back("K");
  for (int k : ks) cells[0].push_back(std::to_string(k));
  for (int row = 0; row < 3; ++row) {
    cells[row + 1].push_back(row_labels[row]);
    for (const auto& s : stats) {
      if (row == 0) {
        cells[row + 1].push_back(std::to_string(s.rule_count));
      } else if (row == 1) {
        cells[row + 1].push_back(fixed3(s.avg_antecedent_len));
      } else {
        cells[row + 1].push_back(fixed3(s.avg_consequent_len));
      }
    }
  }
  std::vector<std::size_t> widths(cells[0].size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line.append(widths[c] - row[c].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
}

std::vector<int> parse_k_range(const std::string& range) {
  const std::size_t colon = range.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("--k-range expects LO:HI, got '" + range + "'");
  }
  int lo = 0;
  int hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoi(range.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(range);
    hi = std::stoi(range.substr(colon + 1), &used);
    if (used != range.size() - colon - 1) throw std::invalid_argument(range);
  } catch (const std::exception&) {
    throw std::invalid_argument("--k-range expects LO:HI with integers, got '" + range + "'");
  }
  if (lo < 2 || hi < lo) {
    throw std::invalid_argument("--k-range requires 2 <= LO <= HI, got '" + range + "'");
  }
  std::vector<int> ks;
  for (int k = lo; k <= hi; ++k) ks.push_back(k);
  return ks;
}

void write_rules(const artm::MiningResult& result, const artm::Vocabulary& vocab,
                 const std::string& format, const std::filesystem::path& out) {
  auto display = artm::to_display_rules(result.archive.ranked(), vocab);
  if (format == "json") {
    artm::write_rules_json(display, out);
  } else {
    artm::write_rules_csv(display, out);
  }
}

int cmd_ingest(const std::string& corpus_path, const std::string& stopwords_path,
               std::size_t v_max, const std::string& out_path) {
  artm::StopWordList stops = stopwords_path.empty()
                                 ? artm::StopWordList::defaults()
                                 : artm::StopWordList::from_file(stopwords_path);
  std::vector<artm::RawDocument> raw;
  if (std::filesystem::is_directory(corpus_path)) {
    raw = artm::read_text_directory(corpus_path);
  } else if (std::filesystem::exists(corpus_path)) {
    raw = artm::read_jsonl_feed(corpus_path);
  } else {
    throw artm::IoError("corpus path does not exist: " + corpus_path);
  }
  auto docs = artm::prepare_corpus(raw, stops);
  auto vocab = artm::build_vocabulary(docs, v_max);
  std::vector<std::string> dropped;
  auto db = artm::build_transaction_db(docs, vocab, &dropped);
  artm::save_db_json(db, out_path);
  for (const auto& id : dropped) {
    std::cerr << "warning: dropped document empty after preprocessing: " << id << "\n";
  }
  std::cerr << "ingested N=" << db.doc_count() << " documents, M=" << db.term_count()
            << " terms, dropped=" << dropped.size() << "\n";
  return 0;
}

int cmd_mine(const CLI::App* cmd, MineFlags& flags) {
  merge_config_file(cmd, flags);
  apply_aws_mode(flags);
  flags.config.pso.dim = flags.config.k + 1;
  flags.config.validate();
  auto db = artm::load_db_json(flags.db_path);
  auto result = artm::mine(db, flags.config);

  if (flags.format == "table") {
    auto display = artm::to_display_rules(result.archive.ranked(), db.vocabulary());
    for (std::size_t i = 0; i < display.size(); ++i) {
      std::string ant;
      for (std::size_t t = 0; t < display[i].antecedent.size(); ++t) {
        if (t) ant += " ∧ ";
        ant += display[i].antecedent[t];
      }
      std::string cons;
      for (std::size_t t = 0; t < display[i].consequent.size(); ++t) {
        if (t) cons += " ∧ ";
        cons += display[i].consequent[t];
      }
      std::cout << (i + 1) << "  " << ant << " | " << cons
                << "  (fitness " << fixed3(display[i].metrics.fitness) << ")\n";
    }
  } else {
    write_rules(result, db.vocabulary(), flags.format, flags.out_path);
  }
  if (!flags.history_out.empty()) artm::write_history_csv(result.histories, flags.history_out);

  if (result.archive.size() == 0) {
    std::cerr << "warning: no rules found (thresholds too strict?)\n";
  }
  print_stats_table({flags.config.k}, {result.stats});
  return 0;
}

int cmd_sweep(const CLI::App* cmd, MineFlags& flags) {
  merge_config_file(cmd, flags);
  apply_aws_mode(flags);
  const std::vector<int> ks = parse_k_range(flags.k_range);
  flags.config.pso.dim = flags.config.k + 1;
  flags.config.validate();
  auto db = artm::load_db_json(flags.db_path);
  auto results = artm::sweep(db, flags.config, ks);

  std::vector<artm::RunStatistics> stats;
  for (const auto& r : results) stats.push_back(r.stats);
  print_stats_table(ks, stats);

  if (!flags.dump_dir.empty()) {
    std::filesystem::create_directories(flags.dump_dir);
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto out = std::filesystem::path(flags.dump_dir) /
                       ("rules_k" + std::to_string(ks[i]) +
                        (flags.format == "json" ? ".json" : ".csv"));
      write_rules(results[i], db.vocabulary(), flags.format, out);
    }
  }
  return 0;
}

int cmd_top_terms(const std::string& db_path, std::size_t k, const std::string& format,
                  const std::string& out_path) {
  auto db = artm::load_db_json(db_path);
  auto terms = artm::top_terms(db.vocabulary(), k);
  std::string text;
  if (format == "csv") {
    text = "term,count\n";
    for (const auto& [term, count] : terms) {
      text += term + "," + std::to_string(count) + "\n";
    }
  } else {
    std::size_t width = 4;
    for (const auto& [term, count] : terms) width = std::max(width, term.size());
    for (const auto& [term, count] : terms) {
      text += term;
      text.append(width - term.size() + 2, ' ');
      text += std::to_string(count) + "\n";
    }
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw artm::IoError("cannot open file for writing: " + out_path);
    out << text;
  }
  return 0;
}

int cmd_show(const std::string& rules_path, std::size_t top_n) {
  auto rules = artm::read_rules(rules_path);
  std::cout << "Rule  Antecedent | Consequence\n";
  const std::size_t n = std::min(top_n, rules.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::string ant;
    for (std::size_t t = 0; t < rules[i].antecedent.size(); ++t) {
      if (t) ant += " ∧ ";
      ant += rules[i].antecedent[t];
    }
    std::string cons;
    for (std::size_t t = 0; t < rules[i].consequent.size(); ++t) {
      if (t) cons += " ∧ ";
      cons += rules[i].consequent[t];
    }
    char num[16];
    std::snprintf(num, sizeof(num), "%-5zu", i + 1);
    std::cout << num << " " << ant << " | " << cons << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"artm - association rule text mining over TF-ITF weighted corpora"};
  app.require_subcommand(1);

  // ingest
  std::string corpus_path;
  std::string stopwords_path;
  std::string ingest_out = "db.json";
  std::size_t v_max = 1000;
  auto* ingest = app.add_subcommand(
      "ingest", "Build a transaction database from a corpus directory or JSONL feed");
  ingest->add_option("corpus", corpus_path, "Directory of .txt files or a JSON-lines feed")
      ->required();
  ingest->add_option("--stopwords", stopwords_path, "Stop-word file (one word per line)");
  ingest->add_option("--vmax", v_max, "Vocabulary cap (most frequent terms kept)");
  ingest->add_option("--out", ingest_out, "Output database path");

  // mine
  MineFlags mine_flags;
  auto* mine = app.add_subcommand("mine", "Mine association rules from a database");
  mine->add_option("db", mine_flags.db_path, "Transaction database JSON")->required();
  mine->add_option("--k", mine_flags.config.k, "Maximum terms per rule (k >= 2)");
  mine->add_option("--out", mine_flags.out_path, "Rules output path");
  mine->add_option("--format", mine_flags.format, "Output format: csv|json|table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  mine->add_option("--history-out", mine_flags.history_out,
                   "Write per-run convergence histories to this CSV");
  add_miner_options(mine, mine_flags);

  // sweep
  MineFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Mine once per k in a range and tabulate");
  sweep->add_option("db", sweep_flags.db_path, "Transaction database JSON")->required();
  sweep->add_option("--k-range", sweep_flags.k_range, "Range LO:HI, e.g. 5:8")->required();
  sweep->add_option("--dump-dir", sweep_flags.dump_dir, "Write per-k rule files here");
  sweep->add_option("--format", sweep_flags.format, "Dump format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  add_miner_options(sweep, sweep_flags);

  // top-terms
  std::string top_db;
  std::size_t top_k = 15;
  std::string top_format = "table";
  std::string top_out;
  auto* top = app.add_subcommand("top-terms", "Most frequent vocabulary terms");
  top->add_option("db", top_db, "Transaction database JSON")->required();
  top->add_option("-k,--top", top_k, "Number of terms to list");
  top->add_option("--format", top_format, "Output format: table|csv")
      ->check(CLI::IsMember({"table", "csv"}));
  top->add_option("--out", top_out, "Write to file instead of stdout");

  // show
  std::string show_path;
  std::size_t show_top = 10;
  auto* show = app.add_subcommand("show", "Render a mined rules file");
  show->add_option("rules", show_path, "Rules file (CSV or JSON)")->required();
  show->add_option("--top", show_top, "Number of rules to display");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadConfig;
  }

  try {
    if (*ingest) return cmd_ingest(corpus_path, stopwords_path, v_max, ingest_out);
    if (*mine) return cmd_mine(mine, mine_flags);
    if (*sweep) return cmd_sweep(sweep, sweep_flags);
    if (*top) {
      if (top_k == 0) throw std::invalid_argument("top-terms: k must be at least 1");
      return cmd_top_terms(top_db, top_k, top_format, top_out);
    }
    if (*show) return cmd_show(show_path, show_top);
  } catch (const artm::EmptyCorpusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEmptyCorpus;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const artm::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
