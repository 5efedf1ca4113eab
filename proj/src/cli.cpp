#include "brauerion/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "brauerion/brauer.hpp"
#include "brauerion/catalog.hpp"
#include "brauerion/context.hpp"
#include "brauerion/error.hpp"
#include "brauerion/monomial.hpp"
#include "brauerion/numtheory.hpp"
#include "brauerion/verify.hpp"

namespace brauerion {

namespace {

std::string join(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

// `--json` with no value sends JSON to stdout in place of the text output.
struct JsonTarget {
  CLI::Option* option = nullptr;
  std::string path;

  bool requested() const { return option && option->count() > 0; }
  bool to_stdout() const { return requested() && path.empty(); }
  void write(const nlohmann::json& doc, std::ostream& out) const {
    if (!requested()) return;
    if (path.empty()) {
      out << doc.dump(2) << "\n";
      return;
    }
    std::ofstream file(path);
    if (!file) throw Error(ErrorCode::BadSpec, "cannot write " + path);
    file << doc.dump(2) << "\n";
  }
};

void add_json(CLI::App* cmd, JsonTarget& target) {
  target.option = cmd->add_option("--json", target.path, "Write a JSON report to this path (stdout if none)")
                      ->expected(0, 1);
}

nlohmann::json class_headers(const GroupContext& g, const std::vector<int>& classes) {
  nlohmann::json out = nlohmann::json::array();
  for (int c : classes)
    out.push_back({{"order", g.classes().rep_order[c]}, {"size", g.classes().size[c]}});
  return out;
}

// Rows of cells, first column left-aligned, the rest right-aligned.
void print_grid(std::ostream& out, const std::vector<std::vector<std::string>>& grid) {
  std::vector<std::size_t> width;
  for (const auto& row : grid)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (width.size() <= j) width.push_back(0);
      width[j] = std::max(width[j], row[j].size());
    }
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j == 0)
        line += row[j] + std::string(width[0] - row[j].size(), ' ');
      else
        line += "  " + std::string(width[j] - row[j].size(), ' ') + row[j];
    }
    out << line << "\n";
  }
}

std::vector<std::string> header_row(const GroupContext& g, const std::vector<int>& classes, const std::string& first) {
  std::vector<std::string> row = {first};
  for (int c : classes)
    row.push_back("[" + std::to_string(g.classes().rep_order[c]) + "|" + std::to_string(g.classes().size[c]) + "]");
  return row;
}

int cmd_table(const std::string& spec, const JsonTarget& json, std::ostream& out) {
  auto g = GroupContext::create(load_group_argument(spec));
  const auto& t = g->table();
  const auto& all = g->p_regular(0);
  if (json.requested()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) rows.push_back(r.printed());
    json.write({{"group", g->label()}, {"exponent", t.exponent}, {"classes", class_headers(*g, all)}, {"rows", rows}},
               out);
    if (json.to_stdout()) return 0;
  }
  out << "group " << g->label() << ", order " << g->order() << ", exponent " << t.exponent << "\n";
  std::vector<std::vector<std::string>> grid = {header_row(*g, all, "")};
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    auto row = t.rows[i].printed();
    row.insert(row.begin(), "X." + std::to_string(i));
    grid.push_back(std::move(row));
  }
  print_grid(out, grid);
  return 0;
}

int cmd_ibr(const std::string& spec, int p, const JsonTarget& json, std::ostream& out) {
  if (!is_prime(p)) throw Error(ErrorCode::BadSpec, std::to_string(p) + " is not a prime");
  auto g = GroupContext::create(load_group_argument(spec));
  const auto& t = g->ibr(p);
  if (json.requested()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) rows.push_back(r.printed());
    json.write({{"group", g->label()},
                {"p", p},
                {"exponent", g->table().exponent},
                {"classes", class_headers(*g, t.p_regular)},
                {"rows", rows},
                {"lift", t.lift_of}},
               out);
    if (json.to_stdout()) return 0;
  }
  out << "group " << g->label() << ", order " << g->order() << ", p = " << p << "\n";
  auto header = header_row(*g, t.p_regular, "");
  header.push_back("lift");
  std::vector<std::vector<std::string>> grid = {header};
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    auto row = t.rows[i].printed();
    row.insert(row.begin(), "phi." + std::to_string(i));
    row.push_back("X." + std::to_string(t.lift_of[i]));
    grid.push_back(std::move(row));
  }
  print_grid(out, grid);
  return 0;
}

int cmd_classify(const std::string& spec, std::optional<int> p, const JsonTarget& json, std::ostream& out) {
  auto g = GroupContext::create(load_group_argument(spec));
  auto report = classify(*g, p);
  json.write(report.to_json(), out);
  if (!json.to_stdout()) out << report.to_text();
  return report.assertions_hold() ? 0 : 1;
}

int emit_run(const RunReport& report, const JsonTarget& json, std::ostream& out, std::ostream& err) {
  json.write(report.to_json(!json.to_stdout()), out);
  if (!json.to_stdout()) out << report.to_text();
  err << std::fixed << std::setprecision(2) << report.command << ": " << report.seconds << " s\n";
  return report.ok() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ordinary and Brauer character tables and monomiality tests for small finite groups"};
  app.require_subcommand(1);

  std::vector<std::string> group_words;
  int prime = 0;
  JsonTarget table_json, ibr_json, classify_json, verify_json, corpus_json;

  auto* table = app.add_subcommand("table", "Print the ordinary character table");
  table->add_option("group", group_words, "Constructor expression or group file")->required()->expected(1, -1);
  add_json(table, table_json);

  auto* ibr_cmd = app.add_subcommand("ibr", "Print the irreducible Brauer characters");
  ibr_cmd->add_option("group", group_words, "Constructor expression or group file")->required()->expected(1, -1);
  ibr_cmd->add_option("--p", prime, "The prime")->required();
  add_json(ibr_cmd, ibr_json);

  auto* classify_cmd = app.add_subcommand("classify", "Decide M, super M, M_p and super M_p");
  classify_cmd->add_option("group", group_words, "Constructor expression or group file")->required()->expected(1, -1);
  auto* p_opt = classify_cmd->add_option("--p", prime, "Prime for the Brauer flags");
  add_json(classify_cmd, classify_json);

  SuiteOptions suite;
  std::string suite_name;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over the corpus");
  verify->add_option("suite", suite_name, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--corpus", suite.corpus, "Corpus manifest (default: built-in corpus)");
  verify->add_option("--order-cap", suite.order_cap, "Skip groups above this order");
  verify->add_option("--seed", suite.seed, "Seed for randomized checks")->default_val(0);
  verify->add_option("--jobs", suite.jobs, "Groups processed in parallel")->default_val(1);
  add_json(verify, verify_json);

  auto* corpus = app.add_subcommand("corpus", "Corpus operations");
  auto* corpus_run = corpus->add_subcommand("run", "Classify every corpus group for every prime dividing its order");
  corpus->require_subcommand(1);
  corpus_run->add_option("--corpus", suite.corpus, "Corpus manifest (default: built-in corpus)");
  corpus_run->add_option("--order-cap", suite.order_cap, "Skip groups above this order");
  corpus_run->add_option("--jobs", suite.jobs, "Groups classified in parallel")->default_val(1);
  add_json(corpus_run, corpus_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const std::string spec = join(group_words);
    if (*table) return cmd_table(spec, table_json, out);
    if (*ibr_cmd) return cmd_ibr(spec, prime, ibr_json, out);
    if (*classify_cmd) {
      auto p = p_opt->count() ? std::optional<int>(prime) : std::nullopt;
      return cmd_classify(spec, p, classify_json, out);
    }
    if (*verify) return emit_run(run_suite(suite_name, suite), verify_json, out, err);
    if (*corpus_run) return emit_run(run_corpus(suite), corpus_json, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace brauerion
