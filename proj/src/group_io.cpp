#include "brauerion/group_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "brauerion/error.hpp"

namespace brauerion {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

int parse_count(const std::string& word, const std::string& text, int line) {
  std::istringstream ls(text);
  std::string keyword;
  long long value = -1;
  std::string extra;
  if (!(ls >> keyword >> value) || keyword != word || value < 0 || (ls >> extra))
    parse_error(line, "expected `" + word + " <n>`, got `" + text + "`");
  return static_cast<int>(value);
}

}  // namespace

std::vector<FiniteGroup> parse_group_file(std::istream& in, std::size_t cap) {
  std::vector<FiniteGroup> groups;
  std::set<std::string> labels;
  std::string raw;
  int line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, raw)) {
      ++line_no;
      out = trim(raw);
      return true;
    }
    return false;
  };

  std::string line;
  while (next_line(line)) {
    if (line.empty()) continue;
    if (line.rfind("group ", 0) != 0) parse_error(line_no, "expected `group <label>`, got `" + line + "`");
    std::string label = trim(line.substr(6));
    if (label.empty()) parse_error(line_no, "empty group label");
    if (!labels.insert(label).second) parse_error(line_no, "duplicate label `" + label + "`");

    if (!next_line(line)) parse_error(line_no, "missing body for group `" + label + "`");
    if (line.rfind("perm", 0) == 0) {
      int degree = parse_count("perm", line, line_no);
      std::vector<Permutation> gens;
      bool closed = false;
      while (next_line(line)) {
        if (line == "end") {
          closed = true;
          break;
        }
        if (line.empty()) continue;
        gens.push_back(parse_cycles(line, degree));
      }
      if (!closed) parse_error(line_no, "missing `end` for group `" + label + "`");
      groups.push_back(FiniteGroup::from_permutation_generators(degree, gens, label, cap));
    } else if (line.rfind("table", 0) == 0) {
      int n = parse_count("table", line, line_no);
      if (static_cast<std::size_t>(n) > cap)
        throw Error(ErrorCode::TooLarge, "table side " + std::to_string(n) + " exceeds order cap");
      std::vector<std::vector<int>> table;
      for (int i = 0; i < n; ++i) {
        if (!next_line(line)) parse_error(line_no, "table ended early");
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
          std::size_t used = 0;
          int v = 0;
          try {
            v = std::stoi(tok, &used);
          } catch (const std::exception&) {
            parse_error(line_no, "bad table entry `" + tok + "`");
          }
          if (used != tok.size()) parse_error(line_no, "bad table entry `" + tok + "`");
          row.push_back(v);
        }
        if (static_cast<int>(row.size()) != n) parse_error(line_no, "table row has wrong length");
        table.push_back(std::move(row));
      }
      if (!next_line(line) || line != "end") parse_error(line_no, "expected `end` after table");
      groups.push_back(FiniteGroup::from_multiplication_table(table, label, cap));
    } else {
      parse_error(line_no, "expected `perm <degree>` or `table <n>`");
    }
  }
  return groups;
}

std::vector<FiniteGroup> load_group_file(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return parse_group_file(in, cap);
}

void write_group_table(std::ostream& out, const FiniteGroup& group) {
  out << "group " << group.label() << '\n' << "table " << group.order() << '\n';
  for (int i = 0; i < group.order(); ++i) {
    for (int j = 0; j < group.order(); ++j) out << (j ? " " : "") << group.mul(i, j);
    out << '\n';
  }
  out << "end\n";
}

}  // namespace brauerion
