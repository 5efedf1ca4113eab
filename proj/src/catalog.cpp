#include "brauerion/catalog.hpp"

#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "brauerion/error.hpp"
#include "brauerion/group_io.hpp"
#include "brauerion/numtheory.hpp"

namespace brauerion {

namespace {

using Rule = std::function<int(int, int)>;

void check_cap(long long n, std::size_t cap) {
  if (n < 1) throw Error(ErrorCode::BadSpec, "group order must be positive");
  if (static_cast<unsigned long long>(n) > cap)
    throw Error(ErrorCode::TooLarge, "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

FiniteGroup from_rule(long long n, const Rule& mul, std::string label, std::size_t cap) {
  check_cap(n, cap);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = mul(a, b);
  return FiniteGroup::from_multiplication_table(table, std::move(label), cap);
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

FiniteGroup cyclic(long long n, std::size_t cap) {
  return from_rule(n, [n](int a, int b) { return static_cast<int>((a + b) % n); }, "", cap);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  const long long n = static_cast<long long>(a.order()) * b.order();
  const int nb = b.order();
  return from_rule(
      n, [&](int x, int y) { return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb); }, "", cap);
}

FiniteGroup semidirect(long long m, long long n, long long k, std::size_t cap) {
  if (m < 1 || n < 1) throw Error(ErrorCode::BadSpec, "semidirect needs positive m and n");
  if (mod_pow(mod(k, m), n, m) != 1 % m)
    throw Error(ErrorCode::BadSpec, "k^n is not 1 mod m for semidirect " + std::to_string(m) + " " +
                                        std::to_string(n) + " " + std::to_string(k));
  check_cap(m * n, cap);
  std::vector<long long> kpow(n);
  for (long long j = 0; j < n; ++j) kpow[j] = mod_pow(mod(k, m), j, m);
  // (a1, b1)(a2, b2) = (a1 + k^b1 a2, b1 + b2), element (a, b) at a*n + b.
  return from_rule(
      m * n,
      [&](int x, int y) {
        long long a1 = x / n, b1 = x % n, a2 = y / n, b2 = y % n;
        return static_cast<int>(mod(a1 + kpow[b1] * a2, m) * n + (b1 + b2) % n);
      },
      "", cap);
}

FiniteGroup dicyclic(long long order, std::size_t cap) {
  if (order < 4 || order % 4 != 0) throw Error(ErrorCode::BadSpec, "quaternion order must be a multiple of 4");
  const long long k = order / 4, n2 = 2 * k;
  // a^i x^j at 2i + j, with a^(2k) = 1, x^2 = a^k, x a x^-1 = a^-1.
  return from_rule(
      order,
      [&](int u, int v) {
        long long i = u / 2, j = u % 2, m = v / 2, l = v % 2;
        if (j == 0) return static_cast<int>(mod(i + m, n2) * 2 + l);
        if (l == 0) return static_cast<int>(mod(i - m, n2) * 2 + 1);
        return static_cast<int>(mod(i - m + k, n2) * 2);
      },
      "", cap);
}

FiniteGroup heisenberg(long long p, std::size_t cap) {
  if (!is_prime(p) || p == 2) throw Error(ErrorCode::BadSpec, "heisenberg needs an odd prime");
  check_cap(p * p * p, cap);
  // (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')
  return from_rule(
      p * p * p,
      [p](int x, int y) {
        long long a1 = x / (p * p), b1 = x / p % p, c1 = x % p;
        long long a2 = y / (p * p), b2 = y / p % p, c2 = y % p;
        return static_cast<int>(((a1 + a2) % p * p + (b1 + b2) % p) * p + (c1 + c2 + a1 * b2) % p);
      },
      "", cap);
}

FiniteGroup permutation_group(int degree, const std::vector<Permutation>& gens, std::size_t cap) {
  if (gens.empty()) return cyclic(1, cap);
  return FiniteGroup::from_permutation_generators(degree, gens, "", cap);
}

FiniteGroup symmetric(long long n, bool alternating, std::size_t cap) {
  if (n < 1 || n > 5) throw Error(ErrorCode::BadSpec, "symmetric and alternating groups need 1 <= n <= 5");
  const int d = static_cast<int>(n);
  std::vector<Permutation> gens;
  auto identity = [d] {
    Permutation p(d);
    for (int i = 0; i < d; ++i) p[i] = i;
    return p;
  };
  if (alternating) {
    for (int i = 2; i < d; ++i) {
      Permutation p = identity();
      p[0] = 1, p[1] = i, p[i] = 0;
      gens.push_back(p);
    }
  } else if (d >= 2) {
    Permutation t = identity(), c(d);
    std::swap(t[0], t[1]);
    for (int i = 0; i < d; ++i) c[i] = (i + 1) % d;
    gens = {t, c};
  }
  return permutation_group(d, gens, cap);
}

// Matrices over F_3 acting on the 8 nonzero column vectors of F_3^2.
FiniteGroup matrix_group_23(bool special, std::size_t cap) {
  std::vector<std::array<int, 2>> vectors;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vectors.push_back({x, y});
  auto index_of = [&](int x, int y) {
    for (int i = 0; i < 8; ++i)
      if (vectors[i][0] == x && vectors[i][1] == y) return i;
    return -1;
  };
  std::vector<Permutation> gens;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          int det = mod(a * d - b * c, 3);
          if (det == 0 || (special && det != 1)) continue;
          Permutation p(8);
          for (int i = 0; i < 8; ++i) {
            auto [x, y] = vectors[i];
            p[i] = index_of((a * x + b * y) % 3, (c * x + d * y) % 3);
          }
          gens.push_back(p);
        }
  return permutation_group(8, gens, cap);
}

// --- expression parser ---

const std::map<std::string, std::string>& short_names() {
  static const std::map<std::string, std::string> names = {
      {"C", "cyclic"}, {"S", "symmetric"}, {"A", "alternating"}, {"D", "dihedral"}, {"Q", "quaternion"}};
  return names;
}

const std::set<std::string>& constructor_names() {
  static const std::set<std::string> names = {"cyclic",     "abelian", "dihedral",   "quaternion",
                                              "symmetric",  "alternating", "SL23",  "GL23",
                                              "heisenberg", "extraspecial_minus", "semidirect", "product"};
  return names;
}

std::vector<std::string> tokenize(std::string text) {
  for (auto [from, to] : {std::pair{"SL(2,3)", "SL23"}, std::pair{"GL(2,3)", "GL23"}}) {
    for (std::size_t at; (at = text.find(from)) != std::string::npos;) text.replace(at, std::string(from).size(), to);
  }
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = text[i];
    if (std::isspace(c)) {
      ++i;
    } else if (std::string("()[],").find(c) != std::string::npos) {
      out.emplace_back(1, static_cast<char>(c));
      ++i;
    } else if (std::isalnum(c) || c == '_' || c == '-') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '-'))
        ++j;
      std::string word = text.substr(i, j - i);
      i = j;
      // `cyclic5`, `C5`, `S3`: a name glued to its numeric argument.
      std::size_t k = word.size();
      while (k > 0 && std::isdigit(static_cast<unsigned char>(word[k - 1]))) --k;
      std::string head = word.substr(0, k), digits = word.substr(k);
      if (!digits.empty() && !head.empty() && word != "SL23" && word != "GL23") {
        if (auto it = short_names().find(head); it != short_names().end()) head = it->second;
        if (constructor_names().count(head)) {
          out.push_back(head);
          out.push_back(digits);
          continue;
        }
      }
      out.push_back(word);
    } else {
      throw Error(ErrorCode::BadSpec, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::vector<std::string> tokens, std::size_t cap) : tokens_(std::move(tokens)), cap_(cap) {}

  FiniteGroup parse_all() {
    FiniteGroup g = expression();
    if (pos_ != tokens_.size()) throw Error(ErrorCode::BadSpec, "unexpected '" + tokens_[pos_] + "'");
    return g;
  }

 private:
  const std::string& next() {
    if (pos_ >= tokens_.size()) throw Error(ErrorCode::BadSpec, "expression ends too early");
    return tokens_[pos_++];
  }
  void expect(const std::string& t) {
    if (next() != t) throw Error(ErrorCode::BadSpec, "expected '" + t + "'");
  }
  long long number() {
    const std::string& t = next();
    if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Error(ErrorCode::BadSpec, "expected a number, got '" + t + "'");
    return std::stoll(t);
  }

  FiniteGroup expression() {
    std::string name = next();
    if (name == "(") {
      FiniteGroup g = expression();
      expect(")");
      return g;
    }
    if (auto it = short_names().find(name); it != short_names().end()) name = it->second;
    if (name == "cyclic") return cyclic(number(), cap_);
    if (name == "abelian") {
      expect("[");
      FiniteGroup g = cyclic(number(), cap_);
      for (std::string t = next(); t != "]"; t = next()) {
        if (t != ",") throw Error(ErrorCode::BadSpec, "expected ',' or ']'");
        g = direct_product(g, cyclic(number(), cap_), cap_);
      }
      return g;
    }
    if (name == "dihedral") {
      long long n = number();
      if (n < 2 || n % 2 != 0) throw Error(ErrorCode::BadSpec, "dihedral order must be even");
      return semidirect(n / 2, 2, -1, cap_);
    }
    if (name == "quaternion") return dicyclic(number(), cap_);
    if (name == "symmetric") return symmetric(number(), false, cap_);
    if (name == "alternating") return symmetric(number(), true, cap_);
    if (name == "SL23") return matrix_group_23(true, cap_);
    if (name == "GL23") return matrix_group_23(false, cap_);
    if (name == "heisenberg") return heisenberg(number(), cap_);
    if (name == "extraspecial_minus") {
      long long p = number();
      if (!is_prime(p) || p == 2) throw Error(ErrorCode::BadSpec, "extraspecial_minus needs an odd prime");
      return semidirect(p * p, p, 1 + p, cap_);
    }
    if (name == "semidirect") {
      long long m = number(), n = number(), k = number();
      return semidirect(m, n, k, cap_);
    }
    if (name == "product") {
      FiniteGroup a = expression();
      FiniteGroup b = expression();
      return direct_product(a, b, cap_);
    }
    throw Error(ErrorCode::BadSpec, "unknown constructor '" + name + "'");
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  std::size_t cap_;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n"), e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

FiniteGroup construct(const std::string& spec, std::size_t cap) {
  std::string label = trim(spec);
  if (label.empty()) throw Error(ErrorCode::BadSpec, "empty group expression");
  FiniteGroup g = Parser(tokenize(label), cap).parse_all();
  g.set_label(label);
  return g;
}

CorpusManifest default_corpus() {
  CorpusManifest m;
  auto add = [&](std::string spec, int order) { m.entries.push_back({spec, spec, false, order, order % 2 == 1}); };

  // Abelian groups of order <= 32, one per list of invariant factors
  // n1 | n2 | ... with product n.
  std::function<void(int, int, std::vector<int>&, std::vector<std::vector<int>>&)> chains =
      [&](int rest, int prev, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
        if (rest == 1) {
          out.push_back(acc);
          return;
        }
        for (int d = prev; d <= rest; d += prev) {
          if (d < 2 || rest % d != 0) continue;
          acc.push_back(d);
          chains(rest / d, d, acc, out);
          acc.pop_back();
        }
      };
  for (int n = 1; n <= 32; ++n) {
    std::vector<std::vector<int>> lists;
    std::vector<int> acc;
    chains(n, 1, acc, lists);
    for (const auto& f : lists) {
      if (f.size() <= 1) {
        add("cyclic " + std::to_string(n), n);
      } else {
        std::string spec = "abelian [";
        for (std::size_t i = 0; i < f.size(); ++i) spec += (i ? "," : "") + std::to_string(f[i]);
        add(spec + "]", n);
      }
    }
  }
  add("S3", 6);
  add("D8", 8);
  add("Q8", 8);
  add("A4", 12);
  add("S4", 24);
  add("SL23", 24);
  add("GL23", 48);
  add("semidirect 7 3 2", 21);
  add("heisenberg 3", 27);
  add("extraspecial_minus 3", 27);
  add("semidirect 9 3 4", 27);
  add("semidirect 13 3 3", 39);
  add("heisenberg 5", 125);
  add("product (heisenberg 3) (cyclic 5)", 135);
  return m;
}

CorpusManifest parse_manifest(std::istream& in, const std::string& base_dir) {
  CorpusManifest m;
  std::set<std::string> labels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    CorpusEntry e;
    std::size_t at;
    if ((at = line.find(":=")) != std::string::npos) {
      e.label = trim(line.substr(0, at));
      e.source = trim(line.substr(at + 2));
    } else if ((at = line.find('@')) != std::string::npos) {
      e.label = trim(line.substr(0, at));
      std::filesystem::path path = trim(line.substr(at + 1));
      if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
      e.source = path.string();
      e.from_file = true;
    } else {
      throw Error(ErrorCode::ParseError, "manifest line " + std::to_string(lineno) + ": expected ':=' or '@'");
    }
    if (e.label.empty() || e.source.empty())
      throw Error(ErrorCode::ParseError, "manifest line " + std::to_string(lineno) + ": empty label or source");
    if (!labels.insert(e.label).second)
      throw Error(ErrorCode::ParseError, "manifest line " + std::to_string(lineno) + ": duplicate label " + e.label);
    m.entries.push_back(std::move(e));
  }
  return m;
}

CorpusManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open manifest " + path);
  return parse_manifest(in, std::filesystem::path(path).parent_path().string());
}

FiniteGroup build_entry(const CorpusEntry& entry) {
  FiniteGroup g = [&] {
    if (!entry.from_file) return construct(entry.source);
    auto groups = load_group_file(entry.source);
    if (groups.size() != 1) throw Error(ErrorCode::BadSpec, entry.source + " must hold exactly one group");
    return std::move(groups.front());
  }();
  if (entry.expected_order && g.order() != entry.expected_order)
    throw Error(ErrorCode::BadSpec, entry.label + " has order " + std::to_string(g.order()) + ", expected " +
                                        std::to_string(entry.expected_order));
  g.set_label(entry.label);
  return g;
}

FiniteGroup load_group_argument(const std::string& text) {
  const bool is_path = text.find('/') != std::string::npos ||
                       (text.size() > 4 && text.compare(text.size() - 4, 4, ".grp") == 0);
  if (!is_path) return construct(text);
  auto groups = load_group_file(text);
  if (groups.size() != 1) throw Error(ErrorCode::BadSpec, text + " must hold exactly one group");
  return std::move(groups.front());
}

}  // namespace brauerion
