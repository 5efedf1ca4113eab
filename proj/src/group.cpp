#include "brauerion/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "brauerion/error.hpp"

namespace brauerion {

namespace {

// Tables at most this large are checked for associativity on every triple;
// larger ones use Light's test over a generating set.
constexpr int kExhaustiveAssociativityLimit = 200;

[[noreturn]] void not_a_group(const std::string& why) { throw Error(ErrorCode::NotAGroup, why); }

}  // namespace

std::size_t order_cap() {
  if (const char* env = std::getenv("BRAUERION_ORDER_CAP")) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), value);
    if (ec == std::errc() && *ptr == '\0' && value > 0) return value;
  }
  return kDefaultOrderCap;
}

FiniteGroup FiniteGroup::from_multiplication_table(const std::vector<std::vector<int>>& table,
                                                   std::string label, std::size_t cap) {
  const std::size_t n = table.size();
  if (n == 0) not_a_group("empty table");
  if (n > cap)
    throw Error(ErrorCode::TooLarge, "table side " + std::to_string(n) + " exceeds order cap " +
                                         std::to_string(cap));
  const int order = static_cast<int>(n);

  FiniteGroup g;
  g.order_ = order;
  g.label_ = std::move(label);
  g.mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) not_a_group("row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= order) not_a_group("entry out of range at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
      g.mul_[i * n + j] = v;
    }
  }

  // Latin square: every row and column is a permutation.
  std::vector<int> seen(n, -1);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      int v = g.mul(i, j);
      if (seen[v] == i) not_a_group("row " + std::to_string(i) + " is not a permutation");
      seen[v] = i;
    }
  }
  std::fill(seen.begin(), seen.end(), -1);
  for (int j = 0; j < order; ++j) {
    for (int i = 0; i < order; ++i) {
      int v = g.mul(i, j);
      if (seen[v] == j) not_a_group("column " + std::to_string(j) + " is not a permutation");
      seen[v] = j;
    }
  }

  int identity = -1;
  for (int e = 0; e < order && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) identity = e;
  }
  if (identity < 0) not_a_group("no identity element");
  g.identity_ = identity;

  g.inv_.assign(n, -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      if (g.mul(x, y) == identity) {
        if (g.mul(y, x) != identity) not_a_group("element " + std::to_string(x) + " has no two-sided inverse");
        g.inv_[x] = y;
        break;
      }
    }
  }

  auto report = [](int a, int b, int c) {
    not_a_group("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(c) + ")");
  };
  if (order <= kExhaustiveAssociativityLimit) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) {
        int ab = g.mul(a, b);
        for (int c = 0; c < order; ++c)
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) report(a, b, c);
      }
  } else {
    // Light's test: elements a with (xa)y = x(ay) for all x, y form a
    // submagma, so it suffices to check a generating set.
    std::vector<int> gens;
    std::vector<char> reached(n, 0);
    std::size_t reached_count = 0;
    while (reached_count < n) {
      int next = static_cast<int>(std::find(reached.begin(), reached.end(), 0) - reached.begin());
      gens.push_back(next);
      std::fill(reached.begin(), reached.end(), 0);
      std::vector<int> frontier(gens.begin(), gens.end());
      reached_count = 0;
      for (int s : gens)
        if (!reached[s]) reached[s] = 1, ++reached_count;
      while (!frontier.empty()) {
        std::vector<int> next_frontier;
        for (int s : frontier)
          for (int t : gens) {
            int st = g.mul(s, t);
            if (!reached[st]) {
              reached[st] = 1;
              ++reached_count;
              next_frontier.push_back(st);
            }
          }
        frontier.swap(next_frontier);
      }
    }
    for (int a : gens)
      for (int x = 0; x < order; ++x) {
        int xa = g.mul(x, a);
        for (int y = 0; y < order; ++y)
          if (g.mul(xa, y) != g.mul(x, g.mul(a, y))) report(x, a, y);
      }
  }

  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_permutation_generators(int degree, const std::vector<Permutation>& gens,
                                                     std::string label, std::size_t cap) {
  if (degree < 0) throw Error(ErrorCode::BadSpec, "negative degree");
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree) throw Error(ErrorCode::BadSpec, "generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (int x : p) {
      if (x < 0 || x >= degree || hit[x]) throw Error(ErrorCode::BadSpec, "generator is not a bijection");
      hit[x] = 1;
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elements{id};
  std::map<Permutation, int> index{{id, 0}};
  auto compose = [degree](const Permutation& x, const Permutation& y) {
    Permutation r(degree);
    for (int i = 0; i < degree; ++i) r[i] = y[x[i]];
    return r;
  };
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : gens) {
      Permutation next = compose(elements[head], s);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(next));
        if (elements.size() > cap)
          throw Error(ErrorCode::TooLarge, "permutation closure exceeds order cap " + std::to_string(cap));
      }
    }
  }

  const std::size_t n = elements.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = index.at(compose(elements[i], elements[j]));

  FiniteGroup g = from_multiplication_table(table, std::move(label), cap);
  std::ostringstream origin;
  origin << "perm " << degree;
  for (const auto& s : gens) origin << ' ' << format_cycles(s);
  g.origin_ = origin.str();
  g.perms_ = std::move(elements);
  return g;
}

FiniteGroup FiniteGroup::subgroup_of(const FiniteGroup& parent, std::span<const Element> members,
                                     std::string label) {
  const int n = static_cast<int>(members.size());
  std::vector<int> local(parent.order(), -1);
  for (int i = 0; i < n; ++i) local[members[i]] = i;
  FiniteGroup g;
  g.order_ = n;
  g.label_ = std::move(label);
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.mul_[static_cast<std::size_t>(i) * n + j] = local[parent.mul(members[i], members[j])];
  g.identity_ = local[parent.identity()];
  g.inv_.resize(n);
  for (int i = 0; i < n; ++i) g.inv_[i] = local[parent.inv(members[i])];
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  element_order_.assign(order_, 0);
  exponent_ = 1;
  for (int x = 0; x < order_; ++x) {
    int k = 1;
    for (Element y = x; y != identity_; y = mul(y, x)) ++k;
    element_order_[x] = k;
    exponent_ = std::lcm(exponent_, k);
  }
}

Element FiniteGroup::power(Element x, long long k) const {
  int o = element_order_[x];
  k %= o;
  if (k < 0) k += o;
  Element r = identity_;
  for (long long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) t[i][j] = mul(i, j);
  return t;
}

ConjugacyClassData conjugacy_classes(const FiniteGroup& group) {
  const int n = group.order();
  ConjugacyClassData data;
  data.class_of.assign(n, -1);
  data.exponent = group.exponent();

  auto add_class = [&](Element start) {
    int id = data.class_count++;
    std::vector<Element> orbit;
    for (Element g = 0; g < n; ++g) {
      Element y = group.conjugate(start, g);
      if (data.class_of[y] < 0) {
        data.class_of[y] = id;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    data.rep.push_back(orbit.front());
    data.size.push_back(static_cast<int>(orbit.size()));
    data.rep_order.push_back(group.element_order(orbit.front()));
    data.members.push_back(std::move(orbit));
  };
  add_class(group.identity());
  for (Element x = 0; x < n; ++x)
    if (data.class_of[x] < 0) add_class(x);

  data.power_class.assign(data.class_count, std::vector<int>(data.exponent));
  for (int i = 0; i < data.class_count; ++i) {
    Element x = group.identity();
    for (int j = 0; j < data.exponent; ++j) {
      data.power_class[i][j] = data.class_of[x];
      x = group.mul(x, data.rep[i]);
    }
  }
  return data;
}

std::vector<int> p_regular_classes(const FiniteGroup&, const ConjugacyClassData& classes, int p) {
  std::vector<int> out;
  for (int i = 0; i < classes.class_count; ++i)
    if (p <= 1 || classes.rep_order[i] % p != 0) out.push_back(i);
  return out;
}

Permutation parse_cycles(const std::string& text, int degree) {
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> used(degree, 0);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error(ErrorCode::ParseError, "expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw Error(ErrorCode::ParseError, "unterminated cycle: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc()) throw Error(ErrorCode::ParseError, "bad point in cycle: " + text);
      pos = static_cast<std::size_t>(ptr - text.data());
      if (value < 1 || value > degree)
        throw Error(ErrorCode::ParseError, "point " + std::to_string(value) + " outside degree " +
                                               std::to_string(degree));
      if (used[value - 1]) throw Error(ErrorCode::ParseError, "cycles are not disjoint: " + text);
      used[value - 1] = 1;
      cycle.push_back(value - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return perm;
}

std::string format_cycles(const Permutation& perm) {
  std::string out;
  std::vector<char> done(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(perm[x]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace brauerion
