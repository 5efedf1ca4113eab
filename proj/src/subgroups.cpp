#include "brauerion/subgroups.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_set>

#include "brauerion/error.hpp"
#include "brauerion/numtheory.hpp"

namespace brauerion {

namespace {

struct MembersHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = v.size();
    for (Element x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::vector<char> membership(int order, std::span<const Element> members) {
  std::vector<char> in(order, 0);
  for (Element x : members) in[x] = 1;
  return in;
}

// Invariant factors of a finite abelian group of the given order, where
// power_order_test(p, p^k) counts the elements killed by p^k.
std::vector<int> invariant_factors(int group_order, const std::function<int(int, int)>& power_order_test) {
  // Per prime p, collect the exponents a_i of the cyclic p-factors.
  std::vector<std::vector<int>> factors_per_prime;
  std::vector<int> primes = prime_divisors(group_order);
  std::size_t width = 0;
  for (int p : primes) {
    // count(k) = #{x : x^(p^k) = 1} = p^(sum_i min(k, a_i))
    std::vector<int> log_counts{0};
    long long pk = 1;
    for (;;) {
      pk *= p;
      int count = power_order_test(p, static_cast<int>(pk));
      int lg = 0;
      for (int c = count; c > 1; c /= p) ++lg;
      if (lg == log_counts.back()) break;
      log_counts.push_back(lg);
    }
    // r_k = log_counts[k] - log_counts[k-1] = #{i : a_i >= k}
    std::vector<int> exps;
    const int top = static_cast<int>(log_counts.size()) - 1;
    for (int k = top; k >= 1; --k) {
      int r_k = log_counts[k] - log_counts[k - 1];
      int r_next = k < top ? log_counts[k + 1] - log_counts[k] : 0;
      for (int i = 0; i < r_k - r_next; ++i) exps.push_back(k);
    }
    width = std::max(width, exps.size());
    factors_per_prime.push_back(exps);  // descending
  }
  std::vector<int> result(width, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const auto& exps = factors_per_prime[pi];
    for (std::size_t i = 0; i < exps.size(); ++i) {
      int q = 1;
      for (int k = 0; k < exps[i]; ++k) q *= primes[pi];
      result[width - 1 - i] *= q;
    }
  }
  return result;  // ascending: n1 | n2 | ...
}

}  // namespace

bool SubgroupRecord::contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }

std::vector<Element> subgroup_closure(const FiniteGroup& group, std::span<const Element> gens) {
  std::vector<char> in(group.order(), 0);
  std::vector<Element> members{group.identity()};
  in[group.identity()] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Element s : gens) {
      Element y = group.mul(members[head], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

int normalizer_order(const FiniteGroup& group, std::span<const Element> members) {
  auto in = membership(group.order(), members);
  int count = 0;
  for (Element g = 0; g < group.order(); ++g) {
    bool ok = true;
    for (Element h : members)
      if (!in[group.conjugate(h, g)]) {
        ok = false;
        break;
      }
    count += ok;
  }
  return count;
}

SubgroupRecord make_subgroup(const FiniteGroup& group, std::vector<Element> gens) {
  SubgroupRecord rec;
  rec.members = subgroup_closure(group, gens);
  rec.order = static_cast<int>(rec.members.size());
  rec.generators = std::move(gens);
  rec.normalizer_order = normalizer_order(group, rec.members);
  return rec;
}

bool is_subgroup(const FiniteGroup& group, std::span<const Element> members) {
  if (members.empty()) return false;
  auto in = membership(group.order(), members);
  if (!in[group.identity()]) return false;
  for (Element a : members)
    for (Element b : members)
      if (!in[group.mul(a, b)]) return false;
  return true;
}

SubgroupRecord subgroup_from_members(const FiniteGroup& group, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_subgroup(group, members)) throw Error(ErrorCode::NotSubgroup, "member set is not closed");
  // A generating set: add elements greedily until the closure is everything.
  std::vector<Element> gens;
  std::vector<Element> span{group.identity()};
  for (Element x : members) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = subgroup_closure(group, gens);
  }
  SubgroupRecord rec;
  rec.order = static_cast<int>(members.size());
  rec.members = std::move(members);
  rec.generators = std::move(gens);
  rec.normalizer_order = normalizer_order(group, rec.members);
  return rec;
}

SubgroupRecord whole_group(const FiniteGroup& group) {
  std::vector<Element> all(group.order());
  std::iota(all.begin(), all.end(), 0);
  return subgroup_from_members(group, std::move(all));
}

SubgroupRecord trivial_subgroup(const FiniteGroup& group) {
  SubgroupRecord rec;
  rec.members = {group.identity()};
  rec.order = 1;
  rec.normalizer_order = group.order();
  return rec;
}

bool is_normal(const FiniteGroup& group, std::span<const Element> members) {
  return normalizer_order(group, members) == group.order();
}

std::vector<Element> conjugate_members(const FiniteGroup& group, std::span<const Element> members, Element g) {
  std::vector<Element> out;
  out.reserve(members.size());
  for (Element h : members) out.push_back(group.conjugate(h, g));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> intersect(std::span<const Element> a, std::span<const Element> b) {
  std::vector<Element> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

std::vector<SubgroupRecord> derived_series(const FiniteGroup& group) {
  std::vector<SubgroupRecord> series;
  SubgroupRecord current = whole_group(group);
  for (;;) {
    const std::size_t m = current.members.size();
    std::vector<Element> commutators;
    std::vector<char> seen(group.order(), 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        Element c = group.commutator(current.members[i], current.members[j]);
        if (!seen[c]) {
          seen[c] = 1;
          commutators.push_back(c);
        }
      }
    SubgroupRecord next = make_subgroup(group, commutators);
    series.push_back(std::move(current));
    if (next.order == series.back().order) break;
    current = std::move(next);
  }
  return series;
}

}  // namespace

SolvabilityData solvability_data(const FiniteGroup& group) {
  SolvabilityData data;
  data.derived_series = derived_series(group);
  data.is_solvable = data.derived_series.back().order == 1;

  // Abelianization: the quotient by the first derived subgroup.
  const int n = group.order();
  const SubgroupRecord& derived = data.derived_series.size() > 1 ? data.derived_series[1] : data.derived_series[0];
  std::vector<int> coset(n, -1);
  std::vector<Element> coset_rep;
  for (Element x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(x);
    for (Element h : derived.members) coset[group.mul(x, h)] = id;
  }
  const int m = static_cast<int>(coset_rep.size());
  auto qmul = [&](int a, int b) { return coset[group.mul(coset_rep[a], coset_rep[b])]; };
  const int qid = coset[group.identity()];
  auto qpow = [&](int a, long long k) {
    int r = qid;
    for (long long i = 0; i < k; ++i) r = qmul(r, a);
    return r;
  };
  std::vector<int> qorder(m);
  for (int a = 0; a < m; ++a) {
    int k = 1;
    for (int y = a; y != qid; y = qmul(y, a)) ++k;
    qorder[a] = k;
  }
  if (m == 1) {
    data.quotient_map.assign(n, {});
    return data;
  }
  auto count_killed = [&](int, int pk) {
    int c = 0;
    for (int a = 0; a < m; ++a) c += (pk % qorder[a] == 0);
    return c;
  };
  data.abelianization = invariant_factors(m, count_killed);

  // Find a basis a_1..a_s with ord(a_i) = n_i and <a_1..a_s> direct.
  const auto& inv = data.abelianization;
  const int s = static_cast<int>(inv.size());
  std::vector<int> basis(s, -1);
  std::function<bool(int, std::vector<char>&, int)> choose = [&](int level, std::vector<char>& span,
                                                                  int span_size) -> bool {
    if (level < 0) return true;
    for (int a = 0; a < m; ++a) {
      if (qorder[a] != inv[level] || span[a]) continue;
      // New span = span * <a>; direct iff its size is span_size * n_level.
      std::vector<char> next(m, 0);
      int size = 0;
      bool direct = true;
      for (int x = 0; x < m && direct; ++x) {
        if (!span[x]) continue;
        int y = x;
        for (int k = 0; k < inv[level]; ++k) {
          if (next[y]) {
            direct = false;
            break;
          }
          next[y] = 1;
          ++size;
          y = qmul(y, a);
        }
      }
      if (!direct || size != span_size * inv[level]) continue;
      basis[level] = a;
      if (choose(level - 1, next, size)) return true;
    }
    return false;
  };
  std::vector<char> span(m, 0);
  span[qid] = 1;
  if (!choose(s - 1, span, 1))
    throw Error(ErrorCode::InternalInconsistency, "no basis found for the abelianization");

  std::vector<std::vector<int>> coords(m);
  std::vector<int> tuple(s, 0);
  for (;;) {
    int y = qid;
    for (int i = 0; i < s; ++i) y = qmul(y, qpow(basis[i], tuple[i]));
    coords[y] = tuple;
    int i = 0;
    while (i < s && ++tuple[i] == inv[i]) tuple[i++] = 0;
    if (i == s) break;
  }
  data.quotient_map.resize(n);
  for (Element x = 0; x < n; ++x) data.quotient_map[x] = coords[coset[x]];
  return data;
}

std::vector<SubgroupRecord> subgroup_classes(const FiniteGroup& group, std::size_t budget) {
  const int n = group.order();
  std::vector<Element> prime_power_elements;
  for (Element x = 0; x < n; ++x)
    if (x != group.identity() && prime_divisors(group.element_order(x)).size() == 1)
      prime_power_elements.push_back(x);

  std::unordered_set<std::vector<Element>, MembersHash> known;
  std::vector<SubgroupRecord> classes;
  std::size_t formed = 0;

  // Registers a new class unless some conjugate is already known. Returns
  // the index of the new class, or -1.
  auto add_class = [&](std::vector<Element> members, std::vector<Element> gens) -> int {
    if (known.count(members)) return -1;
    std::vector<Element> best = members;
    Element best_g = group.identity();
    std::unordered_set<std::vector<Element>, MembersHash> conjugates;
    for (Element g = 0; g < n; ++g) {
      auto c = conjugate_members(group, members, g);
      if (c < best) {
        best = c;
        best_g = g;
      }
      conjugates.insert(std::move(c));
    }
    for (const auto& c : conjugates) known.insert(c);
    SubgroupRecord rec;
    rec.order = static_cast<int>(best.size());
    rec.members = std::move(best);
    for (Element x : gens) rec.generators.push_back(group.conjugate(x, best_g));
    rec.normalizer_order = n / static_cast<int>(conjugates.size());
    classes.push_back(std::move(rec));
    return static_cast<int>(classes.size()) - 1;
  };

  std::vector<int> layer;
  layer.push_back(add_class({group.identity()}, {}));
  // Perfect subgroups are not reached by cyclic extension; the perfect
  // residuum and the whole group are seeded directly.
  {
    auto series = derived_series(group);
    for (const auto& term : {series.back(), series.front()}) {
      int id = add_class(term.members, term.generators);
      if (id >= 0) layer.push_back(id);
    }
  }

  while (!layer.empty()) {
    std::vector<int> next_layer;
    for (int id : layer) {
      const std::vector<Element> u = classes[id].members;
      const std::vector<Element> u_gens = classes[id].generators;
      auto in = membership(n, u);
      for (Element z : prime_power_elements) {
        if (in[z]) continue;
        bool normalizes = true;
        for (Element g : u_gens)
          if (!in[group.conjugate(g, z)]) {
            normalizes = false;
            break;
          }
        if (!normalizes) continue;
        if (++formed > budget)
          throw Error(ErrorCode::TooLarge, "subgroup enumeration exceeded budget of " + std::to_string(budget));
        // z normalizes U, so <U, z> = union of the cosets U z^k.
        std::vector<Element> v;
        Element zk = group.identity();
        do {
          for (Element h : u) v.push_back(group.mul(h, zk));
          zk = group.mul(zk, z);
        } while (!in[zk]);
        std::sort(v.begin(), v.end());
        auto gens = u_gens;
        gens.push_back(z);
        int added = add_class(std::move(v), std::move(gens));
        if (added >= 0) next_layer.push_back(added);
      }
    }
    layer.swap(next_layer);
  }

  std::sort(classes.begin(), classes.end(), [](const SubgroupRecord& a, const SubgroupRecord& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members < b.members;
  });
  for (std::size_t i = 0; i < classes.size(); ++i) classes[i].conjugacy_class_id = static_cast<int>(i);
  return classes;
}

NormalStructure normal_structure(const FiniteGroup& group, const std::vector<SubgroupRecord>& classes) {
  NormalStructure out;
  for (const auto& rec : classes)
    if (rec.normalizer_order == group.order()) out.normal_subgroups.push_back(rec);
  for (const auto& n : out.normal_subgroups) {
    if (n.order == group.order()) continue;
    bool maximal = true;
    for (const auto& m : out.normal_subgroups) {
      if (m.order <= n.order || m.order == group.order()) continue;
      if (std::includes(m.members.begin(), m.members.end(), n.members.begin(), n.members.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.maximal_normal.push_back(n);
  }
  return out;
}

std::vector<Element> double_coset_reps(const FiniteGroup& group, const SubgroupRecord& h, const SubgroupRecord& k) {
  std::vector<char> covered(group.order(), 0);
  std::vector<Element> reps;
  auto mark = [&](Element t) {
    reps.push_back(t);
    for (Element a : h.members) {
      Element at = group.mul(a, t);
      for (Element b : k.members) covered[group.mul(at, b)] = 1;
    }
  };
  mark(group.identity());
  for (Element t = 0; t < group.order(); ++t)
    if (!covered[t]) mark(t);
  return reps;
}

bool is_product(const FiniteGroup& group, const SubgroupRecord& h, const SubgroupRecord& k) {
  const long long meet = static_cast<long long>(intersect(h.members, k.members).size());
  return static_cast<long long>(h.order) * k.order == meet * group.order();
}

}  // namespace brauerion
