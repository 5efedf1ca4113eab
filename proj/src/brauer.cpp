#include "brauerion/brauer.hpp"

#include <algorithm>
#include <numeric>

#include "brauerion/context.hpp"
#include "brauerion/error.hpp"
#include "brauerion/linalg.hpp"

namespace brauerion {

namespace {

void append_coordinates(std::vector<Rational>& out, const ClassFunction& f) {
  for (const auto& v : f.values) {
    auto c = v.coordinates();
    out.insert(out.end(), c.begin(), c.end());
  }
}

std::vector<Rational> flat_coordinates(const ClassFunction& f) {
  std::vector<Rational> out;
  append_coordinates(out, f);
  return out;
}

// Columns are the given basis functions.
RationalMatrix column_matrix(const std::vector<ClassFunction>& basis) {
  if (basis.empty()) return {};
  std::vector<std::vector<Rational>> cols;
  for (const auto& f : basis) cols.push_back(flat_coordinates(f));
  RationalMatrix a(cols[0].size(), std::vector<Rational>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) a[i][j] = cols[j][i];
  return a;
}

bool is_natural(const Rational& r) { return r >= 0 && boost::multiprecision::denominator(r) == 1; }

}  // namespace

BrauerCharacter restrict_to_p_regular(const Character& chi, const std::vector<int>& p_regular, int p) {
  BrauerCharacter out;
  out.prime = p;
  out.values.reserve(p_regular.size());
  for (int c : p_regular) out.values.push_back(chi.values[c]);
  return out;
}

BrauerTable extract_ibr(const CharacterTable& table, const std::vector<int>& p_regular, int p) {
  std::vector<int> order(table.rows.size());
  std::iota(order.begin(), order.end(), 0);
  return extract_ibr(table, p_regular, p, order);
}

BrauerTable extract_ibr(const CharacterTable& table, const std::vector<int>& p_regular, int p,
                        const std::vector<int>& order) {
  BrauerTable out;
  out.prime = p;
  out.p_regular = p_regular;
  const std::size_t wanted = p_regular.size();
  std::vector<BrauerCharacter> seen;
  for (int r : order) {
    if (out.rows.size() == wanted) break;
    BrauerCharacter phi = restrict_to_p_regular(table.rows[r], p_regular, p);
    if (std::find(seen.begin(), seen.end(), phi) != seen.end()) continue;
    seen.push_back(phi);
    bool decomposes = false;
    if (!out.rows.empty()) {
      auto x = solve_rational(column_matrix(out.rows), flat_coordinates(phi));
      decomposes = x && std::all_of(x->begin(), x->end(), is_natural);
    }
    if (!decomposes) {
      out.rows.push_back(std::move(phi));
      out.lift_of.push_back(r);
    }
  }
  if (out.rows.size() != wanted)
    throw Error(ErrorCode::InternalInconsistency,
                "found " + std::to_string(out.rows.size()) + " irreducible Brauer characters for " +
                    std::to_string(wanted) + " p-regular classes");
  return out;
}

const BrauerTable& ibr(const GroupContext& group, int p) { return group.ibr(p); }

Character find_lift(const GroupContext& group, const BrauerCharacter& phi) {
  const auto& reg = group.p_regular(phi.prime);
  for (const auto& chi : group.table().rows)
    if (restrict_to_p_regular(chi, reg, phi.prime).values == phi.values) return chi;
  throw Error(ErrorCode::NoLift, "no ordinary irreducible of " + group.label() + " restricts to the given character");
}

std::vector<BrauerCharacter> linear_brauer_characters(const GroupContext& h, int p) {
  std::vector<BrauerCharacter> out;
  const auto& reg = h.p_regular(p);
  for (const auto& chi : h.table().rows) {
    if (!chi.is_linear()) continue;
    auto phi = restrict_to_p_regular(chi, reg, p);
    if (std::find(out.begin(), out.end(), phi) == out.end()) out.push_back(std::move(phi));
  }
  return out;
}

std::vector<Rational> decompose_in_ibr(const ClassFunction& psi, const BrauerTable& table) {
  if (psi.values.size() != table.p_regular.size())
    throw Error(ErrorCode::DimensionMismatch, std::to_string(psi.values.size()) + " values for " +
                                                  std::to_string(table.p_regular.size()) + " p-regular classes");
  auto x = solve_rational(column_matrix(table.rows), flat_coordinates(psi));
  if (!x) throw Error(ErrorCode::InternalInconsistency, "class function outside the span of IBr");
  return *x;
}

ConjugatedCharacter conjugate_brauer(const GroupContext& group, const SubgroupRecord& m, const ClassFunction& phi,
                                     Element g) {
  const FiniteGroup& G = group.group();
  auto mctx = group.subgroup(m);
  auto conj_members = conjugate_members(G, m.members, g);
  auto mgctx = group.subgroup(conj_members);
  const int p = phi.prime;
  const auto& m_pos = mctx->p_regular_position(p);
  const auto& mg_reg = mgctx->p_regular(p);

  ClassFunction out;
  out.prime = p;
  out.values.reserve(mg_reg.size());
  const Element g_inv = G.inv(g);
  for (int c : mg_reg) {
    Element y = group.from_top(mgctx->to_top(mgctx->classes().rep[c]));
    Element x = G.mul(G.mul(g, y), g_inv);
    int mc = mctx->classes().class_of[mctx->from_top(group.to_top(x))];
    out.values.push_back(phi.values[m_pos[mc]]);
  }
  return {subgroup_from_members(G, std::move(conj_members)), std::move(out)};
}

SubgroupRecord inertia_group(const GroupContext& group, const SubgroupRecord& m, const ClassFunction& theta) {
  const FiniteGroup& G = group.group();
  if (!is_normal(G, m.members)) throw Error(ErrorCode::NotNormal, "subgroup is not normal in " + group.label());
  auto mctx = group.subgroup(m);
  const auto& reg = mctx->p_regular(theta.prime);
  const auto& pos = mctx->p_regular_position(theta.prime);
  std::vector<Element> members;
  for (Element g = 0; g < G.order(); ++g) {
    const Element g_inv = G.inv(g);
    bool fixed = true;
    for (std::size_t i = 0; i < reg.size() && fixed; ++i) {
      Element y = group.from_top(mctx->to_top(mctx->classes().rep[reg[i]]));
      Element x = G.mul(G.mul(g, y), g_inv);
      int mc = mctx->classes().class_of[mctx->from_top(group.to_top(x))];
      fixed = theta.values[pos[mc]] == theta.values[i];
    }
    if (fixed) members.push_back(g);
  }
  return subgroup_from_members(G, std::move(members));
}

}  // namespace brauerion
