#include "brauerion/induct.hpp"

#include <algorithm>

#include "brauerion/error.hpp"

namespace brauerion {

namespace {

void check_fits(const GroupContext& g, const ClassFunction& f) {
  if (f.values.size() != g.p_regular(f.prime).size())
    throw Error(ErrorCode::DimensionMismatch, "class function has " + std::to_string(f.values.size()) +
                                                  " values, " + g.label() + " needs " +
                                                  std::to_string(g.p_regular(f.prime).size()));
}

}  // namespace

ClassFunction induce(const GroupContext& h, const ClassFunction& theta, const GroupContext& g) {
  check_fits(h, theta);
  const auto fusion = h.class_fusion_into(g);
  const int p = theta.prime;
  const auto& h_reg = h.p_regular(p);
  const auto& g_reg = g.p_regular(p);

  // theta extended by zero to G, summed over each class of G.
  std::vector<Cyclotomic> class_sums(g.classes().class_count, Cyclotomic(g.conductor()));
  for (std::size_t i = 0; i < h_reg.size(); ++i) {
    const int c = h_reg[i];
    class_sums[fusion[c]] += theta.values[i].scale(Rational(h.classes().size[c]));
  }

  ClassFunction out;
  out.prime = p;
  out.values.reserve(g_reg.size());
  for (int c : g_reg)
    out.values.push_back(class_sums[c].scale(Rational(Integer(g.order()), Integer(h.order()) * g.classes().size[c])));
  return out;
}

ClassFunction induce(const GroupContext& g, const SubgroupRecord& h, const ClassFunction& theta) {
  return induce(*g.subgroup(h), theta, g);
}

ClassFunction restrict(const GroupContext& g, const ClassFunction& phi, const GroupContext& k) {
  check_fits(g, phi);
  const auto fusion = k.class_fusion_into(g);
  const int p = phi.prime;
  const auto& g_pos = g.p_regular_position(p);
  ClassFunction out;
  out.prime = p;
  for (int c : k.p_regular(p)) out.values.push_back(phi.values[g_pos[fusion[c]]]);
  return out;
}

ClassFunction restrict(const GroupContext& g, const ClassFunction& phi, const SubgroupRecord& k) {
  return restrict(g, phi, *g.subgroup(k));
}

Rational inner_product(const GroupContext& g, const ClassFunction& a, const ClassFunction& b) {
  if (a.prime != 0 || b.prime != 0)
    throw Error(ErrorCode::PrimeMismatch, "inner products are defined here for ordinary class functions only");
  check_fits(g, a);
  check_fits(g, b);
  Cyclotomic sum(g.conductor());
  for (int c = 0; c < g.classes().class_count; ++c)
    sum += (a.values[c] * b.values[c].conj()).scale(Rational(g.classes().size[c]));
  auto r = sum.rational_part();
  if (!r) throw Error(ErrorCode::NonRationalResult, "inner product " + sum.to_string() + " is not rational");
  return *r / g.order();
}

bool is_irreducible(const GroupContext& g, const ClassFunction& psi) {
  if (psi.prime == 0) {
    auto d = psi.values.at(0).rational_part();
    return d && *d > 0 && inner_product(g, psi, psi) == 1;
  }
  const auto& rows = g.ibr(psi.prime).rows;
  return std::find(rows.begin(), rows.end(), psi) != rows.end();
}

InducedDecomposition mackey_decompose(const GroupContext& g, const SubgroupRecord& h, const ClassFunction& phi,
                                      const SubgroupRecord& k) {
  const FiniteGroup& G = g.group();
  if (!is_subgroup(G, h.members) || !is_subgroup(G, k.members))
    throw Error(ErrorCode::NotSubgroup, "Mackey decomposition needs two subgroups of " + g.label());
  auto kctx = g.subgroup(k);

  InducedDecomposition out;
  out.left = restrict(g, induce(g, h, phi), *kctx);
  out.right.prime = phi.prime;
  out.right.values.assign(out.left.values.size(), Cyclotomic(g.conductor()));
  for (Element t : double_coset_reps(G, h, k)) {
    auto conj = conjugate_brauer(g, h, phi, t);
    auto ht = g.subgroup(conj.subgroup);
    auto meet = g.subgroup(intersect(conj.subgroup.members, k.members));
    auto summand = induce(*meet, restrict(*ht, conj.character, *meet), *kctx);
    for (std::size_t i = 0; i < summand.values.size(); ++i) out.right.values[i] += summand.values[i];
    out.summands.push_back({t, std::move(summand)});
  }
  out.left_irreducible = is_irreducible(*kctx, out.left);
  out.product = is_product(G, h, k);
  return out;
}

}  // namespace brauerion
