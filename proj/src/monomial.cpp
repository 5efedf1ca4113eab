#include "brauerion/monomial.hpp"

#include <chrono>
#include <sstream>

#include "brauerion/error.hpp"
#include "brauerion/induct.hpp"
#include "brauerion/numtheory.hpp"

namespace brauerion {

namespace {

long long degree_of(const ClassFunction& f) { return static_cast<long long>(f.degree()); }

// Calls visit(H, row, theta) for each irreducible theta of a subgroup class
// representative H with theta^G = target, proper subgroups only when asked.
// Stops early when visit returns false.
template <class Visit>
void scan_inducers(const GroupContext& g, int p, int target, bool proper_only, Visit visit) {
  const ClassFunction& chi = g.irreducibles(p).at(target);
  const long long d = degree_of(chi);
  for (const auto& h : g.subgroup_classes()) {
    const long long index = g.order() / h.order;
    if (d % index != 0) continue;
    if (index == 1) {
      if (proper_only) continue;
      if (!visit(h, g, target, chi)) return;
      continue;
    }
    auto hctx = g.subgroup(h);
    const auto& rows = hctx->irreducibles(p);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (degree_of(rows[r]) * index != d) continue;
      if (induce(*hctx, rows[r], g) != chi) continue;
      if (!visit(h, *hctx, r, rows[r])) return;
    }
  }
}

InducingPair make_pair(const SubgroupRecord& h, const GroupContext& hctx, int p, int r, const ClassFunction& theta) {
  return {h, r, theta, is_primitive(hctx, p, r)};
}

}  // namespace

std::vector<InducingPair> inducing_pairs(const GroupContext& g, int p, int target) {
  std::vector<InducingPair> out;
  scan_inducers(g, p, target, false,
                [&](const SubgroupRecord& h, const GroupContext& hctx, int r, const ClassFunction& theta) {
                  out.push_back(make_pair(h, hctx, p, r, theta));
                  return true;
                });
  return out;
}

bool is_primitive(const GroupContext& g, int p, int target) {
  auto& memo = g.memo().primitive;
  if (auto it = memo.find({p, target}); it != memo.end()) return it->second;
  bool primitive = true;
  if (!g.irreducibles(p).at(target).is_linear())
    scan_inducers(g, p, target, true, [&](const SubgroupRecord&, const GroupContext&, int, const ClassFunction&) {
      primitive = false;
      return false;
    });
  memo[{p, target}] = primitive;
  return primitive;
}

MonomialVerdict is_monomial(const GroupContext& g, int p, int target) {
  const ClassFunction& chi = g.irreducibles(p).at(target);
  const long long d = degree_of(chi);
  MonomialVerdict out;
  if (d == 1) {
    out.holds = true;
    out.witness = InducingPair{whole_group(g.group()), target, chi, true};
    return out;
  }
  // A linear inducer lives on a subgroup of index exactly d.
  for (const auto& h : g.subgroup_classes()) {
    if (g.order() / h.order != d) continue;
    auto hctx = g.subgroup(h);
    const auto& rows = hctx->irreducibles(p);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (!rows[r].is_linear()) continue;
      if (induce(*hctx, rows[r], g) == chi) {
        out.holds = true;
        out.witness = InducingPair{h, r, rows[r], true};
        return out;
      }
    }
  }
  return out;
}

MonomialVerdict is_super_monomial(const GroupContext& g, int p, int target) {
  MonomialVerdict out;
  out.holds = true;
  scan_inducers(g, p, target, false,
                [&](const SubgroupRecord& h, const GroupContext& hctx, int r, const ClassFunction& theta) {
                  if (theta.is_linear() || !is_primitive(hctx, p, r)) return true;
                  out.holds = false;
                  out.witness = InducingPair{h, r, theta, true};
                  return false;
                });
  return out;
}

bool is_m_group(const GroupContext& g, int p) {
  auto& memo = g.memo().monomial_group;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  bool all = true;
  for (int r = 0; r < static_cast<int>(g.irreducibles(p).size()) && all; ++r) all = is_monomial(g, p, r).holds;
  memo[p] = all;
  return all;
}

bool is_super_m_group(const GroupContext& g, int p) {
  auto& memo = g.memo().super_monomial_group;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  bool all = true;
  for (int r = 0; r < static_cast<int>(g.irreducibles(p).size()) && all; ++r)
    all = is_super_monomial(g, p, r).holds;
  memo[p] = all;
  return all;
}

namespace {

// Flags for one prime (0 = ordinary) with witnesses for the first failing row.
struct FlagPass {
  bool monomial = true;
  bool super_monomial = true;
  bool rows_consistent = true;  // every super-monomial row is monomial
};

FlagPass evaluate_rows(const GroupContext& g, int p, const std::string& suffix,
                       std::vector<ClassificationWitness>& witnesses) {
  FlagPass out;
  const auto& rows = g.irreducibles(p);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    auto mono = is_monomial(g, p, r);
    auto super = is_super_monomial(g, p, r);
    if (super.holds && !mono.holds) out.rows_consistent = false;
    if (!mono.holds && out.monomial) {
      out.monomial = false;
      witnesses.push_back({"M" + suffix, r, rows[r].printed(), std::nullopt, {}});
    }
    if (!super.holds && out.super_monomial) {
      out.super_monomial = false;
      witnesses.push_back(
          {"super_M" + suffix, r, rows[r].printed(), super.witness->subgroup.order, super.witness->character.printed()});
    }
  }
  g.memo().monomial_group[p] = out.monomial;
  g.memo().super_monomial_group[p] = out.super_monomial;
  return out;
}

}  // namespace

ClassificationReport classify(const GroupContext& g, std::optional<int> p) {
  const auto start = std::chrono::steady_clock::now();
  ClassificationReport report;
  report.group = g.label();
  report.p = p;
  report.is_solvable = g.is_solvable();

  auto ordinary = evaluate_rows(g, 0, "", report.witnesses);
  report.is_m = ordinary.monomial;
  report.is_super_m = ordinary.super_monomial;
  report.assertions.push_back({"super_M implies M", !report.is_super_m || report.is_m});
  report.assertions.push_back({"M implies solvable", !report.is_m || report.is_solvable});
  report.assertions.push_back({"super-monomial ordinary rows are monomial", ordinary.rows_consistent});

  if (p) {
    if (!is_prime(*p)) throw Error(ErrorCode::BadSpec, std::to_string(*p) + " is not a prime");
    const std::string suffix = "_" + std::to_string(*p);
    auto brauer = evaluate_rows(g, *p, suffix, report.witnesses);
    report.is_m_p = brauer.monomial;
    report.is_super_m_p = brauer.super_monomial;
    report.assertions.push_back({"super_M" + suffix + " implies M" + suffix, !brauer.super_monomial || brauer.monomial});
    report.assertions.push_back({"M implies M" + suffix, !report.is_m || brauer.monomial});
    report.assertions.push_back({"M" + suffix + " implies solvable", !brauer.monomial || report.is_solvable});
    report.assertions.push_back({"super-monomial Brauer rows are monomial", brauer.rows_consistent});
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool ClassificationReport::assertions_hold() const {
  for (const auto& a : assertions)
    if (!a.holds) return false;
  return true;
}

nlohmann::json ClassificationReport::to_json() const {
  nlohmann::json flags = {{"solvable", is_solvable}, {"M", is_m}, {"super_M", is_super_m}};
  if (p) {
    flags["M_p"] = *is_m_p;
    flags["super_M_p"] = *is_super_m_p;
  }
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : witnesses) {
    nlohmann::json entry = {{"flag", w.flag}, {"row", w.row}, {"character", w.character}};
    if (w.subgroup_order)
      entry["inducer"] = {{"subgroup_order", *w.subgroup_order}, {"character", w.inducer}};
    else
      entry["inducer"] = nullptr;
    ws.push_back(std::move(entry));
  }
  nlohmann::json as = nlohmann::json::array();
  for (const auto& a : assertions) as.push_back({{"name", a.name}, {"holds", a.holds}});
  return {{"group", group}, {"p", p ? nlohmann::json(*p) : nlohmann::json(nullptr)},
          {"flags", std::move(flags)}, {"witnesses", std::move(ws)}, {"assertions", std::move(as)}};
}

namespace {

std::string joined(const std::vector<std::string>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + ")";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string ClassificationReport::to_text() const {
  std::ostringstream os;
  os << "group: " << group << "\n";
  os << "solvable: " << yes_no(is_solvable) << "\n";
  os << "M: " << yes_no(is_m) << "\n";
  os << "super_M: " << yes_no(is_super_m) << "\n";
  if (p) {
    os << "M_" << *p << ": " << yes_no(*is_m_p) << "\n";
    os << "super_M_" << *p << ": " << yes_no(*is_super_m_p) << "\n";
  }
  for (const auto& w : witnesses) {
    os << "witness " << w.flag << ": row " << w.row << " " << joined(w.character);
    if (w.subgroup_order) os << " induced from " << joined(w.inducer) << " on a subgroup of order " << *w.subgroup_order;
    os << "\n";
  }
  for (const auto& a : assertions) os << "assert " << a.name << ": " << (a.holds ? "ok" : "FAILED") << "\n";
  return os.str();
}

TheoremOneCheck theorem1_hypothesis_check(const GroupContext& g, int p) {
  TheoremOneCheck out;
  const auto& rows = g.irreducibles(p);
  bool primitive_linear = true;
  for (int r = 0; r < static_cast<int>(rows.size()) && primitive_linear; ++r)
    if (!rows[r].is_linear() && is_primitive(g, p, r)) primitive_linear = false;
  bool subgroups_m_p = true;
  if (primitive_linear) {
    for (const auto& h : g.subgroup_classes()) {
      if (h.order == g.order()) continue;
      if (!is_m_group(*g.subgroup(h), p)) {
        subgroups_m_p = false;
        break;
      }
    }
  }
  out.hypothesis_i = primitive_linear && subgroups_m_p;
  out.hypothesis_ii = is_super_m_group(g, 0);
  out.conclusion = is_super_m_group(g, p);
  return out;
}

CliffordOutcome clifford_dichotomy(const GroupContext& g, const SubgroupRecord& m, const ClassFunction& theta) {
  const FiniteGroup& G = g.group();
  if (!is_normal(G, m.members)) throw Error(ErrorCode::NotNormal, "subgroup is not normal in " + g.label());
  const int index = G.order() / static_cast<int>(m.members.size());
  if (!is_prime(index)) throw Error(ErrorCode::BadSpec, "normal subgroup of non-prime index " + std::to_string(index));

  CliffordOutcome out{CliffordOutcome::Kind::Extends, inertia_group(g, m, theta), {}};
  auto mctx = g.subgroup(m);
  if (out.inertia.members == m.members) {
    out.kind = CliffordOutcome::Kind::InducesIrreducibly;
    out.character = induce(*mctx, theta, g);
    if (!is_irreducible(g, out.character))
      throw Error(ErrorCode::InternalInconsistency, "character with inertia group M induces reducibly");
    return out;
  }
  if (static_cast<int>(out.inertia.members.size()) != G.order())
    throw Error(ErrorCode::InternalInconsistency, "inertia group strictly between M and G at prime index");
  for (const auto& phi : g.irreducibles(theta.prime)) {
    if (restrict(g, phi, *mctx) == theta) {
      out.character = phi;
      return out;
    }
  }
  throw Error(ErrorCode::NoExtensionFound, "G-invariant character of M has no extension in " + g.label());
}

NormalClosureReport normal_closure_scan(const GroupContext& g, int p) {
  NormalClosureReport out;
  out.applicable = g.order() % 2 == 1 && is_m_group(g, p);
  if (!out.applicable) return out;
  for (const auto& n : g.normal_structure().normal_subgroups) {
    NormalSubgroupVerdict v{n.order, n.generators, is_m_group(*g.subgroup(n), p)};
    out.all_m_p = out.all_m_p && v.is_m_p;
    out.normal_subgroups.push_back(std::move(v));
  }
  out.super_m_p = is_super_m_group(g, p);
  return out;
}

}  // namespace brauerion
