#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brauerion/context.hpp"

namespace brauerion {

// Throughout, p = 0 selects ordinary characters and Irr; a prime p selects
// p-Brauer characters and IBr. A target is named by its row in
// ctx.irreducibles(p).

/// (H, theta) with theta irreducible on H and theta^G equal to the target.
struct InducingPair {
  SubgroupRecord subgroup;  ///< a subgroup class representative of G
  int row = 0;              ///< theta's row in irreducibles(p) of H
  ClassFunction character;
  bool is_primitive_source = false;
};

/// Every pair over the subgroup class representatives, (G, target) included.
std::vector<InducingPair> inducing_pairs(const GroupContext& g, int p, int target);

bool is_primitive(const GroupContext& g, int p, int target);

struct MonomialVerdict {
  bool holds = false;
  /// A linear inducing pair when monomial; a nonlinear primitive inducing
  /// pair when super-monomiality fails.
  std::optional<InducingPair> witness;
};

MonomialVerdict is_monomial(const GroupContext& g, int p, int target);
MonomialVerdict is_super_monomial(const GroupContext& g, int p, int target);

/// Every row of irreducibles(p) is monomial, resp. super-monomial.
bool is_m_group(const GroupContext& g, int p);
bool is_super_m_group(const GroupContext& g, int p);

struct ClassificationWitness {
  std::string flag;
  int row = 0;
  std::vector<std::string> character;
  std::optional<int> subgroup_order;
  std::vector<std::string> inducer;
};

struct ClassificationAssertion {
  std::string name;
  bool holds = true;
};

struct ClassificationReport {
  std::string group;
  std::optional<int> p;
  bool is_solvable = false;
  bool is_m = false;
  bool is_super_m = false;
  std::optional<bool> is_m_p;
  std::optional<bool> is_super_m_p;
  std::vector<ClassificationWitness> witnesses;
  std::vector<ClassificationAssertion> assertions;
  double seconds = 0;

  bool assertions_hold() const;
  /// Keys group, p, flags, witnesses, assertions.
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Ordinary flags always; Brauer flags when p is given (NotSolvable when p
/// divides |G| and G is not solvable).
ClassificationReport classify(const GroupContext& g, std::optional<int> p);

struct TheoremOneCheck {
  bool hypothesis_i = false;
  bool hypothesis_ii = false;
  bool conclusion = false;
  bool holds() const { return (!hypothesis_i || conclusion) && (!hypothesis_ii || conclusion); }
};

/// hypothesis_i: every primitive row of IBr(G) is linear and every proper
/// subgroup class is an M_p-group. hypothesis_ii: G is a super M-group.
/// conclusion: G is a super M_p-group.
TheoremOneCheck theorem1_hypothesis_check(const GroupContext& g, int p);

struct CliffordOutcome {
  enum class Kind { Extends, InducesIrreducibly } kind;
  SubgroupRecord inertia;
  /// The extension of theta to G, or theta^G.
  ClassFunction character;
};

/// For M normal of prime index and theta a row of irreducibles(theta.prime)
/// of M. NotNormal / BadSpec on bad M, NoExtensionFound if theta is
/// G-invariant but no row of G restricts to it.
CliffordOutcome clifford_dichotomy(const GroupContext& g, const SubgroupRecord& m, const ClassFunction& theta);

struct NormalSubgroupVerdict {
  int order = 0;
  std::vector<Element> generators;
  bool is_m_p = false;
};

struct NormalClosureReport {
  bool applicable = false;  ///< |G| odd and G an M_p-group
  std::vector<NormalSubgroupVerdict> normal_subgroups;
  bool all_m_p = true;
  /// Whether G is a super M_p-group; recorded, never asserted.
  std::optional<bool> super_m_p;
};

NormalClosureReport normal_closure_scan(const GroupContext& g, int p);

}  // namespace brauerion
