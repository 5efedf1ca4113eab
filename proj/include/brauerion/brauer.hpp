#pragma once

#include <vector>

#include "brauerion/chartab.hpp"
#include "brauerion/subgroups.hpp"

namespace brauerion {

class GroupContext;

/// Irreducible p-Brauer characters of a solvable group.
struct BrauerTable {
  int prime = 0;
  std::vector<int> p_regular;
  /// In acceptance order: increasing degree, ties in ordinary row order.
  std::vector<BrauerCharacter> rows;
  /// lift_of[r] indexes an ordinary row whose restriction is rows[r].
  std::vector<int> lift_of;
};

/// chi restricted to the given p-regular classes.
BrauerCharacter restrict_to_p_regular(const Character& chi, const std::vector<int>& p_regular, int p);

/// Extracts IBr from the restrictions of the ordinary irreducibles, taken in
/// increasing degree. A restriction is a new irreducible Brauer character
/// exactly when it is not a non-negative integer combination of those
/// already accepted: a reducible restriction of degree d only has
/// constituents of degree below d, and each of those is itself the
/// restriction of an ordinary irreducible of that degree, so it has been
/// accepted by the time degree d is reached.
///
/// The caller is responsible for the solvability requirement; see
/// GroupContext::ibr.
BrauerTable extract_ibr(const CharacterTable& table, const std::vector<int>& p_regular, int p);

/// Same as extract_ibr but the ordinary rows are visited in `order`.
BrauerTable extract_ibr(const CharacterTable& table, const std::vector<int>& p_regular, int p,
                        const std::vector<int>& order);

/// IBr(G) for the given prime; NotSolvable when p divides |G| and G is not
/// solvable.
const BrauerTable& ibr(const GroupContext& group, int p);

/// An ordinary irreducible restricting to phi, found by search over Irr(G).
/// Throws NoLift when none exists.
Character find_lift(const GroupContext& group, const BrauerCharacter& phi);

/// Restrictions of the linear characters of H, deduplicated.
std::vector<BrauerCharacter> linear_brauer_characters(const GroupContext& h, int p);

/// Coordinates of psi in the basis IBr; DimensionMismatch when psi does not
/// live on the table's p-regular classes.
std::vector<Rational> decompose_in_ibr(const ClassFunction& psi, const BrauerTable& table);

struct ConjugatedCharacter {
  SubgroupRecord subgroup;  ///< M^g, in the indices of G
  ClassFunction character;  ///< phi^g on the classes of M^g
};

/// phi^g(h^g) = phi(h) where h^g = g^-1 h g. Works for ordinary and Brauer
/// class functions on M.
ConjugatedCharacter conjugate_brauer(const GroupContext& group, const SubgroupRecord& m,
                                     const ClassFunction& phi, Element g);

/// Stabilizer of theta in G; NotNormal unless M is normal in G.
SubgroupRecord inertia_group(const GroupContext& group, const SubgroupRecord& m, const ClassFunction& theta);

}  // namespace brauerion
