#pragma once

#include <vector>

#include "brauerion/classfn.hpp"
#include "brauerion/context.hpp"

namespace brauerion {

/// theta^G for a class function of the subgroup context h. Brauer inputs are
/// induced on p-regular classes. NotSubgroup unless h lies in g;
/// DimensionMismatch when theta does not fit h.
ClassFunction induce(const GroupContext& h, const ClassFunction& theta, const GroupContext& g);
ClassFunction induce(const GroupContext& g, const SubgroupRecord& h, const ClassFunction& theta);

/// phi_K along the class fusion of k into g.
ClassFunction restrict(const GroupContext& g, const ClassFunction& phi, const GroupContext& k);
ClassFunction restrict(const GroupContext& g, const ClassFunction& phi, const SubgroupRecord& k);

/// <a, b> over G for ordinary class functions. NonRationalResult if the sum
/// does not lie in Q, PrimeMismatch for Brauer input.
Rational inner_product(const GroupContext& g, const ClassFunction& a, const ClassFunction& b);

/// Ordinary: <psi, psi> = 1 and psi(1) > 0. Brauer: psi is a row of IBr(G).
bool is_irreducible(const GroupContext& g, const ClassFunction& psi);

struct MackeySummand {
  Element t;
  ClassFunction induced;  ///< (phi^t restricted to H^t n K) induced to K
};

struct InducedDecomposition {
  ClassFunction left;  ///< (phi^G)_K
  std::vector<MackeySummand> summands;
  ClassFunction right;
  bool left_irreducible = false;
  bool product = false;  ///< G = HK
  bool balanced() const { return left == right; }
};

InducedDecomposition mackey_decompose(const GroupContext& g, const SubgroupRecord& h, const ClassFunction& phi,
                                      const SubgroupRecord& k);

}  // namespace brauerion
