#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "brauerion/group.hpp"

namespace brauerion {

/// A subgroup of some FiniteGroup, by its sorted element indices.
struct SubgroupRecord {
  std::vector<Element> members;
  int order = 0;
  std::vector<Element> generators;
  int normalizer_order = 0;
  /// Index in the list returned by subgroup_classes, or -1 when the record
  /// was built ad hoc.
  int conjugacy_class_id = -1;

  bool contains(Element x) const;
  int conjugacy_class_size(int group_order) const { return group_order / normalizer_order; }
  friend bool operator==(const SubgroupRecord& a, const SubgroupRecord& b) { return a.members == b.members; }
};

/// Sorted members of the subgroup generated by `gens`.
std::vector<Element> subgroup_closure(const FiniteGroup& group, std::span<const Element> gens);

/// Record for the subgroup generated by `gens`, with its normalizer order.
SubgroupRecord make_subgroup(const FiniteGroup& group, std::vector<Element> gens);

/// Record for a known member set. Throws NotSubgroup when it is not closed.
SubgroupRecord subgroup_from_members(const FiniteGroup& group, std::vector<Element> members);

SubgroupRecord whole_group(const FiniteGroup& group);
SubgroupRecord trivial_subgroup(const FiniteGroup& group);

bool is_subgroup(const FiniteGroup& group, std::span<const Element> sorted_members);
bool is_normal(const FiniteGroup& group, std::span<const Element> sorted_members);
int normalizer_order(const FiniteGroup& group, std::span<const Element> sorted_members);

/// Sorted members of H^g = g^-1 H g.
std::vector<Element> conjugate_members(const FiniteGroup& group, std::span<const Element> members,
                                       Element g);

std::vector<Element> intersect(std::span<const Element> a, std::span<const Element> b);

struct SolvabilityData {
  /// G = G^(0) > G^(1) > ... until the series stabilises.
  std::vector<SubgroupRecord> derived_series;
  bool is_solvable = false;
  /// Invariant factors n1 | n2 | ... of G/[G,G]; empty for a perfect group.
  std::vector<int> abelianization;
  /// For each element, its coordinates in Z/n1 x Z/n2 x ...
  std::vector<std::vector<int>> quotient_map;
};

SolvabilityData solvability_data(const FiniteGroup& group);

inline constexpr std::size_t kDefaultSubgroupBudget = 1'000'000;

/// One representative per conjugacy class of subgroups, found by cyclic
/// extension. Sorted by order, then by member list; each representative is
/// the lexicographically least member list in its class. Throws TooLarge
/// when more than `budget` candidate subgroups are formed.
std::vector<SubgroupRecord> subgroup_classes(const FiniteGroup& group,
                                             std::size_t budget = kDefaultSubgroupBudget);

struct NormalStructure {
  std::vector<SubgroupRecord> normal_subgroups;
  std::vector<SubgroupRecord> maximal_normal;
};

NormalStructure normal_structure(const FiniteGroup& group, const std::vector<SubgroupRecord>& classes);

/// Representatives t with G the disjoint union of the H t K, identity first
/// and then in increasing element order.
std::vector<Element> double_coset_reps(const FiniteGroup& group, const SubgroupRecord& h,
                                       const SubgroupRecord& k);

/// True iff every g in G factors as hk.
bool is_product(const FiniteGroup& group, const SubgroupRecord& h, const SubgroupRecord& k);

}  // namespace brauerion
