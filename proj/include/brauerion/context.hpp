#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "brauerion/brauer.hpp"
#include "brauerion/chartab.hpp"
#include "brauerion/group.hpp"
#include "brauerion/subgroups.hpp"

namespace brauerion {

/// Memo tables filled by the monomial decision procedures.
struct MonomialMemo {
  std::map<std::pair<int, int>, bool> primitive;  // (prime, row)
  std::map<int, bool> monomial_group;             // prime -> every row monomial
  std::map<int, bool> super_monomial_group;       // prime -> every row super-monomial
};

/// A group together with everything computed about it.
///
/// Derived data is computed on first use and kept. Contexts for subgroups
/// are shared through a registry owned by the outermost group, keyed by the
/// subgroup's elements in that group, so each subgroup is analysed once no
/// matter which chain of subgroups reached it. A context and the contexts
/// reachable from it must be used from one thread at a time.
class GroupContext : public std::enable_shared_from_this<GroupContext> {
 public:
  static std::shared_ptr<GroupContext> create(FiniteGroup group);

  GroupContext(const GroupContext&) = delete;
  GroupContext& operator=(const GroupContext&) = delete;

  const FiniteGroup& group() const noexcept { return *group_; }
  int order() const noexcept { return group_->order(); }
  const std::string& label() const noexcept { return group_->label(); }
  const ConjugacyClassData& classes() const noexcept { return classes_; }

  /// Conductor shared by every class function in this context tree: the
  /// exponent of the outermost group. Values of subgroup characters are
  /// embedded into it so that they compare exactly with values from G.
  int conductor() const noexcept { return conductor_; }

  const CharacterTable& table() const;
  const SolvabilityData& solvability() const;
  bool is_solvable() const { return solvability().is_solvable; }
  const std::vector<SubgroupRecord>& subgroup_classes() const;
  const NormalStructure& normal_structure() const;
  /// All classes for p = 0, otherwise the p-regular ones.
  const std::vector<int>& p_regular(int p) const;
  /// Position of each class within p_regular(p), or -1.
  const std::vector<int>& p_regular_position(int p) const;
  const BrauerTable& ibr(int p) const;
  /// Irr(G) for p = 0, IBr(G) otherwise.
  const std::vector<ClassFunction>& irreducibles(int p) const;

  /// Context for a subgroup given in this group's element indices.
  std::shared_ptr<GroupContext> subgroup(const SubgroupRecord& h) const;
  std::shared_ptr<GroupContext> subgroup(std::span<const Element> sorted_members) const;

  /// This group's element as an element of the outermost group, and back.
  Element to_top(Element local) const noexcept { return to_top_[local]; }
  Element from_top(Element top) const noexcept { return from_top_[top]; }
  /// Images of this group's elements in `super`; -1 where not contained.
  Element image_in(const GroupContext& super, Element local) const noexcept {
    return super.from_top(to_top_[local]);
  }
  /// True iff every element of this group lies in `super`.
  bool is_subgroup_of(const GroupContext& super) const;
  /// class_fusion_into(super)[c] is the class of `super` containing class c.
  std::vector<int> class_fusion_into(const GroupContext& super) const;

  MonomialMemo& memo() const { return memo_; }

 private:
  struct Registry;
  GroupContext() = default;

  std::shared_ptr<const FiniteGroup> group_;
  ConjugacyClassData classes_;
  int conductor_ = 1;
  std::vector<Element> to_top_;
  std::vector<Element> from_top_;
  std::shared_ptr<Registry> owned_registry_;  // set on the outermost context only
  std::weak_ptr<Registry> registry_;

  mutable std::optional<CharacterTable> table_;
  mutable std::optional<SolvabilityData> solvability_;
  mutable std::optional<std::vector<SubgroupRecord>> subgroups_;
  mutable std::optional<NormalStructure> normal_;
  mutable std::map<int, std::vector<int>> p_regular_;
  mutable std::map<int, std::vector<int>> p_regular_position_;
  mutable std::map<int, BrauerTable> ibr_;
  mutable MonomialMemo memo_;
};

}  // namespace brauerion
