#include "brauerion/context.hpp"

#include <algorithm>
#include <numeric>

#include "brauerion/error.hpp"

namespace brauerion {

struct GroupContext::Registry {
  std::shared_ptr<const FiniteGroup> top;
  std::weak_ptr<GroupContext> top_context;
  std::map<std::vector<Element>, std::shared_ptr<GroupContext>> by_members;
};

std::shared_ptr<GroupContext> GroupContext::create(FiniteGroup group) {
  std::shared_ptr<GroupContext> ctx(new GroupContext());
  ctx->group_ = std::make_shared<const FiniteGroup>(std::move(group));
  ctx->classes_ = conjugacy_classes(*ctx->group_);
  ctx->conductor_ = ctx->group_->exponent();
  ctx->to_top_.resize(ctx->order());
  std::iota(ctx->to_top_.begin(), ctx->to_top_.end(), 0);
  ctx->from_top_ = ctx->to_top_;
  ctx->owned_registry_ = std::make_shared<Registry>();
  ctx->owned_registry_->top = ctx->group_;
  ctx->owned_registry_->top_context = ctx;
  ctx->registry_ = ctx->owned_registry_;
  return ctx;
}

const CharacterTable& GroupContext::table() const {
  if (!table_) {
    table_ = character_table(*group_, classes_);
    if (conductor_ != group_->exponent())
      for (auto& row : table_->rows)
        for (auto& v : row.values) v = v.embed(conductor_);
  }
  return *table_;
}

const SolvabilityData& GroupContext::solvability() const {
  if (!solvability_) solvability_ = solvability_data(*group_);
  return *solvability_;
}

const std::vector<SubgroupRecord>& GroupContext::subgroup_classes() const {
  if (!subgroups_) subgroups_ = brauerion::subgroup_classes(*group_);
  return *subgroups_;
}

const NormalStructure& GroupContext::normal_structure() const {
  if (!normal_) normal_ = brauerion::normal_structure(*group_, subgroup_classes());
  return *normal_;
}

const std::vector<int>& GroupContext::p_regular(int p) const {
  auto it = p_regular_.find(p);
  if (it == p_regular_.end()) it = p_regular_.emplace(p, p_regular_classes(*group_, classes_, p)).first;
  return it->second;
}

const std::vector<int>& GroupContext::p_regular_position(int p) const {
  auto it = p_regular_position_.find(p);
  if (it == p_regular_position_.end()) {
    std::vector<int> pos(classes_.class_count, -1);
    const auto& reg = p_regular(p);
    for (std::size_t i = 0; i < reg.size(); ++i) pos[reg[i]] = static_cast<int>(i);
    it = p_regular_position_.emplace(p, std::move(pos)).first;
  }
  return it->second;
}

const BrauerTable& GroupContext::ibr(int p) const {
  auto it = ibr_.find(p);
  if (it != ibr_.end()) return it->second;
  if (p < 2) throw Error(ErrorCode::BadSpec, "Brauer characters need a prime");
  if (order() % p == 0 && !is_solvable())
    throw Error(ErrorCode::NotSolvable, "group " + label() + " is not solvable");
  return ibr_.emplace(p, extract_ibr(table(), p_regular(p), p)).first->second;
}

const std::vector<ClassFunction>& GroupContext::irreducibles(int p) const {
  return p == 0 ? table().rows : ibr(p).rows;
}

std::shared_ptr<GroupContext> GroupContext::subgroup(const SubgroupRecord& h) const {
  return subgroup(std::span<const Element>(h.members));
}

std::shared_ptr<GroupContext> GroupContext::subgroup(std::span<const Element> sorted_members) const {
  if (static_cast<int>(sorted_members.size()) == order())
    return std::const_pointer_cast<GroupContext>(shared_from_this());
  auto registry = registry_.lock();
  if (!registry) throw Error(ErrorCode::InternalInconsistency, "outermost group context no longer exists");

  std::vector<Element> top_members;
  top_members.reserve(sorted_members.size());
  for (Element x : sorted_members) top_members.push_back(to_top_[x]);
  std::sort(top_members.begin(), top_members.end());
  if (static_cast<int>(top_members.size()) == registry->top->order()) {
    if (auto top = registry->top_context.lock()) return top;
  }
  if (auto it = registry->by_members.find(top_members); it != registry->by_members.end()) return it->second;

  std::shared_ptr<GroupContext> ctx(new GroupContext());
  ctx->group_ = std::make_shared<const FiniteGroup>(FiniteGroup::subgroup_of(
      *registry->top, top_members, registry->top->label() + "<" + std::to_string(top_members.size()) + ">"));
  ctx->classes_ = conjugacy_classes(*ctx->group_);
  ctx->conductor_ = conductor_;
  ctx->to_top_ = top_members;
  ctx->from_top_.assign(registry->top->order(), -1);
  for (std::size_t i = 0; i < top_members.size(); ++i) ctx->from_top_[top_members[i]] = static_cast<Element>(i);
  ctx->registry_ = registry;
  registry->by_members.emplace(std::move(top_members), ctx);
  return ctx;
}

bool GroupContext::is_subgroup_of(const GroupContext& super) const {
  // indices are only comparable within one tree
  if (registry_.lock() != super.registry_.lock()) return false;
  for (Element x : to_top_)
    if (static_cast<std::size_t>(x) >= super.from_top_.size() || super.from_top_[x] < 0) return false;
  return true;
}

std::vector<int> GroupContext::class_fusion_into(const GroupContext& super) const {
  if (!is_subgroup_of(super)) throw Error(ErrorCode::NotSubgroup, label() + " is not contained in " + super.label());
  std::vector<int> fusion(classes_.class_count);
  for (int c = 0; c < classes_.class_count; ++c) fusion[c] = super.classes().class_of[image_in(super, classes_.rep[c])];
  return fusion;
}

}  // namespace brauerion
