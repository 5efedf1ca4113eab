#pragma once

#include <functional>
#include <memory>
#include <string>

#include "brauerion/catalog.hpp"
#include "brauerion/context.hpp"
#include "brauerion/error.hpp"
#include "oracles.hpp"

namespace testing_support {

using namespace brauerion;

inline std::shared_ptr<GroupContext> ctx(const std::string& spec) { return GroupContext::create(construct(spec)); }

/// An ordinary class function of `c` as a function on the elements of `c`.
inline oracle::ElementFunction per_element(const GroupContext& c, const ClassFunction& f) {
  oracle::ElementFunction out;
  for (Element x = 0; x < c.order(); ++x) out.push_back(f.values[c.classes().class_of[x]]);
  return out;
}

/// The same function on the elements of G, zero off the subgroup.
inline oracle::ElementFunction on_top(const GroupContext& h, const ClassFunction& f, const GroupContext& g) {
  oracle::ElementFunction out(g.order(), Cyclotomic(g.conductor()));
  for (Element x = 0; x < h.order(); ++x) out[h.image_in(g, x)] = f.values[h.classes().class_of[x]];
  return out;
}

/// Index of the first subgroup class of the given order with the predicate.
inline SubgroupRecord subgroup_of_order(const GroupContext& g, int order,
                                        const std::function<bool(const SubgroupRecord&)>& ok = nullptr) {
  for (const auto& h : g.subgroup_classes())
    if (h.order == order && (!ok || ok(h))) return h;
  throw Error(ErrorCode::BadSpec, "no subgroup of order " + std::to_string(order));
}

inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

inline ClassFunction ordinary(int conductor, std::initializer_list<int> values) {
  ClassFunction f;
  for (int v : values) f.values.push_back(Cyclotomic::from_integer(conductor, v));
  return f;
}

}  // namespace testing_support
