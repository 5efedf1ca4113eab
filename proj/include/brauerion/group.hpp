#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace brauerion {

/// Index of a group element in its multiplication table.
using Element = int;

/// Permutation of {0..degree-1} stored as an image list.
using Permutation = std::vector<int>;

/// Default bound on the order of any group the engine will enumerate.
inline constexpr std::size_t kDefaultOrderCap = 2000;

/// The order cap in effect: BRAUERION_ORDER_CAP when set, else the default.
std::size_t order_cap();

/// A finite group held as a dense multiplication table.
///
/// Construction validates the group axioms; the element orders and exponent
/// are computed once and never change afterwards, so instances are safe to
/// share between threads.
class FiniteGroup {
 public:
  static FiniteGroup from_multiplication_table(const std::vector<std::vector<int>>& table,
                                               std::string label,
                                               std::size_t cap = order_cap());

  /// Enumerates the closure of `gens` (0-based image lists) by breadth-first
  /// multiplication. Element 0 is the identity; the other elements appear in
  /// discovery order.
  static FiniteGroup from_permutation_generators(int degree, const std::vector<Permutation>& gens,
                                                 std::string label, std::size_t cap = order_cap());

  /// The subgroup on `members` (sorted indices of `parent`), relabelled so
  /// that local index i corresponds to members[i]. No validation is needed.
  static FiniteGroup subgroup_of(const FiniteGroup& parent, std::span<const Element> members,
                                 std::string label);

  int order() const noexcept { return order_; }
  Element mul(Element a, Element b) const noexcept { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  Element identity() const noexcept { return identity_; }
  /// x^g = g^-1 x g
  Element conjugate(Element x, Element g) const noexcept { return mul(mul(inv_[g], x), g); }
  Element power(Element x, long long k) const;
  Element commutator(Element x, Element y) const noexcept { return mul(mul(inv_[x], inv_[y]), mul(x, y)); }

  int element_order(Element x) const noexcept { return element_order_[x]; }
  int exponent() const noexcept { return exponent_; }
  bool is_abelian() const;

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::optional<std::string>& origin() const noexcept { return origin_; }

  /// Permutation images of each element when built from generators.
  const std::vector<Permutation>& permutations() const noexcept { return perms_; }

  std::vector<std::vector<int>> table() const;

 private:
  FiniteGroup() = default;
  void finish();

  int order_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  Element identity_ = 0;
  std::string label_;
  std::optional<std::string> origin_;
  std::vector<int> element_order_;
  int exponent_ = 1;
  std::vector<Permutation> perms_;
};

/// Conjugacy classes with representatives, sizes and the power map.
///
/// Class 0 is always the identity class; the remaining classes are ordered by
/// their representative, which is the lowest element index in the class.
struct ConjugacyClassData {
  int class_count = 0;
  std::vector<Element> rep;
  std::vector<int> size;
  std::vector<int> class_of;
  std::vector<int> rep_order;
  int exponent = 1;
  /// power_class[i][j] is the class of rep[i]^j, for 0 <= j < exponent.
  std::vector<std::vector<int>> power_class;
  std::vector<std::vector<Element>> members;

  int inverse_class(int i) const { return power_class[i][(exponent - 1) % exponent]; }
};

ConjugacyClassData conjugacy_classes(const FiniteGroup& group);

/// Classes whose representatives have order prime to p, in class order.
std::vector<int> p_regular_classes(const FiniteGroup& group, const ConjugacyClassData& classes,
                                   int p);

/// Parses `(1 2 3)(4 5)` into a 0-based image list of the given degree.
/// `()` or an empty string is the identity.
Permutation parse_cycles(const std::string& text, int degree);

/// Disjoint-cycle notation with 1-based points; identity prints as `()`.
std::string format_cycles(const Permutation& perm);

}  // namespace brauerion
