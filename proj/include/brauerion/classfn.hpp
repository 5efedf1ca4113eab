#pragma once

#include <string>
#include <vector>

#include "brauerion/cyclotomic.hpp"

namespace brauerion {

/// A class function. Ordinary ones (prime == 0) have one value per
/// conjugacy class; Brauer ones (prime == p) have one value per p-regular
/// class, in the order given by p_regular_classes. The first value is always
/// the value at the identity.
struct ClassFunction {
  int prime = 0;
  std::vector<Cyclotomic> values;

  bool is_brauer() const noexcept { return prime != 0; }
  /// Value at the identity as an integer; throws InternalInconsistency if it
  /// is not one.
  Integer degree() const;
  bool is_linear() const { return degree() == 1; }
  std::vector<std::string> printed() const;

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

using Character = ClassFunction;
using BrauerCharacter = ClassFunction;

}  // namespace brauerion
