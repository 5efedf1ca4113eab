#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauerion/classfn.hpp"
#include "brauerion/group.hpp"

namespace brauerion {

/// a(i, j, k) = #{(x, y) : x in C_i, y in C_j, xy = rep_k}.
class ClassAlgebraConstants {
 public:
  ClassAlgebraConstants(int class_count, std::vector<std::int64_t> data)
      : k_(class_count), data_(std::move(data)) {}
  int class_count() const noexcept { return k_; }
  std::int64_t operator()(int i, int j, int k) const {
    return data_[(static_cast<std::size_t>(i) * k_ + j) * k_ + k];
  }

 private:
  int k_;
  std::vector<std::int64_t> data_;
};

ClassAlgebraConstants class_algebra_constants(const FiniteGroup& group, const ConjugacyClassData& classes);

struct CharacterTable {
  int exponent = 1;
  /// The prime of the finite field the table was split over.
  std::int64_t dixon_prime = 0;
  /// Sorted by degree, then lexicographically by printed values.
  std::vector<Character> rows;
};

/// Smallest prime l = 1 mod e with l > 2 floor(sqrt(order)).
std::int64_t dixon_prime(int order, int exponent);

/// Irreducible characters by the Dixon-Burnside method.
CharacterTable character_table(const FiniteGroup& group, const ConjugacyClassData& classes);

struct OrthogonalityViolation {
  enum class Kind { Row, Column, DegreeSum } kind;
  int first;
  int second;
};

struct OrthogonalityReport {
  std::vector<OrthogonalityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Exact row and column orthogonality, plus the sum of squared degrees.
OrthogonalityReport verify_orthogonality(const ConjugacyClassData& classes, int group_order,
                                         const CharacterTable& table);

}  // namespace brauerion
