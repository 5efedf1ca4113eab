#pragma once

#include <optional>
#include <vector>

#include "brauerion/cyclotomic.hpp"

namespace brauerion {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// A solution of `a x = b` over Q, or empty when the system is inconsistent.
/// Free variables, if any, are set to zero.
std::optional<std::vector<Rational>> solve_rational(const RationalMatrix& a, const std::vector<Rational>& b);

int rational_rank(RationalMatrix a);

}  // namespace brauerion
