#include "brauerion/linalg.hpp"

#include <cstdint>

#include "brauerion/error.hpp"
#include "brauerion/numtheory.hpp"

namespace brauerion {

namespace {

constexpr std::int64_t kSelectionPrime = 2305843009213693951LL;  // 2^61 - 1

std::int64_t reduce_mod(const Integer& v) {
  Integer r = v % kSelectionPrime;
  if (r < 0) r += kSelectionPrime;
  return static_cast<std::int64_t>(r);
}

// Row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> eliminate(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c)
        if (m[row][c] != 0) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::optional<std::vector<Rational>> solve_augmented(RationalMatrix m, std::size_t cols) {
  auto pivots = eliminate(m, cols);
  for (std::size_t r = pivots.size(); r < m.size(); ++r)
    if (m[r][cols] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

}  // namespace

std::optional<std::vector<Rational>> solve_rational(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "row count differs from right-hand side");
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;

  // Pick a maximal set of independent equations modulo a large prime, solve
  // that square system exactly, then verify every equation exactly.
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::int64_t>> basis;  // reduced rows, leading entry 1
  std::vector<std::size_t> lead;
  for (std::size_t r = 0; r < rows && chosen.size() < cols; ++r) {
    Integer scale = 1;
    for (const auto& v : a[r]) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(v));
    std::vector<std::int64_t> v(cols);
    bool usable = true;
    for (std::size_t c = 0; c < cols; ++c) {
      Integer num = boost::multiprecision::numerator(a[r][c]) * (scale / boost::multiprecision::denominator(a[r][c]));
      v[c] = reduce_mod(num);
    }
    if (reduce_mod(scale) == 0) usable = false;
    if (!usable) continue;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::int64_t f = v[lead[i]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c)
        v[c] = static_cast<std::int64_t>(((__int128)v[c] - (__int128)f * basis[i][c] % kSelectionPrime + kSelectionPrime) %
                                         kSelectionPrime);
    }
    std::size_t l = 0;
    while (l < cols && v[l] == 0) ++l;
    if (l == cols) continue;
    std::int64_t inv = mod_inv(v[l], kSelectionPrime);
    for (auto& x : v) x = static_cast<std::int64_t>((__int128)x * inv % kSelectionPrime);
    basis.push_back(std::move(v));
    lead.push_back(l);
    chosen.push_back(r);
  }

  std::optional<std::vector<Rational>> x;
  if (chosen.size() == cols) {
    RationalMatrix square;
    for (std::size_t r : chosen) {
      auto row = a[r];
      row.push_back(b[r]);
      square.push_back(std::move(row));
    }
    x = solve_augmented(std::move(square), cols);
  } else {
    RationalMatrix full;
    for (std::size_t r = 0; r < rows; ++r) {
      auto row = a[r];
      row.push_back(b[r]);
      full.push_back(std::move(row));
    }
    return solve_augmented(std::move(full), cols);
  }
  if (!x) return std::nullopt;
  for (std::size_t r = 0; r < rows; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols; ++c)
      if (a[r][c] != 0 && (*x)[c] != 0) s += a[r][c] * (*x)[c];
    if (s != b[r]) return std::nullopt;
  }
  return x;
}

int rational_rank(RationalMatrix a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  return static_cast<int>(eliminate(a, cols).size());
}

}  // namespace brauerion
