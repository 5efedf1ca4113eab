#include "brauerion/chartab.hpp"

#include <algorithm>
#include <cmath>

#include "brauerion/error.hpp"
#include "brauerion/numtheory.hpp"

namespace brauerion {

Integer ClassFunction::degree() const {
  auto r = values.front().rational_part();
  if (!r || boost::multiprecision::denominator(*r) != 1)
    throw Error(ErrorCode::InternalInconsistency, "class function value at identity is not an integer");
  return boost::multiprecision::numerator(*r);
}

std::vector<std::string> ClassFunction::printed() const {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

ClassAlgebraConstants class_algebra_constants(const FiniteGroup& group, const ConjugacyClassData& classes) {
  const int k = classes.class_count;
  std::vector<std::int64_t> data(static_cast<std::size_t>(k) * k * k, 0);
  for (int m = 0; m < k; ++m) {
    const Element z = classes.rep[m];
    for (Element x = 0; x < group.order(); ++x) {
      Element y = group.mul(group.inv(x), z);
      data[(static_cast<std::size_t>(classes.class_of[x]) * k + classes.class_of[y]) * k + m] += 1;
    }
  }
  return ClassAlgebraConstants(k, std::move(data));
}

std::int64_t dixon_prime(int order, int exponent) {
  const std::int64_t bound = 2 * static_cast<std::int64_t>(std::sqrt(static_cast<double>(order)) + 1e-9);
  // Guard against floating point: make sure bound/2 is floor(sqrt(order)).
  std::int64_t root = bound / 2;
  while (root * root > order) --root;
  while ((root + 1) * (root + 1) <= order) ++root;
  for (std::int64_t l = exponent + 1;; l += exponent)
    if (l > 2 * root && is_prime(l)) return l;
}

namespace {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t l) { return a * b % l; }

// Reduced row echelon form in place; returns pivot columns and drops zero rows.
std::vector<int> rref(Mat& m, std::int64_t l) {
  std::vector<int> pivots;
  std::size_t row = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const std::int64_t inv = mod_inv(m[row][col], l);
    for (auto& x : m[row]) x = mulmod(x, inv, l);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::int64_t f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] = ((m[r][c] - mulmod(f, m[row][c], l)) % l + l) % l;
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis of {x : m x = 0} for an n x n matrix.
Mat nullspace(Mat m, std::int64_t l) {
  const int n = static_cast<int>(m.size());
  auto pivots = rref(m, l);
  std::vector<int> is_pivot(n, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) is_pivot[pivots[r]] = static_cast<int>(r);
  Mat basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free] >= 0) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (l - m[r][free]) % l;
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Subspace {
  Mat basis;  // rows, in reduced row echelon form
  std::vector<int> pivots;
};

std::int64_t primitive_root(std::int64_t l) {
  auto factors = prime_divisors(l - 1);
  for (std::int64_t g = 2;; ++g) {
    bool ok = true;
    for (int q : factors)
      if (mod_pow(g, (l - 1) / q, l) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

// Splits the class algebra into its one-dimensional common eigenspaces.
// Returns one vector per irreducible character: v[i] = omega_chi(C_i).
Mat central_characters(const ClassAlgebraConstants& a, std::int64_t l) {
  const int k = a.class_count();
  Subspace all;
  all.basis.assign(k, Vec(k, 0));
  for (int i = 0; i < k; ++i) all.basis[i][i] = 1, all.pivots.push_back(i);
  std::vector<Subspace> spaces{std::move(all)};

  // Class-sum matrices are taken in class index order; each acts on row
  // vectors by b -> b N_j with N_j[m][i] = a(j, i, m).
  for (int j = 1; j < k; ++j) {
    bool all_split = true;
    for (const auto& s : spaces) all_split = all_split && s.basis.size() == 1;
    if (all_split) break;

    std::vector<Subspace> next;
    for (auto& space : spaces) {
      const int dim = static_cast<int>(space.basis.size());
      if (dim == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Matrix of N_j on the subspace in coordinates read off at pivots.
      Mat restricted(dim, Vec(dim, 0));
      for (int s = 0; s < dim; ++s) {
        const Vec& b = space.basis[s];
        for (int t = 0; t < dim; ++t) {
          const int i = space.pivots[t];
          std::int64_t acc = 0;
          for (int m = 0; m < k; ++m)
            if (b[m]) acc = (acc + mulmod(b[m], a(j, i, m) % l, l)) % l;
          restricted[s][t] = acc;
        }
      }
      int found = 0;
      for (std::int64_t lambda = 0; lambda < l && found < dim; ++lambda) {
        // Left eigenvectors c: c (A - lambda) = 0, i.e. the nullspace of the transpose.
        Mat shifted(dim, Vec(dim, 0));
        for (int s = 0; s < dim; ++s)
          for (int t = 0; t < dim; ++t)
            shifted[t][s] = ((restricted[s][t] - (s == t ? lambda : 0)) % l + l) % l;
        Mat null = nullspace(std::move(shifted), l);
        if (null.empty()) continue;
        found += static_cast<int>(null.size());
        Subspace sub;
        for (const Vec& c : null) {
          Vec v(k, 0);
          for (int s = 0; s < dim; ++s)
            if (c[s])
              for (int m = 0; m < k; ++m) v[m] = (v[m] + mulmod(c[s], space.basis[s][m], l)) % l;
          sub.basis.push_back(std::move(v));
        }
        sub.pivots = rref(sub.basis, l);
        next.push_back(std::move(sub));
      }
      if (found != dim)
        throw Error(ErrorCode::LiftFailure, "class matrix not diagonalizable mod " + std::to_string(l));
    }
    spaces = std::move(next);
  }

  Mat out;
  for (auto& s : spaces) {
    if (s.basis.size() != 1)
      throw Error(ErrorCode::InternalInconsistency, "eigenspace did not split to dimension one");
    Vec v = s.basis[0];
    if (v[0] == 0) throw Error(ErrorCode::InternalInconsistency, "central character vanishes at identity");
    const std::int64_t inv = mod_inv(v[0], l);
    for (auto& x : v) x = mulmod(x, inv, l);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Character> lift_table(const FiniteGroup& group, const ConjugacyClassData& classes,
                                  const ClassAlgebraConstants& constants, std::int64_t l) {
  const int k = classes.class_count;
  const int e = classes.exponent;
  const int order = group.order();
  Mat omegas = central_characters(constants, l);

  const std::int64_t z = mod_pow(primitive_root(l), (l - 1) / e, l);
  const std::int64_t z_inv = mod_inv(z, l);
  const std::int64_t e_inv = mod_inv(e % l, l);
  std::int64_t root_bound = 0;
  while ((root_bound + 1) * (root_bound + 1) <= order) ++root_bound;

  std::vector<Character> rows;
  for (const Vec& omega : omegas) {
    // d^2 = |G| / sum_i omega_i omega_{i*} / |C_i|
    std::int64_t s = 0;
    for (int i = 0; i < k; ++i) {
      std::int64_t term = mulmod(omega[i], omega[classes.inverse_class(i)], l);
      s = (s + mulmod(term, mod_inv(classes.size[i] % l, l), l)) % l;
    }
    if (s == 0) throw Error(ErrorCode::LiftFailure, "degree norm vanishes mod " + std::to_string(l));
    const std::int64_t d2 = mulmod(order % l, mod_inv(s, l), l);
    std::int64_t d = 0;
    for (std::int64_t c = 1; c <= root_bound; ++c)
      if (c * c % l == d2) {
        d = c;
        break;
      }
    if (d == 0) throw Error(ErrorCode::LiftFailure, "no degree lifts mod " + std::to_string(l));

    Vec theta(k);
    for (int i = 0; i < k; ++i) theta[i] = mulmod(mulmod(omega[i], d, l), mod_inv(classes.size[i] % l, l), l);

    Character chi;
    chi.values.reserve(k);
    for (int i = 0; i < k; ++i) {
      // mu_m = e^-1 sum_j theta(g^j) z^(-jm): multiplicity of zeta^m as an
      // eigenvalue of the representing matrix of g.
      std::vector<Integer> mult(e, Integer(0));
      std::int64_t total = 0;
      std::int64_t zm = 1;  // z^(-m)
      for (int m = 0; m < e; ++m) {
        std::int64_t acc = 0;
        std::int64_t zjm = 1;  // z^(-jm)
        for (int j = 0; j < e; ++j) {
          acc = (acc + mulmod(theta[classes.power_class[i][j]], zjm, l)) % l;
          zjm = mulmod(zjm, zm, l);
        }
        const std::int64_t mu = mulmod(acc, e_inv, l);
        if (mu > d) throw Error(ErrorCode::LiftFailure, "eigenvalue multiplicity out of range mod " + std::to_string(l));
        mult[m] = mu;
        total += mu;
        zm = mulmod(zm, z_inv, l);
      }
      if (total != d) throw Error(ErrorCode::LiftFailure, "multiplicities do not sum to the degree");
      chi.values.push_back(Cyclotomic::from_multiplicities(e, mult));
    }
    rows.push_back(std::move(chi));
  }
  return rows;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& group, const ConjugacyClassData& classes) {
  if (static_cast<std::size_t>(group.order()) > order_cap())
    throw Error(ErrorCode::TooLarge, "group order exceeds order cap");
  const auto constants = class_algebra_constants(group, classes);
  const int e = classes.exponent;
  std::int64_t l = dixon_prime(group.order(), e);
  for (int attempt = 0; attempt < 32; ++attempt) {
    try {
      CharacterTable table;
      table.exponent = e;
      table.dixon_prime = l;
      table.rows = lift_table(group, classes, constants, l);
      Integer sum = 0;
      for (const auto& row : table.rows) sum += row.degree() * row.degree();
      if (sum != group.order()) throw Error(ErrorCode::LiftFailure, "squared degrees do not sum to the order");
      std::vector<std::pair<Integer, std::vector<std::string>>> keys;
      std::vector<std::size_t> idx(table.rows.size());
      for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
        keys.emplace_back(table.rows[i].degree(), table.rows[i].printed());
      }
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
      std::vector<Character> sorted;
      for (std::size_t i : idx) sorted.push_back(std::move(table.rows[i]));
      table.rows = std::move(sorted);
      return table;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::LiftFailure) throw;
      do l += e;
      while (!is_prime(l));
    }
  }
  throw Error(ErrorCode::LiftFailure, "no usable Dixon prime found");
}

OrthogonalityReport verify_orthogonality(const ConjugacyClassData& classes, int group_order,
                                         const CharacterTable& table) {
  OrthogonalityReport report;
  const int k = classes.class_count;
  const int r = static_cast<int>(table.rows.size());
  const int e = table.exponent;
  std::vector<std::vector<Cyclotomic>> conj(r);
  for (int a = 0; a < r; ++a)
    for (const auto& v : table.rows[a].values) conj[a].push_back(v.conj());

  for (int a = 0; a < r; ++a)
    for (int b = a; b < r; ++b) {
      Cyclotomic s(e);
      for (int c = 0; c < k; ++c)
        s += (table.rows[a].values[c] * conj[b][c]).scale(Rational(classes.size[c]));
      Cyclotomic expected = Cyclotomic::from_integer(e, a == b ? group_order : 0);
      if (!(s == expected)) report.violations.push_back({OrthogonalityViolation::Kind::Row, a, b});
    }
  for (int c = 0; c < k; ++c)
    for (int d = c; d < k; ++d) {
      Cyclotomic s(e);
      for (int a = 0; a < r; ++a) s += table.rows[a].values[c] * conj[a][d];
      Cyclotomic expected = Cyclotomic::from_integer(e, c == d ? group_order / classes.size[c] : 0);
      if (!(s == expected)) report.violations.push_back({OrthogonalityViolation::Kind::Column, c, d});
    }
  Integer sum = 0;
  for (const auto& row : table.rows) sum += row.degree() * row.degree();
  if (r != k || sum != group_order) report.violations.push_back({OrthogonalityViolation::Kind::DegreeSum, r, k});
  return report;
}

}  // namespace brauerion
