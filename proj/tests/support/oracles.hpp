#pragma once

// Slow reference computations that share no algorithmic path with the
// engine: class functions are stored per element, induction is the
// Frobenius sum over all of G, and subgroups come from brute-force closure.

#include <algorithm>
#include <complex>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "brauerion/cyclotomic.hpp"
#include "brauerion/group.hpp"

namespace oracle {

using brauerion::Cyclotomic;
using brauerion::Element;
using brauerion::FiniteGroup;
using brauerion::Integer;
using brauerion::Rational;

using ElementFunction = std::vector<Cyclotomic>;

inline std::complex<double> numeric(const Cyclotomic& a) {
  const double two_pi = 2 * std::numbers::pi;
  std::complex<double> z = std::polar(1.0, two_pi / a.conductor());
  std::complex<double> sum = 0, zk = 1;
  for (const auto& c : a.numerators()) {
    sum += zk * c.convert_to<double>();
    zk *= z;
  }
  return sum / a.denominator().convert_to<double>();
}

inline std::vector<std::vector<Element>> conjugation_orbits(const FiniteGroup& g) {
  std::vector<std::vector<Element>> orbits;
  std::vector<char> seen(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<Element> orbit;
    for (Element y = 0; y < g.order(); ++y) orbit.insert(g.conjugate(x, y));
    for (Element y : orbit) seen[y] = 1;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

inline std::vector<Element> closure(const FiniteGroup& g, std::vector<Element> gens) {
  std::set<Element> s = {g.identity()};
  std::vector<Element> frontier = {g.identity()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (Element y : gens) {
        Element z = g.mul(x, y);
        if (s.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  return {s.begin(), s.end()};
}

/// Every subgroup generated by at most two elements, closed under joins
/// until nothing new appears.
inline std::set<std::vector<Element>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> subs;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = x; y < g.order(); ++y) subs.insert(closure(g, {x, y}));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<Element>> list(subs.begin(), subs.end());
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        std::vector<Element> gens = list[i];
        gens.insert(gens.end(), list[j].begin(), list[j].end());
        if (subs.insert(closure(g, gens)).second) grew = true;
      }
  }
  return subs;
}

inline std::vector<Element> conjugate_set(const FiniteGroup& g, const std::vector<Element>& h, Element x) {
  std::vector<Element> out;
  for (Element y : h) out.push_back(g.conjugate(y, x));
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of conjugacy classes of subgroups, by brute force.
inline int subgroup_class_count(const FiniteGroup& g) {
  auto subs = all_subgroups(g);
  std::set<std::vector<Element>> seen;
  int classes = 0;
  for (const auto& h : subs) {
    if (seen.count(h)) continue;
    ++classes;
    for (Element x = 0; x < g.order(); ++x) seen.insert(conjugate_set(g, h, x));
  }
  return classes;
}

/// (1/|H|) sum over x in G of theta°(x g x^-1), theta given per element of
/// G (values off H ignored).
inline ElementFunction frobenius_induce(const FiniteGroup& g, const std::vector<Element>& h,
                                        const ElementFunction& theta, int conductor) {
  std::vector<char> in(g.order(), 0);
  for (Element y : h) in[y] = 1;
  ElementFunction out(g.order(), Cyclotomic(conductor));
  for (Element z = 0; z < g.order(); ++z) {
    Cyclotomic sum(conductor);
    for (Element x = 0; x < g.order(); ++x) {
      Element y = g.mul(g.mul(x, z), g.inv(x));
      if (in[y]) sum += theta[y];
    }
    out[z] = sum.scale(Rational(1, static_cast<long long>(h.size())));
  }
  return out;
}

inline Rational inner(const FiniteGroup& g, const ElementFunction& a, const ElementFunction& b) {
  Cyclotomic sum(a[0].conductor());
  for (Element x = 0; x < g.order(); ++x) sum += a[x] * b[x].conj();
  return *sum.rational_part() / g.order();
}

/// Irr(G) per element, found without class algebras: starting from the
/// trivial character, characters induced from the linear characters of
/// cyclic subgroups and products of those already found are reduced against
/// the known irreducibles by inner products; a remainder of norm one is a
/// new irreducible. When that stalls, differences of remainders are tried.
/// The regular character then has to decompose as the sum of
/// chi(1) chi.
inline std::vector<ElementFunction> irreducibles_by_decomposition(const FiniteGroup& g) {
  const int e = g.exponent();
  const int n = g.order();
  std::vector<ElementFunction> irr;
  long long degree_squares = 0;

  std::vector<ElementFunction> candidates;
  for (Element x = 0; x < n; ++x) {
    auto h = closure(g, {x});
    const int m = g.element_order(x);
    for (int k = 0; k < m; ++k) {
      ElementFunction lambda(n, Cyclotomic(e));
      Element y = g.identity();
      for (int j = 0; j < m; ++j) {
        lambda[y] = Cyclotomic::root_of_unity(e, static_cast<long long>(e / m) * j * k);
        y = g.mul(y, x);
      }
      candidates.push_back(frobenius_induce(g, h, lambda, e));
    }
  }

  auto reduce = [&](ElementFunction psi) {
    for (const auto& chi : irr) {
      Rational m = inner(g, psi, chi);
      if (m == 0) continue;
      for (int x = 0; x < n; ++x) psi[x] -= chi[x].scale(m);
    }
    return psi;
  };
  // Everything passed in is a generalized character, so norm one and a
  // positive degree make it irreducible.
  auto take = [&](ElementFunction psi) {
    if (inner(g, psi, psi) != 1) return;
    auto d = psi[g.identity()].rational_part();
    if (!d || *d <= 0) return;
    if (std::find(irr.begin(), irr.end(), psi) != irr.end()) return;
    degree_squares += static_cast<long long>(boost::multiprecision::numerator(Rational(*d * *d)));
    irr.push_back(std::move(psi));
  };

  take(ElementFunction(n, Cyclotomic::from_integer(e, 1)));
  for (std::size_t found = 0; degree_squares < n && found != irr.size();) {
    found = irr.size();
    for (const auto& c : candidates) take(reduce(c));
    const auto known = irr;
    for (std::size_t i = 0; i < known.size() && degree_squares < n; ++i)
      for (std::size_t j = i; j < known.size() && degree_squares < n; ++j) {
        ElementFunction prod(n, Cyclotomic(e));
        for (int x = 0; x < n; ++x) prod[x] = known[i][x] * known[j][x];
        take(reduce(std::move(prod)));
      }
    if (found != irr.size() || degree_squares >= n) continue;

    // Stalled. When <a, b> = <b, b> the difference a - b often drops a
    // constituent; differences are pooled until one has norm one.
    std::vector<ElementFunction> pool;
    for (const auto& c : candidates) {
      auto r = reduce(c);
      if (inner(g, r, r) > 1 && std::find(pool.begin(), pool.end(), r) == pool.end()) pool.push_back(std::move(r));
    }
    for (std::size_t done = 0; done < pool.size() && found == irr.size() && pool.size() < 2000;) {
      const std::size_t end = pool.size();
      for (std::size_t i = 0; i < end && found == irr.size(); ++i)
        for (std::size_t j = 0; j < end && found == irr.size(); ++j) {
          if (i == j || (i < done && j < done)) continue;
          const Rational nj = inner(g, pool[j], pool[j]);
          if (inner(g, pool[i], pool[j]) != nj || inner(g, pool[i], pool[i]) <= nj) continue;
          ElementFunction diff(n, Cyclotomic(e));
          for (int x = 0; x < n; ++x) diff[x] = pool[i][x] - pool[j][x];
          if (inner(g, diff, diff) == 1)
            take(std::move(diff));
          else if (std::find(pool.begin(), pool.end(), diff) == pool.end())
            pool.push_back(std::move(diff));
        }
      done = end;
    }
  }

  ElementFunction regular(n, Cyclotomic(e));
  regular[g.identity()] = Cyclotomic::from_integer(e, n);
  ElementFunction rebuilt(n, Cyclotomic(e));
  for (const auto& chi : irr)
    for (int x = 0; x < n; ++x) rebuilt[x] += chi[x] * chi[g.identity()];
  if (rebuilt != regular) irr.clear();
  return irr;
}

}  // namespace oracle
