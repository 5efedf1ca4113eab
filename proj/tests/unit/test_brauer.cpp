#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "brauerion/brauer.hpp"
#include "brauerion/numtheory.hpp"
#include "helpers.hpp"

using namespace brauerion;
using namespace testing_support;

namespace {

std::set<std::vector<std::string>> printed_rows(const BrauerTable& t) {
  std::set<std::vector<std::string>> out;
  for (const auto& r : t.rows) out.insert(r.printed());
  return out;
}

}  // namespace

TEST_CASE("S3 modulo 2 and 3") {
  auto g = ctx("S3");
  const auto& b2 = g->ibr(2);
  REQUIRE(b2.rows.size() == 2);
  CHECK(b2.rows[0].printed() == std::vector<std::string>{"1", "1"});
  CHECK(b2.rows[1].printed() == std::vector<std::string>{"2", "-1"});
  CHECK(g->table().rows[b2.lift_of[1]].degree() == 2);

  const auto& b3 = g->ibr(3);
  REQUIRE(b3.rows.size() == 2);
  CHECK(b3.rows[0].printed() == std::vector<std::string>{"1", "-1"});
  CHECK(b3.rows[1].printed() == std::vector<std::string>{"1", "1"});
  for (const auto& r : b3.rows) CHECK(r.prime == 3);

  // restriction of the degree 2 character to the 3-regular classes
  auto chi = g->table().rows[2];
  auto phi = restrict_to_p_regular(chi, g->p_regular(3), 3);
  CHECK(phi.printed() == std::vector<std::string>{"2", "0"});
  auto coords = decompose_in_ibr(phi, b3);
  CHECK(coords == std::vector<Rational>{1, 1});
}

TEST_CASE("SL(2,3) modulo 2 has three linear rows") {
  auto g = ctx("SL23");
  const auto& b = g->ibr(2);
  CHECK(b.p_regular.size() == 3);
  REQUIRE(b.rows.size() == 3);
  for (const auto& r : b.rows) CHECK(r.is_linear());
  CHECK(g->ibr(3).rows.size() == 3);  // classes of orders 1, 2, 4
}

TEST_CASE("a p-group has only the trivial Brauer character") {
  for (const char* spec : {"Q8", "D8", "heisenberg 3", "abelian [2,4]"}) {
    auto g = ctx(spec);
    const int p = prime_divisors(g->order())[0];
    CHECK(g->ibr(p).rows.size() == 1);
    CHECK(linear_brauer_characters(*g, p).size() == 1);
  }
  CHECK(linear_brauer_characters(*ctx("Q8"), 3).size() == 4);
}

TEST_CASE("decomposition in IBr") {
  auto g = ctx("S3");
  const auto& b = g->ibr(2);
  ClassFunction psi = ordinary(g->conductor(), {6, 0});
  psi.prime = 2;
  CHECK(decompose_in_ibr(psi, b) == std::vector<Rational>{2, 2});
  ClassFunction wrong = ordinary(g->conductor(), {6, 0, 0});
  wrong.prime = 2;
  CHECK(code_of([&] { decompose_in_ibr(wrong, b); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("IBr counts equal the number of p-regular classes") {
  for (const auto& entry : default_corpus().entries) {
    auto g = GroupContext::create(build_entry(entry));
    CAPTURE(entry.label);
    for (int p : {2, 3, 5, 7}) {
      const auto& b = g->ibr(p);
      CHECK(b.rows.size() == g->p_regular(p).size());
      for (std::size_t r = 0; r < b.rows.size(); ++r) {
        CHECK(restrict_to_p_regular(g->table().rows[b.lift_of[r]], b.p_regular, p) == b.rows[r]);
        CHECK(find_lift(*g, b.rows[r]).degree() == b.rows[r].degree());
      }
      if (g->order() % p != 0) CHECK(b.rows.size() == g->table().rows.size());
    }
  }
}

TEST_CASE("extraction does not depend on the order within a degree") {
  std::mt19937 rng(3);
  for (const char* spec : {"GL23", "SL23", "S4", "semidirect 13 3 3", "product S3 cyclic 3"}) {
    auto g = ctx(spec);
    const auto& t = g->table();
    for (int p : prime_divisors(g->order())) {
      auto reference = printed_rows(g->ibr(p));
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> order(t.rows.size());
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t lo = 0; lo < order.size();) {
          std::size_t hi = lo;
          while (hi < order.size() && t.rows[hi].degree() == t.rows[lo].degree()) ++hi;
          std::shuffle(order.begin() + lo, order.begin() + hi, rng);
          lo = hi;
        }
        CHECK(printed_rows(extract_ibr(t, g->p_regular(p), p, order)) == reference);
      }
    }
  }
}

TEST_CASE("brauer tables need solvability only when p divides the order") {
  auto a5 = ctx("alternating 5");
  CHECK(code_of([&] { a5->ibr(2); }) == ErrorCode::NotSolvable);
  CHECK(code_of([&] { a5->ibr(5); }) == ErrorCode::NotSolvable);
  CHECK(a5->ibr(7).rows.size() == 5);
  CHECK(code_of([&] { ctx("S3")->ibr(1); }) == ErrorCode::BadSpec);
}

TEST_CASE("no lift for a non-character") {
  auto g = ctx("S3");
  ClassFunction phi = ordinary(g->conductor(), {3, 0});
  phi.prime = 2;
  CHECK(code_of([&] { find_lift(*g, phi); }) == ErrorCode::NoLift);
}

TEST_CASE("conjugating a character of a normal subgroup") {
  auto g = ctx("S3");
  auto a3 = subgroup_of_order(*g, 3);
  auto h = g->subgroup(a3);
  const auto& rows = h->table().rows;
  Element t = -1;
  for (Element x = 0; x < g->order(); ++x)
    if (g->group().element_order(x) == 2) t = x;
  int faithful = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto conj = conjugate_brauer(*g, a3, rows[r], t);
    CHECK(conj.subgroup.members == a3.members);
    if (rows[r].degree() == 1 && !(rows[r] == ordinary(g->conductor(), {1, 1, 1}))) {
      ++faithful;
      ClassFunction bar = rows[r];
      for (auto& v : bar.values) v = v.conj();
      CHECK(conj.character == bar);
      CHECK(inertia_group(*g, a3, rows[r]).order == 3);
    } else {
      CHECK(conj.character == rows[r]);
      CHECK(inertia_group(*g, a3, rows[r]).order == 6);
    }
  }
  CHECK(faithful == 2);

  auto c2 = subgroup_of_order(*g, 2);
  CHECK(code_of([&] { inertia_group(*g, c2, g->subgroup(c2)->table().rows[0]); }) == ErrorCode::NotNormal);
}

TEST_CASE("conjugation moves a non-normal subgroup") {
  auto g = ctx("S4");
  auto c3 = subgroup_of_order(*g, 3);
  auto h = g->subgroup(c3);
  for (Element x = 0; x < g->order(); ++x) {
    auto conj = conjugate_brauer(*g, c3, h->table().rows[1], x);
    CHECK(conj.subgroup.members == conjugate_members(g->group(), c3.members, x));
    CHECK(conj.character.values.size() == 3);
  }
}
