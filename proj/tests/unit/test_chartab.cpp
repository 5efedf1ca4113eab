#include <doctest.h>

#include <algorithm>

#include "brauerion/chartab.hpp"
#include "helpers.hpp"

using namespace brauerion;
using namespace testing_support;

namespace {

std::vector<int> degrees(const CharacterTable& t) {
  std::vector<int> d;
  for (const auto& r : t.rows) d.push_back(static_cast<int>(r.degree()));
  return d;
}

int class_with(const ConjugacyClassData& cc, int order, int size) {
  for (int i = 0; i < cc.class_count; ++i)
    if (cc.rep_order[i] == order && cc.size[i] == size) return i;
  FAIL("no such class");
  return -1;
}

}  // namespace

TEST_CASE("class algebra constants of S3") {
  auto g = construct("S3");
  auto cc = conjugacy_classes(g);
  auto a = class_algebra_constants(g, cc);
  const int t = class_with(cc, 2, 3), r = class_with(cc, 3, 2);
  CHECK(a(t, t, 0) == 3);
  CHECK(a(t, t, r) == 3);
  CHECK(a(t, t, t) == 0);
  CHECK(a(r, r, 0) == 2);
  CHECK(a(r, r, r) == 1);
  CHECK(a(r, t, t) == 2);
  CHECK(a(0, t, t) == 1);
}

TEST_CASE("class algebra constants against direct counts") {
  for (const char* spec : {"Q8", "A4", "semidirect 7 3 2", "D8"}) {
    auto g = construct(spec);
    auto cc = conjugacy_classes(g);
    auto a = class_algebra_constants(g, cc);
    for (int i = 0; i < cc.class_count; ++i)
      for (int j = 0; j < cc.class_count; ++j)
        for (int k = 0; k < cc.class_count; ++k) {
          long long n = 0;
          for (Element x : cc.members[i])
            for (Element y : cc.members[j]) n += g.mul(x, y) == cc.rep[k];
          CHECK(a(i, j, k) == n);
        }
  }
}

TEST_CASE("dixon prime") {
  CHECK(dixon_prime(6, 6) == 7);
  CHECK(dixon_prime(8, 4) == 5);
  CHECK(dixon_prime(24, 12) == 13);
  CHECK(dixon_prime(1, 1) == 3);
}

TEST_CASE("small tables") {
  auto c2 = ctx("cyclic 2");
  CHECK(degrees(c2->table()) == std::vector<int>{1, 1});
  auto s3 = ctx("S3");
  CHECK(degrees(s3->table()) == std::vector<int>{1, 1, 2});
  auto q8 = ctx("Q8");
  CHECK(degrees(q8->table()) == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(degrees(ctx("SL23")->table()) == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
  CHECK(degrees(ctx("GL23")->table()) == std::vector<int>{1, 1, 2, 2, 2, 3, 3, 4});
  CHECK(degrees(ctx("alternating 5")->table()) == std::vector<int>{1, 3, 3, 4, 5});

  // the degree 2 character of Q8 is 0 off the centre and -2 on the central involution
  const auto& chi = q8->table().rows.back();
  for (int c = 0; c < q8->classes().class_count; ++c) {
    int v = c == 0 ? 2 : q8->classes().rep_order[c] == 2 ? -2 : 0;
    CHECK(chi.values[c] == Cyclotomic::from_integer(q8->conductor(), v));
  }
}

TEST_CASE("tables are orthonormal element by element") {
  for (const auto& entry : default_corpus().entries) {
    if (entry.expected_order > 60) continue;
    auto g = GroupContext::create(build_entry(entry));
    CAPTURE(entry.label);
    const auto& t = g->table();
    CHECK(static_cast<int>(t.rows.size()) == g->classes().class_count);
    std::vector<oracle::ElementFunction> rows;
    for (const auto& r : t.rows) rows.push_back(per_element(*g, r));
    long long squares = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int d = static_cast<int>(t.rows[i].degree());
      CHECK(g->order() % d == 0);
      squares += 1LL * d * d;
      for (std::size_t j = 0; j < rows.size(); ++j)
        CHECK(oracle::inner(g->group(), rows[i], rows[j]) == (i == j ? 1 : 0));
    }
    CHECK(squares == g->order());
    CHECK(verify_orthogonality(g->classes(), g->order(), t).ok());
  }
}

TEST_CASE("a perturbed table fails orthogonality") {
  auto g = construct("S3");
  auto cc = conjugacy_classes(g);
  auto t = character_table(g, cc);
  REQUIRE(verify_orthogonality(cc, g.order(), t).ok());
  auto bad = t;
  bad.rows[2].values[1] += Cyclotomic::from_integer(t.exponent, 1);
  auto report = verify_orthogonality(cc, g.order(), bad);
  CHECK_FALSE(report.ok());
  auto swapped = t;
  swapped.rows[0].values[0] = Cyclotomic::from_integer(t.exponent, 2);
  CHECK_FALSE(verify_orthogonality(cc, g.order(), swapped).ok());
}

TEST_CASE("tables are deterministic") {
  for (const char* spec : {"GL23", "heisenberg 3", "abelian [2,6]"}) {
    auto g = construct(spec);
    auto cc = conjugacy_classes(g);
    auto a = character_table(g, cc), b = character_table(g, cc);
    CHECK(a.rows == b.rows);
    CHECK(a.dixon_prime == b.dixon_prime);
    for (std::size_t i = 1; i < a.rows.size(); ++i) {
      auto di = a.rows[i - 1].degree(), dj = a.rows[i].degree();
      CHECK(di <= dj);
      if (di == dj) CHECK(a.rows[i - 1].printed() <= a.rows[i].printed());
    }
  }
}

TEST_CASE("abelian tables are the dual group") {
  for (const char* spec : {"cyclic 12", "abelian [2,2,2]", "abelian [3,9]"}) {
    auto g = ctx(spec);
    const auto& t = g->table();
    CHECK(static_cast<int>(t.rows.size()) == g->order());
    for (const auto& r : t.rows) CHECK(r.is_linear());
    // products of rows are rows
    for (const auto& a : t.rows)
      for (const auto& b : t.rows) {
        ClassFunction prod = a;
        for (std::size_t c = 0; c < prod.values.size(); ++c) prod.values[c] *= b.values[c];
        CHECK(std::find(t.rows.begin(), t.rows.end(), prod) != t.rows.end());
      }
  }
}
