#include <doctest.h>

#include "brauerion/induct.hpp"
#include "brauerion/monomial.hpp"
#include "helpers.hpp"

using namespace brauerion;
using namespace testing_support;

namespace {

// Monomiality by brute force: some subgroup of index chi(1) carries a linear
// character whose Frobenius induction is chi element by element.
bool monomial_by_search(const GroupContext& g, const ClassFunction& chi) {
  const int d = static_cast<int>(chi.degree());
  const auto target = per_element(g, chi);
  for (const auto& members : oracle::all_subgroups(g.group())) {
    if (static_cast<int>(members.size()) * d != g.order()) continue;
    auto h = g.subgroup(members);
    for (const auto& lambda : h->table().rows) {
      if (!lambda.is_linear()) continue;
      if (oracle::frobenius_induce(g.group(), members, on_top(*h, lambda, g), g.conductor()) == target) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("S3 is a super M-group") {
  auto g = ctx("S3");
  const int deg2 = 2;
  REQUIRE(g->table().rows[deg2].degree() == 2);
  auto pairs = inducing_pairs(*g, 0, deg2);
  CHECK(pairs.size() == 3);  // from A3 twice (conjugate characters) and from S3
  CHECK(pairs.back().subgroup.order == 6);
  CHECK_FALSE(pairs.back().is_primitive_source);
  CHECK_FALSE(is_primitive(*g, 0, deg2));
  auto m = is_monomial(*g, 0, deg2);
  CHECK(m.holds);
  REQUIRE(m.witness);
  CHECK(m.witness->subgroup.order == 3);
  CHECK(m.witness->character.is_linear());
  CHECK(is_super_monomial(*g, 0, deg2).holds);
  CHECK(is_m_group(*g, 0));
  CHECK(is_super_m_group(*g, 0));
}

TEST_CASE("SL(2,3)") {
  auto g = ctx("SL23");
  const auto& rows = g->table().rows;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    CAPTURE(r);
    if (rows[r].degree() == 2) {
      CHECK(is_primitive(*g, 0, r));
      auto v = is_monomial(*g, 0, r);
      CHECK_FALSE(v.holds);
      CHECK_FALSE(v.witness);
      auto s = is_super_monomial(*g, 0, r);
      CHECK_FALSE(s.holds);
      REQUIRE(s.witness);
      CHECK(s.witness->is_primitive_source);
      CHECK_FALSE(s.witness->character.is_linear());
    } else {
      CHECK(is_monomial(*g, 0, r).holds);
    }
  }
  CHECK_FALSE(is_m_group(*g, 0));
  CHECK(is_m_group(*g, 2));
  CHECK(is_super_m_group(*g, 2));
  CHECK_FALSE(is_m_group(*g, 3));
}

TEST_CASE("abelian groups are super M-groups for every prime") {
  for (const char* spec : {"cyclic 1", "cyclic 8", "abelian [2,6]", "abelian [3,3]"}) {
    auto g = ctx(spec);
    for (int p : {0, 2, 3, 5}) {
      CHECK(is_m_group(*g, p));
      CHECK(is_super_m_group(*g, p));
    }
  }
}

TEST_CASE("monomiality agrees with a brute-force search") {
  for (const auto& entry : default_corpus().entries) {
    if (entry.expected_order > 24) continue;
    auto g = GroupContext::create(build_entry(entry));
    CAPTURE(entry.label);
    const auto& rows = g->table().rows;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      CHECK(is_monomial(*g, 0, r).holds == monomial_by_search(*g, rows[r]));
  }
}

TEST_CASE("inducing pairs really induce the target") {
  for (const char* spec : {"S4", "GL23", "semidirect 7 3 2"}) {
    auto g = ctx(spec);
    for (int p : {0, 2, 3}) {
      const auto& irr = g->irreducibles(p);
      for (int r = 0; r < static_cast<int>(irr.size()); ++r) {
        auto pairs = inducing_pairs(*g, p, r);
        REQUIRE_FALSE(pairs.empty());
        CHECK(pairs.back().subgroup.order == g->order());
        bool some_primitive = false;
        for (const auto& pr : pairs) {
          CHECK(induce(*g, pr.subgroup, pr.character) == irr[r]);
          some_primitive = some_primitive || pr.is_primitive_source;
        }
        CHECK(some_primitive);
        if (is_super_monomial(*g, p, r).holds) CHECK(is_monomial(*g, p, r).holds);
      }
    }
  }
}

TEST_CASE("classification reports") {
  auto gl = ctx("GL23");
  auto r = classify(*gl, 2);
  CHECK(r.is_solvable);
  CHECK_FALSE(r.is_m);
  CHECK(*r.is_m_p);
  CHECK(r.assertions_hold());
  auto j = r.to_json();
  std::set<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
  CHECK(keys == std::set<std::string>{"group", "p", "flags", "witnesses", "assertions"});
  CHECK(j["flags"].size() == 5);
  CHECK(j["p"] == 2);

  auto plain = classify(*ctx("S4"), std::nullopt);
  CHECK(plain.is_m);
  CHECK_FALSE(plain.is_m_p);
  CHECK(plain.to_json()["p"].is_null());
  CHECK(plain.to_text().find("M: true") != std::string::npos);

  CHECK(code_of([] { classify(*ctx("alternating 5"), 2); }) == ErrorCode::NotSolvable);
  auto a5 = classify(*ctx("alternating 5"), std::nullopt);
  CHECK_FALSE(a5.is_solvable);
  CHECK_FALSE(a5.is_m);
  CHECK(a5.assertions_hold());
}

TEST_CASE("Clifford dichotomy at prime index") {
  auto g = ctx("S3");
  auto a3 = subgroup_of_order(*g, 3);
  auto h = g->subgroup(a3);
  for (const auto& theta : h->table().rows) {
    auto out = clifford_dichotomy(*g, a3, theta);
    if (theta == ordinary(g->conductor(), {1, 1, 1})) {
      CHECK(out.kind == CliffordOutcome::Kind::Extends);
      CHECK(out.inertia.order == 6);
      CHECK(restrict(*g, out.character, a3) == theta);
    } else {
      CHECK(out.kind == CliffordOutcome::Kind::InducesIrreducibly);
      CHECK(out.inertia.order == 3);
      CHECK(out.character.degree() == 2);
      CHECK(is_irreducible(*g, out.character));
    }
  }
  auto trivial = g->subgroup(trivial_subgroup(g->group()));
  CHECK(code_of([&] { clifford_dichotomy(*g, trivial_subgroup(g->group()), trivial->table().rows[0]); }) ==
        ErrorCode::BadSpec);
  auto c2 = subgroup_of_order(*g, 2);
  CHECK(code_of([&] { clifford_dichotomy(*g, c2, g->subgroup(c2)->table().rows[0]); }) == ErrorCode::NotNormal);

  // Brauer version: S3 over A3 modulo 2
  for (const auto& phi : h->ibr(2).rows) {
    auto out = clifford_dichotomy(*g, a3, phi);
    CHECK(out.character.prime == 2);
    CHECK(is_irreducible(*g, out.character));
  }
}

TEST_CASE("normal subgroup scan for odd order") {
  auto g = ctx("heisenberg 3");
  auto rep = normal_closure_scan(*g, 3);
  CHECK(rep.applicable);
  CHECK(rep.normal_subgroups.size() == 7);
  CHECK(rep.all_m_p);

  auto f21 = ctx("semidirect 7 3 2");
  auto r21 = normal_closure_scan(*f21, 7);
  CHECK(r21.applicable);
  CHECK(r21.normal_subgroups.size() == 3);
  CHECK(r21.all_m_p);

  CHECK_FALSE(normal_closure_scan(*ctx("S3"), 3).applicable);
}
