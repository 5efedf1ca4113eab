#include <doctest.h>

#include <complex>
#include <random>

#include "brauerion/cyclotomic.hpp"
#include "brauerion/error.hpp"
#include "brauerion/numtheory.hpp"
#include "oracles.hpp"

using namespace brauerion;

namespace {

Cyclotomic random_element(std::mt19937_64& rng, int e) {
  std::uniform_int_distribution<int> coeff(-3, 3), den(1, 4);
  std::vector<Integer> mult(e);
  for (auto& m : mult) m = coeff(rng);
  return Cyclotomic::from_multiplicities(e, mult).scale(Rational(1, den(rng)));
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(b)); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<Integer>{1, 0, 0, 1, 0, 0, 1});
  for (int e = 1; e <= 60; ++e) CHECK(static_cast<int>(cyclotomic_polynomial(e).size()) == euler_phi(e) + 1);
}

TEST_CASE("roots of unity") {
  auto z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z3 + z3 * z3 == Cyclotomic::from_integer(3, -1));
  auto z4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(z4.conj() == -z4);
  CHECK(z4 * z4 == Cyclotomic::from_integer(4, -1));
  Cyclotomic sum(5);
  for (int k = 0; k < 5; ++k) sum += Cyclotomic::root_of_unity(5, k);
  CHECK(sum.is_zero());
  CHECK(Cyclotomic::root_of_unity(6, 7) == Cyclotomic::root_of_unity(6, 1));
  CHECK(Cyclotomic::root_of_unity(6, -1) == Cyclotomic::root_of_unity(6, 5));
}

TEST_CASE("root multisets") {
  std::vector<long long> ks = {1, 2};
  CHECK(Cyclotomic::from_root_multiset(3, ks) == Cyclotomic::from_integer(3, -1));
  std::vector<long long> zeros = {0, 0, 0};
  CHECK(Cyclotomic::from_root_multiset(7, zeros) == Cyclotomic::from_integer(7, 3));
  // z8 + z8^7 = sqrt 2
  std::vector<long long> s2 = {1, 7};
  auto root2 = Cyclotomic::from_root_multiset(8, s2);
  CHECK(close(oracle::numeric(root2), std::sqrt(2.0)));
  CHECK(root2 * root2 == Cyclotomic::from_integer(8, 2));
  CHECK_FALSE(root2.rational_part());
}

TEST_CASE("rational part") {
  CHECK(*Cyclotomic::from_rational(12, Rational(3, 4)).rational_part() == Rational(3, 4));
  CHECK_FALSE(Cyclotomic::root_of_unity(12, 1).rational_part());
  auto x = Cyclotomic::root_of_unity(12, 1) + Cyclotomic::root_of_unity(12, 11);  // sqrt 3
  CHECK(*(x * x).rational_part() == 3);
}

TEST_CASE("ring axioms with numeric shadows") {
  std::mt19937_64 rng(12345);
  for (int e = 1; e <= 24; ++e) {
    CAPTURE(e);
    const auto zero = Cyclotomic(e), one = Cyclotomic::from_integer(e, 1);
    for (int t = 0; t < 10000 / 24 + 1; ++t) {
      auto a = random_element(rng, e), b = random_element(rng, e), c = random_element(rng, e);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK((a - a).is_zero());
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(close(oracle::numeric(a + b), oracle::numeric(a) + oracle::numeric(b)));
      CHECK(close(oracle::numeric(a * b), oracle::numeric(a) * oracle::numeric(b)));
      CHECK(close(oracle::numeric(a.conj()), std::conj(oracle::numeric(a))));
      // equal values have identical storage
      auto d = (a * b) - (b * a) + c;
      CHECK(d.numerators() == c.numerators());
      CHECK(d.denominator() == c.denominator());
    }
  }
}

TEST_CASE("galois action and orbit sums") {
  std::mt19937_64 rng(7);
  for (int e : {5, 8, 9, 12, 15, 24}) {
    for (int t = 0; t < 50; ++t) {
      auto a = random_element(rng, e), b = random_element(rng, e);
      Cyclotomic trace(e);
      for (int k = 1; k < e; ++k) {
        if (std::gcd(k, e) != 1) continue;
        CHECK(a.galois(k) * b.galois(k) == (a * b).galois(k));
        trace += a.galois(k);
      }
      CHECK(trace.rational_part());
      CHECK(a.galois(e - 1) == a.conj());
    }
    // the sum over the orbit of a root of unity is an integer
    Cyclotomic s(e);
    for (int k = 1; k < e; ++k)
      if (std::gcd(k, e) == 1) s += Cyclotomic::root_of_unity(e, k);
    auto r = s.rational_part();
    REQUIRE(r);
    CHECK(boost::multiprecision::denominator(*r) == 1);
  }
}

TEST_CASE("embedding keeps values") {
  auto z3 = Cyclotomic::root_of_unity(3, 1);
  auto up = z3.embed(12);
  CHECK(up == Cyclotomic::root_of_unity(12, 4));
  CHECK(close(oracle::numeric(up), oracle::numeric(z3)));
  CHECK_THROWS_AS(z3.embed(8), Error);
}

TEST_CASE("mixing conductors is rejected") {
  auto a = Cyclotomic::root_of_unity(3, 1), b = Cyclotomic::root_of_unity(4, 1);
  try {
    a += b;
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConductorMismatch);
  }
  CHECK_THROWS_AS(a * b, Error);
}

TEST_CASE("printing") {
  CHECK(Cyclotomic::from_integer(5, -3).to_string() == "-3");
  CHECK(Cyclotomic::from_rational(5, Rational(1, 2)).to_string() == "1/2");
  CHECK(Cyclotomic::root_of_unity(3, 1).to_string() == "z3^1");
  CHECK(Cyclotomic::root_of_unity(3, 2).to_string() == "-1-z3^1");
  auto x = Cyclotomic::from_integer(12, -1) + Cyclotomic::root_of_unity(12, 3).scale(2);
  CHECK(x.to_string() == "-1+2*z12^3");
  CHECK(Cyclotomic::root_of_unity(4, 1).scale(Rational(-1, 3)).to_string() == "-1/3*z4^1");
}
