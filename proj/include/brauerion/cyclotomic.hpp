#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace brauerion {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficients of the e-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(int e);

struct CyclotomicField;

/// An element of Q(zeta_e) in the power basis 1, z, ..., z^(phi(e)-1),
/// stored as integer numerators over one positive common denominator with
/// gcd(numerators, denominator) = 1. Equal values have identical storage.
class Cyclotomic {
 public:
  /// Zero in Q(zeta_1) = Q.
  Cyclotomic();
  /// Zero in Q(zeta_e).
  explicit Cyclotomic(int conductor);

  static Cyclotomic from_integer(int conductor, const Integer& value);
  static Cyclotomic from_rational(int conductor, const Rational& value);
  /// zeta_e^k
  static Cyclotomic root_of_unity(int conductor, long long k);
  /// Sum of zeta_e^k over the multiset (residues taken mod e).
  static Cyclotomic from_root_multiset(int conductor, std::span<const long long> exponents);
  /// Sum of mult[k] * zeta_e^k for k = 0..e-1.
  static Cyclotomic from_multiplicities(int conductor, std::span<const Integer> mult);

  int conductor() const noexcept;
  int degree() const noexcept;
  const std::vector<Integer>& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const;
  /// The value when it lies in Q, else empty.
  std::optional<Rational> rational_part() const;
  /// Power-basis coordinates as rationals.
  std::vector<Rational> coordinates() const;

  Cyclotomic conj() const;
  /// The field automorphism zeta -> zeta^a, gcd(a, e) = 1.
  Cyclotomic galois(long long a) const;
  Cyclotomic scale(const Rational& r) const;
  /// The same number viewed in Q(zeta_f); e must divide f.
  Cyclotomic embed(int conductor) const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// `a` or `a/b` for rationals, else `c*z{e}^k` terms by ascending k, for
  /// example `-1+2*z12^3`. A unit coefficient prints without `1*`.
  std::string to_string() const;

 private:
  Cyclotomic(const CyclotomicField* field, std::vector<Integer> num, Integer den);
  void normalize();
  void check_same_field(const Cyclotomic& other) const;
  /// Reduces raw coefficients of z^0..z^(e-1) into the power basis.
  static std::vector<Integer> reduce(const CyclotomicField& field, const std::vector<Integer>& raw);

  const CyclotomicField* field_;
  std::vector<Integer> num_;
  Integer den_;
};

}  // namespace brauerion
