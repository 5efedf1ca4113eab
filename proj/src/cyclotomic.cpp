#include "brauerion/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "brauerion/error.hpp"
#include "brauerion/numtheory.hpp"

namespace brauerion {

struct CyclotomicField {
  int e = 1;
  int degree = 1;
  std::vector<Integer> phi;                 // monic, lowest degree first
  std::vector<std::vector<Integer>> power;  // z^k in the power basis, 0 <= k < e
};

namespace {

// Exact division by a monic polynomial; coefficients lowest degree first.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {Integer(0)};
  std::vector<Integer> quot(num.size() - dn, Integer(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

std::vector<Integer> compute_phi(int e);

const CyclotomicField& field(int e) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  {
    std::lock_guard lock(mutex);
    if (auto it = fields.find(e); it != fields.end()) return *it->second;
  }
  // Built outside the lock since compute_phi recurses into field().
  auto f = std::make_unique<CyclotomicField>();
  f->e = e;
  f->phi = compute_phi(e);
  f->degree = static_cast<int>(f->phi.size()) - 1;
  const int d = f->degree;
  f->power.assign(e, std::vector<Integer>(d, Integer(0)));
  std::vector<Integer> cur(d, Integer(0));
  cur[0] = 1;
  for (int k = 0; k < e; ++k) {
    f->power[k] = cur;
    // cur *= z, then eliminate z^d using the monic relation.
    Integer top = cur[d - 1];
    for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < d; ++i) cur[i] -= top * f->phi[i];
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = fields.emplace(e, std::move(f));
  return *it->second;
}

std::vector<Integer> compute_phi(int e) {
  if (e < 1) throw Error(ErrorCode::BadSpec, "cyclotomic conductor must be positive");
  std::vector<Integer> poly(e + 1, Integer(0));
  poly[0] = -1;
  poly[e] = 1;
  for (int d = 1; d < e; ++d)
    if (e % d == 0) poly = divide_monic(std::move(poly), field(d).phi);
  return poly;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int e) { return field(e).phi; }

Cyclotomic::Cyclotomic() : Cyclotomic(1) {}

Cyclotomic::Cyclotomic(int conductor)
    : field_(&field(conductor)), num_(field_->degree, Integer(0)), den_(1) {}

Cyclotomic::Cyclotomic(const CyclotomicField* f, std::vector<Integer> num, Integer den)
    : field_(f), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Cyclotomic Cyclotomic::from_integer(int conductor, const Integer& value) {
  Cyclotomic c(conductor);
  c.num_[0] = value;
  return c;
}

Cyclotomic Cyclotomic::from_rational(int conductor, const Rational& value) {
  Cyclotomic c(conductor);
  c.num_[0] = boost::multiprecision::numerator(value);
  c.den_ = boost::multiprecision::denominator(value);
  c.normalize();
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, long long k) {
  const CyclotomicField& f = field(conductor);
  long long r = ((k % f.e) + f.e) % f.e;
  return Cyclotomic(&f, f.power[r], Integer(1));
}

Cyclotomic Cyclotomic::from_root_multiset(int conductor, std::span<const long long> exponents) {
  std::vector<Integer> mult(conductor, Integer(0));
  for (long long k : exponents) mult[((k % conductor) + conductor) % conductor] += 1;
  return from_multiplicities(conductor, mult);
}

Cyclotomic Cyclotomic::from_multiplicities(int conductor, std::span<const Integer> mult) {
  const CyclotomicField& f = field(conductor);
  std::vector<Integer> raw(mult.begin(), mult.end());
  raw.resize(f.e, Integer(0));
  return Cyclotomic(&f, reduce(f, raw), Integer(1));
}

int Cyclotomic::conductor() const noexcept { return field_->e; }
int Cyclotomic::degree() const noexcept { return field_->degree; }

std::vector<Integer> Cyclotomic::reduce(const CyclotomicField& f, const std::vector<Integer>& raw) {
  std::vector<Integer> out(f.degree, Integer(0));
  for (int k = 0; k < f.e; ++k) {
    const Integer& c = raw[k];
    if (c == 0) continue;
    if (k < f.degree) {
      out[k] += c;
      continue;
    }
    const auto& row = f.power[k];
    for (int i = 0; i < f.degree; ++i)
      if (row[i] != 0) out[i] += c * row[i];
  }
  return out;
}

void Cyclotomic::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) g = boost::multiprecision::gcd(g, c);
  }
  if (g == 1) return;
  den_ /= g;
  for (auto& c : num_) c /= g;
}

void Cyclotomic::check_same_field(const Cyclotomic& other) const {
  if (field_ != other.field_)
    throw Error(ErrorCode::ConductorMismatch, "conductors " + std::to_string(field_->e) + " and " +
                                                  std::to_string(other.field_->e));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::rational_part() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return std::nullopt;
  return Rational(num_[0], den_);
}

std::vector<Rational> Cyclotomic::coordinates() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) out.emplace_back(c, den_);
  return out;
}

Cyclotomic Cyclotomic::galois(long long a) const {
  const int e = field_->e;
  long long r = ((a % e) + e) % e;
  if (std::gcd(r, static_cast<long long>(e)) != 1 && e > 1)
    throw Error(ErrorCode::BadSpec, "galois exponent not prime to the conductor");
  std::vector<Integer> raw(e, Integer(0));
  for (int k = 0; k < field_->degree; ++k)
    if (num_[k] != 0) raw[(r * k) % e] += num_[k];
  return Cyclotomic(field_, reduce(*field_, raw), den_);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::scale(const Rational& r) const {
  std::vector<Integer> num = num_;
  const Integer& rn = boost::multiprecision::numerator(r);
  for (auto& c : num) c *= rn;
  return Cyclotomic(field_, std::move(num), den_ * boost::multiprecision::denominator(r));
}

Cyclotomic Cyclotomic::embed(int conductor) const {
  if (conductor == field_->e) return *this;
  if (conductor % field_->e != 0)
    throw Error(ErrorCode::ConductorMismatch, "cannot embed conductor " + std::to_string(field_->e) +
                                                  " into " + std::to_string(conductor));
  const CyclotomicField& f = field(conductor);
  const int m = conductor / field_->e;
  std::vector<Integer> raw(conductor, Integer(0));
  for (int k = 0; k < field_->degree; ++k)
    if (num_[k] != 0) raw[(m * k) % conductor] += num_[k];
  return Cyclotomic(&f, reduce(f, raw), den_);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  check_same_field(other);
  if (den_ == other.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += other.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * other.den_ + other.num_[i] * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  check_same_field(other);
  const int d = field_->degree;
  auto rational_only = [d](const std::vector<Integer>& v) {
    for (int i = 1; i < d; ++i)
      if (v[i] != 0) return false;
    return true;
  };
  if (rational_only(other.num_)) {
    for (auto& c : num_) c *= other.num_[0];
  } else if (rational_only(num_)) {
    Integer s = num_[0];
    num_ = other.num_;
    for (auto& c : num_) c *= s;
  } else {
    const int e = field_->e;
    std::vector<Integer> raw(e, Integer(0));
    for (int i = 0; i < d; ++i) {
      if (num_[i] == 0) continue;
      for (int j = 0; j < d; ++j)
        if (other.num_[j] != 0) raw[(i + j) % e] += num_[i] * other.num_[j];
    }
    num_ = reduce(*field_, raw);
  }
  den_ *= other.den_;
  normalize();
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

std::string Cyclotomic::to_string() const {
  if (auto r = rational_part()) {
    return boost::multiprecision::denominator(*r) == 1 ? boost::multiprecision::numerator(*r).str() : r->str();
  }
  std::string out;
  for (int k = 0; k < field_->degree; ++k) {
    if (num_[k] == 0) continue;
    Rational c(num_[k], den_);
    std::string term;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (k == 0) {
      term = mag.str();
    } else {
      std::string root = "z" + std::to_string(field_->e) + "^" + std::to_string(k);
      term = mag == 1 ? root : mag.str() + "*" + root;
    }
    if (negative)
      out += "-";
    else if (!out.empty())
      out += "+";
    out += term;
  }
  return out;
}

}  // namespace brauerion
