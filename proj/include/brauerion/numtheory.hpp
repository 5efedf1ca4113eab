#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace brauerion {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<int> prime_divisors(long long n) {
  std::vector<int> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

/// Largest divisor of n coprime to p.
inline long long p_prime_part(long long n, long long p) {
  while (p > 1 && n % p == 0) n /= p;
  return n;
}

inline int euler_phi(int n) {
  int result = n;
  for (int p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((__int128)result * base % mod);
    base = static_cast<std::int64_t>((__int128)base * base % mod);
    exp >>= 1;
  }
  return result;
}

/// Inverse modulo a prime.
inline std::int64_t mod_inv(std::int64_t a, std::int64_t prime) {
  return mod_pow(a, prime - 2, prime);
}

}  // namespace brauerion
