#pragma once

/**
 * @file numtheory.hpp
 * @brief Elementary number theory for power digraphs.
 *
 * Totient, Moebius, multiplicative order, the coprime split n = t * w with
 * respect to an exponent k, and exact big-integer combinatorics. Everything
 * here works on machine integers except BigCount, which is exact and
 * unbounded (automorphism group orders grow factorially).
 */

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pdg/errors.hpp"

namespace pdg {

using BigCount = boost::multiprecision::cpp_int;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// b^e mod m, with m = 1 giving 0.
inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return result;
}

// All positive divisors of m in ascending order (trial division up to sqrt).
inline std::vector<std::uint64_t> divisors(std::uint64_t m) {
  if (m == 0) throw DomainError("divisors: m must be positive");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    low.push_back(d);
    if (d != m / d) high.push_back(m / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

// Distinct prime factors in ascending order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  if (m == 0) throw DomainError("prime_factors: m must be positive");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    primes.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

inline bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) return false;
  return true;
}

inline std::uint64_t euler_phi(std::uint64_t m) {
  if (m == 0) throw DomainError("euler_phi: m must be >= 1");
  std::uint64_t result = m;
  for (std::uint64_t p : prime_factors(m)) result = result / p * (p - 1);
  return result;
}

inline int moebius(std::uint64_t m) {
  if (m == 0) throw DomainError("moebius: m must be >= 1");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

/// Least e >= 1 with k^e = 1 (mod d). The trivial modulus d = 1 has order 1.
inline std::uint64_t mult_order(std::uint64_t k, std::uint64_t d) {
  if (d == 0) throw DomainError("mult_order: modulus must be >= 1");
  if (d == 1) return 1;
  if (std::gcd(k, d) != 1)
    throw DomainError("mult_order: gcd(" + std::to_string(k) + ", " + std::to_string(d) +
                      ") != 1");
  const std::uint64_t base = k % d;
  std::uint64_t x = base;
  std::uint64_t e = 1;
  while (x != 1) {
    x = mul_mod(x, base, d);
    ++e;
  }
  return e;
}

// Reduces an arbitrary exponent K >= 1 to the representative in 1..n.
inline std::uint64_t normalize_exponent(std::uint64_t big_k, std::uint64_t n) {
  if (n == 0) throw DomainError("normalize_exponent: n must be >= 1");
  if (big_k == 0) throw DomainError("normalize_exponent: exponent must be >= 1");
  return (big_k - 1) % n + 1;
}

/// n = t * w where t is the largest divisor of n coprime to k.
struct CoprimeSplit {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t t = 0;
  std::uint64_t w = 0;

  bool operator==(const CoprimeSplit&) const = default;
};

// Largest divisor of m coprime to k: strip gcd(m, k) until nothing is shared.
inline std::uint64_t coprime_part(std::uint64_t m, std::uint64_t k) {
  for (std::uint64_t g = std::gcd(m, k); g != 1; g = std::gcd(m, k)) m /= g;
  return m;
}

inline CoprimeSplit coprime_split(std::uint64_t n, std::uint64_t k) {
  if (n <= 1) throw DomainError("coprime_split: n must be > 1");
  if (k < 1 || k > n) throw DomainError("coprime_split: k must lie in 1..n");
  const std::uint64_t t = coprime_part(n, k);
  return {n, k, t, n / t};
}

/// Least h >= 0 with w | k^h. Exists iff every prime of w divides k.
inline std::uint64_t min_pow_divides(std::uint64_t w, std::uint64_t k) {
  if (w == 0) throw DomainError("min_pow_divides: w must be >= 1");
  std::uint64_t h = 0;
  while (w != 1) {
    const std::uint64_t g = std::gcd(w, k);
    if (g == 1)
      throw DomainError("min_pow_divides: a prime of w does not divide k");
    w /= g;
    ++h;
  }
  return h;
}

// gcd(k^m - 1, n) without forming k^m.
inline std::uint64_t gcd_pow_minus_one(std::uint64_t k, std::uint64_t m, std::uint64_t n) {
  if (n == 0) throw DomainError("gcd_pow_minus_one: n must be >= 1");
  const std::uint64_t x = pow_mod(k, m, n);
  return std::gcd((x + n - 1) % n, n);
}

inline BigCount big_factorial(std::uint64_t m) {
  BigCount result = 1;
  for (std::uint64_t i = 2; i <= m; ++i) result *= i;
  return result;
}

inline BigCount big_pow(const BigCount& base, std::uint64_t e) {
  BigCount result = 1;
  BigCount b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

inline std::string to_decimal(const BigCount& value) { return value.str(); }

inline BigCount from_decimal(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("from_decimal: not a nonnegative decimal integer: '" + text + "'");
  return BigCount(text);
}

}  // namespace pdg
