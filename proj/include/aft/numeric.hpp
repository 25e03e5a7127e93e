#pragma once

// Exact integer helpers shared by every module: arbitrary precision integers,
// checked 64-bit arithmetic, modular inverses and small prime utilities.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aft {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an input violates a documented precondition or a computed
/// certificate fails. Carries a human readable witness in what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by checked 64-bit arithmetic; callers that can fall back to BigInt
/// catch this one specifically.
class OverflowError : public Error {
 public:
  using Error::Error;
};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 multiplication overflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 subtraction overflow");
  return r;
}

inline std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw Error("ipow: negative exponent");
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline BigInt big_pow(const BigInt& base, std::int64_t exp) {
  if (exp < 0) throw Error("big_pow: negative exponent");
  BigInt r = 1;
  BigInt b = base;
  auto e = static_cast<std::uint64_t>(exp);
  while (e > 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return r;
}

/// Nonnegative remainder of a modulo n (n > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n + n) % n;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd64(a, b), b);
}

/// Inverse of a modulo n; throws when gcd(a, n) != 1. Modulus 1 yields 0.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = mod(a, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw Error("inverse_mod: " + std::to_string(a) + " is not a unit mod " + std::to_string(n));
  return mod(old_s, n);
}

/// Exponent of p in n (n != 0).
inline int valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  n = n < 0 ? -n : n;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

/// Floor division for possibly negative numerators (b > 0).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= n; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

/// Smallest prime strictly greater than n.
inline std::int64_t next_prime_after(std::int64_t n) {
  std::int64_t c = n < 2 ? 2 : n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

/// Prime factorisation as (prime, exponent) pairs with increasing primes.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw Error("factorize: expected a positive integer");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Does the integer `d` divide `n`? (d > 0)
inline bool divides(const BigInt& d, const BigInt& n) { return n % d == 0; }

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace aft
