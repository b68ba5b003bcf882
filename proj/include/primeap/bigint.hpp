#pragma once

// Arbitrary-precision helpers: modular arithmetic, CRT, integer roots and
// probabilistic primality on boost::multiprecision::cpp_int.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/integer.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

#include <span>
#include <utility>

#include "primeap/errors.hpp"

namespace primeap {

using BigInt = boost::multiprecision::cpp_int;

namespace bigint {

inline BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& m) {
  return boost::multiprecision::powm(mod(base, m), exp, m);
}

// Inverse of a modulo m; throws when gcd(a, m) != 1.
inline BigInt inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod(a, m), r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("bigint::inverse: not invertible");
  return mod(old_s, m);
}

struct Congruence {
  BigInt residue;
  BigInt modulus;
};

// Combines x = r_i (mod m_i) for pairwise coprime moduli.
inline Congruence crt(std::span<const Congruence> system) {
  Congruence acc{0, 1};
  for (const auto& c : system) {
    if (gcd(acc.modulus, c.modulus) != 1) throw DomainError("bigint::crt: moduli not coprime");
    // x = acc.residue + acc.modulus * k, with k = (r - acc.residue) / acc.modulus mod m.
    const BigInt k = mod((c.residue - acc.residue) * inverse(acc.modulus, c.modulus), c.modulus);
    acc.residue += acc.modulus * k;
    acc.modulus *= c.modulus;
    acc.residue = mod(acc.residue, acc.modulus);
  }
  return acc;
}

inline Congruence crt(std::initializer_list<Congruence> system) {
  return crt(std::span<const Congruence>(system.begin(), system.size()));
}

// floor(x^{1/3}) for x >= 0.
inline BigInt icbrt(const BigInt& x) {
  if (x < 0) throw DomainError("bigint::icbrt: negative input");
  if (x < 2) return x;
  // Start above the root: 2^ceil(bits/3).
  const auto bits = boost::multiprecision::msb(x) + 1;
  BigInt r = BigInt(1) << ((bits + 2) / 3);
  while (true) {
    BigInt next = (2 * r + x / (r * r)) / 3;
    if (next >= r) break;
    r = next;
  }
  while (r * r * r > x) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= x) ++r;
  return r;
}

// ceil(x^{1/3}) for x >= 0.
inline BigInt icbrt_ceil(const BigInt& x) {
  BigInt r = icbrt(x);
  if (r * r * r < x) ++r;
  return r;
}

inline BigInt isqrt(const BigInt& x) {
  if (x < 0) throw DomainError("bigint::isqrt: negative input");
  return boost::multiprecision::sqrt(x);
}

// Miller-Rabin with fixed-seed random bases: deterministic across runs.
inline bool is_probable_prime(const BigInt& n, unsigned trials = 25) {
  if (n < 2) return false;
  static thread_local boost::random::mt19937 gen(0x5eed);
  return boost::multiprecision::miller_rabin_test(n, trials, gen);
}

// x with x^3 = c (mod p^2) for a prime p = 2 (mod 3) and c prime to p.
// Cubing permutes the units mod p^2 since gcd(3, p(p-1)) = 1, so the root
// is c^e with 3e = 1 (mod p(p-1)).
inline BigInt cube_root_mod_p2(const BigInt& c, const BigInt& p) {
  if (mod(p, 3) != 2) throw DomainError("cube_root_mod_p2: p must be 2 mod 3");
  const BigInt p2 = p * p;
  if (gcd(mod(c, p2), p) != 1) throw DomainError("cube_root_mod_p2: residue not prime to p");
  const BigInt e = inverse(3, p * (p - 1));
  return powm(c, e, p2);
}

}  // namespace bigint
}  // namespace primeap
