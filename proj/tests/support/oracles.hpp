#pragma once

// Independent reference computations for the tests. None of these call into
// the library's own numerics.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

namespace primeap::oracle {

// Adaptive Simpson with Richardson correction.
inline double simpson(const std::function<double(double)>& f, double a, double b, double tol = 1e-12,
                      int depth = 50) {
  struct Impl {
    const std::function<double(double)>& f;
    double run(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) const {
      const double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      const double flm = f(lm), frm = f(rm);
      const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      const double delta = left + right - whole;
      // Below the rounding floor further splitting only chases noise.
      const double floor = 4e-16 * (std::fabs(left) + std::fabs(right));
      if (depth <= 0 || std::fabs(delta) <= 15.0 * std::max(tol, floor)) return left + right + delta / 15.0;
      return run(a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + run(m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
    }
  } impl{f};
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return impl.run(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, depth);
}

// simpson with tolerance relative to a 64-panel first estimate.
inline double simpson_rel(const std::function<double(double)>& f, double a, double b, double rel = 1e-13) {
  double crude = 0.0;
  const int n = 64;
  const double h = (b - a) / n;
  for (int i = 0; i < n; ++i) {
    const double x = a + i * h;
    crude += h / 6.0 * (f(x) + 4.0 * f(x + 0.5 * h) + f(x + h));
  }
  return simpson(f, a, b, rel * std::fabs(crude));
}

// 2 int_1^inf log(6(T+12)) T^{-m} dT in T directly, over doubling panels
// [2^k, 2^{k+1}] until the panel contribution is negligible.
inline double j_of_m(int m) {
  auto f = [m](double T) { return std::log(6.0 * (T + 12.0)) * std::pow(T, -m); };
  double total = 0.0;
  for (double lo = 1.0;; lo *= 2.0) {
    const double part = simpson(f, lo, 2.0 * lo, 1e-15);
    total += part;
    if (part < 1e-16 * total) break;
  }
  return 2.0 * total;
}

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t phi_by_factoring(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r = r / p * (p - 1);
    }
  if (n > 1) r = r / n * (n - 1);
  return r;
}

// ---------------------------------------------------------------------------
// Explicit seven-cube witness for an instance that satisfies the lemma's
// conditions: 4(n - t^3) = a^3 (v^6 w^6 + u^6 w^6 + u^6 v^6) + 3a u^2 v^2 w^2 S
// with S a sum of three odd squares z_u^2 + z_v^2 + z_w^2, and then
// n = t^3 + sum over x in {u, v, w} of ((a Y_x + x z_x)/2)^3 + ((a Y_x - x z_x)/2)^3,
// Y_u = v^2 w^2 etc.

using Big = boost::multiprecision::cpp_int;

inline Big powmod(Big b, Big e, const Big& m) {
  Big r = 1;
  b %= m;
  while (e > 0) {
    if ((e & 1) != 0) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// p = x^2 + y^2 for a prime p = 1 (mod 4), by the Hermite-Serret descent.
inline std::pair<Big, Big> two_squares(const Big& p) {
  Big c = 2;
  while (powmod(c, (p - 1) / 2, p) != p - 1) ++c;
  Big r0 = p, r1 = powmod(c, (p - 1) / 4, p);
  const Big root = boost::multiprecision::sqrt(p);
  while (r1 > root) {
    Big t = r0 % r1;
    r0 = r1;
    r1 = t;
  }
  const Big x = r1;
  const Big y = boost::multiprecision::sqrt(Big(p - x * x));
  return {x, y};
}

struct SevenCubes {
  std::array<Big, 7> roots;
};

inline std::optional<SevenCubes> seven_cube_witness(const Big& n, const Big& a, const Big& u, const Big& v,
                                                    const Big& w, const Big& t) {
  using boost::multiprecision::pow;
  const Big s6 = pow(v, 6) * pow(w, 6) + pow(u, 6) * pow(w, 6) + pow(u, 6) * pow(v, 6);
  const Big num = 4 * (n - t * t * t) - a * a * a * s6;
  const Big den = 3 * a * u * u * v * v * w * w;
  if (num < 0 || num % den != 0) return std::nullopt;
  const Big S = num / den;
  if (S % 8 != 3) return std::nullopt;

  static boost::random::mt19937 gen(12345);
  Big z = boost::multiprecision::sqrt(S);
  if (z % 2 == 0) --z;
  for (int tries = 0; z > 0 && tries < 200000; ++tries, z -= 2) {
    const Big half = (S - z * z) / 2;  // = 1 (mod 4)
    if (half < 5 && half != 1) continue;
    std::pair<Big, Big> xy;
    if (half == 1) {
      xy = {1, 0};
    } else {
      if (!boost::multiprecision::miller_rabin_test(half, 30, gen)) continue;
      xy = two_squares(half);
    }
    const Big z2 = xy.first + xy.second;
    const Big z3 = xy.first > xy.second ? xy.first - xy.second : xy.second - xy.first;
    if (z2 % 2 == 0 || z3 % 2 == 0 || z * z + z2 * z2 + z3 * z3 != S) continue;

    const std::array<Big, 3> zs{z, z2, z3};
    const std::array<Big, 3> xs{u, v, w};
    const std::array<Big, 3> ys{v * v * w * w, u * u * w * w, u * u * v * v};
    std::array<int, 3> perm{0, 1, 2};
    do {
      SevenCubes out;
      out.roots[6] = t;
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        const Big p = a * ys[i] + xs[i] * zs[perm[i]];
        const Big m = a * ys[i] - xs[i] * zs[perm[i]];
        ok = m >= 0 && p % 2 == 0 && m % 2 == 0;
        out.roots[2 * i] = p / 2;
        out.roots[2 * i + 1] = m / 2;
      }
      if (!ok) continue;
      Big total = 0;
      for (const auto& r : out.roots) total += r * r * r;
      if (total == n) return out;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

}  // namespace primeap::oracle
