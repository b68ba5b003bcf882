#pragma once

// Seven cubes: the Watson-type lemma that turns a prime in a progression
// into a representation n = sum of seven cubes, the explicit thresholds on
// log n, and an exact small-n minimal cube counter.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "primeap/bigint.hpp"
#include "primeap/errors.hpp"

namespace primeap {

struct SevenCubesParams {
  double c1 = 0.521;
  double c2 = 2.562;
  double alpha = 4.3060;
  double eps = 1.9;
  double k_min = 1e32;
  double theta_const = 2.072;

  double c3() const { return std::sqrt(c2 / c1); }

  void validate() const {
    if (!(c1 > 0.0) || !(c2 > c1)) throw DomainError("SevenCubesParams: need 0 < c1 < c2");
    if (!(c2 - c1 > 2.0)) throw DomainError("SevenCubesParams: need c2 - c1 > phi(6) = 2");
    if (!(alpha > 0.0)) throw DomainError("SevenCubesParams: alpha must be positive");
    if (!(eps > 0.0)) throw DomainError("SevenCubesParams: eps must be positive");
    if (!(k_min >= 3.0)) throw DomainError("SevenCubesParams: k_min must be >= 3");
    if (!(theta_const > 0.0)) throw DomainError("SevenCubesParams: theta_const must be positive");
  }
};

struct WatsonInstance {
  BigInt n, a, u, v, w, t;

  // (1 + (w/u)^6 + (w/v)^6) / 4
  double delta() const {
    const double wu = static_cast<double>(w) / static_cast<double>(u);
    const double wv = static_cast<double>(w) / static_cast<double>(v);
    return (1.0 + std::pow(wu, 6) + std::pow(wv, 6)) / 4.0;
  }

  // 1 / (6uvwa), as numerator/denominator.
  BigInt rho_denominator() const { return 6 * u * v * w * a; }
  double rho() const { return 1.0 / static_cast<double>(rho_denominator()); }
};

struct WatsonVerdict {
  // 0 when every condition holds, otherwise the first failing one (1..7).
  int failed_condition = 0;
  bool pass() const { return failed_condition == 0; }
};

namespace sevencubes {

namespace detail {

// u^6 v^6 + v^6 w^6 + w^6 u^6, i.e. 4 delta u^6 v^6.
inline BigInt sextic_sum(const BigInt& u, const BigInt& v, const BigInt& w) {
  const BigInt u6 = boost::multiprecision::pow(u, 6), v6 = boost::multiprecision::pow(v, 6),
               w6 = boost::multiprecision::pow(w, 6);
  return u6 * v6 + v6 * w6 + w6 * u6;
}

inline bool condition1(const BigInt& u, const BigInt& v, const BigInt& w) {
  // w <= (3/4)^{1/3} uv / 24  <=>  4 * 24^3 w^3 <= 3 u^3 v^3.
  return u >= 1 && u <= v && v <= w && 4 * 13824 * w * w * w <= 3 * u * u * u * v * v * v;
}

// The t-window of condition (7) as 4t^3 in [lo, hi]; empty when lo < 0 fails.
struct CubeWindow {
  BigInt lo;  // 4n - a^3 (S6 + 3 u^6 v^6)
  BigInt hi;  // 4n - a^3 S6
};

inline CubeWindow cube_window(const BigInt& n, const BigInt& a, const BigInt& u, const BigInt& v, const BigInt& w) {
  const BigInt a3 = a * a * a;
  const BigInt s6 = sextic_sum(u, v, w);
  const BigInt uv6 = boost::multiprecision::pow(u * v, 6);
  return {4 * n - a3 * (s6 + 3 * uv6), 4 * n - a3 * s6};
}

}  // namespace detail

inline WatsonVerdict watson_check(const WatsonInstance& x) {
  using bigint::gcd;
  using bigint::mod;
  const auto& [n, a, u, v, w, t] = x;
  if (n < 1 || a < 1 || u < 1 || v < 1 || w < 1 || t < 0)
    throw DomainError("watson_check: fields must be positive (t nonnegative)");
  if (!detail::condition1(u, v, w)) return {1};
  if (gcd(u * v * w, 6 * n) != 1 || mod(a, 2) == 0) return {2};
  if (gcd(u, v) != 1 || gcd(u, w) != 1 || gcd(v, w) != 1 || gcd(a, u * v * w) != 1) return {3};
  const BigInt d = n - t * t * t;
  if (mod(d, 2) != 1) return {4};
  if (mod(d, 3 * a) != 0) return {5};
  const BigInt a3 = a * a * a;
  const BigInt u6 = boost::multiprecision::pow(u, 6), v6 = boost::multiprecision::pow(v, 6),
               w6 = boost::multiprecision::pow(w, 6);
  if (mod(4 * d - v6 * w6 * a3, u * u) != 0 || mod(4 * d - u6 * w6 * a3, v * v) != 0 ||
      mod(4 * d - u6 * v6 * a3, w * w) != 0)
    return {6};
  const auto win = detail::cube_window(n, a, u, v, w);
  const BigInt t4 = 4 * t * t * t;
  if (win.lo < 0 || t4 < win.lo || t4 > win.hi) return {7};
  return {0};
}

enum class ConstructionStage { ok, precondition, window_c2, t_window };

inline const char* to_string(ConstructionStage s) {
  switch (s) {
    case ConstructionStage::ok: return "ok";
    case ConstructionStage::precondition: return "precondition";
    case ConstructionStage::window_c2: return "C2";
    case ConstructionStage::t_window: return "t-window";
  }
  return "?";
}

struct Construction {
  std::optional<WatsonInstance> instance;
  ConstructionStage stage = ConstructionStage::ok;
  BigInt a_prime;           // the CRT residue a' mod u^2 v^2 w^2
  double log_Y = 0.0;       // ln Y
  double kappa = 0.0;       // kappa at the accepted (or last tried) a
  std::size_t candidates = 0;  // a values tried
};

// kappa^3 = [(uv/(24w(rho+1)))^{3/2} + delta] / (3/4 + delta).
inline double kappa_cubed(double u, double v, double w, double rho) {
  const double delta = (1.0 + std::pow(w / u, 6) + std::pow(w / v, 6)) / 4.0;
  return (std::pow(u * v / (24.0 * w * (rho + 1.0)), 1.5) + delta) / (0.75 + delta);
}

// Builds (a, t) for given n and u, v, w following the constructive proof:
// a' by CRT over cube roots mod u^2, v^2, w^2; a prime a = a' (mod u^2v^2w^2),
// a = 5 (mod 6) inside [Y/kappa, Y]; then t by CRT.
inline Construction construct_instance(const BigInt& n, const BigInt& u, const BigInt& v, const BigInt& w,
                                       std::size_t max_candidates = 1'000'000) {
  using bigint::mod;
  Construction out;
  const auto precondition = [&] {
    for (const BigInt* p : {&u, &v, &w}) {
      if (mod(*p, 6) != 5 || !bigint::is_probable_prime(*p)) return false;
      if (bigint::gcd(*p, 6 * n) != 1) return false;
    }
    return u != v && v != w && u != w && n >= 1 && detail::condition1(u, v, w);
  };
  if (!precondition()) {
    out.stage = ConstructionStage::precondition;
    return out;
  }

  // a'^3 = 4n (v^2 w^2)^{-3} mod u^2, and cyclically.
  const BigInt u2 = u * u, v2 = v * v, w2 = w * w;
  auto root_for = [&](const BigInt& p, const BigInt& p2, const BigInt& other) {
    const BigInt o3 = bigint::powm(other, 3, p2);
    return bigint::cube_root_mod_p2(mod(4 * n * bigint::inverse(o3, p2), p2), p);
  };
  const bigint::Congruence ap = bigint::crt({{root_for(u, u2, v2 * w2), u2},
                                             {root_for(v, v2, u2 * w2), v2},
                                             {root_for(w, w2, u2 * v2), w2}});
  out.a_prime = ap.residue;
  const bigint::Congruence acls = bigint::crt({ap, {5, 6}});

  const double du = static_cast<double>(u), dv = static_cast<double>(v), dw = static_cast<double>(w);
  const double delta = (1.0 + std::pow(dw / du, 6) + std::pow(dw / dv, 6)) / 4.0;
  // ln Y = (ln n)/3 - 2 ln(uv) - (1/3) ln(3/4 + delta); ln n from the top bits.
  const double log_n = [&] {
    const auto bits = boost::multiprecision::msb(n);
    if (bits < 60) return std::log(static_cast<double>(n));
    const BigInt top = n >> (bits - 52);
    return std::log(static_cast<double>(top)) + static_cast<double>(bits - 52) * std::log(2.0);
  }();
  out.log_Y = log_n / 3.0 - 2.0 * std::log(du * dv) - std::log(0.75 + delta) / 3.0;

  // Exact Y bound: a <= Y  <=>  a^3 u^6 v^6 (3/4 + delta) <= n  <=>  a^3 (S6 + 3u^6v^6) <= 4n.
  const BigInt s6 = detail::sextic_sum(u, v, w);
  const BigInt uv6 = boost::multiprecision::pow(u * v, 6);
  const BigInt y_floor = bigint::icbrt(4 * n / (s6 + 3 * uv6));

  // Walk down from Y: the upper kappa bound uses rho -> 0 (largest kappa).
  const double kappa_max = std::cbrt(kappa_cubed(du, dv, dw, 0.0));
  const double y_low = std::exp(out.log_Y - std::log(kappa_max));
  BigInt a = y_floor - bigint::mod(y_floor - acls.residue, acls.modulus);
  for (; a > 0 && static_cast<double>(a) >= y_low * (1.0 - 1e-12); a -= acls.modulus) {
    if (++out.candidates > max_candidates) break;
    if (!bigint::is_probable_prime(a)) continue;
    const double rho = 1.0 / static_cast<double>(6 * u * v * w * a);
    out.kappa = std::cbrt(kappa_cubed(du, dv, dw, rho));
    if (static_cast<double>(a) < std::exp(out.log_Y - std::log(out.kappa))) continue;

    // t^3 = n (mod 3a), t^3 = n - 1 (mod 2), t = 0 (mod uvw). Cubing is a
    // bijection mod 3 and mod a (a = 2 mod 3), with inverse exponent e.
    const BigInt t_mod_a = mod(n, a) == 0 ? BigInt(0) : bigint::powm(n, bigint::inverse(3, a - 1), a);
    const bigint::Congruence tc =
        bigint::crt({{mod(n, 3), 3}, {t_mod_a, a}, {mod(n - 1, 2), 2}, {0, u * v * w}});
    const auto win = detail::cube_window(n, a, u, v, w);
    if (win.lo < 0) continue;
    const BigInt t_lo = bigint::icbrt_ceil((win.lo + 3) / 4);
    BigInt t = t_lo + bigint::mod(tc.residue - t_lo, tc.modulus);
    if (4 * t * t * t > win.hi) {
      out.stage = ConstructionStage::t_window;
      continue;
    }
    out.instance = WatsonInstance{n, a, u, v, w, t};
    out.stage = ConstructionStage::ok;
    return out;
  }
  if (out.stage == ConstructionStage::ok) out.stage = ConstructionStage::window_c2;
  return out;
}

// ---------------------------------------------------------------------------
// Thresholds on x = log n.

// kappa_0(n)^3 with the worst-case delta, rho and u, v, w in [c1 x, c2 x].
inline double kappa0_cubed(double log_n, const SevenCubesParams& p = {}) {
  if (!(log_n > 0.0)) throw DomainError("kappa0_cubed: log_n must be positive");
  const double c3 = p.c3(), c36 = std::pow(c3, 6);
  const double c1x = p.c1 * log_n;
  const double inner = c1x / (24.0 * c3 * (1.0 / (6.0 * c1x * c1x * c1x) + 1.0));
  return (std::pow(inner, 1.5) + 0.25 + 1.0 / (2.0 * c36)) / (1.0 + c36 / 2.0);
}

// ln Y_0(n) = x/3 - 4 ln(c2 x) - ln(1 + c3^6/2)/3.
inline double y0_log(double log_n, const SevenCubesParams& p = {}) {
  if (!(log_n > 0.0)) throw DomainError("y0_log: log_n must be positive");
  return log_n / 3.0 - 4.0 * std::log(p.c2 * log_n) - std::log1p(std::pow(p.c3(), 6) / 2.0) / 3.0;
}

// ((c2-c1)/2 - 1) x - theta (sqrt c1 + sqrt c2) sqrt x - 12 ln(c2 x).
inline double clustering_margin(double log_n, const SevenCubesParams& p = {}) {
  return ((p.c2 - p.c1) / 2.0 - 1.0) * log_n - p.theta_const * (std::sqrt(p.c1) + std::sqrt(p.c2)) * std::sqrt(log_n) -
         12.0 * std::log(p.c2 * log_n);
}

// ln Y_0 - alpha ln^2(3 (c2 x)^6) - eps.
inline double inequality_margin(double log_n, const SevenCubesParams& p = {}) {
  const double lk = std::log(3.0) + 6.0 * std::log(p.c2 * log_n);
  return y0_log(log_n, p) - p.alpha * lk * lk - p.eps;
}

// 2.12 ln(3 (c1 x)^6) - ln(3 (c2 x)^6): positive when the smaller of two
// candidate moduli, raised to 2.12, still exceeds the larger.
inline double repulsion_margin(double log_n, const SevenCubesParams& p = {}) {
  if (!(log_n >= std::log(150.0) - 1e-12)) throw DomainError("repulsion_margin: log_n < ln 150");
  return 2.12 * (std::log(3.0) + 6.0 * std::log(p.c1 * log_n)) - (std::log(3.0) + 6.0 * std::log(p.c2 * log_n));
}

namespace detail {

// Least integer x in (lo, hi] with pred(x), given pred(lo) false and pred
// monotone false -> true on [lo, hi]. Doubles hi until pred(hi) holds.
inline long first_true(const std::function<bool(long)>& pred, long lo, long hi) {
  if (pred(lo)) throw DomainError("threshold search: predicate already true at the lower end");
  while (!pred(hi)) {
    lo = hi;
    if (hi > (1L << 40)) throw DomainError("threshold search: no crossing found");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace detail

// Least integer log n above the crossover where more than 12 admissible
// primes are guaranteed in [c1 log n, c2 log n].
inline long clustering_threshold(const SevenCubesParams& p = {}) {
  p.validate();
  // The margin is negative at x = 1 and has a single interior minimum, so the
  // crossing above 1 is unique.
  return detail::first_true([&](long x) { return clustering_margin(static_cast<double>(x), p) >= 0.0; }, 1, 1024);
}

// Least integer log n with ln Y_0 >= alpha ln^2 k + eps at k = 3 (c2 log n)^6.
inline long inequality_threshold(const SevenCubesParams& p = {}) {
  p.validate();
  return detail::first_true([&](long x) { return inequality_margin(static_cast<double>(x), p) >= 0.0; }, 1, 1024);
}

inline long kappa_threshold(const SevenCubesParams& p = {}) {
  p.validate();
  const double target = std::exp(3.0 * p.eps);
  return detail::first_true([&](long x) { return kappa0_cubed(static_cast<double>(x), p) >= target; }, 1, 1024);
}

// Least integer x with 3 (c x)^6 >= k_min.
inline long modulus_threshold(double c, const SevenCubesParams& p = {}) {
  p.validate();
  const double lk = std::log(p.k_min / 3.0) / 6.0;
  return detail::first_true([&](long x) { return std::log(c * static_cast<double>(x)) >= lk; }, 1, 1024);
}

struct ThresholdReport {
  long clustering = 0;
  long inequality = 0;
  long kappa = 0;
  // The constructed modulus k = 3(uvw)^2 has u, v, w in [c1 log n, c2 log n];
  // the two readings bound it from below by the two ends.
  long modulus_c1 = 0;
  long modulus_c2 = 0;
  long combined_c2 = 0;  // max(clustering, inequality, kappa, modulus_c2)
  long combined_c1 = 0;  // same with modulus_c1
  long headline = 0;     // combined_c2 rounded up to a multiple of 1000

  // Signed margins at the published values.
  double clustering_margin_at_68509 = 0.0;
  double inequality_margin_at_70341 = 0.0;
  double log_kappa0_minus_eps_at_70341 = 0.0;
  double log10_modulus_c1_at_70341 = 0.0;
  double log10_modulus_c2_at_70341 = 0.0;
  double repulsion_margin_at_ln150 = 0.0;
  double repulsion_margin_at_headline = 0.0;
};

inline ThresholdReport threshold_report(const SevenCubesParams& p = {}) {
  p.validate();
  ThresholdReport r;
  r.clustering = clustering_threshold(p);
  r.inequality = inequality_threshold(p);
  r.kappa = kappa_threshold(p);
  r.modulus_c1 = modulus_threshold(p.c1, p);
  r.modulus_c2 = modulus_threshold(p.c2, p);
  r.combined_c2 = std::max({r.clustering, r.inequality, r.kappa, r.modulus_c2});
  r.combined_c1 = std::max({r.clustering, r.inequality, r.kappa, r.modulus_c1});
  r.headline = (r.combined_c2 + 999) / 1000 * 1000;

  const double log10_3 = std::log10(3.0);
  r.clustering_margin_at_68509 = clustering_margin(68509.0, p);
  r.inequality_margin_at_70341 = inequality_margin(70341.0, p);
  r.log_kappa0_minus_eps_at_70341 = std::log(kappa0_cubed(70341.0, p)) / 3.0 - p.eps;
  r.log10_modulus_c1_at_70341 = log10_3 + 6.0 * std::log10(p.c1 * 70341.0);
  r.log10_modulus_c2_at_70341 = log10_3 + 6.0 * std::log10(p.c2 * 70341.0);
  r.repulsion_margin_at_ln150 = repulsion_margin(std::log(150.0), p);
  r.repulsion_margin_at_headline = repulsion_margin(static_cast<double>(r.headline), p);
  return r;
}

// Least log n meeting the inequality and all side conditions, with the
// modulus floor read at the top of the prime interval.
inline long n0_threshold(const SevenCubesParams& p = {}) { return threshold_report(p).combined_c2; }

// ---------------------------------------------------------------------------
// Minimal number of nonnegative cubes, exact for small n.

class CubeCounter {
 public:
  static constexpr std::uint64_t kMaxN = 100'000'000;
  static constexpr int kMaxCap = 9;
  static constexpr std::uint8_t kUnknown = 0xff;

  // Tabulates exact minimal counts for every n <= table_limit (all of which
  // are at most 9), layer by layer; each layer splits n across workers.
  explicit CubeCounter(std::uint64_t table_limit = 1'000'000, unsigned workers = 1)
      : limit_(table_limit), best_(table_limit + 1, kUnknown) {
    if (table_limit > kMaxN) throw ResourceError("CubeCounter: table limit above 1e8");
    for (std::uint64_t x = 0; x * x * x <= std::max<std::uint64_t>(limit_, kMaxN); ++x) cubes_.push_back(x * x * x);
    best_[0] = 0;
    workers = std::max(1u, workers);
    std::vector<std::uint8_t> fresh(best_.size(), 0);
    for (int k = 1; k <= kMaxCap; ++k) {
      auto work = [&, k](unsigned, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t n = lo; n < hi; ++n) {
          fresh[n] = 0;
          if (best_[n] != kUnknown) continue;
          for (std::uint64_t c : cubes_) {
            if (c == 0) continue;
            if (c > n) break;
            if (best_[n - c] == k - 1) {
              fresh[n] = 1;
              break;
            }
          }
        }
      };
      run_blocks(best_.size(), workers, work);
      bool any_left = false;
      for (std::size_t n = 0; n < best_.size(); ++n) {
        if (fresh[n]) best_[n] = static_cast<std::uint8_t>(k);
        any_left |= best_[n] == kUnknown;
      }
      if (!any_left) break;
    }
  }

  std::uint64_t table_limit() const { return limit_; }

  // Minimal k <= cap with n a sum of k cubes, or nullopt if more are needed.
  std::optional<int> min_cubes(std::uint64_t n, int cap = kMaxCap) const {
    check(n, cap);
    if (n <= limit_) {
      const int b = best_[n];
      return b <= cap ? std::optional<int>(b) : std::nullopt;
    }
    for (int k = 1; k <= cap; ++k)
      if (representable(n, k)) return k;
    return std::nullopt;
  }

  // Cube roots of a minimal representation (descending), if within cap.
  std::optional<std::vector<std::uint64_t>> representation(std::uint64_t n, int cap = kMaxCap) const {
    const auto k = min_cubes(n, cap);
    if (!k) return std::nullopt;
    std::vector<std::uint64_t> roots;
    if (!build(n, *k, roots)) throw DomainError("CubeCounter: inconsistent table");
    return roots;
  }

  struct RangeReport {
    std::uint64_t lo = 0, hi = 0;
    int max_count = 0;
    std::uint64_t worst_n = 0;
    std::vector<std::uint64_t> over_cap;  // sorted
  };

  // min_cubes over [lo, hi], partitioned in blocks across workers.
  RangeReport scan(std::uint64_t lo, std::uint64_t hi, int cap, unsigned workers = 1) const {
    if (lo > hi) throw DomainError("CubeCounter::scan: lo > hi");
    check(hi, cap);
    workers = std::max(1u, workers);
    const std::uint64_t count = hi - lo + 1;
    std::vector<RangeReport> parts(workers);
    run_blocks(count, workers, [&](unsigned block, std::uint64_t b, std::uint64_t e) {
      RangeReport& r = parts[block];
      for (std::uint64_t i = b; i < e; ++i) {
        const std::uint64_t n = lo + i;
        const auto k = min_cubes(n, cap);
        if (!k) {
          r.over_cap.push_back(n);
        } else if (*k > r.max_count) {
          r.max_count = *k;
          r.worst_n = n;
        }
      }
    });
    RangeReport out{lo, hi, 0, 0, {}};
    for (const auto& r : parts) {
      if (r.max_count > out.max_count) {
        out.max_count = r.max_count;
        out.worst_n = r.worst_n;
      }
      out.over_cap.insert(out.over_cap.end(), r.over_cap.begin(), r.over_cap.end());
    }
    std::sort(out.over_cap.begin(), out.over_cap.end());
    return out;
  }

 private:
  static void check(std::uint64_t n, int cap) {
    if (n > kMaxN) throw DomainError("CubeCounter: n above 1e8");
    if (cap < 0 || cap > kMaxCap) throw DomainError("CubeCounter: cap outside [0, 9]");
  }

  template <class F>
  static void run_blocks(std::uint64_t count, unsigned workers, F&& f) {
    if (workers == 1 || count < 4096) {
      f(0u, std::uint64_t{0}, count);
      return;
    }
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) {
      const std::uint64_t b = count * i / workers, e = count * (i + 1) / workers;
      pool.emplace_back([&f, i, b, e] { f(i, b, e); });
    }
  }

  // n is a sum of exactly k cubes (zeros allowed, so "at most k").
  bool representable(std::uint64_t n, int k) const {
    if (n <= limit_) return best_[n] <= k;
    if (k <= 0) return false;
    const std::uint64_t top = icbrt(n);
    if (k == 1) return top * top * top == n;
    // The largest cube in a k-term representation is at least n/k.
    const std::uint64_t bottom = icbrt((n + k - 1) / k);
    for (std::uint64_t x = top; x >= std::max<std::uint64_t>(bottom, 1); --x)
      if (representable(n - x * x * x, k - 1)) return true;
    return false;
  }

  bool build(std::uint64_t n, int k, std::vector<std::uint64_t>& roots) const {
    if (n == 0) return true;
    if (k == 0) return false;
    for (std::uint64_t x = icbrt(n); x >= 1; --x) {
      const std::uint64_t rest = n - x * x * x;
      if (representable(rest, k - 1)) {
        roots.push_back(x);
        return build(rest, k - 1, roots);
      }
    }
    return false;
  }

  static std::uint64_t icbrt(std::uint64_t n) {
    auto x = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(n)));
    while (x * x * x > n) --x;
    while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
    return x;
  }

  std::uint64_t limit_;
  std::vector<std::uint8_t> best_;
  std::vector<std::uint64_t> cubes_;
};

// One-off minimal cube count against a shared table up to 1e6.
inline std::optional<int> brute_force_min_cubes(std::uint64_t n, int cap = CubeCounter::kMaxCap) {
  static const CubeCounter shared(1'000'000);
  return shared.min_cubes(n, cap);
}

}  // namespace sevencubes
}  // namespace primeap
