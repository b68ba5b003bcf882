#pragma once

// Sieving and exact prime sums for checking explicit claims at desk scale:
// Chebyshev theta in progressions, least primes in progressions, the
// smoothed prime sum, and the small prime-sum constants of the error terms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "primeap/errors.hpp"
#include "primeap/estimates.hpp"
#include "primeap/weights.hpp"

namespace primeap {

struct SieveResult {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> primes;  // ascending

  std::size_t count_upto(std::uint64_t y) const {
    return static_cast<std::size_t>(std::upper_bound(primes.begin(), primes.end(), y) - primes.begin());
  }
};

struct VerificationReport {
  std::string name;
  std::map<std::string, double> parameters;
  double max_deviation = 0.0;
  double bound = 0.0;
  std::map<std::string, double> witness;
  bool pass = false;
};

namespace sievelab {

inline constexpr std::uint64_t kSieveGuard = 1'000'000'000;

namespace detail {

template <class F>
void run_parallel(std::size_t jobs, unsigned workers, F&& f) {
  workers = std::max(1u, workers);
  if (workers == 1 || jobs <= 1) {
    for (std::size_t j = 0; j < jobs; ++j) f(j);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&f, w, workers, jobs] {
      for (std::size_t j = w; j < jobs; j += workers) f(j);
    });
}

inline std::vector<std::uint32_t> simple_sieve(std::uint32_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace detail

// Segmented Eratosthenes; segments are sieved in parallel and concatenated
// in order, so the output does not depend on the worker count.
inline SieveResult sieve(std::uint64_t limit, unsigned workers = 1, std::uint64_t guard = kSieveGuard) {
  if (limit > guard) throw ResourceError("sieve: limit above memory guard");
  SieveResult out;
  out.limit = limit;
  if (limit < 2) return out;
  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint32_t> base = detail::simple_sieve(root);

  constexpr std::uint64_t kSegment = 1 << 20;
  const std::size_t segments = static_cast<std::size_t>(limit / kSegment + 1);
  std::vector<std::vector<std::uint32_t>> found(segments);
  detail::run_parallel(segments, workers, [&](std::size_t s) {
    const std::uint64_t lo = s * kSegment;
    const std::uint64_t hi = std::min<std::uint64_t>(lo + kSegment, limit + 1);
    if (lo >= hi) return;
    std::vector<char> composite(hi - lo, 0);
    for (std::uint32_t p : base) {
      const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
      if (pp >= hi) break;
      std::uint64_t start = std::max<std::uint64_t>(pp, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j < hi; j += p) composite[j - lo] = 1;
    }
    for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i < hi; ++i)
      if (!composite[i - lo]) found[s].push_back(static_cast<std::uint32_t>(i));
  });
  std::size_t total = 0;
  for (const auto& f : found) total += f.size();
  out.primes.reserve(total);
  for (const auto& f : found) out.primes.insert(out.primes.end(), f.begin(), f.end());
  return out;
}

// theta(y; q, a) = sum of log p over p <= y, p = a (mod q).
inline double theta(double y, std::uint64_t q, std::uint64_t a, const SieveResult& s) {
  if (q == 0) throw DomainError("theta: q must be positive");
  if (std::gcd(a % q, q) != 1 && q != 1) throw DomainError("theta: gcd(a, q) != 1");
  if (y > static_cast<double>(s.limit)) throw ResourceError("theta: y beyond sieve limit");
  long double acc = 0.0L;
  for (std::uint32_t p : s.primes) {
    if (p > y) break;
    if (p % q == a % q) acc += std::log(static_cast<long double>(p));
  }
  return static_cast<double>(acc);
}

inline std::uint64_t euler_phi(std::uint64_t q) {
  std::uint64_t r = q;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    while (q % p == 0) q /= p;
    r -= r / p;
  }
  if (q > 1) r -= r / q;
  return r;
}

// Exact phi(0..n) by a linear sieve.
inline std::vector<std::uint32_t> phi_table(std::uint32_t n) {
  std::vector<std::uint32_t> phi(n + 1, 0), primes;
  if (n >= 1) phi[1] = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (phi[i] == 0) {
      phi[i] = static_cast<std::uint32_t>(i - 1);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > n) break;
      if (i % p == 0) {
        phi[ip] = phi[i] * p;
        break;
      }
      phi[ip] = phi[i] * (p - 1);
    }
  }
  return phi;
}

struct ThetaScanRow {
  std::uint64_t q = 0;
  double max_ratio = 0.0;  // max over a and y of |theta - y/phi| / sqrt(y)
  std::uint64_t a = 0;
  double y = 0.0;
};

struct ThetaScan {
  VerificationReport report;
  std::vector<ThetaScanRow> per_q;  // q = 1..q_max
};

// max over 1 <= y <= x of |theta(y; q, a) - y/phi(q)| <= C sqrt(x), for all
// q <= q_max and a prime to q, probed at x = x_max and at every x below it.
// Between consecutive primes the deviation is linear in y, so the supremum of
// |dev(y)|/sqrt(y) is attained at a prime or just below the next one; that
// supremum is the least C valid for every x <= x_max.
inline ThetaScan theta_deviation_scan(std::uint64_t q_max, double x_max, const SieveResult& s,
                                      unsigned workers = 1, double bound = 2.072) {
  if (q_max < 1) throw DomainError("theta_deviation_scan: q_max < 1");
  if (!(x_max >= 1.0) || x_max > static_cast<double>(s.limit))
    throw ResourceError("theta_deviation_scan: x_max beyond sieve limit");
  const std::size_t np = s.count_upto(static_cast<std::uint64_t>(x_max));
  std::vector<long double> logs(np);
  for (std::size_t i = 0; i < np; ++i) logs[i] = std::log(static_cast<long double>(s.primes[i]));

  ThetaScan out;
  out.per_q.resize(q_max);
  detail::run_parallel(q_max, workers, [&](std::size_t idx) {
    const std::uint64_t q = idx + 1;
    const long double phi = static_cast<long double>(euler_phi(q));
    std::vector<long double> th(q, 0.0L);
    ThetaScanRow row{q, 0.0, 0, 0.0};
    auto consider = [&](std::uint64_t a, long double y, long double value) {
      const double r = static_cast<double>(std::fabs(value - y / phi) / std::sqrt(y));
      if (r > row.max_ratio) row = {q, r, a, static_cast<double>(y)};
    };
    // y = 1: theta = 0.
    for (std::uint64_t a = 0; a < q; ++a)
      if (std::gcd(a, q) == 1 || q == 1) consider(a, 1.0L, 0.0L);
    for (std::size_t i = 0; i < np; ++i) {
      const std::uint64_t p = s.primes[i];
      const std::uint64_t a = p % q;
      if (q != 1 && std::gcd(a, q) != 1) continue;
      consider(a, static_cast<long double>(p), th[a]);  // just below p
      th[a] += logs[i];
      consider(a, static_cast<long double>(p), th[a]);  // at p
    }
    for (std::uint64_t a = 0; a < q; ++a)
      if (std::gcd(a, q) == 1 || q == 1) consider(a, static_cast<long double>(x_max), th[a]);
    out.per_q[idx] = row;
  });

  auto& r = out.report;
  r.name = "theta-deviation";
  r.parameters = {{"q_max", static_cast<double>(q_max)}, {"x_max", x_max}};
  r.bound = bound;
  for (const auto& row : out.per_q)
    if (row.max_ratio > r.max_deviation) {
      r.max_deviation = row.max_ratio;
      r.witness = {{"q", static_cast<double>(row.q)}, {"a", static_cast<double>(row.a)}, {"y", row.y}};
    }
  r.pass = r.max_deviation <= bound;
  return out;
}

// Least prime p = a (mod q) within the sieve, if any.
inline std::optional<std::uint64_t> least_prime_in_ap(std::uint64_t q, std::uint64_t a, const SieveResult& s) {
  if (q == 0) throw DomainError("least_prime_in_ap: q must be positive");
  if (q != 1 && std::gcd(a % q, q) != 1) throw DomainError("least_prime_in_ap: gcd(a, q) != 1");
  for (std::uint32_t p : s.primes)
    if (p % q == a % q) return p;
  return std::nullopt;
}

// Least primes for every reduced class mod q in one pass; 0 marks non-reduced
// or not found within the sieve.
inline std::vector<std::uint64_t> least_primes_for_modulus(std::uint64_t q, const SieveResult& s) {
  if (q == 0) throw DomainError("least_primes_for_modulus: q must be positive");
  std::vector<std::uint64_t> out(q, 0);
  std::uint64_t remaining = q == 1 ? 1 : euler_phi(q);
  for (std::uint32_t p : s.primes) {
    const std::uint64_t a = p % q;
    if (out[a] != 0 || (q != 1 && std::gcd(a, q) != 1)) continue;
    out[a] = p;
    if (--remaining == 0) break;
  }
  return out;
}

struct LeastPrimeSurvey {
  VerificationReport report;
  std::uint64_t worst_q = 0, worst_a = 0, worst_p = 0;
};

// For all q <= q_max and reduced a: P(a, q) exists within the sieve and lies
// below e^{alpha log^2 q}. The deviation reported is max log P / log^2 q.
inline LeastPrimeSurvey least_prime_survey(std::uint64_t q_max, const SieveResult& s, double alpha,
                                           unsigned workers = 1) {
  std::vector<LeastPrimeSurvey> parts(q_max + 1);
  std::vector<int> missing(q_max + 1, 0);
  detail::run_parallel(q_max - 1, workers, [&](std::size_t idx) {
    const std::uint64_t q = idx + 2;
    const auto lp = least_primes_for_modulus(q, s);
    auto& part = parts[q];
    const double lq2 = std::log(static_cast<double>(q)) * std::log(static_cast<double>(q));
    for (std::uint64_t a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      if (lp[a] == 0) {
        ++missing[q];
        continue;
      }
      const double ratio = std::log(static_cast<double>(lp[a])) / lq2;
      if (ratio > part.report.max_deviation) {
        part.report.max_deviation = ratio;
        part.worst_q = q;
        part.worst_a = a;
        part.worst_p = lp[a];
      }
    }
  });
  LeastPrimeSurvey out;
  for (const auto& p : parts)
    if (p.report.max_deviation > out.report.max_deviation) {
      out.report.max_deviation = p.report.max_deviation;
      out.worst_q = p.worst_q;
      out.worst_a = p.worst_a;
      out.worst_p = p.worst_p;
    }
  const int total_missing = std::accumulate(missing.begin(), missing.end(), 0);
  auto& r = out.report;
  r.name = "least-prime";
  r.parameters = {{"q_max", static_cast<double>(q_max)}, {"limit", static_cast<double>(s.limit)}, {"alpha", alpha}};
  r.bound = alpha;
  r.witness = {{"q", static_cast<double>(out.worst_q)},
               {"a", static_cast<double>(out.worst_a)},
               {"p", static_cast<double>(out.worst_p)},
               {"not_found", static_cast<double>(total_missing)}};
  r.pass = total_missing == 0 && r.max_deviation <= alpha;
  return out;
}

// sum over primes p = a (mod q) of (log p / p) f(log p).
inline double weighted_prime_sum(std::uint64_t q, std::uint64_t a, const WeightSpec& spec, const SieveResult& s) {
  spec.validate();
  if (q == 0) throw DomainError("weighted_prime_sum: q must be positive");
  if (q != 1 && std::gcd(a % q, q) != 1) throw DomainError("weighted_prime_sum: gcd(a, q) != 1");
  const double top = std::exp(spec.L + spec.eps);
  if (top > static_cast<double>(s.limit)) throw ResourceError("weighted_prime_sum: support exceeds sieve");
  const double bottom = std::exp(spec.L);
  const auto first = std::lower_bound(s.primes.begin(), s.primes.end(), static_cast<std::uint64_t>(std::floor(bottom)));
  long double acc = 0.0L;
  for (auto it = first; it != s.primes.end() && *it <= top; ++it) {
    if (*it % q != a % q) continue;
    const double lp = std::log(static_cast<double>(*it));
    acc += lp / static_cast<double>(*it) * weights::f_eval(lp, spec);
  }
  return static_cast<double>(acc);
}

// The three small prime-sum constants used by the error terms.
inline std::vector<VerificationReport> auxiliary_constant_checks(const SieveResult& s, unsigned workers = 1) {
  if (s.limit < 1'000'000) throw ResourceError("auxiliary_constant_checks: sieve limit below 1e6");
  std::vector<VerificationReport> out;

  // (i) sum log p (1/(p-1)^2 + 1/(p-1)^3) <= 2.10, with the tail past P
  // bounded by sum_{p > P} 2 log p/(p-1)^2 <= 4 log P / P.
  {
    VerificationReport r;
    r.name = "prime-power-series";
    const std::uint64_t P = 1'000'000;
    long double acc = 0.0L, at_1000 = 0.0L;
    bool increasing = true;
    for (std::uint32_t p : s.primes) {
      if (p > P) break;
      const long double d = p - 1.0L;
      const long double term = std::log(static_cast<long double>(p)) * (1.0L / (d * d) + 1.0L / (d * d * d));
      increasing &= term > 0.0L;
      acc += term;
      if (p <= 1000) at_1000 = acc;
    }
    const double tail = 4.0 * std::log(static_cast<double>(P)) / static_cast<double>(P);
    r.parameters = {{"P", static_cast<double>(P)}};
    r.bound = 2.10;
    r.max_deviation = static_cast<double>(acc) + tail;
    r.witness = {{"partial_sum_P", static_cast<double>(acc)},
                 {"partial_sum_1000", static_cast<double>(at_1000)},
                 {"tail_bound", tail}};
    r.pass = increasing && r.max_deviation <= r.bound;
    out.push_back(r);
  }

  // (ii) sum_{p <= x} log p / (p - 1) <= 2 log x at every prime x up to the
  // limit (between primes the left side is constant and the right grows).
  {
    VerificationReport r;
    r.name = "log-p-over-p-minus-1";
    long double acc = 0.0L;
    double worst = -1e300, worst_x = 0.0;
    for (std::uint32_t p : s.primes) {
      acc += std::log(static_cast<long double>(p)) / (p - 1.0L);
      const double ratio = static_cast<double>(acc) / (2.0 * std::log(static_cast<double>(p)));
      if (ratio > worst) {
        worst = ratio;
        worst_x = p;
      }
    }
    r.parameters = {{"limit", static_cast<double>(s.limit)}};
    r.bound = 1.0;
    r.max_deviation = worst;  // max of lhs / (2 log x)
    r.witness = {{"x", worst_x}, {"sum_at_limit", static_cast<double>(acc)}};
    r.pass = worst <= 1.0;
    out.push_back(r);
  }

  // (iii) q/phi(q) < e^C log log q + 2.51/log log q for 3 <= q <= 1e6.
  {
    VerificationReport r;
    r.name = "phi-ratio";
    const std::uint32_t qmax = 1'000'000;
    const auto phi = phi_table(qmax);
    std::vector<std::pair<double, std::uint32_t>> worst(std::max(1u, workers), {-1e300, 0});
    detail::run_parallel(worst.size(), static_cast<unsigned>(worst.size()), [&](std::size_t w) {
      for (std::uint32_t q = 3 + static_cast<std::uint32_t>(w); q <= qmax; q += static_cast<std::uint32_t>(worst.size())) {
        const double ratio = static_cast<double>(q) / phi[q] / estimates::phi_ratio_bound(q);
        if (ratio > worst[w].first) worst[w] = {ratio, q};
      }
    });
    auto best = *std::max_element(worst.begin(), worst.end(), [](const auto& a, const auto& b) {
      return a.first < b.first || (a.first == b.first && a.second > b.second);
    });
    r.parameters = {{"q_max", static_cast<double>(qmax)}};
    r.bound = 1.0;
    r.max_deviation = best.first;  // max of (q/phi(q)) / bound(q)
    r.witness = {{"q", static_cast<double>(best.second)}};
    r.pass = best.first < 1.0;
    out.push_back(r);
  }
  return out;
}

}  // namespace sievelab
}  // namespace primeap
