#pragma once

// The five error terms r1..r5 bounding the zero sums, gamma-factor
// integral and prime-power corrections in the smoothed prime sum
// Sigma(a, q)/||f||_1 >= 1/q - r. Each summand of each display is a named
// log-domain quantity so it can be audited term by term.

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "primeap/errors.hpp"
#include "primeap/estimates.hpp"
#include "primeap/logdomain.hpp"
#include "primeap/weights.hpp"

namespace primeap {

// Which zero-free information is fed into r1 and r2.
struct RegionModel {
  double R = kConstants.R;
  double R1 = kConstants.R1;
  // false: no "at most four zeros" region; every low zero is bounded by the
  // classical region alone and r1 loses its exceptional-zeros block.
  bool four_zero_split = true;

  static constexpr RegionModel liu_wang() { return {}; }
  static constexpr RegionModel classical(double R) { return {R, R, false}; }
};

struct ErrorParams {
  double alpha;
  double eps;
  double H;
  int m;
  double q;

  // alpha < R (log(qH)/log q)^2.
  static double condalf_ceiling(double R, double q, double H) {
    const double ratio = std::log(q * H) / std::log(q);
    return R * ratio * ratio;
  }

  void validate(const RegionModel& region = {}) const {
    if (!(alpha >= 0.0)) throw DomainError("ErrorParams: alpha must be nonnegative");
    if (!(eps > 0.0)) throw DomainError("ErrorParams: eps must be positive");
    if (!(H >= 1.0)) throw DomainError("ErrorParams: H must be >= 1");
    if (m < 3) throw DomainError("ErrorParams: m must be >= 3");
    if (m > weights::kMaxOrder) throw DomainError("ErrorParams: m must be <= 200");
    if (!(q >= 3.0)) throw DomainError("ErrorParams: q must be >= 3");
    if (!(alpha < condalf_ceiling(region.R, q, H)))
      throw DomainError("ErrorParams: Condalf violated (alpha >= R (log(qH)/log q)^2)");
  }
};

struct ErrorBreakdown {
  LogNonNegReal r1, r2, r3, r4, r5;
  LogNonNegReal total;

  std::array<LogNonNegReal, 5> parts() const { return {r1, r2, r3, r4, r5}; }
};

namespace errorterms {

namespace detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;

inline LogNonNegReal positive(double x, const char* what) {
  if (!(x >= 0.0)) throw DomainError(std::string("error term block is negative: ") + what);
  return LogNonNegReal::from_linear(x);
}

// q^{-e}, i.e. exp(-e log q).
inline LogNonNegReal q_pow(double q, double exponent) { return LogNonNegReal::from_log(exponent * std::log(q)); }

}  // namespace detail

// b2(alpha, r, q) = 1 + q^{-alpha log q + 2 alpha / r}.
inline LogNonNegReal b2(double alpha, double r_const, double q) {
  if (!(q >= 3.0)) throw DomainError("b2: q < 3");
  const double lq = std::log(q);
  const double e = (-alpha * lq + 2.0 * alpha / r_const) * lq;
  const double lg = e > 0.0 ? e + std::log1p(std::exp(-e)) : std::log1p(std::exp(e));
  return LogNonNegReal::from_log(lg);
}

namespace detail {

inline LogNonNegReal r1_unchecked(const ErrorParams& p, const RegionModel& region) {
  const auto& c = kConstants;
  const double q = p.q, H = p.H, alpha = p.alpha, eps = p.eps;
  const int m = p.m;
  const double lq = std::log(q), lH = std::log(H), lqH = std::log(q * H);
  const double R_low = region.four_zero_split ? region.R1 : region.R;

  // Low zeros 1 < |gamma| <= H, summed with weight 1/|gamma|.
  const double zero_block = lH * std::log(q * q * H) / (2.0 * kPi) + (1.0 / kPi + c.a1) * lq -
                            std::log(2.0 * kPi) / kPi * lH - std::log(2.0 * kPi * kE) / kPi + c.a2 + c.a1 -
                            c.a1 / H;
  const LogNonNegReal first = b2(alpha, R_low, q) *
                              LogNonNegReal::from_linear((2.0 * m + 1.0) / (2.0 * eps * m)) *
                              positive(zero_block, "r1 sum over 1 < |gamma| <= H") *
                              q_pow(q, -alpha / R_low * lq / lqH);

  // Zeros with |gamma| <= 1, counted by N(1, chi).
  const double n1_block =
      (1.0 + c.a1 * kPi) / (2.0 * kPi) * lq - (std::log(2.0 * kPi * kE) + c.a2 * kPi) / (2.0 * kPi);
  const double n1_decay = region.four_zero_split ? -alpha / R_low : -alpha / R_low * lq / lqH;
  const LogNonNegReal second = b2(alpha, R_low, q) * positive(n1_block, "r1 N(1, chi) block") * q_pow(q, n1_decay);

  if (!region.four_zero_split) return sum({first, second});

  // The at most eight zeros between the R1 and R regions, with phi(q)
  // replaced by its lower bound.
  const double lnln = std::log(lq);
  const double phi_ratio = std::exp(c.euler_gamma) * lnln + 2.51 / lnln;
  const LogNonNegReal third =
      LogNonNegReal::from_linear(4.0) * b2(alpha, region.R, q) * LogNonNegReal::from_linear(phi_ratio) *
      sum({q_pow(q, -1.0 - alpha / region.R), q_pow(q, -1.0 - alpha / region.R * lq / lqH)});

  return sum({first, second, third});
}

// log of mu_m / (H eps)^m.
inline LogNonNegReal r2_prefactor(const ErrorParams& p) {
  return LogNonNegReal::from_log(weights::log_mu(p.m) - p.m * std::log(p.H * p.eps));
}

inline LogNonNegReal r2_unchecked(const ErrorParams& p, const RegionModel& region) {
  const auto& c = kConstants;
  const double q = p.q, H = p.H, alpha = p.alpha, R = region.R;
  const double m = p.m;
  const double lq = std::log(q), lqH = std::log(q * H);
  const double lqH2pi = std::log(q * H / (2.0 * kPi));

  const double near_block = H * lqH2pi / (2.0 * kPi * (m - 2.0)) + H / (2.0 * kPi * (m - 2.0) * (m - 2.0)) +
                            c.a1 / (2.0 * kPi * (m - 2.0) * (m - 1.0)) + c.a1 * lqH + c.a2;
  const double far_block =
      H / (2.0 * kPi * (m - 1.0)) * (lqH2pi + 1.0 / (m - 1.0)) + c.a1 * lqH + c.a2 + c.a1 / (2.0 * m);

  const LogNonNegReal pre = r2_prefactor(p);
  const LogNonNegReal near =
      q_pow(q, -alpha / R * lq / lqH) * pre * positive(near_block, "r2 first bracket");
  const LogNonNegReal far =
      q_pow(q, -alpha * lq + alpha / R * lq / lqH) * pre * positive(far_block, "r2 second bracket");
  return near + far;
}

}  // namespace detail

// Zeros with |gamma| <= H: the at-most-four-zeros region for the low ones
// plus the classical region for the up to eight exceptional candidates.
inline LogNonNegReal r1(const ErrorParams& p, const RegionModel& region = {}) {
  p.validate(region);
  return detail::r1_unchecked(p, region);
}

// Sub-terms of the |gamma| > H zero sums, with L = alpha log^2 q:
// sum exp(-L/(R log(q|gamma|)))/|gamma|^m <= (A + B)/2 and
// sum 1/|gamma|^m <= (C + D)/2.
struct TailSums {
  LogNonNegReal a_tilde, b_tilde, c_tilde, d_tilde;
};

inline TailSums tail_sums(const ErrorParams& p, const RegionModel& region = {}) {
  p.validate(region);
  using detail::kPi;
  const auto& c = kConstants;
  const double q = p.q, H = p.H, R = region.R;
  const double m = p.m;
  const double L = p.alpha * std::log(q) * std::log(q);
  const double lqH = std::log(q * H), lH = std::log(H);
  const double lqH2pi = std::log(q * H / (2.0 * kPi));
  const double decay = -L / (R * lqH);
  TailSums t;
  t.a_tilde = LogNonNegReal::from_log(decay - (m - 1.0) * lH) *
              LogNonNegReal::from_linear((lqH2pi + 1.0 / (m - 2.0) + c.a1 / ((m - 1.0) * H)) / (kPi * (m - 2.0)));
  t.b_tilde = LogNonNegReal::from_log(decay - m * lH) * LogNonNegReal::from_linear(2.0 * (c.a1 * lqH + c.a2));
  t.c_tilde = LogNonNegReal::from_log(-(m - 1.0) * lH) *
              LogNonNegReal::from_linear((lqH2pi + 1.0 / (m - 1.0)) / (kPi * (m - 1.0)));
  t.d_tilde = LogNonNegReal::from_log(-m * lH) *
              LogNonNegReal::from_linear(2.0 * c.a1 * lqH + 2.0 * c.a2 + c.a1 / m);
  return t;
}

// Zeros with |gamma| > H via the m-th derivative Laplace bound.
inline LogNonNegReal r2(const ErrorParams& p, const RegionModel& region = {}) {
  p.validate(region);
  return detail::r2_unchecked(p, region);
}

// Gamma-factor integral: (J0 + mu_m J(m)/eps^m) q^{-(alpha/2) log q} / 2pi.
inline LogNonNegReal r3(const ErrorParams& p) {
  if (p.m < 3) throw DomainError("r3: m must be >= 3");
  const double lq = std::log(p.q);
  const LogNonNegReal j0 = LogNonNegReal::from_linear(estimates::j_zero());
  const LogNonNegReal jm = LogNonNegReal::from_log(weights::log_mu(p.m) + std::log(estimates::j_of_m(p.m)) -
                                                   p.m * std::log(p.eps));
  return (j0 + jm) * LogNonNegReal::from_log(-0.5 * p.alpha * lq * lq - std::log(2.0 * detail::kPi));
}

// Characters that are not primitive: 2.10 nu_m/eps q^{-alpha log q}.
inline LogNonNegReal r4(const ErrorParams& p) {
  const double lq = std::log(p.q);
  return LogNonNegReal::from_log(std::log(2.10) + weights::log_nu(p.m) - std::log(p.eps) - p.alpha * lq * lq);
}

// Higher prime powers: nu_m/eps (alpha log^2 q + eps) q^{-alpha log q}.
inline LogNonNegReal r5(const ErrorParams& p) {
  const double lq = std::log(p.q);
  const double L = p.alpha * lq * lq;
  return LogNonNegReal::from_log(weights::log_nu(p.m) - std::log(p.eps) + std::log(L + p.eps) - L);
}

namespace detail {

inline ErrorBreakdown r_total_unchecked(const ErrorParams& p, const RegionModel& region) {
  ErrorBreakdown b;
  b.r1 = r1_unchecked(p, region);
  b.r2 = r2_unchecked(p, region);
  b.r3 = r3(p);
  b.r4 = r4(p);
  b.r5 = r5(p);
  b.total = sum({b.r1, b.r2, b.r3, b.r4, b.r5});
  return b;
}

}  // namespace detail

inline ErrorBreakdown r_total(const ErrorParams& p, const RegionModel& region = {}) {
  p.validate(region);
  return detail::r_total_unchecked(p, region);
}

}  // namespace errorterms
}  // namespace primeap
