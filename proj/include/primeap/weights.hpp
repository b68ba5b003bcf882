#pragma once

// The polynomial bump f(t) = (t-L)^m (L+eps-t)^m on [L, L+eps], its norm
// ratios, and bounds on its Laplace transform F(s) = int f(t) e^{-st} dt.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "primeap/errors.hpp"
#include "primeap/logdomain.hpp"
#include "primeap/quadrature.hpp"

namespace primeap {

struct WeightSpec {
  double L;
  double eps;
  int m;

  void validate() const {
    if (!(L >= 0.0)) throw DomainError("WeightSpec: L must be nonnegative");
    if (!(eps > 0.0)) throw DomainError("WeightSpec: eps must be positive");
    if (m < 1) throw DomainError("WeightSpec: m must be >= 1");
  }
};

namespace weights {

inline constexpr int kMaxOrder = 200;

// log n! by direct summation; exact to double rounding well past 401!.
inline double log_factorial(int n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(2 * kMaxOrder + 2, 0.0);
    for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] + std::log(static_cast<double>(k));
    return t;
  }();
  if (n < 0) throw DomainError("log_factorial: negative argument");
  if (static_cast<std::size_t>(n) < table.size()) return table[n];
  double acc = table.back();
  for (int k = static_cast<int>(table.size()); k <= n; ++k) acc += std::log(static_cast<double>(k));
  return acc;
}

inline void check_order(int m) {
  if (m < 1 || m > kMaxOrder) throw DomainError("weight order m outside [1, 200]");
}

// log mu_m, mu_m = (2m+1)! / (m! sqrt(2m+1)).
inline double log_mu(int m) {
  check_order(m);
  return log_factorial(2 * m + 1) - log_factorial(m) - 0.5 * std::log(2.0 * m + 1.0);
}

// log nu_m, nu_m = (2m+1)! / (4^m (m!)^2).
inline double log_nu(int m) {
  check_order(m);
  return log_factorial(2 * m + 1) - m * std::log(4.0) - 2.0 * log_factorial(m);
}

inline double mu(int m) { return std::exp(log_mu(m)); }
inline double nu(int m) { return std::exp(log_nu(m)); }

inline double f_eval(double t, const WeightSpec& spec) {
  if (t < spec.L || t > spec.L + spec.eps) return 0.0;
  return std::pow((t - spec.L) * (spec.L + spec.eps - t), spec.m);
}

// ||f||_1 = eps^{2m+1} (m!)^2 / (2m+1)!  (a Beta integral).
inline LogNonNegReal l1_norm(const WeightSpec& spec) {
  spec.validate();
  const int m = spec.m;
  return LogNonNegReal::from_log((2.0 * m + 1.0) * std::log(spec.eps) + 2.0 * log_factorial(m) -
                                 log_factorial(2 * m + 1));
}

// ||f||_inf = (eps/2)^{2m}, attained at the midpoint.
inline LogNonNegReal sup_norm(const WeightSpec& spec) {
  spec.validate();
  return LogNonNegReal::from_log(2.0 * spec.m * std::log(spec.eps / 2.0));
}

// ||f^{(m)}||_2 = mu_m ||f||_1 / eps^{m + 1/2}.
inline LogNonNegReal derivative_l2_norm(const WeightSpec& spec) {
  return l1_norm(spec) * LogNonNegReal::from_log(log_mu(spec.m) - (spec.m + 0.5) * std::log(spec.eps));
}

// Quadrature of the defining integral, for checking the closed-form bounds.
// Substitutes t = L + eps x and pre-splits [0, 1] by the oscillation count.
inline std::complex<double> laplace_numeric(std::complex<double> s, const WeightSpec& spec) {
  spec.validate();
  if (std::abs(s.imag()) > 1e6) throw DomainError("laplace_numeric: |Im s| > 1e6");
  const double eps = spec.eps;
  const int m = spec.m;
  const std::complex<double> se = s * eps;
  auto g = [m, se](double x) -> std::complex<double> {
    return std::pow(x * (1.0 - x), m) * std::exp(-se * x);
  };
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(se.imag()) / 3.0)));
  auto r = quad::integrate<std::complex<double>>(g, 0.0, 1.0, 1e-12, 0.0, panels + 20000, panels);
  const double scale = std::pow(eps, 2 * m + 1);
  return std::exp(-s * spec.L) * scale * r.value;
}

struct LaplaceBounds {
  // F(sigma) >= e^{-sigma (L+eps)} ||f||_1, sigma = Re s.
  LogNonNegReal lower;
  // |F(s)| <= e^{-sigma L} ||f||_1.
  LogNonNegReal trivial;
  // |F(s)| <= e^{-sigma L} / |s| * 2(2m+1)/(eps m) * ||f||_1; absent at s = 0.
  std::optional<LogNonNegReal> first_order;
  // |F(s)| <= sqrt(eps) e^{-sigma L} ||f^{(m)}||_2 / |s|^m; absent at s = 0.
  std::optional<LogNonNegReal> mth_order;

  LogNonNegReal best_upper() const {
    LogNonNegReal b = trivial;
    if (first_order) b = std::min(b, *first_order);
    if (mth_order) b = std::min(b, *mth_order);
    return b;
  }
};

inline LaplaceBounds laplace_bounds(std::complex<double> s, const WeightSpec& spec) {
  spec.validate();
  const double sigma = s.real();
  if (sigma < 0.0) throw DomainError("laplace_bounds: Re s < 0");
  const LogNonNegReal norm1 = l1_norm(spec);
  const int m = spec.m;
  LaplaceBounds out;
  out.lower = LogNonNegReal::from_log(-sigma * (spec.L + spec.eps)) * norm1;
  out.trivial = LogNonNegReal::from_log(-sigma * spec.L) * norm1;
  const double abs_s = std::abs(s);
  if (abs_s > 0.0) {
    const double log_abs = std::log(abs_s);
    out.first_order = LogNonNegReal::from_log(-sigma * spec.L - log_abs +
                                              std::log(2.0 * (2.0 * m + 1.0) / (spec.eps * m))) *
                      norm1;
    out.mth_order = LogNonNegReal::from_log(0.5 * std::log(spec.eps) - sigma * spec.L - m * log_abs) *
                    derivative_l2_norm(spec);
  }
  return out;
}

}  // namespace weights
}  // namespace primeap
