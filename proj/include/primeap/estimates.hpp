#pragma once

// Zero-density and gamma-factor estimates for Dirichlet L-functions, with
// the fixed constants of the zero-free regions they rely on.

#include <cmath>
#include <numbers>
#include <vector>

#include "primeap/errors.hpp"
#include "primeap/quadrature.hpp"

namespace primeap {

struct AnalyticConstants {
  double R = 6.50;    // classical zero-free region
  double R1 = 3.82;   // at most four zeros inside 1 - 1/(R1 log x)
  double R2 = 2.05;   // repulsion between real zeros of distinct conductors
  double a1 = 0.92;   // N(T, chi) remainder: a1 log(qT) + a2
  double a2 = 5.37;
  double euler_gamma = 0.5772156649;
};

inline constexpr AnalyticConstants kConstants{};

namespace estimates {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;

// P(T) = (T/pi) log(qT / (2 pi e)), the main term of N(T, chi).
inline double zero_count_main(double T, double q) {
  if (!(T >= 1.0)) throw DomainError("zero_count_main: T < 1");
  if (!(q >= 3.0)) throw DomainError("zero_count_main: q < 3");
  return T / kPi * std::log(q * T / (2.0 * kPi * kE));
}

// P(T) + a1 log(qT) + a2.
inline double zero_count_upper(double T, double q) {
  return zero_count_main(T, q) + kConstants.a1 * std::log(q * T) + kConstants.a2;
}

// Upper bound for sum_{1 < |gamma| < H} 1/|gamma| over zeros of one
// L-function of conductor q.
inline double inverse_gamma_sum_bound(double H, double q) {
  if (!(H >= 1.0)) throw DomainError("inverse_gamma_sum_bound: H < 1");
  if (!(q >= 3.0)) throw DomainError("inverse_gamma_sum_bound: q < 3");
  const auto& c = kConstants;
  const double lq = std::log(q);
  const double lH = std::log(H);
  return lq * lH / kPi + lH * lH / (2.0 * kPi) + (1.0 / kPi + c.a1) * lq - std::log(2.0 * kPi) / kPi * lH -
         std::log(2.0 * kPi * kE) / kPi + c.a2 + c.a1 - c.a1 / H;
}

// U(T) = log(6(T + 12)) bounds |Re Gamma'/Gamma| on the relevant line.
inline double gamma_bound(double T) {
  if (!(T >= 0.0)) throw DomainError("gamma_bound: T < 0");
  return std::log(6.0 * (T + 12.0));
}

// J_0 = int_{|T| <= 1} U(|T|) dT, by the antiderivative (T+12) log(6(T+12)) - T.
inline double j_zero() {
  auto anti = [](double T) { return (T + 12.0) * std::log(6.0 * (T + 12.0)) - T; };
  return 2.0 * (anti(1.0) - anti(0.0));
}

namespace detail {

// 2 int_1^inf U(T) T^{-m} dT in the variable s = log T, truncated where the
// analytic tail bound falls below 1e-14 of the retained part.
inline double j_of_m_compute(int m) {
  const double k = m - 1.0;
  auto integrand = [k](double s) {
    return std::log(6.0 * (std::exp(s) + 12.0)) * std::exp(-k * s);
  };
  // For T >= 12: log(6(T+12)) <= log(12T), and
  // int_X^inf log(12T) T^{-m} dT = X^{-k} (log(12X)/k + 1/k^2).
  auto tail = [k](double X) { return std::exp(-k * std::log(X)) * (std::log(12.0 * X) / k + 1.0 / (k * k)); };
  double X = 16.0;
  const double rough = std::log(78.0) / k;
  while (tail(X) > 1e-14 * rough) X *= 2.0;
  auto r = quad::integrate<double>(integrand, 0.0, std::log(X), 1e-13);
  return 2.0 * r.value;
}

inline constexpr int kJTableMax = 400;

inline const std::vector<double>& j_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kJTableMax + 1, 0.0);
    for (int m = 2; m <= kJTableMax; ++m) t[m] = j_of_m_compute(m);
    return t;
  }();
  return table;
}

}  // namespace detail

// J(m) = int_{|T| > 1} U(|T|) |T|^{-m} dT. Values for m <= 400 are
// tabulated once on first use.
inline double j_of_m(int m) {
  if (m < 2) throw DomainError("j_of_m: m < 2 diverges");
  if (m <= detail::kJTableMax) return detail::j_table()[m];
  return detail::j_of_m_compute(m);
}

// Lower bound for phi(q) from q/phi(q) < e^C log log q + 2.51/log log q.
inline double phi_lower_bound(double q) {
  if (!(q >= 3.0)) throw DomainError("phi_lower_bound: q < 3");
  const double ll = std::log(std::log(q));
  return q / (std::exp(kConstants.euler_gamma) * ll + 2.51 / ll);
}

// e^C log log q + 2.51/log log q.
inline double phi_ratio_bound(double q) {
  if (!(q >= 3.0)) throw DomainError("phi_ratio_bound: q < 3");
  const double ll = std::log(std::log(q));
  return std::exp(kConstants.euler_gamma) * ll + 2.51 / ll;
}

}  // namespace estimates
}  // namespace primeap
