#pragma once

// Nonnegative reals carried as their natural logarithm.
//
// Quantities such as q^{-alpha log^2 q} at q = 1e100 sit near e^{-230000},
// far below the smallest double. Storing ln(x) keeps products, powers and
// sums of such magnitudes exact to double precision in the exponent.
// Zero is encoded as a log of -infinity so ordering and summation stay
// total without a separate tag.

#include <algorithm>
#include <cmath>
#include <compare>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <vector>

#include "primeap/errors.hpp"

namespace primeap {

class LogNonNegReal {
 public:
  constexpr LogNonNegReal() = default;  // zero

  static LogNonNegReal from_linear(double x) {
    if (std::isnan(x) || x < 0.0) throw DomainError("LogNonNegReal::from_linear: negative or NaN input");
    LogNonNegReal r;
    r.log_ = (x == 0.0) ? -kInf : std::log(x);
    return r;
  }

  static LogNonNegReal from_log(double t) {
    if (std::isnan(t) || t == kInf) throw DomainError("LogNonNegReal::from_log: +inf or NaN log value");
    LogNonNegReal r;
    r.log_ = t;
    return r;
  }

  static constexpr LogNonNegReal zero() { return LogNonNegReal{}; }
  static LogNonNegReal one() { return from_log(0.0); }

  double log_value() const noexcept { return log_; }
  bool is_zero() const noexcept { return log_ == -kInf; }

  // Throws RangeError carrying the log value when e^log does not fit a
  // normal double.
  double to_linear() const {
    if (is_zero()) return 0.0;
    if (log_ > kMaxLog) throw RangeError("LogNonNegReal::to_linear: overflow", log_);
    if (log_ < kMinLog) throw RangeError("LogNonNegReal::to_linear: underflow", log_);
    return std::exp(log_);
  }

  friend LogNonNegReal operator*(LogNonNegReal a, LogNonNegReal b) {
    LogNonNegReal r;
    r.log_ = (a.is_zero() || b.is_zero()) ? -kInf : a.log_ + b.log_;
    return r;
  }

  friend LogNonNegReal operator/(LogNonNegReal a, LogNonNegReal b) {
    if (b.is_zero()) throw DomainError("LogNonNegReal: division by zero");
    LogNonNegReal r;
    r.log_ = a.is_zero() ? -kInf : a.log_ - b.log_;
    return r;
  }

  friend LogNonNegReal operator+(LogNonNegReal a, LogNonNegReal b) {
    LogNonNegReal r;
    r.log_ = log_add(a.log_, b.log_);
    return r;
  }

  LogNonNegReal& operator*=(LogNonNegReal b) { return *this = *this * b; }
  LogNonNegReal& operator/=(LogNonNegReal b) { return *this = *this / b; }
  LogNonNegReal& operator+=(LogNonNegReal b) { return *this = *this + b; }

  // 0^k is 0 for k > 0 and 1 for k == 0; negative powers of zero are
  // rejected.
  LogNonNegReal pow(double k) const {
    if (std::isnan(k) || std::isinf(k)) throw DomainError("LogNonNegReal::pow: non-finite exponent");
    if (is_zero()) {
      if (k > 0.0) return zero();
      if (k == 0.0) return one();
      throw DomainError("LogNonNegReal::pow: negative power of zero");
    }
    LogNonNegReal r;
    r.log_ = k * log_;
    return r;
  }

  friend bool operator==(LogNonNegReal a, LogNonNegReal b) noexcept { return a.log_ == b.log_; }
  friend std::partial_ordering operator<=>(LogNonNegReal a, LogNonNegReal b) noexcept {
    return a.log_ <=> b.log_;
  }

  friend std::ostream& operator<<(std::ostream& os, LogNonNegReal a) {
    return os << "exp(" << a.log_ << ")";
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  // ln(DBL_MAX) and ln(DBL_MIN): outside these e^x is inf or subnormal.
  static constexpr double kMaxLog = 709.782712893384;
  static constexpr double kMinLog = -708.3964185322641;

  static double log_add(double x, double y) {
    if (x < y) std::swap(x, y);
    if (y == -kInf) return x;
    return x + std::log1p(std::exp(y - x));
  }

  double log_ = -kInf;
};

// Log-sum-exp pivoted on the largest term. Empty input sums to zero.
inline LogNonNegReal sum(std::span<const LogNonNegReal> terms) {
  double pivot = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) pivot = std::max(pivot, t.log_value());
  if (pivot == -std::numeric_limits<double>::infinity()) return LogNonNegReal::zero();
  double acc = 0.0;
  for (const auto& t : terms) {
    if (!t.is_zero()) acc += std::exp(t.log_value() - pivot);
  }
  return LogNonNegReal::from_log(pivot + std::log(acc));
}

inline LogNonNegReal sum(std::initializer_list<LogNonNegReal> terms) {
  return sum(std::span<const LogNonNegReal>(terms.begin(), terms.size()));
}

}  // namespace primeap
