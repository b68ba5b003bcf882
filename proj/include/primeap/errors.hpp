#pragma once

#include <stdexcept>
#include <string>

namespace primeap {

// Precondition violated (negative magnitude, T < 1, Condalf broken, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A log-domain value does not fit a native double on export.
class RangeError : public std::range_error {
 public:
  RangeError(const std::string& what, double log_value)
      : std::range_error(what), log_value_(log_value) {}
  double log_value() const noexcept { return log_value_; }

 private:
  double log_value_;
};

// No parameter choice satisfies the defining equation.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bracketing root finder saw no sign change.
class NoRootError : public std::runtime_error {
 public:
  NoRootError(const std::string& what, double f_lo, double f_hi)
      : std::runtime_error(what), f_lo_(f_lo), f_hi_(f_hi) {}
  double f_lo() const noexcept { return f_lo_; }
  double f_hi() const noexcept { return f_hi_; }

 private:
  double f_lo_;
  double f_hi_;
};

// Request exceeds a configured memory/size guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace primeap
