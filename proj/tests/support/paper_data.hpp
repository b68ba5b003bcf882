#pragma once

// Published parameter rows used as targets. Each entry: q0, eps, and the
// tabulated u, m, H and alpha.

#include <array>

namespace primeap::testdata {

struct Row {
  double q0;
  double eps;
  double u;
  int m;
  double H;
  double alpha;
};

// Twelve rows spanning the five q0 decades and the four eps decades.
inline constexpr std::array<Row, 12> kSampledRows{{
    {5e4, 1e-4, 0.086, 14, 514998.0, 19.228},
    {5e4, 1e-2, 0.098, 12, 4311.0, 12.245},
    {5e4, 1.0, 0.01, 15, 57.8, 6.9684},
    {5e4, 10.0, 0.037, 11, 4.4219, 4.8430},
    {1e10, 1e-4, 0.056, 20, 741876.0, 9.8356},
    {1e10, 1.0, 0.057, 16, 62.5, 5.3418},
    {1e30, 1e-2, 0.026, 38, 14802.0, 5.0053},
    {1e30, 1.0, 0.025, 36, 145.0, 4.4123},
    {1e60, 1e-2, 0.014, 68, 26639.0, 4.4308},
    {1e60, 10.0, 0.011, 67, 26.8, 4.0121},
    {1e100, 1e-4, 0.009, 108, 4287331.0, 4.3652},
    {1e100, 10.0, 0.007, 106, 42.3, 3.9513},
}};

// The operating point used for the seven-cubes application.
inline constexpr Row kCubesRow{1e32, 1.9, 0.022, 38, 80.8, 4.3060};

}  // namespace primeap::testdata
