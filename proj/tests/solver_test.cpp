#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "primeap/solver.hpp"
#include "support/paper_data.hpp"

using namespace primeap;

namespace {

const testdata::Row& row_1e10() {
  for (const auto& r : testdata::kSampledRows)
    if (r.q0 == 1e10 && r.eps == 1.0) return r;
  throw std::logic_error("missing row");
}

}  // namespace

TEST(Approximants, TildeAlpha) {
  EXPECT_NEAR(solver::tilde_alpha(62.5, 16, 1e10, 1.0), 5.191, 0.01);
  EXPECT_EQ(solver::tilde_alpha(62.5, 3, 1e10, 1.0), solver::tilde_alpha(62.5, 60, 1e10, 1.0));
  double prev = 0.0;
  for (double H = 1.5; H < 1e7; H *= 1.5) {
    const double a = solver::tilde_alpha(H, 10, 1e10, 1.0);
    EXPECT_GT(a, prev);
    prev = a;
  }
  EXPECT_THROW(solver::tilde_alpha(1.0, 10, 1e10, 1.0), DomainError);
}

TEST(Approximants, TildeM) {
  EXPECT_NEAR(solver::tilde_m(1e10, 1.0, 0.057), 15.88, 0.02);
  EXPECT_LT(solver::tilde_m(1e10, 1.0, 0.057), solver::tilde_m(1e20, 1.0, 0.057));
  EXPECT_GT(solver::tilde_m(1e10, 1.0, 0.057), solver::tilde_m(1e10, 1.0, 0.1));
}

TEST(Approximants, TildeH) {
  const double h = solver::tilde_H(16, 1e10, 1.0, 0.057);
  EXPECT_GT(h, 62.5 / 2);
  EXPECT_LT(h, 62.5 * 2);
  // Direct evaluation of the displayed expression.
  for (int m : {3, 8, 16, 40})
    for (double eps : {1e-3, 1.0, 10.0}) {
      const double q0 = 1e30, u = 0.03, k = 1.0 - kConstants.R1 / kConstants.R;
      const double inner = 4.0 / (u * std::sqrt(m)) * std::pow(4.0 * m / std::numbers::e, m) *
                           std::pow(q0 * std::log(q0) / (4 * std::numbers::pi * eps), k);
      const double expected = std::pow(inner, 1.0 / (m - 1)) / eps;
      EXPECT_NEAR(solver::tilde_H(m, q0, eps, u) / expected, 1.0, 1e-12) << m << " " << eps;
    }
  EXPECT_GT(solver::tilde_H(16, 1e10, 1.0, 0.01), solver::tilde_H(16, 1e10, 1.0, 0.1));
  EXPECT_THROW(solver::tilde_H(1, 1e10, 1.0, 0.05), DomainError);
}

TEST(SolveH, TableRows) {
  struct Case {
    double q0, eps, u;
    int m;
    double H;
  };
  for (const Case c : {Case{1e10, 1.0, 0.057, 16, 62.5}, Case{5e4, 10.0, 0.037, 11, 4.4219}}) {
    const double seed = solver::tilde_alpha(solver::tilde_H(c.m, c.q0, c.eps, c.u), c.m, c.q0, c.eps);
    const double H = solver::solve_H(seed, c.u, c.m, c.q0, c.eps);
    EXPECT_NEAR(H / c.H, 1.0, 0.05) << c.q0;
    EXPECT_LT(solver::solve_H(seed, 2 * c.u, c.m, c.q0, c.eps), H);
  }
}

TEST(SolveAlpha, ReplaysSampledRows) {
  for (const auto& r : testdata::kSampledRows) {
    const auto s = solver::solve_fixed(r.q0, r.eps, r.u, r.m, r.H);
    EXPECT_NEAR(s.alpha / r.alpha, 1.0, 0.005) << r.q0 << " " << r.eps;
  }
}

TEST(SolveAlpha, SevenCubesOperatingPoint) {
  const auto& r = testdata::kCubesRow;
  EXPECT_NEAR(solver::solve_alpha(r.H, r.m, r.q0, r.eps) / r.alpha, 1.0, 0.005);
}

TEST(SolveAlpha, ResidualContractAndCondalf) {
  for (const auto& r : testdata::kSampledRows) {
    const auto s = solver::solve_fixed(r.q0, r.eps, r.u, r.m, r.H);
    EXPECT_NEAR(s.residual, 1e-6, 1e-9) << r.q0 << " " << r.eps;
    EXPECT_LT(s.alpha, ErrorParams::condalf_ceiling(kConstants.R, r.q0, r.H));
  }
}

TEST(SolveAlpha, SlackLimits) {
  const auto& r = row_1e10();
  const double a1 = solver::solve_alpha(r.H, r.m, r.q0, r.eps, 1e-6);
  const double a2 = solver::solve_alpha(r.H, r.m, r.q0, r.eps, 0.5);
  EXPECT_GT(a2, a1);  // more slack demands a smaller r
  EXPECT_THROW(solver::solve_alpha(r.H, r.m, r.q0, r.eps, 1.0), DomainError);
  // A tiny H leaves no room under the Condalf ceiling.
  EXPECT_THROW(solver::solve_alpha(1.0, 3, 5e4, 1e-4, 1e-6), InfeasibleError);
}

TEST(Optimize, BeatsOrMatchesTable) {
  const auto& r = row_1e10();
  const auto s = solver::optimize(r.q0, r.eps);
  EXPECT_LE(s.alpha, r.alpha * 1.005);
  EXPECT_GE(s.alpha, r.alpha * 0.995);
  EXPECT_NEAR(s.residual, 1e-6, 1e-9);
}

TEST(Optimize, DeterministicAcrossWorkers) {
  SolverConfig one, two;
  two.workers = 2;
  const auto a = solver::optimize(1e30, 1.0, one);
  const auto b = solver::optimize(1e30, 1.0, one);
  const auto c = solver::optimize(1e30, 1.0, two);
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.alpha, c.alpha);
  EXPECT_EQ(a.H, c.H);
  EXPECT_EQ(a.m, c.m);
  EXPECT_EQ(a.u, c.u);
}

TEST(Optimize, UGrid) {
  SolverConfig cfg;
  const auto us = solver::u_grid(cfg);
  ASSERT_EQ(us.size(), 40u);
  EXPECT_NEAR(us.front(), 0.001, 1e-15);
  EXPECT_NEAR(us.back(), 0.2, 1e-15);
  for (size_t i = 1; i < us.size(); ++i) EXPECT_GT(us[i], us[i - 1]);
}

TEST(Tables, GridShape) {
  const auto g = solver::paper_grid();
  EXPECT_EQ(g.size(), 120u);
  EXPECT_EQ(g.front().q0, 5e4);
  EXPECT_EQ(g.back().q0, 1e100);
  const auto rows = solver::reproduce_tables({{1e30, 1.0}, {1e60, 1e-2}});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(rows[0].alpha / 4.4123, 1.0, 0.005);
  EXPECT_NEAR(rows[1].alpha / 4.4308, 1.0, 0.005);
}

TEST(Comparison, Ordering) {
  const double eps = std::log(3.0);
  const auto full = solver::mccurley_comparison(1e30, eps, solver::ComparisonMode::full);
  const auto c650 = solver::mccurley_comparison(1e30, eps, solver::ComparisonMode::classical_650);
  const auto c965 = solver::mccurley_comparison(1e30, eps, solver::ComparisonMode::classical_965);
  EXPECT_NEAR(full.alpha / 4.401, 1.0, 0.01);
  EXPECT_LT(full.alpha, c650.alpha);
  EXPECT_LT(c650.alpha, c965.alpha);
}
