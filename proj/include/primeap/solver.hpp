#pragma once

// Solves for the interval exponent alpha: the smallest alpha with
// 1 - q0 r(alpha, eps, H, m, q0) = slack, after balancing r2 = u r1 to pick H
// and sweeping (u, m).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <thread>
#include <vector>

#include "primeap/errors.hpp"
#include "primeap/errorterms.hpp"

namespace primeap {

struct SolverSolution {
  double alpha = 0.0;
  double H = 0.0;
  int m = 0;
  double u = 0.0;
  double residual = 0.0;  // 1 - q0 r at alpha
  ErrorBreakdown breakdown;
  int iterations = 0;
};

struct SolverConfig {
  double slack = 1e-6;
  int u_points = 40;
  double u_min = 0.001;
  double u_max = 0.2;
  int m_halfwidth = 3;
  // Extra (solve H, solve alpha) rounds after the seeded pass. Zero
  // reproduces the tabulated H values.
  int refinement_passes = 0;
  int workers = 1;
  RegionModel region{};
};

namespace solver {

namespace detail {
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;
inline constexpr double kHMax = 1e9;
}  // namespace detail

// First-order alpha for which (1+u) q0 r1~ = 1.
inline double tilde_alpha(double H, int /*m*/, double q0, double eps, const RegionModel& region = {}) {
  if (!(H > 1.0)) throw DomainError("tilde_alpha: H must exceed 1");
  const double lq = std::log(q0);
  const double lqH = std::log(q0 * H);
  return region.R1 * lqH / (lq * lq) *
         std::log(q0 * std::log(H) * std::log(q0 * q0 * H) / (2.0 * detail::kPi * eps));
}

// log of the approximate H solving r2~ = u r1~ at alpha~.
inline double log_tilde_H(int m, double q0, double eps, double u, const RegionModel& region = {}) {
  if (m < 2) throw DomainError("tilde_H: m must be >= 2");
  if (!(u > 0.0)) throw DomainError("tilde_H: u must be positive");
  const double lq = std::log(q0);
  const double inner = std::log(4.0 / (u * std::sqrt(static_cast<double>(m)))) +
                       m * std::log(4.0 * m / detail::kE) +
                       (1.0 - region.R1 / region.R) * std::log(q0 * lq / (4.0 * detail::kPi * eps));
  return -std::log(eps) + inner / (m - 1.0);
}

inline double tilde_H(int m, double q0, double eps, double u, const RegionModel& region = {}) {
  return std::exp(log_tilde_H(m, q0, eps, u, region));
}

// Approximate minimiser in m of alpha~(H~(m), m).
inline double tilde_m(double q0, double eps, double u, const RegionModel& region = {}) {
  if (!(u > 0.0)) throw DomainError("tilde_m: u must be positive");
  const double lq = std::log(q0);
  return 0.5 + std::log(16.0 / u) + (1.0 - region.R1 / region.R) * std::log(q0 * lq / (4.0 * detail::kPi * eps));
}

// H solving r2(alpha, H) = u r1(alpha, H), by bisection on log H over
// [1, 1e9]. The seed alpha need not satisfy Condalf; the bounds are only
// used to balance the two terms here.
inline double solve_H(double alpha_seed, double u, int m, double q0, double eps, const RegionModel& region = {}) {
  if (!(u > 0.0)) throw DomainError("solve_H: u must be positive");
  if (m < 3) throw DomainError("solve_H: m must be >= 3");
  const double log_u = std::log(u);
  auto gap = [&](double log_H) {
    ErrorParams p{alpha_seed, eps, std::exp(log_H), m, q0};
    return errorterms::detail::r2_unchecked(p, region).log_value() -
           errorterms::detail::r1_unchecked(p, region).log_value() - log_u;
  };
  double lo = 0.0, hi = std::log(detail::kHMax);
  double g_lo = gap(lo), g_hi = gap(hi);
  if (!(g_lo > 0.0 && g_hi < 0.0)) throw NoRootError("solve_H: r2 - u r1 has no sign change on [1, 1e9]", g_lo, g_hi);
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (gap(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

// 1 - q0 r(alpha) - slack, increasing in alpha.
inline double cond2_residual(double alpha, double H, int m, double q0, double eps, double slack,
                             const RegionModel& region = {}) {
  ErrorParams p{alpha, eps, H, m, q0};
  const auto b = errorterms::detail::r_total_unchecked(p, region);
  return -std::expm1(std::log(q0) + b.total.log_value()) - slack;
}

struct AlphaRoot {
  double alpha;
  int iterations;
};

// Bisection for 1 - q0 r = slack on alpha in [0, Condalf ceiling).
inline AlphaRoot solve_alpha_detailed(double H, int m, double q0, double eps, double slack = 1e-6,
                                      const RegionModel& region = {}) {
  if (!(H >= 1.0)) throw DomainError("solve_alpha: H must be >= 1");
  if (m < 3) throw DomainError("solve_alpha: m must be >= 3");
  if (!(slack > 0.0 && slack < 1.0)) throw DomainError("solve_alpha: slack must lie in (0, 1)");
  double lo = 0.0;
  double hi = ErrorParams::condalf_ceiling(region.R, q0, H) * (1.0 - 1e-9);
  if (cond2_residual(hi, H, m, q0, eps, slack, region) < 0.0)
    throw InfeasibleError("solve_alpha: q0 r exceeds 1 - slack at the Condalf ceiling");
  int it = 0;
  while (hi - lo > 1e-15 * hi && it < 200) {
    const double mid = 0.5 * (lo + hi);
    if (cond2_residual(mid, H, m, q0, eps, slack, region) < 0.0)
      lo = mid;
    else
      hi = mid;
    ++it;
  }
  return {hi, it};
}

inline double solve_alpha(double H, int m, double q0, double eps, double slack = 1e-6,
                          const RegionModel& region = {}) {
  return solve_alpha_detailed(H, m, q0, eps, slack, region).alpha;
}

inline SolverSolution make_solution(double alpha, double H, int m, double u, double q0, double eps, int iterations,
                                    const RegionModel& region) {
  SolverSolution s;
  s.alpha = alpha;
  s.H = H;
  s.m = m;
  s.u = u;
  s.iterations = iterations;
  ErrorParams p{alpha, eps, H, m, q0};
  s.breakdown = errorterms::r_total(p, region);
  s.residual = -std::expm1(std::log(q0) + s.breakdown.total.log_value());
  return s;
}

// Alpha for tabulated (m, H): the replay of a table row.
inline SolverSolution solve_fixed(double q0, double eps, double u, int m, double H, double slack = 1e-6,
                                  const RegionModel& region = {}) {
  const auto root = solve_alpha_detailed(H, m, q0, eps, slack, region);
  return make_solution(root.alpha, H, m, u, q0, eps, root.iterations, region);
}

// One (u, m) cell: H~ -> alpha~ -> H from r2 = u r1 -> alpha from Cond2,
// then optional refinement rounds. Empty when the cell is infeasible.
inline std::optional<SolverSolution> solve_cell(double q0, double eps, double u, int m, const SolverConfig& cfg) {
  try {
    const double H0 = tilde_H(m, q0, eps, u, cfg.region);
    if (!(H0 > 1.0)) return std::nullopt;
    const double seed = tilde_alpha(H0, m, q0, eps, cfg.region);
    double H = solve_H(seed, u, m, q0, eps, cfg.region);
    auto root = solve_alpha_detailed(H, m, q0, eps, cfg.slack, cfg.region);
    int iterations = root.iterations;
    for (int pass = 0; pass < cfg.refinement_passes; ++pass) {
      H = solve_H(root.alpha, u, m, q0, eps, cfg.region);
      root = solve_alpha_detailed(H, m, q0, eps, cfg.slack, cfg.region);
      iterations += root.iterations;
    }
    return make_solution(root.alpha, H, m, u, q0, eps, iterations, cfg.region);
  } catch (const InfeasibleError&) {
    return std::nullopt;
  } catch (const NoRootError&) {
    return std::nullopt;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

inline std::vector<double> u_grid(const SolverConfig& cfg) {
  std::vector<double> us;
  const int n = std::max(1, cfg.u_points);
  if (n == 1) return {cfg.u_min};
  const double a = std::log(cfg.u_min), b = std::log(cfg.u_max);
  for (int i = 0; i < n; ++i) us.push_back(std::exp(a + (b - a) * i / (n - 1)));
  return us;
}

namespace detail {

struct Cell {
  double u;
  int m;
};

// Smaller alpha wins; ties go to smaller m, then smaller u.
inline bool better(const SolverSolution& a, const SolverSolution& b) {
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  if (a.m != b.m) return a.m < b.m;
  return a.u < b.u;
}

}  // namespace detail

// Sweeps u over a log grid on [u_min, u_max] and m over
// ceil(m~) - halfwidth .. ceil(m~) + halfwidth.
inline SolverSolution optimize(double q0, double eps, const SolverConfig& cfg = {}) {
  if (!(q0 >= 5e4)) throw DomainError("optimize: q0 must be >= 5e4");
  if (!(eps > 0.0)) throw DomainError("optimize: eps must be positive");
  std::vector<detail::Cell> cells;
  for (double u : u_grid(cfg)) {
    const int centre = static_cast<int>(std::ceil(tilde_m(q0, eps, u, cfg.region)));
    for (int m = std::max(3, centre - cfg.m_halfwidth); m <= std::min(weights::kMaxOrder, centre + cfg.m_halfwidth);
         ++m)
      cells.push_back({u, m});
  }
  std::vector<std::optional<SolverSolution>> results(cells.size());
  const int workers = std::max(1, std::min<int>(cfg.workers, static_cast<int>(cells.size())));
  auto run = [&](int w) {
    for (std::size_t i = w; i < cells.size(); i += workers) results[i] = solve_cell(q0, eps, cells[i].u, cells[i].m, cfg);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  std::optional<SolverSolution> best;
  for (auto& r : results)
    if (r && (!best || detail::better(*r, *best))) best = std::move(r);
  if (!best) throw InfeasibleError("optimize: every (u, m) cell is infeasible");
  return *best;
}

// Direct minimisation of alpha over H for each m in [m_lo, m_hi]: a coarse
// log-H grid followed by golden-section refinement around the best node.
// Used when the seeded pipeline lands outside Condalf.
inline SolverSolution minimize_over_H(double q0, double eps, int m_lo, int m_hi, const SolverConfig& cfg = {}) {
  std::optional<SolverSolution> best;
  const double log_h_max = std::log(detail::kHMax);
  constexpr double kStep = 0.25;
  auto alpha_at = [&](int m, double log_H) -> double {
    try {
      return solve_alpha(std::exp(log_H), m, q0, eps, cfg.slack, cfg.region);
    } catch (const InfeasibleError&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  for (int m = std::max(3, m_lo); m <= std::min(weights::kMaxOrder, m_hi); ++m) {
    double best_x = 0.0, best_a = std::numeric_limits<double>::infinity();
    for (double x = 0.0; x <= log_h_max; x += kStep) {
      const double a = alpha_at(m, x);
      if (a < best_a) {
        best_a = a;
        best_x = x;
      }
    }
    if (!std::isfinite(best_a)) continue;
    double a = std::max(0.0, best_x - kStep), b = std::min(log_h_max, best_x + kStep);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = alpha_at(m, c), fd = alpha_at(m, d);
    for (int it = 0; it < 60; ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - phi * (b - a);
        fc = alpha_at(m, c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + phi * (b - a);
        fd = alpha_at(m, d);
      }
    }
    const double x = fc < fd ? c : d;
    const double H = std::exp(x);
    const auto root = solve_alpha_detailed(H, m, q0, eps, cfg.slack, cfg.region);
    auto sol = make_solution(root.alpha, H, m, 0.0, q0, eps, root.iterations, cfg.region);
    // No u was prescribed; report the ratio r2/r1 actually reached.
    sol.u = std::exp(sol.breakdown.r2.log_value() - sol.breakdown.r1.log_value());
    if (!best || detail::better(sol, *best)) best = sol;
  }
  if (!best) throw InfeasibleError("minimize_over_H: no feasible (m, H)");
  return *best;
}

struct TableRow {
  double q0;
  double eps;
  double u;
  int m;
  double H;
  double alpha;
};

struct GridPoint {
  double q0;
  double eps;
};

// The 20 x 6 grid: q0 in {5e4, 1e10, 1e15, ..., 1e100}, eps in {1e-4, ..., 10}.
inline std::vector<GridPoint> paper_grid() {
  std::vector<GridPoint> g;
  std::vector<double> qs{5e4};
  for (int k = 10; k <= 100; k += 5) qs.push_back(std::pow(10.0, k));
  for (double q : qs)
    for (double e : {1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0}) g.push_back({q, e});
  return g;
}

inline std::vector<TableRow> reproduce_tables(const std::vector<GridPoint>& grid, const SolverConfig& cfg = {}) {
  std::vector<TableRow> rows;
  rows.reserve(grid.size());
  for (const auto& gp : grid) {
    const auto s = optimize(gp.q0, gp.eps, cfg);
    rows.push_back({gp.q0, gp.eps, s.u, s.m, s.H, s.alpha});
  }
  return rows;
}

enum class ComparisonMode {
  full,            // R = 6.50 with the R1 = 3.82 four-zero region
  classical_650,   // single region, R = 6.50
  classical_965,   // single region, R = 9.65
};

// Alpha under the three zero-free-region assumptions. Single-region modes
// minimise directly over (m, H) for m in [3, m_max_single]: their seeded
// H lies below the Condalf ceiling needed by Cond2.
inline SolverSolution mccurley_comparison(double q0, double eps, ComparisonMode mode, SolverConfig cfg = {},
                                          int m_max_single = weights::kMaxOrder) {
  switch (mode) {
    case ComparisonMode::full:
      cfg.region = RegionModel::liu_wang();
      return optimize(q0, eps, cfg);
    case ComparisonMode::classical_650:
      cfg.region = RegionModel::classical(6.50);
      return minimize_over_H(q0, eps, 3, m_max_single, cfg);
    case ComparisonMode::classical_965:
      cfg.region = RegionModel::classical(9.65);
      return minimize_over_H(q0, eps, 3, m_max_single, cfg);
  }
  throw DomainError("mccurley_comparison: unknown mode");
}

}  // namespace solver
}  // namespace primeap
