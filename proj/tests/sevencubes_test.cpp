#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "primeap/sevencubes.hpp"
#include "support/oracles.hpp"

using namespace primeap;
using sevencubes::ConstructionStage;
using sevencubes::CubeCounter;

namespace {

// Minimal cube counts for n <= limit by plain unbounded-knapsack DP.
std::vector<int> knapsack_counts(std::uint64_t limit) {
  std::vector<int> best(limit + 1, 1 << 20);
  best[0] = 0;
  for (std::uint64_t n = 1; n <= limit; ++n)
    for (std::uint64_t x = 1; x * x * x <= n; ++x) best[n] = std::min(best[n], best[n - x * x * x] + 1);
  return best;
}

BigInt pow10(int k) { return boost::multiprecision::pow(BigInt(10), k); }

}  // namespace

TEST(Params, Defaults) {
  const SevenCubesParams p;
  EXPECT_NO_THROW(p.validate());
  EXPECT_NEAR(p.c3(), 2.2175, 1e-4);
  SevenCubesParams bad;
  bad.c2 = bad.c1 + 1.5;
  EXPECT_THROW(bad.validate(), DomainError);
}

TEST(Watson, DerivedQuantities) {
  const WatsonInstance x{1000, 7, 5, 11, 17, 0};
  EXPECT_NEAR(x.delta(), (1 + std::pow(17.0 / 5, 6) + std::pow(17.0 / 11, 6)) / 4, 1e-12);
  EXPECT_EQ(x.rho_denominator(), BigInt(6 * 5 * 11 * 17 * 7));
}

TEST(Watson, ConditionOneFailsForEqualSmall) {
  EXPECT_EQ(sevencubes::watson_check({1001, 7, 5, 5, 5, 1}).failed_condition, 1);
  EXPECT_EQ(sevencubes::watson_check({1001, 7, 5, 7, 3, 1}).failed_condition, 1);  // w < v
}

TEST(Watson, EvenAFailsConditionTwo) {
  // (41, 47, 53) satisfies condition (1); everything else is arbitrary.
  for (int a : {2, 4, 10, 1000})
    EXPECT_EQ(sevencubes::watson_check({pow10(62) + 1, a, 41, 47, 53, 5}).failed_condition, 2) << a;
  EXPECT_EQ(sevencubes::watson_check({pow10(62) + 1, 11, 41, 41, 53, 5}).failed_condition, 3);
  EXPECT_THROW(sevencubes::watson_check({0, 11, 41, 47, 53, 5}), DomainError);
}

TEST(CubeRootModP2, MatchesExhaustiveSearch) {
  for (int p : {5, 11, 17, 23, 29, 41}) {
    const int p2 = p * p;
    for (int c = 1; c < p2; ++c) {
      if (c % p == 0) continue;
      const BigInt r = bigint::cube_root_mod_p2(c, p);
      EXPECT_EQ(bigint::mod(r * r * r, p2), BigInt(c)) << p << " " << c;
      int count = 0;
      for (int x = 0; x < p2; ++x)
        if ((static_cast<long>(x) * x % p2) * x % p2 == c) ++count;
      EXPECT_EQ(count, 1);  // cubing permutes units when p = 2 mod 3
    }
  }
  EXPECT_EQ(bigint::cube_root_mod_p2(2, 5), BigInt(3));
  EXPECT_THROW(bigint::cube_root_mod_p2(2, 7), DomainError);
  EXPECT_THROW(bigint::cube_root_mod_p2(5, 5), DomainError);
}

TEST(BigIntHelpers, CrtAndRoots) {
  const auto c = bigint::crt({{2, 3}, {3, 5}, {2, 7}});
  EXPECT_EQ(c.residue, BigInt(23));
  EXPECT_EQ(c.modulus, BigInt(105));
  EXPECT_EQ(bigint::icbrt(BigInt(26)), BigInt(2));
  EXPECT_EQ(bigint::icbrt(BigInt(27)), BigInt(3));
  EXPECT_EQ(bigint::icbrt_ceil(BigInt(28)), BigInt(4));
  EXPECT_EQ(bigint::isqrt(BigInt(99)), BigInt(9));
  EXPECT_TRUE(bigint::is_probable_prime(BigInt(1000000007)));
  EXPECT_FALSE(bigint::is_probable_prime(BigInt(1000000007) * 3));
}

TEST(Construction, RejectsBadTriples) {
  EXPECT_EQ(sevencubes::construct_instance(pow10(62) + 1, 41, 41, 53).stage, ConstructionStage::precondition);
  EXPECT_EQ(sevencubes::construct_instance(pow10(62) + 1, 43, 47, 53).stage, ConstructionStage::precondition);
  // Far too small an n for u, v, w this size: nothing fits under Y.
  const auto c = sevencubes::construct_instance(BigInt(10000001), 41, 47, 53);
  EXPECT_FALSE(c.instance.has_value());
}

TEST(Construction, RoundTripWithWitness) {
  const BigInt u = 41, v = 47, w = 53;
  int built = 0;
  for (int i = 0; built < 5 && i < 40; ++i) {
    const BigInt n = pow10(62) + 1 + 2 * i;
    const auto c = sevencubes::construct_instance(n, u, v, w);
    if (c.stage == ConstructionStage::precondition) continue;
    ASSERT_EQ(c.stage, ConstructionStage::ok) << to_string(c.stage) << " at i = " << i;
    ASSERT_TRUE(c.instance);
    const auto& x = *c.instance;
    EXPECT_TRUE(sevencubes::watson_check(x).pass()) << sevencubes::watson_check(x).failed_condition;

    // CRT postconditions.
    EXPECT_TRUE(bigint::is_probable_prime(x.a));
    EXPECT_EQ(bigint::mod(x.a, 6), BigInt(5));
    EXPECT_EQ(bigint::mod(x.a - c.a_prime, u * u * v * v * w * w), BigInt(0));
    EXPECT_EQ(bigint::mod(x.t, u * v * w), BigInt(0));
    const BigInt vw2 = v * v * w * w;
    EXPECT_EQ(bigint::mod(c.a_prime * c.a_prime * c.a_prime * vw2 * vw2 * vw2 - 4 * n, u * u), BigInt(0));
    EXPECT_GE(c.kappa, 1.0);
    EXPECT_LE(std::log(static_cast<double>(x.a)), c.log_Y + 1e-9);

    const auto roots = oracle::seven_cube_witness(x.n, x.a, x.u, x.v, x.w, x.t);
    ASSERT_TRUE(roots);
    BigInt total = 0;
    for (const auto& r : roots->roots) total += r * r * r;
    EXPECT_EQ(total, n);
    ++built;
  }
  EXPECT_EQ(built, 5);
}

TEST(Construction, KappaMonotoneInRho) {
  double prev = sevencubes::kappa_cubed(41, 47, 53, 0.0);
  for (double rho = 1e-6; rho < 1.0; rho *= 3) {
    const double k = sevencubes::kappa_cubed(41, 47, 53, rho);
    EXPECT_LT(k, prev);
    prev = k;
  }
}

TEST(Thresholds, Published) {
  const auto r = sevencubes::threshold_report();
  EXPECT_NEAR(r.clustering, 68509, 5);
  EXPECT_NEAR(r.inequality, 70341, 5);
  EXPECT_LE(r.combined_c2, 71000);
  EXPECT_EQ(r.headline, 71000);
  EXPECT_EQ(sevencubes::n0_threshold(), r.combined_c2);
  EXPECT_GE(r.clustering_margin_at_68509, 0.0);
  EXPECT_LT(sevencubes::clustering_margin(68508.0), 0.0);
  EXPECT_GE(r.inequality_margin_at_70341, 0.0);
  EXPECT_LT(sevencubes::inequality_margin(70340.0), 0.0);
  EXPECT_GE(r.log_kappa0_minus_eps_at_70341, 0.0);
  EXPECT_GE(r.log10_modulus_c2_at_70341, 32.0);
}

TEST(Thresholds, MarginsMonotone) {
  double prev_c = sevencubes::clustering_margin(60000.0), prev_i = sevencubes::inequality_margin(60000.0);
  for (double x = 61000.0; x <= 80000.0; x += 1000.0) {
    const double c = sevencubes::clustering_margin(x), i = sevencubes::inequality_margin(x);
    EXPECT_GT(c, prev_c);
    EXPECT_GT(i, prev_i);
    prev_c = c;
    prev_i = i;
  }
}

TEST(Thresholds, KappaIncreasesInLogN) {
  double prev = sevencubes::kappa0_cubed(1000.0);
  for (double x = 2000.0; x <= 1e6; x *= 2) {
    const double k = sevencubes::kappa0_cubed(x);
    EXPECT_GT(k, prev);
    prev = k;
  }
  EXPECT_GE(std::log(sevencubes::kappa0_cubed(70341.0)) / 3.0, 1.9);
  EXPECT_LT(std::log(sevencubes::kappa0_cubed(70337.0)) / 3.0, 1.9);
  EXPECT_THROW(sevencubes::kappa0_cubed(0.0), DomainError);
}

TEST(Thresholds, RepulsionSign) {
  EXPECT_LT(sevencubes::repulsion_margin(std::log(150.0)), 0.0);
  EXPECT_GT(sevencubes::repulsion_margin(71000.0), 0.0);
  EXPECT_THROW(sevencubes::repulsion_margin(std::log(100.0)), DomainError);
}

TEST(CubeCounter, KnownValues) {
  const CubeCounter cc(100000);
  EXPECT_EQ(cc.min_cubes(23), 9);
  EXPECT_EQ(cc.min_cubes(239), 9);
  EXPECT_EQ(cc.min_cubes(0), 0);
  EXPECT_EQ(cc.min_cubes(27), 1);
  EXPECT_EQ(cc.min_cubes(23, 8), std::nullopt);
  const auto rep = cc.representation(239);
  ASSERT_TRUE(rep);
  std::uint64_t total = 0;
  for (auto r : *rep) total += r * r * r;
  EXPECT_EQ(total, 239u);
  EXPECT_EQ(rep->size(), 9u);
}

TEST(CubeCounter, AgreesWithKnapsack) {
  const std::uint64_t limit = 20000;
  const auto ref = knapsack_counts(limit);
  const CubeCounter one(limit), two(limit, 2);
  for (std::uint64_t n = 0; n <= limit; ++n) {
    ASSERT_EQ(one.min_cubes(n).value(), ref[n]) << n;
    ASSERT_EQ(two.min_cubes(n).value(), ref[n]) << n;
  }
}

TEST(CubeCounter, BeyondTableUsesSearch) {
  const CubeCounter cc(5000);
  const auto ref = knapsack_counts(60000);
  for (std::uint64_t n = 5001; n <= 60000; n += 397) EXPECT_EQ(cc.min_cubes(n).value(), ref[n]) << n;
}

TEST(CubeCounter, ScanReportsOverCap) {
  const CubeCounter cc(100000);
  const auto r = cc.scan(1, 1000, 7, 3);
  // Exactly the n needing eight or nine cubes appear, in order.
  const auto ref = knapsack_counts(1000);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 1; n <= 1000; ++n)
    if (ref[n] > 7) expected.push_back(n);
  EXPECT_EQ(r.over_cap, expected);
  EXPECT_EQ(r.max_count, 7);
  const auto r2 = cc.scan(455, 100000, 7, 2);
  EXPECT_TRUE(r2.over_cap.empty());
  EXPECT_EQ(cc.scan(455, 100000, 7, 1).worst_n, r2.worst_n);
}
