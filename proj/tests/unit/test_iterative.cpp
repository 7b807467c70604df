#include "tlscond/condition.hpp"
#include "tlscond/errors.hpp"
#include "tlscond/experiments.hpp"
#include "tlscond/iterative.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace tlscond;
using tlscond::testing::finite_difference;
using tlscond::testing::random_direction;
using tlscond::testing::random_map;
using tlscond::testing::random_problem;
using tlscond::testing::rel_diff;

namespace {

const TlsProblem kTrivial(DenseMatrix{{1}, {0}}, DenseMatrix{{1}, {0}});

struct Fixture {
  TlsProblem p;
  TlsSolution sol;
  ObservationMap L;
};

Fixture make(std::size_t m, std::size_t n, std::size_t k, std::uint64_t seed) {
  TlsProblem p = random_problem(m, n, seed);
  TlsSolution sol = solve_tls(p);
  auto L = k == n ? ObservationMap::identity(n)
                  : ObservationMap::general(random_map(n, k, seed + 77));
  return {std::move(p), std::move(sol), std::move(L)};
}

}  // namespace

TEST(ApplyDerivative, ZeroDirection) {
  const Fixture f = make(8, 3, 3, 1);
  const PerturbationPair zero{Matrix::Zero(8, 3), Vector::Zero(8)};
  EXPECT_EQ(apply_derivative(f.sol, f.p, f.L, zero).norm(), 0.0);
}

TEST(ApplyDerivative, Linearity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Fixture f = make(8, 3, 2, 10 + seed);
    const PerturbationPair d = random_direction(8, 3, 100 + seed);
    const PerturbationPair e = random_direction(8, 3, 200 + seed);

    const Vector gd = apply_derivative(f.sol, f.p, f.L, d);
    const Vector scaled = apply_derivative(f.sol, f.p, f.L, {2.5 * d.dA, 2.5 * d.db});
    EXPECT_LE((scaled - 2.5 * gd).norm(), 1e-13 * scaled.norm());

    const Vector ge = apply_derivative(f.sol, f.p, f.L, e);
    const Vector sum = apply_derivative(f.sol, f.p, f.L, {d.dA + e.dA, d.db + e.db});
    EXPECT_LE((sum - gd - ge).norm(), 1e-12 * (gd.norm() + ge.norm()));
  }
}

TEST(ApplyDerivative, MatchesFiniteDifferences) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t k = 1 + seed % 3;
    const Fixture f = make(8, 3, k, 300 + seed);
    const PerturbationPair d = random_direction(8, 3, 400 + seed);
    const Vector analytic = apply_derivative(f.sol, f.p, f.L, d);
    const Vector fd = finite_difference(f.p, f.L.L().to_eigen(), d, 1e-6);
    EXPECT_LE((analytic - fd).norm(), 1e-5 * analytic.norm()) << "seed " << seed;
  }
}

TEST(ApplyDerivative, ShapeMismatchThrows) {
  const Fixture f = make(8, 3, 3, 2);
  EXPECT_THROW(apply_derivative(f.sol, f.p, f.L, {Matrix::Zero(7, 3), Vector::Zero(7)}),
               DimensionError);
  EXPECT_THROW(apply_adjoint(f.sol, f.p, f.L, Vector::Zero(2)), DimensionError);
}

TEST(ApplyAdjoint, ZeroInput) {
  const Fixture f = make(8, 3, 3, 3);
  const PerturbationPair out = apply_adjoint(f.sol, f.p, f.L, Vector::Zero(3));
  EXPECT_EQ(out.dA.norm(), 0.0);
  EXPECT_EQ(out.db.norm(), 0.0);
  EXPECT_EQ(out.dA.rows(), 8);
  EXPECT_EQ(out.dA.cols(), 3);
}

TEST(ApplyAdjoint, InnerProductIdentity) {
  // <g'(d), y> = <d, g'^*(y)>, scaled by |g'(d)| |y| so that nearly
  // orthogonal pairs do not turn roundoff into a large relative error.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const std::size_t k = 1 + seed % n;
    const Fixture f = make(n + 4 + seed % 7, n, k, 500 + seed);
    for (std::uint64_t j = 0; j < 100; ++j) {
      const PerturbationPair d = random_direction(f.p.m(), n, 10'000 * seed + j);
      Rng rng(20'000 * seed + j);
      const Vector y = rng.gaussian_vector(k);
      const Vector gd = apply_derivative(f.sol, f.p, f.L, d);
      const double lhs = gd.dot(y);
      const double rhs = inner_product(d, apply_adjoint(f.sol, f.p, f.L, y));
      EXPECT_LE(std::abs(lhs - rhs), 1e-12 * gd.norm() * y.norm());
    }
  }
}

TEST(ComponentCondition, TrivialProblem) {
  EXPECT_NEAR(component_condition(solve_tls(kTrivial), kTrivial, 0), std::sqrt(2.0), 1e-15);
}

TEST(ComponentCondition, EqualsAdjointImageOfUnitScalar) {
  const Fixture f = make(8, 3, 3, 4);
  const auto e1 = ObservationMap::canonical(3, 0);
  const PerturbationPair img = apply_adjoint(f.sol, f.p, e1, Vector::Ones(1));
  EXPECT_LE(rel_diff(product_norm(img), component_condition(f.sol, f.p, 0)), 1e-12);
}

TEST(ComponentCondition, MatchesSvdFormulaPerComponent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Fixture f = make(8, 3, 3, 600 + seed);
    const double full = condition_svd(f.sol, ObservationMap::identity(3));
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double ki = component_condition(f.sol, f.p, i);
      EXPECT_LE(rel_diff(ki, condition_svd(f.sol, ObservationMap::canonical(3, i))), 1e-10);
      worst = std::max(worst, ki);
    }
    EXPECT_LE(worst, full * (1 + 1e-12));
  }
  const Fixture f = make(8, 3, 3, 5);
  EXPECT_THROW(component_condition(f.sol, f.p, 3), DimensionError);
}

TEST(PowerCondition, TrivialProblem) {
  const TlsSolution sol = solve_tls(kTrivial);
  const auto L = ObservationMap::identity(1);
  PowerResult r = power_condition(sol, kTrivial, L);
  EXPECT_NEAR(r.value, std::sqrt(2.0), 1e-8);
  EXPECT_LE(r.iterations, 5u);
  EXPECT_TRUE(r.converged);

  PowerSettings s;
  s.force_iteration = true;
  r = power_condition(sol, kTrivial, L, s);
  EXPECT_NEAR(r.value, std::sqrt(2.0), 1e-8);
  EXPECT_LE(r.iterations, 5u);
  EXPECT_TRUE(r.converged);
}

TEST(PowerCondition, SingleOutputShortcutMatchesIteration) {
  const Fixture f = make(10, 4, 1, 6);
  PowerSettings s;
  s.tol = 1e-12;
  const double direct = power_condition(f.sol, f.p, f.L, s).value;
  s.force_iteration = true;
  const PowerResult it = power_condition(f.sol, f.p, f.L, s);
  EXPECT_LE(rel_diff(direct, it.value), 1e-10);
  EXPECT_LE(rel_diff(direct, condition_svd(f.sol, f.L)), 1e-10);
}

TEST(PowerCondition, ConvergesOnRandomProblem) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Fixture f = make(12, 5, 3, 700 + seed);
    PowerSettings s;
    s.tol = 1e-10;
    s.max_iter = 10'000;
    s.seed = seed;
    const PowerResult r = power_condition(f.sol, f.p, f.L, s);
    const double K = condition_svd(f.sol, f.L);
    EXPECT_TRUE(r.converged);
    EXPECT_LE(std::abs(r.value - K) / K, 1e-6) << "seed " << seed;
    EXPECT_LE(r.value, K * (1 + 1e-6));
  }
}

TEST(PowerCondition, NuIsNondecreasingAfterFirstStep) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Fixture f = make(12, 5, 4, 800 + seed);
    PowerSettings s;
    s.tol = 1e-14;
    s.max_iter = 60;
    s.seed = seed;
    const PowerResult r = power_condition(f.sol, f.p, f.L, s);
    for (std::size_t i = 2; i < r.nu.size(); ++i) {
      EXPECT_GE(r.nu[i], r.nu[i - 1] * (1 - 1e-12)) << "seed " << seed << " step " << i;
    }
  }
}

TEST(PowerCondition, NearNongenericRegime) {
  const TlsProblem p = gen_householder_problem(100, 20, 1e-4, 42);
  const TlsSolution sol = solve_tls(p);
  const auto L = ObservationMap::identity(20);
  const PowerResult r = power_condition(sol, p, L);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.iterations, 10u);
  EXPECT_LE(rel_diff(r.value, condition_svd(sol, L)), 1e-4);
}

TEST(PowerCondition, IterationCapFlagsNonConvergence) {
  const Fixture f = make(12, 5, 5, 9);
  PowerSettings s;
  s.max_iter = 1;
  const PowerResult r = power_condition(f.sol, f.p, f.L, s);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_GT(r.value, 0.0);
}

TEST(PowerCondition, RelativeCriterion) {
  const Fixture f = make(12, 5, 3, 10);
  PowerSettings s;
  s.test = ConvergenceTest::relative;
  s.tol = 1e-12;
  s.max_iter = 10'000;
  const PowerResult r = power_condition(f.sol, f.p, f.L, s);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(rel_diff(r.value, condition_svd(f.sol, f.L)), 1e-6);
}

TEST(PowerCondition, RejectsBadSettings) {
  const Fixture f = make(8, 3, 3, 11);
  PowerSettings s;
  s.tol = 0.0;
  EXPECT_THROW(power_condition(f.sol, f.p, f.L, s), Error);
  s.tol = 1e-8;
  s.max_iter = 0;
  EXPECT_THROW(power_condition(f.sol, f.p, f.L, s), Error);
}

TEST(PowerCondition, SeedDeterminesResult) {
  const Fixture f = make(12, 5, 4, 12);
  PowerSettings s;
  s.max_iter = 3;
  const PowerResult a = power_condition(f.sol, f.p, f.L, s);
  const PowerResult b = power_condition(f.sol, f.p, f.L, s);
  EXPECT_EQ(a.nu, b.nu);
}
