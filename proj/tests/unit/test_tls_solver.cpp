#include "tlscond/errors.hpp"
#include "tlscond/experiments.hpp"
#include "tlscond/tls_solver.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace tlscond;
using tlscond::testing::random_orthogonal;
using tlscond::testing::random_problem;
using tlscond::testing::rotated;

namespace {

const TlsProblem kTrivial(DenseMatrix{{1}, {0}}, DenseMatrix{{1}, {0}});

void expect_invariants(const TlsProblem& p, const TlsSolution& sol) {
  const auto n = static_cast<Eigen::Index>(p.n());
  const double s1 = sol.sigma(0);

  // interlacing sigma_1 >= sigma'_1 >= sigma_2 >= ... >= sigma'_n >= sigma_{n+1}
  const double slack = 1e-10 * s1;
  for (Eigen::Index i = 0; i < n; ++i) {
    EXPECT_GE(sol.sigma(i) + slack, sol.sigma_prime(i));
    EXPECT_GE(sol.sigma_prime(i) + slack, sol.sigma(i + 1));
  }
  EXPECT_GT(sol.genericity_gap, 0.0);

  // lambda_{n+1} (1 + |x|^2) = |r|^2
  const double lhs = sol.lambda_n1 * (1.0 + sol.x.squaredNorm());
  EXPECT_NEAR(lhs, sol.r.squaredNorm(), 1e-8 * std::max(lhs, 1e-300) + 1e-14 * s1 * s1);

  // [x; -1] is an eigenvector of [A, b]^T [A, b] for lambda_{n+1}
  Vector v(n + 1);
  v << sol.x, -1.0;
  const Matrix c = p.augmented();
  const Vector res = c.transpose() * (c * v) - sol.lambda_n1 * v;
  EXPECT_LE(res.norm(), 1e-8 * s1 * s1);

  const Vector r = p.b().col(0) - p.A().mat() * sol.x;
  EXPECT_LE((r - sol.r).norm(), 1e-14 * (1.0 + r.norm()));
}

}  // namespace

TEST(TlsProblem, ValidatesShapes) {
  EXPECT_THROW(TlsProblem(DenseMatrix(2, 2), DenseMatrix(2, 1)), DimensionError);
  EXPECT_THROW(TlsProblem(DenseMatrix(3, 2), DenseMatrix(2, 1)), DimensionError);
  EXPECT_THROW(TlsProblem(DenseMatrix(3, 2), DenseMatrix(3, 2)), DimensionError);
}

TEST(SolveTls, TrivialConsistentProblem) {
  const TlsSolution sol = solve_tls(kTrivial);
  ASSERT_EQ(sol.x.size(), 1);
  EXPECT_NEAR(sol.x(0), 1.0, 1e-15);
  EXPECT_NEAR(sol.r.norm(), 0.0, 1e-15);
  EXPECT_NEAR(sol.lambda_n1, 0.0, 1e-30);
  EXPECT_NEAR(sol.genericity_gap, 1.0, 1e-15);
  EXPECT_NEAR(sol.sigma(0), std::sqrt(2.0), 1e-15);
}

TEST(SolveTls, ExactTieIsNongeneric) {
  const TlsProblem p(DenseMatrix{{1}, {0}}, DenseMatrix{{0}, {1}});
  EXPECT_THROW(solve_tls(p), NongenericError);
}

TEST(SolveTls, GapToleranceIsRelativeToSigma1) {
  const TlsProblem p = gen_householder_problem(30, 5, 1e-6, 3);
  const TlsSolution sol = solve_tls(p);
  const double ratio = sol.genericity_gap / sol.sigma(0);
  EXPECT_NO_THROW(solve_tls(p, 0.5 * ratio));
  EXPECT_THROW(solve_tls(p, 2.0 * ratio), NongenericError);
  EXPECT_THROW(solve_tls(p, -1.0), Error);
}

TEST(SolveTls, AnalyticProblemSmall) {
  const TlsProblem p = gen_analytic_problem(4);
  const TlsSolution sol = solve_tls(p);
  EXPECT_NEAR(sol.x(0), -1.0, 1e-12);
  EXPECT_NEAR(sol.x(1), -1.0, 1e-12);
  expect_invariants(p, sol);
}

TEST(SolveTls, AnalyticProblemFifty) {
  const TlsSolution sol = solve_tls(gen_analytic_problem(50));
  for (Eigen::Index i = 0; i < sol.x.size(); ++i) {
    EXPECT_NEAR(sol.x(i), -1.0, 1e-8);
  }
}

TEST(SolveTls, InvariantsOnRandomProblems) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const std::size_t m = n + 1 + seed % 13;
    const TlsProblem p = random_problem(m, n, seed);
    expect_invariants(p, solve_tls(p));
  }
}

TEST(SolveTls, LeftOrthogonalInvariance) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TlsProblem p = random_problem(9, 4, 100 + seed);
    const TlsProblem q = rotated(p, random_orthogonal(9, 200 + seed));
    const TlsSolution a = solve_tls(p);
    const TlsSolution b = solve_tls(q);
    EXPECT_LE((a.x - b.x).norm(), 1e-10 * a.x.norm());
    EXPECT_LE((a.sigma - b.sigma).norm(), 1e-10 * a.sigma.norm());
    EXPECT_LE((a.sigma_prime - b.sigma_prime).norm(), 1e-10 * a.sigma_prime.norm());
  }
}

TEST(NormalEquations, Examples) {
  const Vector x = solution_via_normal_equations(kTrivial, 0.0);
  EXPECT_NEAR(x(0), 1.0, 1e-15);

  const TlsProblem p = gen_analytic_problem(4);
  const double s3 = solve_tls(p).sigma(2);
  const Vector y = solution_via_normal_equations(p, s3 * s3);
  EXPECT_NEAR(y(0), -1.0, 1e-8);
  EXPECT_NEAR(y(1), -1.0, 1e-8);
}

TEST(NormalEquations, AgreesWithSvdSolution) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TlsProblem p = random_problem(8, 3, 300 + seed);
    const TlsSolution sol = solve_tls(p);
    const Vector y = solution_via_normal_equations(p, sol.lambda_n1);
    EXPECT_LE((y - sol.x).norm(), 1e-8 * sol.x.norm());
  }
}

TEST(NormalEquations, SingularSystemThrows) {
  // A^T A = 1, so lambda = 1 makes the shifted matrix exactly zero.
  EXPECT_THROW(solution_via_normal_equations(kTrivial, 1.0), SingularSystemError);
}
