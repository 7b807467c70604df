#pragma once

#include "tlscond/condition.hpp"
#include "tlscond/dense_matrix.hpp"
#include "tlscond/tls_solver.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tlscond {

/// A perturbation (dA, db) of the TLS data, or an element of the adjoint's range.
struct PerturbationPair {
  Matrix dA;  ///< m x n
  Vector db;  ///< m
};

/// trace(dA1^T dA2) + db1^T db2.
double inner_product(const PerturbationPair& a, const PerturbationPair& b);

/// sqrt(||dA||_F^2 + ||db||_2^2).
double product_norm(const PerturbationPair& d);

/// Directional derivative g'(A, b).(dA, db) of g(A, b) = L^T x, a k-vector.
Vector apply_derivative(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L,
                        const PerturbationPair& d);

/// Adjoint g'(A, b)^* y under the trace inner product on perturbations.
PerturbationPair apply_adjoint(const TlsSolution& sol, const TlsProblem& p,
                               const ObservationMap& L, const Vector& y);

/// Condition number of a single output (k = 1): sqrt(||-D^T x^T + r L^T B^{-1}||_F^2 + ||D||_2^2).
double single_output_condition(const TlsSolution& sol, const TlsProblem& p, const Vector& l);

/// Condition number of the i-th solution component (zero-based).
double component_condition(const TlsSolution& sol, const TlsProblem& p, std::size_t i);

enum class ConvergenceTest {
  /// |nu_p - nu_{p-1}| < tol. Differences already at the rounding level of nu
  /// (16 ulps) also count as converged, since tol may lie below what double
  /// precision resolves at nu's magnitude.
  absolute,
  /// |nu_p - nu_{p-1}| < tol * nu_p.
  relative,
};

struct PowerSettings {
  double tol = 1e-8;
  std::size_t max_iter = 200;
  std::uint64_t seed = 0x5eed;
  ConvergenceTest test = ConvergenceTest::absolute;
  /// Run the iteration even for k = 1 instead of the closed single-output formula.
  bool force_iteration = false;
};

struct PowerResult {
  double value = 0;         ///< sqrt(nu) at termination
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> nu;   ///< nu after each iteration
};

/// Power method on M M^T driven only by derivative and adjoint applications.
/// Returns the last estimate even when max_iter is hit (converged = false).
PowerResult power_condition(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L,
                            const PowerSettings& s = {});

}  // namespace tlscond
