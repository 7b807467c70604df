#pragma once

// Test-only problem generators and oracles. Nothing here calls into the
// derivative, adjoint or condition-number code it is used to check.

#include "tlscond/dense_matrix.hpp"
#include "tlscond/iterative.hpp"
#include "tlscond/random.hpp"
#include "tlscond/tls_solver.hpp"

#include <Eigen/QR>

#include <cstdint>

namespace tlscond::testing {

inline TlsProblem random_problem(std::size_t m, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix a = rng.gaussian_matrix(m, n);
  Vector b = rng.gaussian_vector(m);
  return TlsProblem(DenseMatrix(a), DenseMatrix::column(b));
}

inline Matrix random_orthogonal(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::HouseholderQR<Matrix> qr(rng.gaussian_matrix(n, n));
  return qr.householderQ() * Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

inline TlsProblem rotated(const TlsProblem& p, const Matrix& q) {
  return TlsProblem(DenseMatrix(Matrix(q * p.A().mat())), DenseMatrix::column(Vector(q * p.b().col(0))));
}

inline PerturbationPair random_direction(std::size_t m, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  PerturbationPair d{rng.gaussian_matrix(m, n), rng.gaussian_vector(m)};
  const double s = product_norm(d);
  d.dA /= s;
  d.db /= s;
  return d;
}

inline TlsProblem shifted(const TlsProblem& p, const PerturbationPair& d, double h) {
  return TlsProblem(DenseMatrix(Matrix(p.A().mat() + h * d.dA)),
                    DenseMatrix::column(Vector(p.b().col(0) + h * d.db)));
}

/// Central difference of g(A, b) = L^T x(A, b), re-solving the TLS problem
/// at (A +- h dA, b +- h db).
inline Vector finite_difference(const TlsProblem& p, const Matrix& L, const PerturbationPair& d,
                                double h) {
  const Vector plus = solve_tls(shifted(p, d, h)).x;
  const Vector minus = solve_tls(shifted(p, d, -h)).x;
  return L.transpose() * (plus - minus) / (2.0 * h);
}

/// Random n x k observation matrix.
inline DenseMatrix random_map(std::size_t n, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return DenseMatrix(rng.gaussian_matrix(n, k));
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace tlscond::testing
