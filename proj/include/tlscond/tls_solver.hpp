#pragma once

#include "tlscond/dense_matrix.hpp"

#include <cstddef>

namespace tlscond {

/// Overdetermined TLS data: A is m x n with m > n >= 1, b is m x 1.
class TlsProblem {
 public:
  TlsProblem(DenseMatrix a, DenseMatrix b);

  const DenseMatrix& A() const { return a_; }
  const DenseMatrix& b() const { return b_; }
  std::size_t m() const { return a_.rows(); }
  std::size_t n() const { return a_.cols(); }

  /// [A, b] as a single m x (n+1) matrix.
  Matrix augmented() const;

 private:
  DenseMatrix a_;
  DenseMatrix b_;
};

/// Everything the condition formulas need, computed once by solve_tls.
struct TlsSolution {
  Vector x;             ///< TLS solution, length n
  Vector r;             ///< residual b - A x, length m
  double lambda_n1 = 0; ///< sigma_{n+1}^2
  Vector sigma;         ///< singular values of [A, b], length n+1
  Vector sigma_prime;   ///< singular values of A, length n
  Matrix V;             ///< (n+1) x (n+1) right singular vectors of [A, b]
  Matrix V_prime;       ///< n x n right singular vectors of A
  double genericity_gap = 0;  ///< sigma'_n - sigma_{n+1}

  std::size_t n() const { return static_cast<std::size_t>(x.size()); }
  double sigma_n1() const { return sigma(sigma.size() - 1); }

  /// sigma'_i^2 - sigma_{n+1}^2 for i = 1..n, evaluated as a product of
  /// sum and difference so the smallest entry keeps its relative accuracy.
  Vector shifted_eigenvalues() const;

  /// B_lambda^{-1} v with B_lambda = A^T A - lambda_{n+1} I, applied through
  /// V' diag(shifted_eigenvalues)^{-1} V'^T.
  Matrix apply_shifted_inverse(const Matrix& v) const;
};

/// Genericity threshold relative to sigma_1.
inline constexpr double kDefaultGapTolerance = 1e-14;

/// Solves min ||(E, e)||_F s.t. (A + E) x = b + e from the smallest right
/// singular vector of [A, b]. Throws NongenericError when
/// sigma'_n - sigma_{n+1} <= gap_tol * sigma_1 and DegenerateError when the
/// last component of that singular vector is exactly zero.
TlsSolution solve_tls(const TlsProblem& p, double gap_tol = kDefaultGapTolerance);

/// (A^T A - lambda I)^{-1} A^T b from the normal equations. Cross-check only.
Vector solution_via_normal_equations(const TlsProblem& p, double lambda);

}  // namespace tlscond
