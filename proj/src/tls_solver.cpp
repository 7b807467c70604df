#include "tlscond/tls_solver.hpp"

#include "tlscond/errors.hpp"
#include "tlscond/linalg.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace tlscond {

TlsProblem::TlsProblem(DenseMatrix a, DenseMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (b_.cols() != 1) {
    throw DimensionError("TlsProblem: b must be a column vector, got " +
                         std::to_string(b_.rows()) + "x" + std::to_string(b_.cols()));
  }
  if (b_.rows() != a_.rows()) {
    throw DimensionError("TlsProblem: A has " + std::to_string(a_.rows()) + " rows, b has " +
                         std::to_string(b_.rows()));
  }
  if (a_.rows() <= a_.cols()) {
    throw DimensionError("TlsProblem: need m > n, got m=" + std::to_string(a_.rows()) +
                         " n=" + std::to_string(a_.cols()));
  }
}

Matrix TlsProblem::augmented() const {
  Matrix c(a_.rows(), a_.cols() + 1);
  c.leftCols(a_.cols()) = a_.mat();
  c.col(a_.cols()) = b_.mat().col(0);
  return c;
}

Vector TlsSolution::shifted_eigenvalues() const {
  const double s = sigma_n1();
  return ((sigma_prime.array() - s) * (sigma_prime.array() + s)).matrix();
}

Matrix TlsSolution::apply_shifted_inverse(const Matrix& v) const {
  const Vector inv = shifted_eigenvalues().cwiseInverse();
  return V_prime * (inv.asDiagonal() * (V_prime.transpose() * v));
}

TlsSolution solve_tls(const TlsProblem& p, double gap_tol) {
  if (!(gap_tol >= 0.0)) {
    throw Error("solve_tls: gap_tol must be nonnegative");
  }
  const auto n = static_cast<Eigen::Index>(p.n());
  const Matrix A = p.A().to_eigen();
  const Vector b = p.b().col(0);

  const SvdResult full = svd(p.augmented(), SvdVectors::right_only);
  const SvdResult left = svd(A, SvdVectors::right_only);

  TlsSolution sol;
  sol.sigma = full.S;
  sol.sigma_prime = left.S;
  sol.V = full.V;
  sol.V_prime = left.V;
  sol.lambda_n1 = sol.sigma(n) * sol.sigma(n);
  sol.genericity_gap = sol.sigma_prime(n - 1) - sol.sigma(n);

  if (sol.genericity_gap <= gap_tol * sol.sigma(0)) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "solve_tls: nongeneric problem, sigma'_n - sigma_{n+1} = " << sol.genericity_gap
        << " <= " << gap_tol << " * sigma_1 (" << sol.sigma(0) << ")";
    throw NongenericError(msg.str());
  }

  const double last = sol.V(n, n);
  if (last == 0.0) {
    throw DegenerateError("solve_tls: last component of v_{n+1} is zero");
  }
  sol.x = -sol.V.col(n).head(n) / last;
  sol.r = b - A * sol.x;
  return sol;
}

Vector solution_via_normal_equations(const TlsProblem& p, double lambda) {
  const Matrix A = p.A().to_eigen();
  const Vector b = p.b().col(0);
  Matrix B = A.transpose() * A;
  B.diagonal().array() -= lambda;
  Eigen::FullPivLU<Matrix> lu(B);
  if (!lu.isInvertible()) {
    throw SingularSystemError("solution_via_normal_equations: A^T A - lambda I is singular");
  }
  return lu.solve(A.transpose() * b);
}

}  // namespace tlscond
