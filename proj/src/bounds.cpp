#include "tlscond/bounds.hpp"

#include "tlscond/errors.hpp"
#include "tlscond/linalg.hpp"

#include <cmath>
#include <string>

namespace tlscond {

double upper_bound_kbar(const TlsSolution& sol, const ObservationMap& L) {
  if (L.n() != sol.n()) {
    throw DimensionError("upper_bound_kbar: observation map does not match the solution");
  }
  const auto n = static_cast<Eigen::Index>(sol.n());
  const double shifted = sol.shifted_eigenvalues()(n - 1);
  if (!(shifted > 0.0)) {
    throw NongenericError("upper_bound_kbar: sigma'_n^2 - sigma_{n+1}^2 is not positive");
  }
  const double l_norm =
      L.kind() == ObservationMap::Kind::general ? spectral_norm(L.L()) : 1.0;
  return std::sqrt(1.0 + sol.x.squaredNorm()) * l_norm *
         std::sqrt(sol.sigma(0) * sol.sigma(0) + sol.lambda_n1) / shifted;
}

std::optional<double> kappa_vanhuffel(const TlsSolution& sol, const TlsProblem& p) {
  const auto n = static_cast<Eigen::Index>(sol.n());
  const double s1 = sol.sigma(0);
  const double sn = sol.sigma(n - 1);
  const double sn1 = sol.sigma(n);
  const double spn = sol.sigma_prime(n - 1);
  const double b_norm = p.b().mat().norm();
  if (!(b_norm > sn1) || !(sn > sn1) || !(spn > sn1)) {
    return std::nullopt;
  }
  return 9.0 * s1 * sol.x.norm() / (sn - sn1) * (1.0 + b_norm / (spn - sn1)) / (b_norm - sn1);
}

BoundsReport compute_bounds(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L) {
  return BoundsReport{upper_bound_kbar(sol, L), kappa_vanhuffel(sol, p)};
}

Matrix kronecker_matrix(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L,
                        std::size_t cap) {
  if (L.n() != p.n() || sol.n() != p.n()) {
    throw DimensionError("kronecker_matrix: observation map does not match the problem");
  }
  const std::size_t m = p.m();
  const std::size_t n = p.n();
  const std::size_t k = L.k();
  const std::size_t mn = m * n;
  if (k * (mn + m) > cap || mn > cap / mn) {
    throw SizeCapError("kronecker_matrix: " + std::to_string(k) + "x" + std::to_string(mn + m) +
                       " oracle with a " + std::to_string(mn) + "x" + std::to_string(mn) +
                       " permutation exceeds the cap of " + std::to_string(cap) +
                       " entries; use the svd or power method instead");
  }

  const Matrix A = p.A().to_eigen();
  const Matrix Lm = L.L().to_eigen();
  Matrix B = A.transpose() * A;
  B.diagonal().array() -= sol.lambda_n1;
  Eigen::FullPivLU<Matrix> lu(B);
  if (!lu.isInvertible()) {
    throw SingularSystemError("kronecker_matrix: A^T A - lambda I is singular");
  }
  const Matrix lt_binv = lu.solve(Lm).transpose();  // L^T B^{-1}, B symmetric
  const double w = 1.0 + sol.x.squaredNorm();
  const Matrix D = lt_binv * (A.transpose() + (2.0 / w) * sol.x * sol.r.transpose());

  const Matrix P = transpose_permutation(m, n).to_dense();
  const Matrix left = -kron(Matrix(sol.x.transpose()), D) + kron(Matrix(sol.r.transpose()), lt_binv) * P;

  Matrix out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(mn + m));
  out << left, D;
  return out;
}

double condition_oracle(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L,
                        std::size_t cap) {
  return spectral_norm(kronecker_matrix(sol, p, L, cap));
}

}  // namespace tlscond
