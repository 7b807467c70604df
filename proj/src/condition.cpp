#include "tlscond/condition.hpp"

#include "tlscond/errors.hpp"
#include "tlscond/linalg.hpp"

#include <cmath>
#include <string>

namespace tlscond {

namespace {

void check_map(const TlsSolution& sol, const ObservationMap& L) {
  if (L.n() != sol.n()) {
    throw DimensionError("observation map has " + std::to_string(L.n()) +
                         " rows but the solution has length " + std::to_string(sol.n()));
  }
}

}  // namespace

ObservationMap ObservationMap::identity(std::size_t n) {
  return ObservationMap(Kind::identity, DenseMatrix::identity(n), 0);
}

ObservationMap ObservationMap::canonical(std::size_t n, std::size_t i) {
  if (i >= n) {
    throw DimensionError("canonical observation index " + std::to_string(i) +
                         " out of range for n=" + std::to_string(n));
  }
  Vector e = Vector::Zero(static_cast<Eigen::Index>(n));
  e(static_cast<Eigen::Index>(i)) = 1.0;
  return ObservationMap(Kind::canonical, DenseMatrix::column(e), i);
}

ObservationMap ObservationMap::general(DenseMatrix L) {
  if (L.cols() > L.rows()) {
    throw DimensionError("observation map must have k <= n, got " + std::to_string(L.rows()) +
                         "x" + std::to_string(L.cols()));
  }
  return ObservationMap(Kind::general, std::move(L), 0);
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed:
      return "closed";
    case Method::svd:
      return "svd";
    case Method::power:
      return "power";
    case Method::oracle:
      return "oracle";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "closed") return Method::closed;
  if (name == "svd") return Method::svd;
  if (name == "power") return Method::power;
  if (name == "oracle") return Method::oracle;
  throw ParseError("unknown method '" + std::string(name) + "'");
}

Matrix closed_form_matrix(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L) {
  check_map(sol, L);
  const Matrix A = p.A().to_eigen();
  const double w = 1.0 + sol.x.squaredNorm();

  Matrix middle = A.transpose() * A;
  middle.diagonal().array() += sol.lambda_n1;
  middle.noalias() -= (2.0 * sol.lambda_n1 / w) * sol.x * sol.x.transpose();

  const Matrix binv_l = sol.apply_shifted_inverse(L.L().to_eigen());
  return w * (binv_l.transpose() * middle * binv_l);
}

double condition_closed(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L) {
  const Matrix c = closed_form_matrix(sol, p, L);
  // C is symmetric PSD, so its spectral norm is its largest eigenvalue.
  return std::sqrt(spectral_norm(c));
}

double condition_svd(const TlsSolution& sol, const ObservationMap& L) {
  check_map(sol, L);
  const auto n = static_cast<Eigen::Index>(sol.n());
  const Vector shifted = sol.shifted_eigenvalues();
  if ((shifted.array() <= 0.0).any()) {
    throw NongenericError("condition_svd: sigma'_n^2 - sigma_{n+1}^2 is not positive");
  }
  const Vector d_prime = shifted.cwiseInverse();
  const Vector d = (sol.sigma.head(n).array().square() + sol.lambda_n1).sqrt().matrix();

  // D' [V'^T, 0] V [D, 0]^T keeps only the leading n x n block of V.
  const Matrix core =
      d_prime.asDiagonal() * (sol.V_prime.transpose() * sol.V.topLeftCorner(n, n)) * d.asDiagonal();
  const double scale = std::sqrt(1.0 + sol.x.squaredNorm());
  if (L.kind() == ObservationMap::Kind::identity) {
    return scale * spectral_norm(core);
  }
  return scale * spectral_norm(Matrix(L.L().mat().transpose() * sol.V_prime * core));
}

double condition_relative(double K_abs, const TlsProblem& p, const TlsSolution& sol,
                          const ObservationMap& L) {
  check_map(sol, L);
  const double out = (L.L().mat().transpose() * sol.x).norm();
  if (out == 0.0) {
    throw Error("condition_relative: L^T x = 0, relative condition number undefined");
  }
  return K_abs * product_norm(p.A(), p.b()) / out;
}

}  // namespace tlscond
