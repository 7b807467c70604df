#include "tlscond/iterative.hpp"

#include "tlscond/errors.hpp"
#include "tlscond/random.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace tlscond {

namespace {

void check_shapes(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L) {
  if (sol.n() != p.n() || static_cast<std::size_t>(sol.r.size()) != p.m()) {
    throw DimensionError("solution does not belong to this problem");
  }
  if (L.n() != p.n()) {
    throw DimensionError("observation map has " + std::to_string(L.n()) + " rows, expected " +
                         std::to_string(p.n()));
  }
}

// D^T z for z = B^{-1} l:  (A + 2 r x^T / (1 + x^T x)) z.
Vector d_transpose_times(const TlsSolution& sol, const Matrix& A, const Vector& z) {
  const double w = 1.0 + sol.x.squaredNorm();
  return A * z + sol.r * (2.0 * sol.x.dot(z) / w);
}

}  // namespace

double inner_product(const PerturbationPair& a, const PerturbationPair& b) {
  if (a.dA.rows() != b.dA.rows() || a.dA.cols() != b.dA.cols() || a.db.size() != b.db.size()) {
    throw DimensionError("inner_product: perturbation shapes differ");
  }
  return a.dA.cwiseProduct(b.dA).sum() + a.db.dot(b.db);
}

double product_norm(const PerturbationPair& d) {
  return std::sqrt(d.dA.squaredNorm() + d.db.squaredNorm());
}

Vector apply_derivative(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L,
                        const PerturbationPair& d) {
  check_shapes(sol, p, L);
  if (static_cast<std::size_t>(d.dA.rows()) != p.m() ||
      static_cast<std::size_t>(d.dA.cols()) != p.n() ||
      static_cast<std::size_t>(d.db.size()) != p.m()) {
    throw DimensionError("apply_derivative: perturbation shape does not match the problem");
  }
  const Matrix A = p.A().to_eigen();
  const double w = 1.0 + sol.x.squaredNorm();
  const Vector u = d.db - d.dA * sol.x;
  const Vector inner = A.transpose() * u + sol.x * (2.0 * sol.r.dot(u) / w) + d.dA.transpose() * sol.r;
  return L.L().mat().transpose() * sol.apply_shifted_inverse(inner);
}

PerturbationPair apply_adjoint(const TlsSolution& sol, const TlsProblem& p,
                               const ObservationMap& L, const Vector& y) {
  check_shapes(sol, p, L);
  if (static_cast<std::size_t>(y.size()) != L.k()) {
    throw DimensionError("apply_adjoint: y has length " + std::to_string(y.size()) +
                         ", expected " + std::to_string(L.k()));
  }
  const Matrix A = p.A().to_eigen();
  const Vector z = sol.apply_shifted_inverse(L.L().mat() * y);
  PerturbationPair out;
  out.db = d_transpose_times(sol, A, z);
  out.dA = -out.db * sol.x.transpose() + sol.r * z.transpose();
  return out;
}

double single_output_condition(const TlsSolution& sol, const TlsProblem& p, const Vector& l) {
  if (static_cast<std::size_t>(l.size()) != p.n() || sol.n() != p.n()) {
    throw DimensionError("single_output_condition: L must have n rows");
  }
  const Matrix A = p.A().to_eigen();
  const Vector binv_l = sol.apply_shifted_inverse(l);  // (L^T B^{-1})^T
  const Vector dt = d_transpose_times(sol, A, binv_l);  // D^T
  const Matrix first = -dt * sol.x.transpose() + sol.r * binv_l.transpose();
  return std::sqrt(first.squaredNorm() + dt.squaredNorm());
}

double component_condition(const TlsSolution& sol, const TlsProblem& p, std::size_t i) {
  if (i >= p.n()) {
    throw DimensionError("component_condition: index " + std::to_string(i) +
                         " out of range for n=" + std::to_string(p.n()));
  }
  Vector e = Vector::Zero(static_cast<Eigen::Index>(p.n()));
  e(static_cast<Eigen::Index>(i)) = 1.0;
  return single_output_condition(sol, p, e);
}

PowerResult power_condition(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L,
                            const PowerSettings& s) {
  if (!(s.tol > 0.0) || s.max_iter < 1) {
    throw Error("power_condition: tol must be positive and max_iter at least 1");
  }
  check_shapes(sol, p, L);

  PowerResult res;
  if (L.k() == 1 && !s.force_iteration) {
    res.value = single_output_condition(sol, p, L.L().col(0));
    res.converged = true;
    return res;
  }

  Rng rng(s.seed);
  Vector y = rng.unit_vector(L.k());
  constexpr double kRoundingFloor = 16.0 * std::numeric_limits<double>::epsilon();

  double nu = 0.0;
  for (std::size_t iter = 1; iter <= s.max_iter; ++iter) {
    PerturbationPair d = apply_adjoint(sol, p, L, y);
    const double prev = nu;
    nu = product_norm(d);
    res.nu.push_back(nu);
    res.iterations = iter;
    if (nu == 0.0) {
      // y landed in the null space of M^T; the operator is zero on this start.
      res.converged = true;
      break;
    }
    d.dA /= nu;
    d.db /= nu;
    y = apply_derivative(sol, p, L, d);

    if (iter > 1) {
      const double diff = std::abs(nu - prev);
      const bool done = s.test == ConvergenceTest::relative
                            ? diff < s.tol * nu
                            : (diff < s.tol || diff <= kRoundingFloor * nu);
      if (done) {
        res.converged = true;
        break;
      }
    }
  }
  res.value = std::sqrt(nu);
  return res;
}

}  // namespace tlscond
