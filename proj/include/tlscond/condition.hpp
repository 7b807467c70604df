#pragma once

#include "tlscond/dense_matrix.hpp"
#include "tlscond/tls_solver.hpp"

#include <cstddef>
#include <optional>
#include <string_view>

namespace tlscond {

/// The n x k matrix L of the observed quantity L^T x.
class ObservationMap {
 public:
  enum class Kind { identity, canonical, general };

  static ObservationMap identity(std::size_t n);
  /// i-th canonical basis vector of R^n, zero-based.
  static ObservationMap canonical(std::size_t n, std::size_t i);
  /// Arbitrary n x k matrix with k <= n.
  static ObservationMap general(DenseMatrix L);

  Kind kind() const { return kind_; }
  const DenseMatrix& L() const { return l_; }
  std::size_t n() const { return l_.rows(); }
  std::size_t k() const { return l_.cols(); }
  /// Canonical index; only meaningful for Kind::canonical.
  std::size_t index() const { return index_; }

 private:
  ObservationMap(Kind kind, DenseMatrix l, std::size_t index)
      : kind_(kind), l_(std::move(l)), index_(index) {}

  Kind kind_;
  DenseMatrix l_;
  std::size_t index_ = 0;
};

enum class Method { closed, svd, power, oracle };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);

struct ConditionReport {
  double K_abs = 0;
  std::optional<double> K_rel;
  Method method = Method::svd;
  std::optional<std::size_t> iterations;
  std::optional<bool> converged;
  std::optional<double> bound_Kbar;
  std::optional<double> bound_kappa;
};

/// The k x k matrix C = (1+|x|^2) L^T B^{-1} (A^T A + lambda (I - 2xx^T/(1+|x|^2))) B^{-1} L
/// whose spectral norm is K^2.
Matrix closed_form_matrix(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L);

/// K(L, A, b) = ||C||_2^{1/2} from the normal-equations form.
double condition_closed(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L);

/// K(L, A, b) from the two SVDs already held by the solution. Default route.
double condition_svd(const TlsSolution& sol, const ObservationMap& L);

/// K_abs * ||(A, b)||_F / ||L^T x||_2. Throws when L^T x = 0.
double condition_relative(double K_abs, const TlsProblem& p, const TlsSolution& sol,
                          const ObservationMap& L);

}  // namespace tlscond
