#pragma once

#include "tlscond/condition.hpp"
#include "tlscond/tls_solver.hpp"

#include <cstddef>
#include <optional>

namespace tlscond {

struct BoundsReport {
  double K_bar = 0;
  /// Absent when a denominator of the bound is not positive.
  std::optional<double> kappa_vhv;

  bool kappa_applicable() const { return kappa_vhv.has_value(); }
};

/// (1+|x|^2)^{1/2} ||L||_2 (sigma_1^2 + sigma_{n+1}^2)^{1/2} / (sigma'_n^2 - sigma_{n+1}^2).
double upper_bound_kbar(const TlsSolution& sol, const ObservationMap& L);

/// Van Huffel-Vandewalle perturbation bound for x,
///   9 sigma_1 |x| / (sigma_n - sigma_{n+1}) * (1 + |b| / (sigma'_n - sigma_{n+1})) / (|b| - sigma_{n+1}).
/// Empty when |b| <= sigma_{n+1}, sigma_n <= sigma_{n+1} or sigma'_n <= sigma_{n+1}.
std::optional<double> kappa_vanhuffel(const TlsSolution& sol, const TlsProblem& p);

BoundsReport compute_bounds(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L);

inline constexpr std::size_t kDefaultOracleCap = 10'000'000;

/// Dense k x (nm + m) matrix of the derivative acting on [vec(dA); db]:
///   [ -x^T (x) D + (r^T (x) L^T B^{-1}) P ,  D ],   D = L^T B^{-1} (A^T + 2 x r^T / (1 + x^T x)),
/// with B = A^T A - lambda I formed and factorised directly, independent of the
/// SVD-based routes. Its spectral norm is K(L, A, b). Throws SizeCapError when
/// the result or the mn x mn permutation would exceed `cap` entries.
Matrix kronecker_matrix(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L,
                        std::size_t cap = kDefaultOracleCap);

/// spectral_norm(kronecker_matrix(...)).
double condition_oracle(const TlsSolution& sol, const TlsProblem& p, const ObservationMap& L,
                        std::size_t cap = kDefaultOracleCap);

}  // namespace tlscond
