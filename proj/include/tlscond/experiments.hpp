#pragma once

#include "tlscond/iterative.hpp"
#include "tlscond/report.hpp"
#include "tlscond/tls_solver.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tlscond {

/// [A, b] = Y [D; 0] Z^T with Householder reflectors Y = I - 2yy^T,
/// Z = I - 2zz^T built from seeded random unit vectors y, z and
/// D = diag(n, n-1, ..., 1, 1 - e_p). Requires m > n + 1 >= 2, 0 < e_p <= 1.
TlsProblem gen_householder_problem(std::size_t m, std::size_t n, double e_p, std::uint64_t seed);

/// The m x (m-2) problem whose TLS solution is x = -(1, ..., 1)^T: A has m-1 on
/// the diagonal of its first m-2 rows and -1 everywhere else, b = (-1, ..., -1, m-1, -1)^T.
/// Requires m >= 4.
TlsProblem gen_analytic_problem(std::size_t m);

/// Seeded Gaussian perturbation rescaled to product norm `norm`.
PerturbationPair perturb(const TlsProblem& p, double norm, std::uint64_t seed);

/// (A + dA, b + db).
TlsProblem perturbed(const TlsProblem& p, const PerturbationPair& d);

enum class RowStatus { ok, nongeneric, failed };

struct Table1Row {
  double e_p = 0;
  std::uint64_t seed = 0;
  double gap = 0;  ///< sigma'_n - sigma_{n+1}
  double K = 0;
  double K_bar = 0;
  std::optional<double> kappa;
  double K_p = 0;
  std::size_t iters = 0;
  bool converged = false;
  RowStatus status = RowStatus::ok;
  std::string error;
};

struct Table1Settings {
  std::size_t m = 100;
  std::size_t n = 20;
  std::vector<double> e_p = {1.0, 1e-4, 1e-8, 1e-12};
  std::uint64_t seed = 1;
  PowerSettings power;
  double gap_tol = kDefaultGapTolerance;
  std::size_t threads = 0;  ///< 0: hardware concurrency
};

/// One row per e_p: generate, solve, K (SVD formula), K-bar, kappa and the
/// power-method estimate. Row i is seeded by derive_seed(seed, i); rows are
/// returned in input order. Nongeneric rows are marked, not thrown.
std::vector<Table1Row> run_table1(const Table1Settings& s);

struct Table2Row {
  std::size_t m = 0;
  double K_rel = 0;
  double fwd_err = 0;
  double pred_K = 0;
  double pred_Kbar = 0;
  std::optional<double> pred_kappa;
  RowStatus status = RowStatus::ok;
  std::string error;
};

struct Table2Settings {
  std::vector<std::size_t> m_list = {50, 100, 500, 1000};
  double pert_norm = 1e-10;
  std::uint64_t seed = 1;
  double gap_tol = kDefaultGapTolerance;
  std::size_t threads = 0;
};

/// Analytic problem per m: relative condition number, the forward error of
/// the re-solved perturbed problem, and the first-order predictions
/// K_rel * delta, K-bar_rel * delta, kappa_rel * delta with
/// delta = pert_norm / ||(A, b)||_F.
std::vector<Table2Row> run_table2(const Table2Settings& s);

std::string to_string(RowStatus s);
Record to_record(const Table1Row& r);
Record to_record(const Table2Row& r);

}  // namespace tlscond
