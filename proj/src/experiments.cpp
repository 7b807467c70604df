#include "tlscond/experiments.hpp"

#include "tlscond/bounds.hpp"
#include "tlscond/condition.hpp"
#include "tlscond/errors.hpp"
#include "tlscond/linalg.hpp"
#include "tlscond/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <string>
#include <thread>

namespace tlscond {

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

template <typename Row>
void mark_failure(Row& row, const std::exception& e) {
  row.status = dynamic_cast<const NongenericError*>(&e) ? RowStatus::nongeneric : RowStatus::failed;
  row.error = e.what();
}

Field opt_field(const std::optional<double>& v) {
  return v ? Field{*v} : Field{std::monostate{}};
}

}  // namespace

TlsProblem gen_householder_problem(std::size_t m, std::size_t n, double e_p, std::uint64_t seed) {
  if (n < 1 || m <= n + 1) {
    throw DimensionError("gen_householder_problem: need m > n + 1 >= 2");
  }
  if (!(e_p > 0.0 && e_p <= 1.0)) {
    throw Error("gen_householder_problem: e_p must lie in (0, 1]");
  }
  Rng rng(seed);
  const Vector y = rng.unit_vector(m);
  const Vector z = rng.unit_vector(n + 1);

  const auto mi = static_cast<Eigen::Index>(m);
  const auto ni = static_cast<Eigen::Index>(n);
  Matrix c = Matrix::Zero(mi, ni + 1);
  for (Eigen::Index i = 0; i < ni; ++i) {
    c(i, i) = static_cast<double>(n - static_cast<std::size_t>(i));
  }
  c(ni, ni) = 1.0 - e_p;
  c -= 2.0 * (c * z) * z.transpose();   // (D; 0) Z^T
  c -= 2.0 * y * (y.transpose() * c);   // Y (D; 0) Z^T

  return TlsProblem(DenseMatrix(Matrix(c.leftCols(ni))), DenseMatrix(Matrix(c.col(ni))));
}

TlsProblem gen_analytic_problem(std::size_t m) {
  if (m < 4) {
    throw DimensionError("gen_analytic_problem: need m >= 4");
  }
  const auto mi = static_cast<Eigen::Index>(m);
  const auto md = static_cast<double>(m);
  Matrix a = Matrix::Constant(mi, mi - 2, -1.0);
  a.topRows(mi - 2).diagonal().setConstant(md - 1.0);
  Vector b = Vector::Constant(mi, -1.0);
  b(mi - 2) = md - 1.0;
  return TlsProblem(DenseMatrix(a), DenseMatrix::column(b));
}

PerturbationPair perturb(const TlsProblem& p, double norm, std::uint64_t seed) {
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error("perturb: norm must be positive and finite");
  }
  Rng rng(seed);
  PerturbationPair d;
  d.dA = rng.gaussian_matrix(p.m(), p.n());
  d.db = rng.gaussian_vector(p.m());
  const double scale = norm / product_norm(d);
  d.dA *= scale;
  d.db *= scale;
  return d;
}

TlsProblem perturbed(const TlsProblem& p, const PerturbationPair& d) {
  return TlsProblem(DenseMatrix(Matrix(p.A().mat() + d.dA)),
                    DenseMatrix::column(Vector(p.b().col(0) + d.db)));
}

std::vector<Table1Row> run_table1(const Table1Settings& s) {
  std::vector<Table1Row> rows(s.e_p.size());
  parallel_for(rows.size(), s.threads, [&](std::size_t i) {
    Table1Row& row = rows[i];
    row.e_p = s.e_p[i];
    row.seed = derive_seed(s.seed, i);
    try {
      const TlsProblem p = gen_householder_problem(s.m, s.n, row.e_p, row.seed);
      const TlsSolution sol = solve_tls(p, s.gap_tol);
      const auto L = ObservationMap::identity(p.n());
      row.gap = sol.genericity_gap;
      row.K = condition_svd(sol, L);
      row.K_bar = upper_bound_kbar(sol, L);
      row.kappa = kappa_vanhuffel(sol, p);
      PowerSettings ps = s.power;
      ps.seed = derive_seed(row.seed, 0);
      const PowerResult pr = power_condition(sol, p, L, ps);
      row.K_p = pr.value;
      row.iters = pr.iterations;
      row.converged = pr.converged;
    } catch (const std::exception& e) {
      mark_failure(row, e);
    }
  });
  return rows;
}

std::vector<Table2Row> run_table2(const Table2Settings& s) {
  if (!(s.pert_norm > 0.0)) {
    throw Error("run_table2: perturbation norm must be positive");
  }
  std::vector<Table2Row> rows(s.m_list.size());
  parallel_for(rows.size(), s.threads, [&](std::size_t i) {
    Table2Row& row = rows[i];
    row.m = s.m_list[i];
    try {
      const TlsProblem p = gen_analytic_problem(row.m);
      const TlsSolution sol = solve_tls(p, s.gap_tol);
      const auto L = ObservationMap::identity(p.n());
      const double data_norm = product_norm(p.A(), p.b());
      const double x_norm = sol.x.norm();
      const double K = condition_svd(sol, L);
      row.K_rel = condition_relative(K, p, sol, L);

      const PerturbationPair d = perturb(p, s.pert_norm, derive_seed(s.seed, i));
      const TlsSolution tilde = solve_tls(perturbed(p, d), s.gap_tol);
      row.fwd_err = (tilde.x - sol.x).norm() / x_norm;

      const double delta = s.pert_norm / data_norm;
      row.pred_K = row.K_rel * delta;
      row.pred_Kbar = upper_bound_kbar(sol, L) * data_norm / x_norm * delta;
      if (const auto kappa = kappa_vanhuffel(sol, p)) {
        row.pred_kappa = *kappa * data_norm / x_norm * delta;
      }
    } catch (const std::exception& e) {
      mark_failure(row, e);
    }
  });
  return rows;
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::ok:
      return "ok";
    case RowStatus::nongeneric:
      return "nongeneric";
    case RowStatus::failed:
      return "failed";
  }
  return "?";
}

Record to_record(const Table1Row& r) {
  const bool ok = r.status == RowStatus::ok;
  auto num = [&](double v) { return ok ? Field{v} : Field{std::monostate{}}; };
  Record rec;
  rec.emplace_back("e_p", r.e_p);
  rec.emplace_back("seed", std::to_string(r.seed));
  rec.emplace_back("gap", num(r.gap));
  rec.emplace_back("K", num(r.K));
  rec.emplace_back("K_bar", num(r.K_bar));
  rec.emplace_back("kappa", ok ? opt_field(r.kappa) : Field{std::monostate{}});
  rec.emplace_back("K_p", num(r.K_p));
  rec.emplace_back("iters", ok ? Field{static_cast<std::int64_t>(r.iters)} : Field{std::monostate{}});
  rec.emplace_back("converged", ok ? Field{r.converged} : Field{std::monostate{}});
  rec.emplace_back("status", to_string(r.status));
  rec.emplace_back("error", r.error);
  return rec;
}

Record to_record(const Table2Row& r) {
  const bool ok = r.status == RowStatus::ok;
  auto num = [&](double v) { return ok ? Field{v} : Field{std::monostate{}}; };
  Record rec;
  rec.emplace_back("m", static_cast<std::int64_t>(r.m));
  rec.emplace_back("K_rel", num(r.K_rel));
  rec.emplace_back("fwd_err", num(r.fwd_err));
  rec.emplace_back("pred_K", num(r.pred_K));
  rec.emplace_back("pred_Kbar", num(r.pred_Kbar));
  rec.emplace_back("pred_kappa", ok ? opt_field(r.pred_kappa) : Field{std::monostate{}});
  rec.emplace_back("status", to_string(r.status));
  rec.emplace_back("error", r.error);
  return rec;
}

}  // namespace tlscond
