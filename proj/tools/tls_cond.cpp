// tls-cond: total least squares solutions, their condition numbers, and the
// two reproduction tables.
//
//   tls-cond solve  --a A.mat --b b.mat [--gap-tol T] [--x-out x.mat]
//   tls-cond cond   --a A.mat --b b.mat --method svd|closed|power|oracle
//                   --l identity|e:<i>|file:<path> [--tol T --max-iter N --seed S]
//                   [--relative]
//   tls-cond table1 [--m M --n N --ep E1,E2,... --seed S]
//   tls-cond table2 [--m-list 50,100,500,1000 --pert 1e-10 --seed S]
//
// Every command takes --format json|csv. Exit status: 0 success, 2 nongeneric
// problem, 1 any other error.

#include "tlscond/condition.hpp"
#include "tlscond/errors.hpp"
#include "tlscond/experiments.hpp"
#include "tlscond/matrix_io.hpp"
#include "tlscond/report.hpp"
#include "tlscond/tls_solver.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

using namespace tlscond;

namespace {

// e:<i> is one-based, matching the usual numbering of solution components.
ObservationMap parse_observation(const std::string& text, std::size_t n) {
  if (text == "identity") {
    return ObservationMap::identity(n);
  }
  if (text.rfind("e:", 0) == 0) {
    std::size_t pos = 0;
    unsigned long long i = 0;
    try {
      i = std::stoull(text.substr(2), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != text.size() - 2 || i < 1 || i > n) {
      throw ParseError("--l e:<i> needs 1 <= i <= " + std::to_string(n) + ", got '" + text + "'");
    }
    return ObservationMap::canonical(n, static_cast<std::size_t>(i - 1));
  }
  if (text.rfind("file:", 0) == 0) {
    DenseMatrix L = read_matrix_file(text.substr(5));
    if (L.rows() != n) {
      throw DimensionError("L from " + text.substr(5) + " has " + std::to_string(L.rows()) +
                           " rows, expected n = " + std::to_string(n));
    }
    return ObservationMap::general(std::move(L));
  }
  throw ParseError("--l must be identity, e:<i> or file:<path>, got '" + text + "'");
}

Record solution_record(const TlsSolution& sol) {
  Record rec;
  for (Eigen::Index i = 0; i < sol.x.size(); ++i) {
    rec.emplace_back("x" + std::to_string(i + 1), sol.x(i));
  }
  rec.emplace_back("lambda_n1", sol.lambda_n1);
  rec.emplace_back("genericity_gap", sol.genericity_gap);
  rec.emplace_back("residual_norm", sol.r.norm());
  rec.emplace_back("sigma_1", sol.sigma(0));
  rec.emplace_back("sigma_n1", sol.sigma_n1());
  rec.emplace_back("sigma_prime_n", sol.sigma_prime(sol.sigma_prime.size() - 1));
  return rec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total least squares solver and condition number estimator"};
  app.require_subcommand(1);

  std::string format_name = "json";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  std::string a_path;
  std::string b_path;
  double gap_tol = kDefaultGapTolerance;

  auto* solve = app.add_subcommand("solve", "Solve a TLS problem");
  solve->add_option("--a", a_path, "Matrix file holding A (m x n)")->required();
  solve->add_option("--b", b_path, "Matrix file holding b (m x 1)")->required();
  solve->add_option("--gap-tol", gap_tol, "Genericity threshold relative to sigma_1")
      ->capture_default_str();
  std::string x_out;
  solve->add_option("--x-out", x_out, "Also write x to this matrix file");
  add_format(solve);

  auto* cond = app.add_subcommand("cond", "Condition number of L^T x");
  cond->add_option("--a", a_path, "Matrix file holding A (m x n)")->required();
  cond->add_option("--b", b_path, "Matrix file holding b (m x 1)")->required();
  cond->add_option("--gap-tol", gap_tol, "Genericity threshold relative to sigma_1")
      ->capture_default_str();
  std::string method_name = "svd";
  cond->add_option("--method", method_name, "Computation route")
      ->check(CLI::IsMember({"svd", "closed", "power", "oracle"}))
      ->capture_default_str();
  std::string l_spec = "identity";
  cond->add_option("--l", l_spec, "identity, e:<i> (1-based) or file:<path> (n x k)")
      ->capture_default_str();
  PowerSettings power;
  cond->add_option("--tol", power.tol, "Power method tolerance on successive nu")
      ->capture_default_str();
  cond->add_option("--max-iter", power.max_iter, "Power method iteration cap")
      ->capture_default_str();
  cond->add_option("--seed", power.seed, "Power method initial vector seed")->capture_default_str();
  bool relative_tol = false;
  cond->add_flag("--relative-tol", relative_tol, "Judge power convergence relative to nu");
  bool relative = false;
  cond->add_flag("--relative", relative, "Also report the relative condition number");
  add_format(cond);

  Table1Settings t1;
  auto* table1 = app.add_subcommand("table1", "Conditioning versus distance to nongenericity");
  table1->add_option("--m", t1.m, "Rows of the generated problems")->capture_default_str();
  table1->add_option("--n", t1.n, "Columns of A")->capture_default_str();
  table1->add_option("--ep", t1.e_p, "Comma-separated e_p values in (0, 1]")->delimiter(',');
  table1->add_option("--seed", t1.seed, "Base seed")->capture_default_str();
  table1->add_option("--tol", t1.power.tol, "Power method tolerance")->capture_default_str();
  table1->add_option("--max-iter", t1.power.max_iter, "Power method iteration cap")
      ->capture_default_str();
  table1->add_option("--threads", t1.threads, "Worker threads (0: all cores)");
  add_format(table1);

  Table2Settings t2;
  auto* table2 = app.add_subcommand("table2", "Forward error against first-order predictions");
  table2->add_option("--m-list", t2.m_list, "Comma-separated problem sizes (each >= 4)")
      ->delimiter(',');
  table2->add_option("--pert", t2.pert_norm, "Product norm of the random perturbation")
      ->capture_default_str();
  table2->add_option("--seed", t2.seed, "Base seed")->capture_default_str();
  table2->add_option("--threads", t2.threads, "Worker threads (0: all cores)");
  add_format(table2);

  CLI11_PARSE(app, argc, argv);

  try {
    const Format format = parse_format(format_name);
    std::vector<Record> records;

    if (*solve || *cond) {
      const TlsProblem p(read_matrix_file(a_path), read_matrix_file(b_path));
      const TlsSolution sol = solve_tls(p, gap_tol);
      if (*solve) {
        records.push_back(solution_record(sol));
        if (!x_out.empty()) {
          write_matrix_file(x_out, DenseMatrix::column(sol.x));
        }
      } else {
        ConditionOptions opt;
        opt.method = parse_method(method_name);
        opt.power = power;
        opt.power.test = relative_tol ? ConvergenceTest::relative : ConvergenceTest::absolute;
        opt.relative = relative;
        records.push_back(to_record(compute_condition(p, sol, parse_observation(l_spec, p.n()), opt)));
      }
    } else if (*table1) {
      for (const auto& row : run_table1(t1)) records.push_back(to_record(row));
    } else if (*table2) {
      for (const auto& row : run_table2(t2)) records.push_back(to_record(row));
    }
    write_records(std::cout, records, format);
  } catch (const NongenericError& e) {
    std::cerr << "tls-cond: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "tls-cond: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
