#include "tlscond/linalg.hpp"

#include "tlscond/errors.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <string>

namespace tlscond {

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b, const char* what) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw DimensionError(std::string(what) + ": dimension overflow");
  }
  return a * b;
}

}  // namespace

SvdResult svd(const Matrix& m, SvdVectors vectors) {
  if (m.size() == 0) {
    throw DimensionError("svd: empty matrix");
  }
  if (!m.allFinite()) {
    throw NonFiniteError("svd: non-finite entry");
  }
  unsigned int options = 0;
  switch (vectors) {
    case SvdVectors::thin:
      options = Eigen::ComputeThinU | Eigen::ComputeThinV;
      break;
    case SvdVectors::full:
      options = Eigen::ComputeFullU | Eigen::ComputeFullV;
      break;
    case SvdVectors::right_only:
      options = Eigen::ComputeFullV;
      break;
  }
  Eigen::BDCSVD<Matrix> dec(m, options);
  if (dec.info() != Eigen::Success) {
    throw ConvergenceError("svd: decomposition of " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + " matrix did not converge");
  }
  SvdResult out;
  out.S = dec.singularValues();
  out.V = dec.matrixV();
  if (vectors != SvdVectors::right_only) {
    out.U = dec.matrixU();
  }
  return out;
}

SvdResult svd(const DenseMatrix& m, SvdVectors vectors) { return svd(m.to_eigen(), vectors); }

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) {
    throw DimensionError("spectral_norm: empty matrix");
  }
  if (!m.allFinite()) {
    throw NonFiniteError("spectral_norm: non-finite entry");
  }
  Eigen::BDCSVD<Matrix> dec(m);
  if (dec.info() != Eigen::Success) {
    throw ConvergenceError("spectral_norm: singular value iteration did not converge");
  }
  return dec.singularValues()(0);
}

double spectral_norm(const DenseMatrix& m) { return spectral_norm(m.to_eigen()); }

double product_norm(const Matrix& dA, const Vector& db) {
  if (dA.rows() != db.size()) {
    throw DimensionError("product_norm: dA has " + std::to_string(dA.rows()) +
                         " rows but db has " + std::to_string(db.size()));
  }
  return std::sqrt(dA.squaredNorm() + db.squaredNorm());
}

double product_norm(const DenseMatrix& dA, const DenseMatrix& db) {
  if (db.cols() != 1) {
    throw DimensionError("product_norm: db must have one column");
  }
  return product_norm(dA.to_eigen(), db.col(0));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const auto rows = checked_mul(static_cast<std::size_t>(a.rows()),
                                static_cast<std::size_t>(b.rows()), "kron");
  const auto cols = checked_mul(static_cast<std::size_t>(a.cols()),
                                static_cast<std::size_t>(b.cols()), "kron");
  checked_mul(rows, cols, "kron");
  if (rows > static_cast<std::size_t>(std::numeric_limits<Eigen::Index>::max()) ||
      cols > static_cast<std::size_t>(std::numeric_limits<Eigen::Index>::max())) {
    throw DimensionError("kron: dimension overflow");
  }
  Matrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  return DenseMatrix(kron(a.to_eigen(), b.to_eigen()));
}

Vector vec(const Matrix& m) { return m.reshaped(); }

DenseMatrix vec(const DenseMatrix& m) { return DenseMatrix::column(vec(m.to_eigen())); }

TransposePermutation transpose_permutation(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) {
    throw DimensionError("transpose_permutation: m and n must be positive");
  }
  TransposePermutation p;
  p.m = m;
  p.n = n;
  p.source.resize(checked_mul(m, n, "transpose_permutation"));
  // B(i, j) sits at j*m + i in vec(B) and at i*n + j in vec(B^T).
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      p.source[i * n + j] = j * m + i;
    }
  }
  return p;
}

Vector TransposePermutation::apply(const Vector& v) const {
  if (static_cast<std::size_t>(v.size()) != source.size()) {
    throw DimensionError("TransposePermutation::apply: length mismatch");
  }
  Vector out(v.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = v(static_cast<Eigen::Index>(source[i]));
  }
  return out;
}

Matrix TransposePermutation::to_dense() const {
  const auto dim = static_cast<Eigen::Index>(source.size());
  checked_mul(source.size(), source.size(), "transpose_permutation");
  Matrix p = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < source.size(); ++i) {
    p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(source[i])) = 1.0;
  }
  return p;
}

DenseMatrix vec_transpose_permutation(std::size_t m, std::size_t n) {
  return DenseMatrix(transpose_permutation(m, n).to_dense());
}

}  // namespace tlscond
