#pragma once

#include "tlscond/dense_matrix.hpp"

#include <cstddef>
#include <vector>

namespace tlscond {

enum class SvdVectors {
  thin,        ///< U is rows x min(rows, cols), V is cols x min(rows, cols)
  full,        ///< U and V square
  right_only,  ///< U left empty, V square
};

struct SvdResult {
  Matrix U;  ///< left singular vectors as columns (empty for right_only)
  Vector S;  ///< nonincreasing, nonnegative
  Matrix V;  ///< right singular vectors as columns
};

/// Singular value decomposition M = U diag(S) V^T.
/// Throws ConvergenceError if the underlying bidiagonal iteration fails.
SvdResult svd(const Matrix& m, SvdVectors vectors = SvdVectors::thin);
SvdResult svd(const DenseMatrix& m, SvdVectors vectors = SvdVectors::thin);

/// Largest singular value (0 for the zero matrix).
double spectral_norm(const Matrix& m);
double spectral_norm(const DenseMatrix& m);

/// sqrt(||dA||_F^2 + ||db||_2^2); db must be a single column with dA.rows() rows.
double product_norm(const DenseMatrix& dA, const DenseMatrix& db);
double product_norm(const Matrix& dA, const Vector& db);

/// Kronecker product A (x) B. Throws DimensionError when the result shape
/// overflows std::size_t.
Matrix kron(const Matrix& a, const Matrix& b);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Column-stacking vec operator, returned as an (rows*cols) x 1 matrix.
DenseMatrix vec(const DenseMatrix& m);
Vector vec(const Matrix& m);

/// Index form of the vec-transpose permutation P for an m x n matrix B:
/// (P v)[i] = v[source[i]], so that P vec(B) = vec(B^T).
struct TransposePermutation {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::size_t> source;

  Vector apply(const Vector& v) const;
  Matrix to_dense() const;
};

TransposePermutation transpose_permutation(std::size_t m, std::size_t n);

/// The mn x mn permutation matrix P with vec(B^T) = P vec(B) for every m x n B.
DenseMatrix vec_transpose_permutation(std::size_t m, std::size_t n);

}  // namespace tlscond
