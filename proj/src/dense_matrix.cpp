#include "tlscond/dense_matrix.hpp"

#include "tlscond/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tlscond {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : data_(RowMajorMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols))) {
  validate();
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
  data_.resize(static_cast<Eigen::Index>(nrows), static_cast<Eigen::Index>(ncols));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) {
      throw DimensionError("DenseMatrix: ragged initializer rows");
    }
    Eigen::Index j = 0;
    for (double v : row) {
      data_(i, j++) = v;
    }
    ++i;
  }
  validate();
}

DenseMatrix DenseMatrix::from_row_major(std::size_t rows, std::size_t cols,
                                        std::span<const double> entries) {
  if (entries.size() != rows * cols) {
    throw DimensionError("DenseMatrix: expected " + std::to_string(rows * cols) + " entries, got " +
                         std::to_string(entries.size()));
  }
  RowMajorMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  std::copy(entries.begin(), entries.end(), m.data());
  return DenseMatrix(m);
}

DenseMatrix DenseMatrix::column(const Vector& v) { return DenseMatrix(Matrix(v)); }

DenseMatrix DenseMatrix::identity(std::size_t n) {
  return DenseMatrix(Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
}

void DenseMatrix::validate() const {
  if (data_.rows() < 1 || data_.cols() < 1) {
    throw DimensionError("DenseMatrix: shape must be at least 1x1, got " +
                         std::to_string(data_.rows()) + "x" + std::to_string(data_.cols()));
  }
  const double* p = data_.data();
  for (Eigen::Index k = 0; k < data_.size(); ++k) {
    if (!std::isfinite(p[k])) {
      throw NonFiniteError("DenseMatrix: non-finite entry at (" +
                           std::to_string(k / data_.cols()) + ", " +
                           std::to_string(k % data_.cols()) + ")");
    }
  }
}

}  // namespace tlscond
