#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <span>

namespace tlscond {

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Row-major dense real matrix with at least one row and one column and
/// finite entries. This is the value type crossing every public boundary
/// (problem data, observation maps, perturbations, file I/O); the numerical
/// kernels work on the Eigen view returned by mat().
class DenseMatrix {
 public:
  /// rows x cols matrix of zeros.
  DenseMatrix(std::size_t rows, std::size_t cols);

  /// Copies an Eigen matrix, rejecting empty shapes and non-finite entries.
  template <typename Derived>
  explicit DenseMatrix(const Eigen::MatrixBase<Derived>& m) : data_(m) {
    validate();
  }

  /// Builds from a row-major list of rows; all rows must have equal length.
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  /// Builds from a row-major entry buffer of length rows * cols.
  static DenseMatrix from_row_major(std::size_t rows, std::size_t cols,
                                    std::span<const double> entries);

  /// Column vector (n x 1) from an Eigen vector.
  static DenseMatrix column(const Vector& v);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return static_cast<std::size_t>(data_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(data_.cols()); }
  std::size_t size() const { return rows() * cols(); }

  double operator()(std::size_t i, std::size_t j) const { return data_(i, j); }

  std::span<const double> entries() const { return {data_.data(), size()}; }

  const RowMajorMatrix& mat() const { return data_; }

  /// The matrix as a column-major Eigen matrix (copy).
  Matrix to_eigen() const { return data_; }

  /// Column j as an Eigen vector (copy); for m x 1 data use col(0).
  Vector col(std::size_t j) const { return data_.col(static_cast<Eigen::Index>(j)); }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.data_.rows() == b.data_.rows() && a.data_.cols() == b.data_.cols() &&
           a.data_ == b.data_;
  }

 private:
  void validate() const;

  RowMajorMatrix data_;
};

}  // namespace tlscond
