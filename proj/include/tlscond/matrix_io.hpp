#pragma once

#include "tlscond/dense_matrix.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace tlscond {

// Matrix text format:
//   # comment lines start with '#'
//   rows cols
//   a11 a12 ... (rows*cols whitespace-separated decimals, row-major)

DenseMatrix read_matrix(std::istream& in);
DenseMatrix read_matrix_file(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const DenseMatrix& m);
void write_matrix_file(const std::filesystem::path& path, const DenseMatrix& m);

/// 17 significant digits ("%.17g"); round-trips every finite double.
std::string format_double(double v);

}  // namespace tlscond
