#include "tlscond/matrix_io.hpp"

#include "tlscond/errors.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace tlscond {

namespace {

template <typename T>
T parse_token(const std::string& tok, const char* what) {
  T value{};
  const char* first = tok.data();
  const char* last = first + tok.size();
  // from_chars rejects a leading '+', which hand-written files often carry.
  if (first != last && *first == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(std::string("matrix file: bad ") + what + " '" + tok + "'");
  }
  return value;
}

}  // namespace

DenseMatrix read_matrix(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      tokens.push_back(tok);
    }
  }
  if (tokens.size() < 2) {
    throw ParseError("matrix file: missing 'rows cols' header");
  }
  const auto rows = parse_token<std::size_t>(tokens[0], "row count");
  const auto cols = parse_token<std::size_t>(tokens[1], "column count");
  if (rows == 0 || cols == 0) {
    throw ParseError("matrix file: rows and cols must be positive");
  }
  const std::size_t expected = rows * cols;
  if (tokens.size() - 2 != expected) {
    throw ParseError("matrix file: expected " + std::to_string(expected) + " entries, found " +
                     std::to_string(tokens.size() - 2));
  }
  std::vector<double> entries;
  entries.reserve(expected);
  for (std::size_t k = 2; k < tokens.size(); ++k) {
    entries.push_back(parse_token<double>(tokens[k], "entry"));
  }
  return DenseMatrix::from_row_major(rows, cols, entries);
}

DenseMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open matrix file " + path.string());
  }
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) {
        out << ' ';
      }
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

void write_matrix_file(const std::filesystem::path& path, const DenseMatrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write matrix file " + path.string());
  }
  write_matrix(out, m);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace tlscond
