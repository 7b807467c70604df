#pragma once

#include "tlscond/dense_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

namespace tlscond {

/// Portable seeded source: std::mt19937_64 (whose output sequence the C++
/// standard fixes), 53-bit uniforms u = (bits >> 11) * 2^-53, and standard
/// normals from the Box-Muller transform on (1 - u1, u2). Unlike
/// std::normal_distribution the transform is fixed here, so a seed yields the
/// same stream with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  double gaussian();

  Vector gaussian_vector(std::size_t n);
  Matrix gaussian_matrix(std::size_t rows, std::size_t cols);
  /// Gaussian vector normalised to unit Euclidean length.
  Vector unit_vector(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Seed for row `index` of a run seeded with `base` (one SplitMix64 step of
/// base + golden-ratio * (index + 1)).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace tlscond
