#pragma once

#include <random>

#include "krein/invariant.hpp"
#include "krein/kernel.hpp"

namespace krein {

/// Deterministic generator for reproducible random-instance suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal() { return normal_(gen_); }
  double uniform() { return uniform_(gen_); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi);  // inclusive

  Complex scalar();
  Vector vector(Index n, double scale = 1.0);
  Matrix matrix(Index rows, Index cols, double scale = 1.0);
  Matrix hermitian(Index n, double scale = 1.0);
  Matrix unitary(Index n);

  /// Random fundamental symmetry: mixed signature for dim >= 2 unless
  /// force_definite.
  KreinSpace krein_space(Index dim, bool force_definite = false);

  HermitianKernel hermitian_kernel(const KreinSpace& h, Index n_points, double scale = 1.0);

  /// Random [.,.]-unitary on the space via the Cayley transform of a
  /// sharp-skew generator.
  Matrix j_unitary(const KreinSpace& space, double scale = 0.4);

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace krein
