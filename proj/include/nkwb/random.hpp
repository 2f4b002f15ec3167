#pragma once

#include <cstdint>
#include <random>

#include "nkwb/matrix.hpp"

namespace nkwb {

/// Seeded generator with its own range mapping, so sequences are identical
/// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n) for n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Random field element; over Q an integer in [-range, range].
  Scalar scalar(Field f, long long range = 5);
  /// Random nonzero combination of the given columns.
  Matrix combination(const Matrix& columns, long long range = 5);

 private:
  std::mt19937_64 engine_;
};

}  // namespace nkwb
