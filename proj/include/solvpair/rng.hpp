#pragma once

#include <cstdint>

#include "solvpair/poly.hpp"

namespace solvpair {

/// Deterministic splitmix64 stream; identical output on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [lo, hi], inclusive.
  int range(int lo, int hi);
  /// Uniform in {-3..3} \ {0}.
  Rat small_coeff();

 private:
  std::uint64_t state_;
};

/// Sparse polynomial with up to max_terms monomials of degree <= max_degree
/// and coefficients in {-3..3} \ {0}; never zero when max_terms > 0.
Poly random_poly(Rng& rng, int nvars, int max_degree, int max_terms);

/// Coordinates in {-3..3} \ {0}.
std::vector<Rat> random_point(Rng& rng, int nvars);

}  // namespace solvpair
