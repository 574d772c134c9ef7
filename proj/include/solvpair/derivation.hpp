#pragma once

#include <optional>
#include <vector>

#include "solvpair/matrix.hpp"
#include "solvpair/poly.hpp"

namespace solvpair {

/// Derivation of Q[X0..X{n-1}] determined by its generator images.
/// linear_matrix is set iff every image is homogeneous of degree 1 (zero
/// images allowed); its column j holds the coefficients of images[j].
struct Derivation {
  int nvars = 0;
  std::vector<Poly> images;
  std::optional<RatMatrix> linear_matrix;

  static Derivation make(std::vector<Poly> images);
  static Derivation zero(int nvars);
  static Derivation from_matrix(const RatMatrix& m);
  bool is_linear() const { return linear_matrix.has_value(); }
};

Poly apply(const Derivation& d, const Poly& f);
Derivation commutator(const Derivation& a, const Derivation& b);
/// d applied i times; requires i >= 0.
Poly power_apply(const Derivation& d, int i, const Poly& f);
/// (1/k!) g(g-1)...(g-(k-1)) applied to f; the identity for k == 0.
Poly gamma_binom_apply(const Derivation& g, int k, const Poly& f);
/// sum_i d(images[i]) / dX_i.
Poly divergence(const Derivation& d);

/// Per-generator annihilation exponents: d^{exponents[i]}(X_i) == 0 and
/// d^{exponents[i]-1}(X_i) != 0; global is their maximum.
struct NilpotencyCert {
  std::vector<int> exponents;
  int global = 0;
};

/// Linear derivations are certified by exact matrix nilpotency (bound
/// ignored); otherwise generators are iterated up to bound. Throws
/// std::runtime_error "not certified nilpotent within bound" on failure.
NilpotencyCert nilpotency_cert(const Derivation& d, int bound = 64);

}  // namespace solvpair
