#pragma once

#include <vector>

namespace solvpair {

/// Exponent vector; entry i is the exponent of X_i.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

/// Graded lexicographic order: total degree first, then exponents from X0.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(a, b);
  }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);

}  // namespace solvpair
