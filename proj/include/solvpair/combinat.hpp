#pragma once

#include <vector>

#include "solvpair/matrix.hpp"
#include "solvpair/rational.hpp"

namespace solvpair {

/// Generalized binomial coefficient a(a-1)...(a-k+1)/k!; zero for k < 0.
Rat gbinom(const Rat& a, long k);

struct GBinomTable {
  Rat base;
  std::vector<Rat> values;  // values[k] == gbinom(base, k)
  static GBinomTable make(const Rat& a, int kmax);
};

/// (n+1) x (n+1) matrix with entry (k, l) = gbinom(k*a, l).
RatMatrix binom_matrix(const Rat& a, int n);

/// Weights alpha with sum_k alpha_k * gbinom(k*a, l) = [l == 1] for
/// l = 0..n. Requires a != 0 (the system is then uniquely solvable).
std::vector<Rat> binom_solve(const Rat& a, int n);

}  // namespace solvpair
