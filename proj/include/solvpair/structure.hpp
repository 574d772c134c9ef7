#pragma once

#include <cstdint>
#include <string>

#include "solvpair/pair.hpp"

namespace solvpair {

/// Basis adapted to a diagonalizable linear pair: conjugating by M puts delta
/// in canonical Jordan form (block sizes jordan_type, decreasing) and gamma in
/// diagonal form; block k carries eigenvalues offsets[k] .. offsets[k]+n_k-1.
struct AdaptedBasis {
  RatMatrix M;
  std::vector<int> jordan_type;
  std::vector<Rat> offsets;      // one per block
  std::vector<Rat> eigenvalues;  // one per adapted variable
  AdaptedBasisRef ref() const;
};

/// Throws std::runtime_error when gamma is not diagonalizable over Q on
/// degree one: "needs field extension" when the characteristic polynomial
/// does not split, "gamma is not diagonalizable" when the eigenspaces are
/// too small. Requires a linear pair.
AdaptedBasis jordan_reduce(const SolvablePair& p);

/// Jordan chains of delta alone (no constraint on gamma); enough for the
/// finer filtration. Requires a linear pair.
AdaptedBasisRef jordan_chain_basis(const SolvablePair& p);

/// Entry (i, j) = bracket(X_i, X_j).
std::vector<std::vector<Poly>> poisson_matrix(const SolvablePair& p);

/// Max over sampled rational points of the exact rank of the bracket matrix.
int generic_rank(const SolvablePair& p, int samples, std::uint64_t seed);

/// (1 - div gamma) * delta; cross-checked on generators against
/// sum_k d({X_k, f})/dX_k.
Derivation modular_derivation(const SolvablePair& p);

struct StructureReport {
  std::vector<int> jordan_type;
  bool has_offsets = false;
  std::vector<Rat> offsets;
  Rat trace;
  Rat nakayama_c;  // 1 - trace
  bool unimodular = false;
  bool calabi_yau = false;
  bool generic = false;      // eigenvalues of gamma distinct and nonzero
  bool commutative = false;  // bracket vanishes identically
};

/// Requires a linear pair.
StructureReport structure_report(const SolvablePair& p);

struct NormalEigenSpace {
  Rat eigenvalue;
  std::vector<Poly> basis;
};

/// gamma-eigenspace decomposition of (degree-d component) intersect ker delta; every
/// reported element z satisfies delta(z) == 0 and gamma(z) == eigenvalue * z
/// exactly. Eigenvalues ascending.
std::vector<NormalEigenSpace> strongly_normal_space(const SolvablePair& p,
                                                    int d);

/// Requires delta(n) == 0 and gamma(n) == alpha * n, then verifies
/// g * n == n * phi_alpha(g) and {g, n} == alpha delta(g) n for all monomials
/// g of degree <= d. Throws with a counterexample on failure.
void check_strongly_normal_behavior(const SolvablePair& p, const Poly& n,
                                    const Rat& alpha, int d);

/// Basis of the elements of degree <= d commuting with every generator,
/// under star (poisson == false) or under the bracket (poisson == true).
std::vector<Poly> center(const SolvablePair& p, int d, bool poisson = false);

/// Basis of ker delta intersect ker gamma in degree <= d.
std::vector<Poly> kernel_intersection(const SolvablePair& p, int d);

struct PDerSpace {
  std::vector<RatMatrix> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Linear derivations delta with delta({f,g}) = {delta f, g} + {f, delta g};
/// exact nullspace over the (n+1)^2 matrix entries. Requires a linear pair.
PDerSpace pder_basis(const SolvablePair& p);

struct StarWord {
  Rat coef;
  int left, right;  // coef * Y_left * Y_right
};

struct Relation {
  int i, j;  // generator indices of the underlying pair
  std::vector<StarWord> lhs, rhs;
};

/// Straightening relations between the adapted generators, one per unordered
/// pair; each is verified to hold under the actual star product.
std::vector<Relation> relations(const SolvablePair& p, const AdaptedBasis& b);

std::string relation_str(const Relation& rel,
                         const std::vector<std::string>& names);

/// Rank of the span of degree-d ordered star monomials in the generators.
int star_monomial_rank(const SolvablePair& p, int d);

/// True iff the rank above equals dim of the degree-d component,
/// C(nvars-1+d, d).
bool hilbert_check(const SolvablePair& p, int d);

}  // namespace solvpair
