#pragma once

#include <memory>
#include <optional>

#include "solvpair/derivation.hpp"

namespace solvpair {

/// Change of variables adapted to the nilpotent filtration: column j of M is
/// the j-th adapted variable in the original coordinates, eps1[j] its
/// annihilation degree (position inside its chain).
struct AdaptedBasisRef {
  RatMatrix M;
  std::vector<int> eps1;
};

/// Pair of derivations (delta, gamma) with [delta, gamma] = delta and delta
/// locally nilpotent; both conditions are certified on construction.
class SolvablePair {
 public:
  static SolvablePair validate(Derivation delta, Derivation gamma,
                               int bound = 64);

  const Derivation& delta() const { return delta_; }
  const Derivation& gamma() const { return gamma_; }
  const NilpotencyCert& cert() const { return cert_; }
  bool linear() const { return linear_; }
  int nvars() const { return delta_.nvars; }

  /// gamma_binom_apply with a per-(k, monomial) cache shared by copies.
  Poly binom_gamma(int k, const Poly& g) const;

 private:
  SolvablePair(Derivation d, Derivation g, NilpotencyCert cert);

  Derivation delta_, gamma_;
  NilpotencyCert cert_;
  bool linear_ = false;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Canonical pair: delta maps each block variable to its predecessor, gamma
/// is diagonal with eigenvalues offsets[k] .. offsets[k] + blocks[k] - 1.
SolvablePair canonical_pair(const std::vector<int>& blocks,
                            const std::vector<Rat>& offsets, int bound = 64);

/// delta(f) gamma(g) - delta(g) gamma(f).
Poly bracket(const SolvablePair& p, const Poly& f, const Poly& g);

/// sum_i delta^i(f) * binom(gamma, i)(g); finite by local nilpotency.
Poly star(const SolvablePair& p, const Poly& f, const Poly& g);

/// Polynomial in nvars + 1 variables, the last one the deformation
/// parameter t.
struct TPoly {
  int base_nvars = 0;
  Poly value;
  Poly t_coeff(int j) const;
  std::string str() const;
  bool operator==(const TPoly& o) const { return value == o.value; }
};

/// One-parameter family: sum_i t^i delta^i(f) * binom(gamma, i)(g).
TPoly star_t(const SolvablePair& p, const Poly& f, const Poly& g);

/// phi_a = sum_k gbinom(a, k) delta^k, the a-th power of id + delta.
Poly phi(const SolvablePair& p, const Rat& a, const Poly& f);

/// log(id + delta) = sum_{r>=1} (-1)^{r-1}/r delta^r, a derivation.
Poly log_delta(const SolvablePair& p, const Poly& f);

/// Nilpotency degree: least i with delta^{i+1}(f) == 0; nullopt (minus
/// infinity) for f == 0.
std::optional<int> epsilon(const SolvablePair& p, const Poly& f);

/// Finer filtration degree: rewrite f in the adapted variables and take the
/// maximal weighted degree, weights B.eps1. nullopt for f == 0.
std::optional<int> epsilon_tilde(const SolvablePair& p,
                                 const AdaptedBasisRef& b, const Poly& f);

}  // namespace solvpair
