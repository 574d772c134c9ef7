#pragma once

#include "solvpair/pair.hpp"

namespace solvpair {

/// Element of the localization at one distinguished kernel variable: the
/// exponent of that variable ranges over Z, all others stay nonnegative.
class LocalizedElem {
 public:
  LocalizedElem() = default;
  LocalizedElem(int nvars, int uvar) : nvars_(nvars), uvar_(uvar) {}
  static LocalizedElem from_poly(const Poly& f, int uvar);

  int nvars() const { return nvars_; }
  int uvar() const { return uvar_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat, GrlexLess>& terms() const { return terms_; }
  void set_coeff(const Monomial& m, const Rat& c);

  LocalizedElem operator+(const LocalizedElem& o) const;
  LocalizedElem operator-(const LocalizedElem& o) const;
  LocalizedElem operator-() const;
  LocalizedElem operator*(const LocalizedElem& o) const;
  LocalizedElem operator*(const Rat& c) const;
  LocalizedElem& operator+=(const LocalizedElem& o);
  LocalizedElem& operator-=(const LocalizedElem& o);
  bool operator==(const LocalizedElem& o) const;
  bool operator!=(const LocalizedElem& o) const { return !(*this == o); }

  bool is_poly() const;
  /// Throws std::domain_error if a negative exponent remains.
  Poly to_poly() const;
  std::string str() const;

 private:
  void check_compat(const LocalizedElem& o) const;

  int nvars_ = 0;
  int uvar_ = 0;
  std::map<Monomial, Rat, GrlexLess> terms_;
};

/// Localization data at a slice element r: delta(r) = cu * X_uvar with
/// delta(X_uvar) == 0 and gamma(X_uvar) = lambda_u * X_uvar;
/// s = r / delta(r) satisfies delta(s) == 1.
struct SliceContext {
  SolvablePair pair;
  Poly r;
  int uvar = 0;
  Rat cu;
  Rat lambda_u;
  LocalizedElem s;
};

/// Requires eps(r) == 1 and delta(r) a nonzero multiple of a single kernel
/// variable that is also a gamma eigenvector; throws std::invalid_argument
/// otherwise.
SliceContext localize(const SolvablePair& p, const Poly& r);

/// Extension of a polynomial derivation to the localized ring.
LocalizedElem loc_apply(const SliceContext& c, const Derivation& d,
                        const LocalizedElem& x);
LocalizedElem loc_star(const SliceContext& c, const LocalizedElem& f,
                       const LocalizedElem& g);
std::optional<int> loc_epsilon(const SliceContext& c, const LocalizedElem& x);

/// pi(x) = sum_p (-s)^p / p! * delta^p(x): the projection onto the
/// delta-constants of the localized ring; an algebra homomorphism.
LocalizedElem dixmier_pi(const SliceContext& c, const LocalizedElem& x);
LocalizedElem dixmier_pi(const SliceContext& c, const Poly& f);

/// Verifies delta(s) == 1, the product rules a*s = as and s*a - a*s =
/// gamma(a) for delta-constant monomials of degree <= d, that gamma(s) - s is
/// a delta-constant, and the s-degree triangularity of star powers of s.
/// Throws std::runtime_error with detail on failure.
void ore_check(const SliceContext& c, int d);

struct KernelGen {
  int var;
  LocalizedElem y;  // dixmier_pi(X_var)
  Rat lambda;       // gamma eigenvalue
};

/// Requires the pair reduced (delta canonical Jordan, gamma diagonal) and
/// generic; returns (pi(X_i), lambda_i) for every variable, each verified to
/// be a delta-constant gamma-eigenvector.
std::vector<KernelGen> kernel_generators(const SliceContext& c);

}  // namespace solvpair
