#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solvpair/monomial.hpp"
#include "solvpair/rational.hpp"

namespace solvpair {

class RatMatrix;

/// Sparse polynomial over Q in X0..X{nvars-1}.
/// Invariants: no stored coefficient is zero; every key has size() == nvars;
/// terms are kept in graded-lex order.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int index);
  static Poly monomial(int nvars, const Monomial& m, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<int> degree() const;
  const std::map<Monomial, Rat, GrlexLess>& terms() const { return terms_; }
  Rat coeff(const Monomial& m) const;
  void set_coeff(const Monomial& m, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int e) const;
  Poly graded_component(int d) const;
  Poly partial(int var) const;
  /// The zero polynomial is homogeneous of every degree.
  bool is_homogeneous(int d) const;
  Rat eval(const std::vector<Rat>& point) const;

  std::string str() const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  void check_compat(const Poly& o) const;

  int nvars_ = 0;
  std::map<Monomial, Rat, GrlexLess> terms_;
};

Poly operator*(const Rat& c, const Poly& f);

/// Term grammar: terms joined by '+'/'-'; a term is an optional rational
/// coefficient and '*'-separated factors "Xi" or "Xi^e"; whitespace ignored;
/// an omitted coefficient is 1. Throws std::invalid_argument with the
/// offending position.
Poly parse_poly(int nvars, const std::string& text);

/// Monomials of total degree exactly d, in descending lexicographic order
/// from X0 (X0^d first).
std::vector<Monomial> monomial_basis(int nvars, int d);

/// Degrees 0..d concatenated ascending, each in monomial_basis order.
std::vector<Monomial> monomial_basis_upto(int nvars, int d);

/// Substitutes variable j by the linear form in column j of M (square,
/// nvars x nvars).
Poly change_vars(const Poly& f, const RatMatrix& M);

}  // namespace solvpair
