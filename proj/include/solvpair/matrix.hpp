#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "solvpair/rational.hpp"

namespace solvpair {

/// Dense matrix over Q, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator*(const Rat& c) const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;
  RatMatrix transpose() const;
  RatMatrix pow(int e) const;
  Rat trace() const;
  bool is_zero() const;
  bool operator==(const RatMatrix& o) const;
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

Rat det(RatMatrix m);
int rank(RatMatrix m);
/// Throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& m);
RatMatrix rref(RatMatrix m, std::vector<int>* pivot_cols = nullptr);
/// Canonical kernel basis from the reduced echelon form, one vector per free
/// column, free columns ascending.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);
std::optional<std::vector<Rat>> solve(const RatMatrix& a,
                                      const std::vector<Rat>& b);

/// Monic characteristic polynomial, coefficients ascending.
std::vector<Rat> char_poly(const RatMatrix& m);

/// Rational roots with multiplicities, ascending by value. The flag is true
/// iff the multiplicities sum to the degree (the polynomial splits over Q).
std::pair<std::vector<std::pair<Rat, int>>, bool> rational_roots(
    std::vector<Rat> coeffs);

/// Row space with exact membership tests; rows kept in echelon form.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(int dim) : dim_(dim) {}
  /// False if v was already in the span.
  bool add(std::vector<Rat> v);
  bool contains(std::vector<Rat> v) const;
  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce(std::vector<Rat>& v) const;

  int dim_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> pivots_;
};

}  // namespace solvpair
