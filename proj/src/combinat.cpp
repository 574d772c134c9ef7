#include "solvpair/combinat.hpp"

#include <stdexcept>

namespace solvpair {

Rat gbinom(const Rat& a, long k) {
  if (k < 0) return Rat(0);
  Rat num(1);
  Rat den(1);
  for (long i = 0; i < k; ++i) {
    num *= a - Rat(i);
    den *= Rat(i + 1);
  }
  return num / den;
}

GBinomTable GBinomTable::make(const Rat& a, int kmax) {
  GBinomTable t;
  t.base = a;
  t.values.assign(static_cast<std::size_t>(kmax) + 1, Rat(0));
  t.values[0] = 1;
  for (int k = 1; k <= kmax; ++k) {
    t.values[k] = t.values[k - 1] * (a - Rat(k - 1)) / Rat(k);
  }
  return t;
}

RatMatrix binom_matrix(const Rat& a, int n) {
  RatMatrix m(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l <= n; ++l) m.at(k, l) = gbinom(Rat(k) * a, l);
  }
  return m;
}

std::vector<Rat> binom_solve(const Rat& a, int n) {
  if (a == 0) throw std::invalid_argument("binom_solve requires a != 0");
  std::vector<Rat> rhs(n + 1, Rat(0));
  if (n >= 1) rhs[1] = 1;
  const auto x = solve(binom_matrix(a, n).transpose(), rhs);
  if (!x) throw std::domain_error("binomial moment system is inconsistent");
  return *x;
}

}  // namespace solvpair
