#include "solvpair/rng.hpp"

#include <stdexcept>

namespace solvpair {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::range(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  return lo + static_cast<int>(next() % span);
}

Rat Rng::small_coeff() {
  int v = range(-3, 2);
  if (v >= 0) ++v;
  return Rat(v);
}

Poly random_poly(Rng& rng, int nvars, int max_degree, int max_terms) {
  Poly f = Poly::constant(nvars, Rat(0));
  for (int t = 0; t < max_terms; ++t) {
    Monomial m(nvars, 0);
    int budget = rng.range(0, max_degree);
    for (int j = 0; j < nvars && budget > 0; ++j) {
      const int e = rng.range(0, budget);
      m[j] = e;
      budget -= e;
    }
    f = f + Poly::monomial(nvars, m, rng.small_coeff());
  }
  if (f.is_zero() && max_terms > 0) {
    f = Poly::constant(nvars, rng.small_coeff());
  }
  return f;
}

std::vector<Rat> random_point(Rng& rng, int nvars) {
  std::vector<Rat> p;
  p.reserve(nvars);
  for (int i = 0; i < nvars; ++i) p.push_back(rng.small_coeff());
  return p;
}

}  // namespace solvpair
