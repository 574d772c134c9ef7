#include "solvpair/derivation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace solvpair {

namespace {

std::optional<RatMatrix> try_linear_matrix(int nvars,
                                           const std::vector<Poly>& images) {
  RatMatrix m(nvars, nvars);
  for (int j = 0; j < nvars; ++j) {
    const Poly& img = images[j];
    if (img.is_zero()) continue;
    if (img.degree() != 1) return std::nullopt;
    for (const auto& [mono, c] : img.terms()) {
      if (total_degree(mono) != 1) return std::nullopt;
      for (int i = 0; i < nvars; ++i) {
        if (mono[i] == 1) m.at(i, j) = c;
      }
    }
  }
  return m;
}

}  // namespace

Derivation Derivation::make(std::vector<Poly> images) {
  if (images.empty()) throw std::invalid_argument("derivation needs images");
  Derivation d;
  d.nvars = images.front().nvars();
  for (const Poly& img : images) {
    if (img.nvars() != d.nvars) {
      throw std::invalid_argument("derivation images mix variable counts");
    }
  }
  d.images = std::move(images);
  d.linear_matrix = try_linear_matrix(d.nvars, d.images);
  return d;
}

Derivation Derivation::zero(int nvars) {
  std::vector<Poly> images(nvars, Poly::constant(nvars, Rat(0)));
  return make(std::move(images));
}

Derivation Derivation::from_matrix(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("derivation matrix must be square");
  }
  const int n = m.rows();
  std::vector<Poly> images;
  images.reserve(n);
  for (int j = 0; j < n; ++j) {
    Poly img = Poly::constant(n, Rat(0));
    for (int i = 0; i < n; ++i) {
      if (m.at(i, j) != 0) {
        img = img + Poly::variable(n, i) * m.at(i, j);
      }
    }
    images.push_back(std::move(img));
  }
  return make(std::move(images));
}

Poly apply(const Derivation& d, const Poly& f) {
  if (f.nvars() != d.nvars) {
    throw std::invalid_argument("variable count mismatch");
  }
  Poly out = Poly::constant(d.nvars, Rat(0));
  for (int i = 0; i < d.nvars; ++i) {
    if (d.images[i].is_zero()) continue;
    const Poly df = f.partial(i);
    if (!df.is_zero()) out = out + d.images[i] * df;
  }
  return out;
}

Derivation commutator(const Derivation& a, const Derivation& b) {
  if (a.nvars != b.nvars) {
    throw std::invalid_argument("variable count mismatch");
  }
  std::vector<Poly> images;
  images.reserve(a.nvars);
  for (int j = 0; j < a.nvars; ++j) {
    images.push_back(apply(a, b.images[j]) - apply(b, a.images[j]));
  }
  return Derivation::make(std::move(images));
}

Poly power_apply(const Derivation& d, int i, const Poly& f) {
  if (i < 0) throw std::invalid_argument("negative derivation power");
  Poly out = f;
  for (int k = 0; k < i && !out.is_zero(); ++k) out = apply(d, out);
  return out;
}

Poly gamma_binom_apply(const Derivation& g, int k, const Poly& f) {
  if (k < 0) throw std::invalid_argument("negative binomial index");
  Poly out = f;
  for (int i = 0; i < k && !out.is_zero(); ++i) {
    out = (apply(g, out) - out * Rat(i)) * Rat(Int(1), Int(i + 1));
  }
  return out;
}

Poly divergence(const Derivation& d) {
  Poly out = Poly::constant(d.nvars, Rat(0));
  for (int i = 0; i < d.nvars; ++i) out = out + d.images[i].partial(i);
  return out;
}

NilpotencyCert nilpotency_cert(const Derivation& d, int bound) {
  NilpotencyCert cert;
  cert.exponents.assign(d.nvars, 0);
  if (d.is_linear()) {
    // A nilpotent n x n matrix satisfies M^n == 0; checking that power
    // certifies or refutes nilpotency exactly.
    const RatMatrix& m = *d.linear_matrix;
    if (!m.pow(d.nvars).is_zero()) {
      throw std::runtime_error("not certified nilpotent within bound");
    }
    for (int j = 0; j < d.nvars; ++j) {
      std::vector<Rat> v(d.nvars, Rat(0));
      v[j] = 1;
      int e = 0;
      while (std::any_of(v.begin(), v.end(),
                         [](const Rat& x) { return x != 0; })) {
        v = m.apply(v);
        ++e;
      }
      cert.exponents[j] = e;
    }
  } else {
    for (int j = 0; j < d.nvars; ++j) {
      Poly v = Poly::variable(d.nvars, j);
      int e = 0;
      while (!v.is_zero()) {
        if (e >= bound) {
          throw std::runtime_error("not certified nilpotent within bound");
        }
        v = apply(d, v);
        ++e;
      }
      cert.exponents[j] = e;
    }
  }
  cert.global = 0;
  for (const int e : cert.exponents) cert.global = std::max(cert.global, e);
  return cert;
}

}  // namespace solvpair
