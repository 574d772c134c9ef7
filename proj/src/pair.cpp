#include "solvpair/pair.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace solvpair {

struct SolvablePair::Cache {
  std::mutex mu;
  std::map<std::pair<int, Monomial>, Poly> binom_images;
};

SolvablePair::SolvablePair(Derivation d, Derivation g, NilpotencyCert cert)
    : delta_(std::move(d)),
      gamma_(std::move(g)),
      cert_(std::move(cert)),
      cache_(std::make_shared<Cache>()) {
  linear_ = delta_.is_linear() && gamma_.is_linear();
}

SolvablePair SolvablePair::validate(Derivation delta, Derivation gamma,
                                    int bound) {
  if (delta.nvars != gamma.nvars) {
    throw std::invalid_argument("variable count mismatch");
  }
  NilpotencyCert cert = nilpotency_cert(delta, bound);
  const Derivation c = commutator(delta, gamma);
  for (int i = 0; i < delta.nvars; ++i) {
    if (c.images[i] != delta.images[i]) {
      throw std::invalid_argument("commutator mismatch at generator " +
                                  std::to_string(i));
    }
  }
  return SolvablePair(std::move(delta), std::move(gamma), std::move(cert));
}

Poly SolvablePair::binom_gamma(int k, const Poly& g) const {
  if (k == 0) return g;
  Poly out = Poly::constant(nvars(), Rat(0));
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (const auto& [mono, c] : g.terms()) {
    const auto key = std::make_pair(k, mono);
    auto it = cache_->binom_images.find(key);
    if (it == cache_->binom_images.end()) {
      Poly image = gamma_binom_apply(
          gamma_, k, Poly::monomial(nvars(), mono, Rat(1)));
      it = cache_->binom_images.emplace(key, std::move(image)).first;
    }
    out += it->second * c;
  }
  return out;
}

SolvablePair canonical_pair(const std::vector<int>& blocks,
                            const std::vector<Rat>& offsets, int bound) {
  if (blocks.empty() || blocks.size() != offsets.size()) {
    throw std::invalid_argument("blocks and offsets must match and be nonempty");
  }
  int nvars = 0;
  for (const int b : blocks) {
    if (b <= 0) throw std::invalid_argument("block sizes must be positive");
    nvars += b;
  }
  std::vector<Poly> dimg, gimg;
  dimg.reserve(nvars);
  gimg.reserve(nvars);
  int start = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (int j = 0; j < blocks[k]; ++j) {
      if (j == 0) {
        dimg.push_back(Poly::constant(nvars, Rat(0)));
      } else {
        dimg.push_back(Poly::variable(nvars, start + j - 1));
      }
      gimg.push_back(Poly::variable(nvars, start + j) *
                     (offsets[k] + Rat(j)));
    }
    start += blocks[k];
  }
  return SolvablePair::validate(Derivation::make(std::move(dimg)),
                                Derivation::make(std::move(gimg)), bound);
}

namespace {

// Upper bound for the least N with delta^N(f) == 0, from the certified
// per-generator exponents and the monomials of f.
int power_cap(const SolvablePair& p, const Poly& f) {
  int cap = 1;
  for (const auto& [mono, c] : f.terms()) {
    (void)c;
    int w = 0;
    for (int j = 0; j < p.nvars(); ++j) {
      w += mono[j] * (p.cert().exponents[j] - 1);
    }
    cap = std::max(cap, w + 1);
  }
  return cap;
}

Poly lift_poly(const Poly& f, int extra_exp) {
  Poly out(f.nvars() + 1);
  for (const auto& [mono, c] : f.terms()) {
    Monomial m = mono;
    m.push_back(extra_exp);
    out.set_coeff(m, c);
  }
  return out;
}

}  // namespace

Poly bracket(const SolvablePair& p, const Poly& f, const Poly& g) {
  return apply(p.delta(), f) * apply(p.gamma(), g) -
         apply(p.delta(), g) * apply(p.gamma(), f);
}

Poly star(const SolvablePair& p, const Poly& f, const Poly& g) {
  Poly out = Poly::constant(p.nvars(), Rat(0));
  Poly df = f;
  const int cap = power_cap(p, f);
  for (int i = 0; !df.is_zero(); ++i) {
    if (i > cap) throw std::logic_error("nilpotency certificate violated");
    out += df * p.binom_gamma(i, g);
    df = apply(p.delta(), df);
  }
  return out;
}

TPoly star_t(const SolvablePair& p, const Poly& f, const Poly& g) {
  TPoly r;
  r.base_nvars = p.nvars();
  r.value = Poly(p.nvars() + 1);
  Poly df = f;
  const int cap = power_cap(p, f);
  for (int i = 0; !df.is_zero(); ++i) {
    if (i > cap) throw std::logic_error("nilpotency certificate violated");
    r.value += lift_poly(df * p.binom_gamma(i, g), i);
    df = apply(p.delta(), df);
  }
  return r;
}

Poly TPoly::t_coeff(int j) const {
  Poly out(base_nvars);
  for (const auto& [mono, c] : value.terms()) {
    if (mono.back() != j) continue;
    Monomial m(mono.begin(), mono.end() - 1);
    out.set_coeff(m, c);
  }
  return out;
}

std::string TPoly::str() const {
  std::vector<std::string> names;
  names.reserve(base_nvars + 1);
  for (int i = 0; i < base_nvars; ++i) names.push_back("X" + std::to_string(i));
  names.push_back("t");
  return value.str(names);
}

Poly phi(const SolvablePair& p, const Rat& a, const Poly& f) {
  Poly out = Poly::constant(p.nvars(), Rat(0));
  Poly df = f;
  Rat coef(1);
  const int cap = power_cap(p, f);
  for (int k = 0; !df.is_zero(); ++k) {
    if (k > cap) throw std::logic_error("nilpotency certificate violated");
    if (k > 0) coef = coef * (a - Rat(k - 1)) / Rat(k);
    out += df * coef;
    df = apply(p.delta(), df);
  }
  return out;
}

Poly log_delta(const SolvablePair& p, const Poly& f) {
  Poly out = Poly::constant(p.nvars(), Rat(0));
  Poly df = apply(p.delta(), f);
  const int cap = power_cap(p, f);
  for (int r = 1; !df.is_zero(); ++r) {
    if (r > cap) throw std::logic_error("nilpotency certificate violated");
    const Rat coef = Rat(r % 2 == 1 ? 1 : -1) / Rat(r);
    out += df * coef;
    df = apply(p.delta(), df);
  }
  return out;
}

std::optional<int> epsilon(const SolvablePair& p, const Poly& f) {
  if (f.is_zero()) return std::nullopt;
  const int cap = power_cap(p, f);
  Poly df = apply(p.delta(), f);
  for (int e = 0; e <= cap; ++e) {
    if (df.is_zero()) return e;
    df = apply(p.delta(), df);
  }
  throw std::logic_error("nilpotency certificate violated");
}

std::optional<int> epsilon_tilde(const SolvablePair& p,
                                 const AdaptedBasisRef& b, const Poly& f) {
  if (f.is_zero()) return std::nullopt;
  const Poly g = change_vars(f, inverse(b.M));
  int best = 0;
  for (const auto& [mono, c] : g.terms()) {
    (void)c;
    int w = 0;
    for (int j = 0; j < p.nvars(); ++j) w += mono[j] * b.eps1[j];
    best = std::max(best, w);
  }
  return best;
}

}  // namespace solvpair
