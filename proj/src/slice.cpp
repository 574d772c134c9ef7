#include "solvpair/slice.hpp"

#include <algorithm>
#include <stdexcept>

namespace solvpair {

void LocalizedElem::check_compat(const LocalizedElem& o) const {
  if (nvars_ != o.nvars_ || uvar_ != o.uvar_) {
    throw std::invalid_argument("localized elements are incompatible");
  }
}

LocalizedElem LocalizedElem::from_poly(const Poly& f, int uvar) {
  LocalizedElem x(f.nvars(), uvar);
  for (const auto& [m, c] : f.terms()) x.terms_.emplace(m, c);
  return x;
}

void LocalizedElem::set_coeff(const Monomial& m, const Rat& c) {
  if (static_cast<int>(m.size()) != nvars_) {
    throw std::invalid_argument("monomial size mismatch");
  }
  for (int i = 0; i < nvars_; ++i) {
    if (i != uvar_ && m[i] < 0) {
      throw std::invalid_argument("negative exponent outside the localized variable");
    }
  }
  if (c == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

LocalizedElem& LocalizedElem::operator+=(const LocalizedElem& o) {
  check_compat(o);
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LocalizedElem& LocalizedElem::operator-=(const LocalizedElem& o) {
  return *this += -o;
}

LocalizedElem LocalizedElem::operator+(const LocalizedElem& o) const {
  LocalizedElem r = *this;
  r += o;
  return r;
}

LocalizedElem LocalizedElem::operator-(const LocalizedElem& o) const {
  LocalizedElem r = *this;
  r -= o;
  return r;
}

LocalizedElem LocalizedElem::operator-() const {
  LocalizedElem r(nvars_, uvar_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, Rat(-c));
  return r;
}

LocalizedElem LocalizedElem::operator*(const LocalizedElem& o) const {
  check_compat(o);
  LocalizedElem r(nvars_, uvar_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      const Monomial m = mono_mul(ma, mb);
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(m, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

LocalizedElem LocalizedElem::operator*(const Rat& c) const {
  LocalizedElem r(nvars_, uvar_);
  if (c == 0) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

bool LocalizedElem::operator==(const LocalizedElem& o) const {
  return nvars_ == o.nvars_ && uvar_ == o.uvar_ && terms_ == o.terms_;
}

bool LocalizedElem::is_poly() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return t.first[uvar_] >= 0;
  });
}

Poly LocalizedElem::to_poly() const {
  if (!is_poly()) {
    throw std::domain_error("element has a pole at the localized variable");
  }
  Poly f(nvars_);
  for (const auto& [m, c] : terms_) f.set_coeff(m, c);
  return f;
}

std::string LocalizedElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Rat ac = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string factors;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "X" + std::to_string(i);
      if (m[i] != 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += rat_to_string(ac);
    } else if (ac == 1) {
      out += factors;
    } else {
      out += rat_to_string(ac) + "*" + factors;
    }
  }
  return out;
}

namespace {

LocalizedElem loc_one(const SliceContext& c) {
  LocalizedElem x(c.pair.nvars(), c.uvar);
  x.set_coeff(Monomial(c.pair.nvars(), 0), Rat(1));
  return x;
}

// Nilpotency bound: the localized variable is a delta-constant, so only
// nonnegative exponents contribute.
int loc_cap(const SliceContext& c, const LocalizedElem& x) {
  int cap = 1;
  for (const auto& [m, coef] : x.terms()) {
    (void)coef;
    int w = 0;
    for (int j = 0; j < c.pair.nvars(); ++j) {
      if (m[j] > 0) w += m[j] * (c.pair.cert().exponents[j] - 1);
    }
    cap = std::max(cap, w + 1);
  }
  return cap;
}

LocalizedElem loc_binom_gamma(const SliceContext& c, int k,
                              const LocalizedElem& g) {
  LocalizedElem out = g;
  for (int i = 0; i < k && !out.is_zero(); ++i) {
    out = (loc_apply(c, c.pair.gamma(), out) - out * Rat(i)) *
          Rat(Int(1), Int(i + 1));
  }
  return out;
}

}  // namespace

SliceContext localize(const SolvablePair& p, const Poly& r) {
  if (epsilon(p, r) != std::optional<int>(1)) {
    throw std::invalid_argument("slice source must have nilpotency degree 1");
  }
  const Poly u = apply(p.delta(), r);
  if (u.terms().size() != 1) {
    throw std::invalid_argument("delta(r) must be a multiple of one variable");
  }
  const auto& [mono, cu] = *u.terms().begin();
  int uvar = -1;
  for (int i = 0; i < p.nvars(); ++i) {
    if (mono[i] == 1 && total_degree(mono) == 1) uvar = i;
  }
  if (uvar < 0) {
    throw std::invalid_argument("delta(r) must be a multiple of one variable");
  }
  const Poly xu = Poly::variable(p.nvars(), uvar);
  if (!apply(p.delta(), xu).is_zero()) {
    throw std::invalid_argument("localized variable must be a delta-constant");
  }
  const Poly gxu = apply(p.gamma(), xu);
  Rat lambda_u(0);
  if (!gxu.is_zero()) {
    if (gxu.terms().size() != 1 || gxu.terms().begin()->first != mono) {
      throw std::invalid_argument(
          "localized variable must be a gamma eigenvector");
    }
    lambda_u = gxu.terms().begin()->second;
  }
  SliceContext c{p, r, uvar, cu, lambda_u, LocalizedElem(p.nvars(), uvar)};
  for (const auto& [m, coef] : r.terms()) {
    Monomial shifted = m;
    shifted[uvar] -= 1;
    c.s.set_coeff(shifted, coef / cu);
  }
  if (loc_apply(c, p.delta(), c.s) != loc_one(c)) {
    throw std::logic_error("slice normalization failed");
  }
  return c;
}

LocalizedElem loc_apply(const SliceContext&, const Derivation& d,
                        const LocalizedElem& x) {
  const int n = x.nvars();
  LocalizedElem out(n, x.uvar());
  for (int j = 0; j < n; ++j) {
    if (d.images[j].is_zero()) continue;
    LocalizedElem dj(n, x.uvar());
    for (const auto& [m, coef] : x.terms()) {
      if (m[j] == 0) continue;
      Monomial shifted = m;
      shifted[j] -= 1;
      dj += [&] {
        LocalizedElem t(n, x.uvar());
        t.set_coeff(shifted, coef * Rat(m[j]));
        return t;
      }();
    }
    out += dj * LocalizedElem::from_poly(d.images[j], x.uvar());
  }
  return out;
}

LocalizedElem loc_star(const SliceContext& c, const LocalizedElem& f,
                       const LocalizedElem& g) {
  LocalizedElem out(f.nvars(), f.uvar());
  LocalizedElem df = f;
  const int cap = loc_cap(c, f);
  for (int i = 0; !df.is_zero(); ++i) {
    if (i > cap) throw std::logic_error("nilpotency certificate violated");
    out += df * loc_binom_gamma(c, i, g);
    df = loc_apply(c, c.pair.delta(), df);
  }
  return out;
}

std::optional<int> loc_epsilon(const SliceContext& c, const LocalizedElem& x) {
  if (x.is_zero()) return std::nullopt;
  const int cap = loc_cap(c, x);
  LocalizedElem dx = loc_apply(c, c.pair.delta(), x);
  for (int e = 0; e <= cap; ++e) {
    if (dx.is_zero()) return e;
    dx = loc_apply(c, c.pair.delta(), dx);
  }
  throw std::logic_error("nilpotency certificate violated");
}

LocalizedElem dixmier_pi(const SliceContext& c, const LocalizedElem& x) {
  LocalizedElem out(x.nvars(), x.uvar());
  LocalizedElem dx = x;
  LocalizedElem spow = loc_one(c);
  Rat coef(1);
  const int cap = loc_cap(c, x);
  for (int p = 0; !dx.is_zero(); ++p) {
    if (p > cap) throw std::logic_error("nilpotency certificate violated");
    if (p > 0) {
      spow = spow * (-c.s);
      coef /= Rat(p);
    }
    out += spow * dx * coef;
    dx = loc_apply(c, c.pair.delta(), dx);
  }
  return out;
}

LocalizedElem dixmier_pi(const SliceContext& c, const Poly& f) {
  return dixmier_pi(c, LocalizedElem::from_poly(f, c.uvar));
}

void ore_check(const SliceContext& c, int d) {
  const int n = c.pair.nvars();
  if (loc_apply(c, c.pair.delta(), c.s) != loc_one(c)) {
    throw std::runtime_error("delta(s) != 1");
  }
  const LocalizedElem gs = loc_apply(c, c.pair.gamma(), c.s);
  if (!loc_apply(c, c.pair.delta(), gs - c.s).is_zero()) {
    throw std::runtime_error("gamma(s) - s is not a delta-constant");
  }
  for (const Monomial& m : monomial_basis_upto(n, d)) {
    const Poly a = Poly::monomial(n, m, Rat(1));
    if (!apply(c.pair.delta(), a).is_zero()) continue;
    const LocalizedElem la = LocalizedElem::from_poly(a, c.uvar);
    if (loc_star(c, la, c.s) != la * c.s) {
      throw std::runtime_error("a*s != as at " + a.str());
    }
    const LocalizedElem comm = loc_star(c, c.s, la) - loc_star(c, la, c.s);
    if (comm != LocalizedElem::from_poly(apply(c.pair.gamma(), a), c.uvar)) {
      throw std::runtime_error("s*a - a*s != gamma(a) at " + a.str());
    }
  }
  LocalizedElem star_pow = loc_one(c);
  LocalizedElem plain_pow = loc_one(c);
  for (int i = 1; i <= d; ++i) {
    star_pow = loc_star(c, star_pow, c.s);
    plain_pow = plain_pow * c.s;
    const auto e = loc_epsilon(c, star_pow - plain_pow);
    if (e.has_value() && *e > i - 1) {
      throw std::runtime_error("star power of s is not triangular");
    }
  }
}

std::vector<KernelGen> kernel_generators(const SliceContext& c) {
  const SolvablePair& p = c.pair;
  const int n = p.nvars();
  if (!p.linear()) throw std::invalid_argument("pair is not in reduced form");
  const RatMatrix& dm = *p.delta().linear_matrix;
  const RatMatrix& gm = *p.gamma().linear_matrix;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i != j && gm.at(i, j) != 0) {
        throw std::invalid_argument("pair is not in reduced form");
      }
      if (dm.at(i, j) != 0 && (i != j - 1 || dm.at(i, j) != 1)) {
        throw std::invalid_argument("pair is not in reduced form");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (gm.at(i, i) == 0) throw std::invalid_argument("pair is not generic");
    for (int j = i + 1; j < n; ++j) {
      if (gm.at(i, i) == gm.at(j, j)) {
        throw std::invalid_argument("pair is not generic");
      }
    }
  }
  std::vector<KernelGen> out;
  for (int i = 0; i < n; ++i) {
    KernelGen gen;
    gen.var = i;
    gen.y = dixmier_pi(c, Poly::variable(n, i));
    gen.lambda = gm.at(i, i);
    if (!loc_apply(c, p.delta(), gen.y).is_zero() ||
        loc_apply(c, p.gamma(), gen.y) != gen.y * gen.lambda) {
      throw std::logic_error("kernel generator verification failed");
    }
    out.push_back(std::move(gen));
  }
  return out;
}

}  // namespace solvpair
