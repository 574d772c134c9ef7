#include "solvpair/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "solvpair/combinat.hpp"
#include "solvpair/rng.hpp"

namespace solvpair {

namespace {

void require_linear(const SolvablePair& p, const char* what) {
  if (!p.linear()) {
    throw std::invalid_argument(std::string(what) + " requires a linear pair");
  }
}

// Shared monomial coordinate frame for a family of polynomials.
struct MonoIndex {
  std::map<Monomial, int, GrlexLess> pos;

  explicit MonoIndex(const std::vector<Poly>& polys) {
    for (const Poly& f : polys) {
      for (const auto& [m, c] : f.terms()) {
        (void)c;
        pos.emplace(m, 0);
      }
    }
    int next = 0;
    for (auto& [m, idx] : pos) {
      (void)m;
      idx = next++;
    }
  }

  int size() const { return static_cast<int>(pos.size()); }

  std::vector<Rat> coords(const Poly& f) const {
    std::vector<Rat> v(pos.size(), Rat(0));
    for (const auto& [m, c] : f.terms()) v[pos.at(m)] = c;
    return v;
  }
};

// Elements sum_k c_k basis[k] with images[cond][k] summing to zero for every
// condition block; returns the canonical nullspace combined back into polys.
std::vector<Poly> joint_kernel(const std::vector<Poly>& basis,
                               const std::vector<std::vector<Poly>>& images) {
  const int cols = static_cast<int>(basis.size());
  int rows = 0;
  std::vector<MonoIndex> idx;
  idx.reserve(images.size());
  for (const auto& block : images) {
    idx.emplace_back(block);
    rows += idx.back().size();
  }
  RatMatrix m(std::max(rows, 1), cols);
  int row0 = 0;
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (int k = 0; k < cols; ++k) {
      const auto v = idx[c].coords(images[c][k]);
      for (std::size_t r = 0; r < v.size(); ++r) {
        m.at(row0 + static_cast<int>(r), k) = v[r];
      }
    }
    row0 += idx[c].size();
  }
  std::vector<Poly> out;
  for (const auto& combo : nullspace(m)) {
    Poly z = Poly::constant(basis.empty() ? 1 : basis.front().nvars(), Rat(0));
    for (int k = 0; k < cols; ++k) {
      if (combo[k] != 0) z += basis[k] * combo[k];
    }
    out.push_back(std::move(z));
  }
  return out;
}

struct Chain {
  std::vector<std::vector<Rat>> members;  // members[s] = D^s(top)
  Rat top_eigenvalue;
};

std::vector<std::vector<Rat>> stacked_nullspace(const RatMatrix& a,
                                                const RatMatrix& b) {
  RatMatrix m(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  }
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  }
  return nullspace(m);
}

// Chains of the nilpotent matrix D, built by decreasing induction on
// ker D^i. When eigen_data is set, level candidates are restricted to exact
// eigenvectors of G so every chain member is a G-eigenvector.
std::vector<Chain> build_chains(const RatMatrix& d,
                                const std::vector<Rat>* eigenvalues,
                                const RatMatrix* g) {
  const int n = d.rows();
  std::vector<RatMatrix> dpow{RatMatrix::identity(n)};
  while (!dpow.back().is_zero()) dpow.push_back(dpow.back() * d);
  const int nu = static_cast<int>(dpow.size()) - 1;

  std::vector<Chain> chains;
  for (int i = nu; i >= 1; --i) {
    IncrementalSpan span(n);
    for (auto& v : nullspace(dpow[i - 1])) span.add(std::move(v));
    for (const Chain& c : chains) {
      const int size = static_cast<int>(c.members.size());
      if (!span.add(c.members[size - i])) {
        throw std::logic_error("chain members collapsed");
      }
    }
    std::vector<std::pair<std::vector<Rat>, Rat>> candidates;
    if (eigenvalues) {
      for (const Rat& lam : *eigenvalues) {
        RatMatrix shifted = *g;
        for (int j = 0; j < n; ++j) shifted.at(j, j) -= lam;
        for (auto& v : stacked_nullspace(shifted, dpow[i])) {
          candidates.emplace_back(std::move(v), lam);
        }
      }
    } else {
      for (auto& v : nullspace(dpow[i])) candidates.emplace_back(std::move(v), Rat(0));
    }
    for (auto& [v, lam] : candidates) {
      if (!span.add(v)) continue;
      Chain c;
      c.top_eigenvalue = lam;
      c.members.push_back(std::move(v));
      for (int s = 1; s < i; ++s) c.members.push_back(d.apply(c.members.back()));
      chains.push_back(std::move(c));
    }
  }
  int total = 0;
  for (const Chain& c : chains) total += static_cast<int>(c.members.size());
  if (total != n) throw std::logic_error("chain construction incomplete");
  std::stable_sort(chains.begin(), chains.end(),
                   [](const Chain& a, const Chain& b) {
                     return a.members.size() > b.members.size();
                   });
  return chains;
}

RatMatrix chains_to_matrix(const std::vector<Chain>& chains, int n) {
  RatMatrix m(n, n);
  int col = 0;
  for (const Chain& c : chains) {
    const int size = static_cast<int>(c.members.size());
    for (int j = 0; j < size; ++j, ++col) {
      for (int i = 0; i < n; ++i) m.at(i, col) = c.members[size - 1 - j][i];
    }
  }
  return m;
}

RatMatrix canonical_jordan(const std::vector<int>& blocks, int n) {
  RatMatrix j(n, n);
  int start = 0;
  for (const int size : blocks) {
    for (int k = 1; k < size; ++k) j.at(start + k - 1, start + k) = 1;
    start += size;
  }
  return j;
}

std::vector<Rat> gamma_eigenvalue_list(const RatMatrix& g) {
  const auto [roots, split] = rational_roots(char_poly(g));
  if (!split) throw std::runtime_error("needs field extension");
  int eigdim = 0;
  std::vector<Rat> values;
  for (const auto& [lam, mult] : roots) {
    (void)mult;
    RatMatrix shifted = g;
    for (int i = 0; i < g.rows(); ++i) shifted.at(i, i) -= lam;
    eigdim += static_cast<int>(nullspace(shifted).size());
    values.push_back(lam);
  }
  if (eigdim != g.rows()) {
    throw std::runtime_error("gamma is not diagonalizable");
  }
  return values;
}

}  // namespace

AdaptedBasisRef AdaptedBasis::ref() const {
  AdaptedBasisRef r;
  r.M = M;
  for (const int size : jordan_type) {
    for (int j = 0; j < size; ++j) r.eps1.push_back(j);
  }
  return r;
}

AdaptedBasis jordan_reduce(const SolvablePair& p) {
  require_linear(p, "jordan reduction");
  const int n = p.nvars();
  const RatMatrix& d = *p.delta().linear_matrix;
  const RatMatrix& g = *p.gamma().linear_matrix;
  const std::vector<Rat> values = gamma_eigenvalue_list(g);
  const auto chains = build_chains(d, &values, &g);

  AdaptedBasis b;
  b.M = chains_to_matrix(chains, n);
  for (const Chain& c : chains) {
    const int size = static_cast<int>(c.members.size());
    const Rat offset = c.top_eigenvalue - Rat(size - 1);
    b.jordan_type.push_back(size);
    b.offsets.push_back(offset);
    for (int j = 0; j < size; ++j) b.eigenvalues.push_back(offset + Rat(j));
  }

  const RatMatrix minv = inverse(b.M);
  if (minv * d * b.M != canonical_jordan(b.jordan_type, n)) {
    throw std::logic_error("reduced delta is not canonical");
  }
  RatMatrix diag(n, n);
  for (int i = 0; i < n; ++i) diag.at(i, i) = b.eigenvalues[i];
  if (minv * g * b.M != diag) {
    throw std::logic_error("reduced gamma is not diagonal");
  }
  return b;
}

AdaptedBasisRef jordan_chain_basis(const SolvablePair& p) {
  require_linear(p, "jordan chain basis");
  const int n = p.nvars();
  const auto chains = build_chains(*p.delta().linear_matrix, nullptr, nullptr);
  AdaptedBasisRef r;
  r.M = chains_to_matrix(chains, n);
  for (const Chain& c : chains) {
    for (int j = 0; j < static_cast<int>(c.members.size()); ++j) {
      r.eps1.push_back(j);
    }
  }
  return r;
}

std::vector<std::vector<Poly>> poisson_matrix(const SolvablePair& p) {
  const int n = p.nvars();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[i][j] = bracket(p, Poly::variable(n, i), Poly::variable(n, j));
    }
  }
  return m;
}

int generic_rank(const SolvablePair& p, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const auto pm = poisson_matrix(p);
  const int n = p.nvars();
  Rng rng(seed);
  int best = 0;
  for (int s = 0; s < samples; ++s) {
    const auto point = random_point(rng, n);
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.at(i, j) = pm[i][j].eval(point);
    }
    best = std::max(best, rank(std::move(m)));
  }
  return best;
}

Derivation modular_derivation(const SolvablePair& p) {
  const int n = p.nvars();
  const Poly factor =
      Poly::constant(n, Rat(1)) - divergence(p.gamma());
  std::vector<Poly> images;
  images.reserve(n);
  for (int j = 0; j < n; ++j) images.push_back(factor * p.delta().images[j]);
  Derivation m = Derivation::make(std::move(images));
  for (int j = 0; j < n; ++j) {
    Poly direct = Poly::constant(n, Rat(0));
    for (int k = 0; k < n; ++k) {
      direct += bracket(p, Poly::variable(n, k), Poly::variable(n, j))
                    .partial(k);
    }
    if (direct != m.images[j]) {
      throw std::logic_error("modular derivation cross-check failed");
    }
  }
  return m;
}

StructureReport structure_report(const SolvablePair& p) {
  require_linear(p, "structure report");
  const RatMatrix& g = *p.gamma().linear_matrix;
  StructureReport rep;

  const AdaptedBasisRef chains = jordan_chain_basis(p);
  for (const int e : chains.eps1) {
    if (e == 0) rep.jordan_type.push_back(1);
    else ++rep.jordan_type.back();
  }
  try {
    const AdaptedBasis b = jordan_reduce(p);
    rep.has_offsets = true;
    rep.offsets = b.offsets;
  } catch (const std::runtime_error&) {
    rep.has_offsets = false;
  }

  rep.trace = g.trace();
  rep.nakayama_c = Rat(1) - rep.trace;

  const Derivation m = modular_derivation(p);
  rep.unimodular = std::all_of(m.images.begin(), m.images.end(),
                               [](const Poly& f) { return f.is_zero(); });
  rep.calabi_yau = rep.unimodular;

  const auto [roots, split] = rational_roots(char_poly(g));
  rep.generic = split;
  for (const auto& [lam, mult] : roots) {
    if (mult != 1 || lam == 0) rep.generic = false;
  }

  rep.commutative = true;
  for (const auto& row : poisson_matrix(p)) {
    for (const Poly& entry : row) {
      if (!entry.is_zero()) rep.commutative = false;
    }
  }
  return rep;
}

std::vector<NormalEigenSpace> strongly_normal_space(const SolvablePair& p,
                                                    int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  const int n = p.nvars();
  std::vector<Poly> basis;
  for (const Monomial& m : monomial_basis(n, d)) {
    basis.push_back(Poly::monomial(n, m, Rat(1)));
  }
  std::vector<Poly> dimg;
  dimg.reserve(basis.size());
  for (const Poly& b : basis) dimg.push_back(apply(p.delta(), b));
  std::vector<Poly> v = joint_kernel(basis, {dimg});

  // Shrink to the largest subspace mapped into itself by gamma; any exact
  // eigenvector survives every pass, so nothing sought is lost.
  while (!v.empty()) {
    std::vector<Poly> gv;
    gv.reserve(v.size());
    for (const Poly& z : v) gv.push_back(apply(p.gamma(), z));
    std::vector<Poly> all = v;
    all.insert(all.end(), gv.begin(), gv.end());
    const MonoIndex idx(all);
    const int k = static_cast<int>(v.size());
    RatMatrix stacked(idx.size(), 2 * k);
    for (int c = 0; c < k; ++c) {
      const auto gcol = idx.coords(gv[c]);
      const auto vcol = idx.coords(v[c]);
      for (int r = 0; r < idx.size(); ++r) {
        stacked.at(r, c) = gcol[r];
        stacked.at(r, k + c) = -vcol[r];
      }
    }
    // Solutions (c, y) with gamma(V c) = V y; project onto c.
    IncrementalSpan proj(k);
    std::vector<std::vector<Rat>> combos;
    for (const auto& pair_vec : nullspace(stacked)) {
      std::vector<Rat> c(pair_vec.begin(), pair_vec.begin() + k);
      if (proj.add(c)) combos.push_back(std::move(c));
    }
    if (static_cast<int>(combos.size()) == k) break;
    std::vector<Poly> next;
    for (const auto& c : combos) {
      Poly z = Poly::constant(n, Rat(0));
      for (int i = 0; i < k; ++i) {
        if (c[i] != 0) z += v[i] * c[i];
      }
      next.push_back(std::move(z));
    }
    v = std::move(next);
  }

  std::vector<NormalEigenSpace> out;
  if (v.empty()) return out;

  // Matrix of gamma on span(V) in the V coordinates.
  const int k = static_cast<int>(v.size());
  std::vector<Poly> gv;
  for (const Poly& z : v) gv.push_back(apply(p.gamma(), z));
  std::vector<Poly> all = v;
  all.insert(all.end(), gv.begin(), gv.end());
  const MonoIndex idx(all);
  RatMatrix vmat(idx.size(), k);
  for (int c = 0; c < k; ++c) {
    const auto col = idx.coords(v[c]);
    for (int r = 0; r < idx.size(); ++r) vmat.at(r, c) = col[r];
  }
  RatMatrix l(k, k);
  for (int c = 0; c < k; ++c) {
    const auto sol = solve(vmat, idx.coords(gv[c]));
    if (!sol) throw std::logic_error("gamma left the stabilized span");
    for (int r = 0; r < k; ++r) l.at(r, c) = (*sol)[r];
  }

  const auto [roots, split] = rational_roots(char_poly(l));
  (void)split;
  for (const auto& [lam, mult] : roots) {
    (void)mult;
    RatMatrix shifted = l;
    for (int i = 0; i < k; ++i) shifted.at(i, i) -= lam;
    NormalEigenSpace space;
    space.eigenvalue = lam;
    for (const auto& c : nullspace(shifted)) {
      Poly z = Poly::constant(n, Rat(0));
      for (int i = 0; i < k; ++i) {
        if (c[i] != 0) z += v[i] * c[i];
      }
      if (!apply(p.delta(), z).is_zero() ||
          apply(p.gamma(), z) != z * lam) {
        throw std::logic_error("eigenvector verification failed");
      }
      space.basis.push_back(std::move(z));
    }
    if (!space.basis.empty()) out.push_back(std::move(space));
  }
  return out;
}

void check_strongly_normal_behavior(const SolvablePair& p, const Poly& nrm,
                                    const Rat& alpha, int d) {
  if (!apply(p.delta(), nrm).is_zero() ||
      apply(p.gamma(), nrm) != nrm * alpha) {
    throw std::invalid_argument("not a strongly normal element");
  }
  const int n = p.nvars();
  for (const Monomial& m : monomial_basis_upto(n, d)) {
    const Poly g = Poly::monomial(n, m, Rat(1));
    if (star(p, g, nrm) != phi(p, alpha, g) * nrm) {
      throw std::runtime_error("normal commutation failed at " + g.str());
    }
    if (bracket(p, g, nrm) != apply(p.delta(), g) * nrm * alpha) {
      throw std::runtime_error("normal bracket rule failed at " + g.str());
    }
  }
}

std::vector<Poly> center(const SolvablePair& p, int d, bool poisson) {
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  const int n = p.nvars();
  std::vector<Poly> basis;
  for (const Monomial& m : monomial_basis_upto(n, d)) {
    basis.push_back(Poly::monomial(n, m, Rat(1)));
  }
  std::vector<std::vector<Poly>> images;
  for (int i = 0; i < n; ++i) {
    const Poly xi = Poly::variable(n, i);
    std::vector<Poly> block;
    block.reserve(basis.size());
    for (const Poly& z : basis) {
      block.push_back(poisson ? bracket(p, z, xi)
                              : star(p, z, xi) - star(p, xi, z));
    }
    images.push_back(std::move(block));
  }
  return joint_kernel(basis, images);
}

std::vector<Poly> kernel_intersection(const SolvablePair& p, int d) {
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  const int n = p.nvars();
  std::vector<Poly> basis;
  for (const Monomial& m : monomial_basis_upto(n, d)) {
    basis.push_back(Poly::monomial(n, m, Rat(1)));
  }
  std::vector<Poly> dimg, gimg;
  for (const Poly& z : basis) {
    dimg.push_back(apply(p.delta(), z));
    gimg.push_back(apply(p.gamma(), z));
  }
  return joint_kernel(basis, {dimg, gimg});
}

PDerSpace pder_basis(const SolvablePair& p) {
  require_linear(p, "poisson derivation basis");
  const int n = p.nvars();
  const auto pm = poisson_matrix(p);
  // Unknown matrix entries u[a][b] flattened to column a*n+b.
  std::vector<std::vector<Poly>> images;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<Poly> block;
      block.reserve(n * n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          Poly img = Poly::variable(n, a) * pm[i][j].partial(b);
          if (i == b) img -= pm[a][j];
          if (j == b) img -= pm[i][a];
          block.push_back(std::move(img));
        }
      }
      images.push_back(std::move(block));
    }
  }
  const int cols = n * n;
  int rows = 0;
  std::vector<MonoIndex> idx;
  for (const auto& block : images) {
    idx.emplace_back(block);
    rows += idx.back().size();
  }
  RatMatrix m(std::max(rows, 1), cols);
  int row0 = 0;
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (int k = 0; k < cols; ++k) {
      const auto v = idx[c].coords(images[c][k]);
      for (std::size_t r = 0; r < v.size(); ++r) {
        m.at(row0 + static_cast<int>(r), k) = v[r];
      }
    }
    row0 += idx[c].size();
  }
  PDerSpace space;
  for (const auto& combo : nullspace(m)) {
    RatMatrix u(n, n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) u.at(a, b) = combo[a * n + b];
    }
    space.basis.push_back(std::move(u));
  }
  return space;
}

std::vector<Relation> relations(const SolvablePair& p, const AdaptedBasis& b) {
  const int n = p.nvars();
  const int r = static_cast<int>(b.jordan_type.size());
  std::vector<int> start(r, 0);
  for (int k = 1; k < r; ++k) start[k] = start[k - 1] + b.jordan_type[k - 1];
  std::vector<Poly> gen;
  gen.reserve(n);
  for (int col = 0; col < n; ++col) {
    Poly y = Poly::constant(n, Rat(0));
    for (int i = 0; i < n; ++i) {
      if (b.M.at(i, col) != 0) {
        y += Poly::variable(n, i) * b.M.at(i, col);
      }
    }
    gen.push_back(std::move(y));
  }
  const auto block_of = [&](int g) {
    int k = 0;
    while (k + 1 < r && g >= start[k + 1]) ++k;
    return k;
  };

  std::vector<Relation> out;
  for (int g1 = 0; g1 < n; ++g1) {
    for (int g2 = g1 + 1; g2 < n; ++g2) {
      const int k1 = block_of(g1), k2 = block_of(g2);
      const int j1 = g1 - start[k1], j2 = g2 - start[k2];
      Relation rel;
      rel.i = g1;
      rel.j = g2;
      for (int l = 0; l <= j2; ++l) {
        const Rat coef = gbinom(-b.offsets[k1] - Rat(j1), l);
        if (coef != 0) rel.lhs.push_back({coef, start[k2] + j2 - l, g1});
      }
      for (int l = 0; l <= j1; ++l) {
        const Rat coef = gbinom(-b.offsets[k2] - Rat(j2), l);
        if (coef != 0) rel.rhs.push_back({coef, start[k1] + j1 - l, g2});
      }
      Poly lhs = Poly::constant(n, Rat(0));
      for (const StarWord& w : rel.lhs) {
        lhs += star(p, gen[w.left], gen[w.right]) * w.coef;
      }
      Poly rhs = Poly::constant(n, Rat(0));
      for (const StarWord& w : rel.rhs) {
        rhs += star(p, gen[w.left], gen[w.right]) * w.coef;
      }
      if (lhs != rhs) throw std::logic_error("relation verification failed");
      out.push_back(std::move(rel));
    }
  }
  return out;
}

namespace {

void append_words(std::string& s, const std::vector<StarWord>& words,
                  const std::vector<std::string>& names) {
  if (words.empty()) {
    s += "0";
    return;
  }
  bool first = true;
  for (const StarWord& w : words) {
    const bool neg = w.coef < 0;
    const Rat mag = neg ? Rat(-w.coef) : w.coef;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (mag != 1) s += rat_to_string(mag) + "*";
    s += names[w.left] + "*" + names[w.right];
  }
}

}  // namespace

std::string relation_str(const Relation& rel,
                         const std::vector<std::string>& names) {
  std::string s;
  append_words(s, rel.lhs, names);
  s += " = ";
  append_words(s, rel.rhs, names);
  return s;
}

int star_monomial_rank(const SolvablePair& p, int d) {
  require_linear(p, "star monomial rank");
  const int n = p.nvars();
  MonoIndex idx([&] {
    std::vector<Poly> frame;
    for (const Monomial& m : monomial_basis(n, d)) {
      frame.push_back(Poly::monomial(n, m, Rat(1)));
    }
    return frame;
  }());
  IncrementalSpan span(idx.size());
  int rank = 0;
  std::vector<int> word(d, 0);
  while (true) {
    Poly w = Poly::constant(n, Rat(1));
    for (const int i : word) w = star(p, w, Poly::variable(n, i));
    if (span.add(idx.coords(w))) ++rank;
    // next nondecreasing index word
    int pos = d - 1;
    while (pos >= 0 && word[pos] == n - 1) --pos;
    if (pos < 0) break;
    const int v = word[pos] + 1;
    for (int q = pos; q < d; ++q) word[q] = v;
  }
  return rank;
}

bool hilbert_check(const SolvablePair& p, int d) {
  const int n = p.nvars();
  return Rat(star_monomial_rank(p, d)) == gbinom(Rat(n - 1 + d), d);
}

}  // namespace solvpair
