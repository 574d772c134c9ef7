#include "solvpair/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace solvpair {

namespace {

void check_same_shape(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
}

}  // namespace

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  check_same_shape(*this, o);
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  check_same_shape(*this, o);
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) != 0) r.at(i, j) += v * o.at(k, j);
      }
    }
  }
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& c) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw std::invalid_argument("vector size mismatch");
  }
  std::vector<Rat> r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    }
  }
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

RatMatrix RatMatrix::pow(int e) const {
  if (rows_ != cols_) throw std::invalid_argument("matrix must be square");
  if (e < 0) throw std::invalid_argument("negative matrix power");
  RatMatrix r = identity(rows_);
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

Rat RatMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("matrix must be square");
  Rat t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Rat& x) { return x == 0; });
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Rat det(RatMatrix m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  const int n = m.rows();
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (m.at(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    const Rat inv = Rat(1) / m.at(col, col);
    for (int row = col + 1; row < n; ++row) {
      if (m.at(row, col) == 0) continue;
      const Rat factor = m.at(row, col) * inv;
      for (int j = col; j < n; ++j) m.at(row, j) -= factor * m.at(col, j);
    }
  }
  return d;
}

RatMatrix rref(RatMatrix m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int pivot = -1;
    for (int row = lead; row < m.rows(); ++row) {
      if (m.at(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead) {
      for (int j = 0; j < m.cols(); ++j) {
        std::swap(m.at(pivot, j), m.at(lead, j));
      }
    }
    const Rat inv = Rat(1) / m.at(lead, col);
    for (int j = col; j < m.cols(); ++j) m.at(lead, j) *= inv;
    for (int row = 0; row < m.rows(); ++row) {
      if (row == lead || m.at(row, col) == 0) continue;
      const Rat factor = m.at(row, col);
      for (int j = col; j < m.cols(); ++j) {
        m.at(row, j) -= factor * m.at(lead, j);
      }
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++lead;
  }
  return m;
}

int rank(RatMatrix m) {
  std::vector<int> pivots;
  rref(std::move(m), &pivots);
  return static_cast<int>(pivots.size());
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("inverse of a non-square matrix");
  }
  const int n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots;
  aug = rref(std::move(aug), &pivots);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) {
    throw std::domain_error("matrix is singular");
  }
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  }
  return inv;
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
  std::vector<int> pivots;
  const RatMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[pivots[k]] = -r.at(static_cast<int>(k), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& a,
                                      const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != a.rows()) {
    throw std::invalid_argument("vector size mismatch");
  }
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots;
  aug = rref(std::move(aug), &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rat> x(a.cols(), Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    x[pivots[k]] = aug.at(static_cast<int>(k), a.cols());
  }
  return x;
}

std::vector<Rat> char_poly(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix must be square");
  }
  const int n = m.rows();
  // Faddeev-LeVerrier: N_{k+1} = m (N_k + c_k I), c_{k+1} = -tr(N_{k+1})/(k+1).
  std::vector<Rat> coeffs(n + 1, Rat(0));
  coeffs[n] = 1;
  RatMatrix nk = RatMatrix(n, n);
  Rat ck(1);
  for (int k = 1; k <= n; ++k) {
    RatMatrix shifted = nk;
    for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
    nk = m * shifted;
    ck = -nk.trace() / Rat(k);
    coeffs[n - k] = ck;
  }
  return coeffs;
}

namespace {

std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> divs;
  for (Int d(1); d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& x) {
  Rat v(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

// Exact division by (x - r); the remainder must vanish.
std::vector<Rat> deflate(const std::vector<Rat>& coeffs, const Rat& r) {
  std::vector<Rat> q(coeffs.size() - 1, Rat(0));
  Rat carry(0);
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 1; --i) {
    carry = coeffs[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

std::pair<std::vector<std::pair<Rat, int>>, bool> rational_roots(
    std::vector<Rat> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() <= 1) {
    throw std::invalid_argument("root finding needs positive degree");
  }
  const int degree = static_cast<int>(coeffs.size()) - 1;
  std::vector<std::pair<Rat, int>> roots;
  int zero_mult = 0;
  while (coeffs.front() == 0) {
    ++zero_mult;
    coeffs.erase(coeffs.begin());
  }
  if (zero_mult > 0) roots.emplace_back(Rat(0), zero_mult);
  if (coeffs.size() > 1) {
    Int scale(1);
    for (const Rat& c : coeffs) {
      const Int den = c.get_den();
      scale = scale / gcd(scale, den) * den;
    }
    std::vector<Int> ic;
    ic.reserve(coeffs.size());
    for (const Rat& c : coeffs) {
      const Rat scaled = c * Rat(scale);
      ic.push_back(scaled.get_num());
    }
    const auto ps = positive_divisors(ic.front());
    const auto qs = positive_divisors(ic.back());
    std::vector<Rat> candidates;
    for (const Int& p : ps) {
      for (const Int& q : qs) {
        Rat cand(p, q);
        cand.canonicalize();
        candidates.push_back(cand);
        candidates.push_back(-cand);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (const Rat& cand : candidates) {
      int mult = 0;
      while (coeffs.size() > 1 && eval_poly(coeffs, cand) == 0) {
        coeffs = deflate(coeffs, cand);
        ++mult;
      }
      if (mult > 0) roots.emplace_back(cand, mult);
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  int total = 0;
  for (const auto& [r, mult] : roots) {
    (void)r;
    total += mult;
  }
  return {roots, total == degree};
}

void IncrementalSpan::reduce(std::vector<Rat>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rat& c = v[pivots_[k]];
    if (c == 0) continue;
    const Rat factor = c;
    for (int j = 0; j < dim_; ++j) v[j] -= factor * rows_[k][j];
  }
}

bool IncrementalSpan::contains(std::vector<Rat> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool IncrementalSpan::add(std::vector<Rat> v) {
  if (static_cast<int>(v.size()) != dim_) {
    throw std::invalid_argument("vector size mismatch");
  }
  reduce(v);
  int pivot = -1;
  for (int j = 0; j < dim_; ++j) {
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  const Rat inv = Rat(1) / v[pivot];
  for (int j = 0; j < dim_; ++j) v[j] *= inv;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rat c = rows_[k][pivot];
    if (c == 0) continue;
    for (int j = 0; j < dim_; ++j) rows_[k][j] -= c * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace solvpair
