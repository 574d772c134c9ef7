#include "solvpair/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "solvpair/matrix.hpp"

namespace solvpair {

int total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly f(nvars);
  if (c != 0) f.terms_.emplace(Monomial(nvars, 0), c);
  return f;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) {
    throw std::invalid_argument("variable index " + std::to_string(index) +
                                " out of range");
  }
  Monomial m(nvars, 0);
  m[index] = 1;
  return monomial(nvars, m, Rat(1));
}

Poly Poly::monomial(int nvars, const Monomial& m, const Rat& c) {
  if (static_cast<int>(m.size()) != nvars) {
    throw std::invalid_argument("monomial size does not match nvars");
  }
  Poly f(nvars);
  if (c != 0) f.terms_.emplace(m, c);
  return f;
}

std::optional<int> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return total_degree(terms_.rbegin()->first);
}

Rat Poly::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::set_coeff(const Monomial& m, const Rat& c) {
  if (static_cast<int>(m.size()) != nvars_) {
    throw std::invalid_argument("monomial size does not match nvars");
  }
  if (c == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

void Poly::check_compat(const Poly& o) const {
  if (nvars_ != o.nvars_) {
    throw std::invalid_argument("nvars mismatch between operands");
  }
}

Poly& Poly::operator+=(const Poly& o) {
  check_compat(o);
  for (const auto& [m, c] : o.terms_) {
    const auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compat(o);
  for (const auto& [m, c] : o.terms_) {
    const auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_compat(o);
  Poly r(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      const Monomial m = mono_mul(ma, mb);
      const Rat c = ca * cb;
      const auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(m, c);
      } else {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

Poly operator*(const Rat& c, const Poly& f) { return f * c; }

bool Poly::operator==(const Poly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly r = constant(nvars_, Rat(1));
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

Poly Poly::graded_component(int d) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (total_degree(m) == d) r.terms_.emplace(m, c);
  }
  return r;
}

Poly Poly::partial(int var) const {
  if (var < 0 || var >= nvars_) {
    throw std::invalid_argument("variable index out of range");
  }
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial mm(m);
    --mm[var];
    r.terms_.emplace(mm, c * Rat(m[var]));
  }
  return r;
}

bool Poly::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_) {
    (void)c;
    if (total_degree(m) != d) return false;
  }
  return true;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    throw std::invalid_argument("point size does not match nvars");
  }
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] != 0) v *= rat_pow(point[i], m[i]);
    }
    total += v;
  }
  return total;
}

std::string Poly::str() const { return str({}); }

std::string Poly::str(const std::vector<std::string>& names) const {
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
      factors += i < static_cast<int>(names.size()) ? names[i]
                                                    : "X" + std::to_string(i);
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

class Parser {
 public:
  Parser(int nvars, const std::string& text) : nvars_(nvars), text_(text) {}

  Poly run() {
    Poly result(nvars_);
    skip_ws();
    if (eof()) fail("empty input");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    result += term(negative);
    skip_ws();
    while (!eof()) {
      const char op = get();
      if (op != '+' && op != '-') {
        fail(std::string("expected '+' or '-', found '") + op + "'", pos_ - 1);
      }
      skip_ws();
      result += term(op == '-');
      skip_ws();
    }
    return result;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw std::invalid_argument("syntax error at position " +
                                std::to_string(at) + ": " + what);
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  Poly term(bool negative) {
    if (eof()) fail("expected term");
    Rat coefficient(1);
    bool have_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::string num = integer();
      std::string den;
      skip_ws();
      if (!eof() && peek() == '/') {
        get();
        skip_ws();
        den = integer();
        if (Int(den) == 0) fail("zero denominator", pos_ - den.size());
        skip_ws();
      }
      coefficient = rat_from_string(den.empty() ? num : num + "/" + den);
      have_coefficient = true;
    }
    Monomial mono(nvars_, 0);
    bool have_factor = false;
    bool expect_factor = false;
    if (have_coefficient) {
      skip_ws();
      if (!eof() && peek() == '*') {
        get();
        skip_ws();
        expect_factor = true;
      }
    } else {
      expect_factor = true;
    }
    while (expect_factor) {
      factor(mono);
      have_factor = true;
      skip_ws();
      expect_factor = false;
      if (!eof() && peek() == '*') {
        get();
        skip_ws();
        expect_factor = true;
      }
    }
    if (!have_coefficient && !have_factor) fail("expected term");
    if (negative) coefficient = -coefficient;
    return Poly::monomial(nvars_, mono, coefficient);
  }

  void factor(Monomial& mono) {
    if (eof() || peek() != 'X') fail("expected variable");
    const std::size_t at = pos_;
    get();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected variable index");
    }
    const long index = std::stol(integer());
    if (index >= nvars_) {
      throw std::invalid_argument("variable index " + std::to_string(index) +
                                  " >= nvars (" + std::to_string(nvars_) +
                                  ") at position " + std::to_string(at));
    }
    long exp = 1;
    skip_ws();
    if (!eof() && peek() == '^') {
      get();
      skip_ws();
      exp = std::stol(integer());
    }
    mono[index] += static_cast<int>(exp);
  }

  int nvars_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

void fill_basis(int nvars, int var, int remaining, Monomial& m,
                std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    m[var] = remaining;
    out.push_back(m);
    m[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    m[var] = e;
    fill_basis(nvars, var + 1, remaining - e, m, out);
  }
  m[var] = 0;
}

}  // namespace

Poly parse_poly(int nvars, const std::string& text) {
  if (nvars <= 0) throw std::invalid_argument("nvars must be positive");
  return Parser(nvars, text).run();
}

std::vector<Monomial> monomial_basis(int nvars, int d) {
  if (nvars <= 0 || d < 0) return {};
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  fill_basis(nvars, 0, d, m, out);
  return out;
}

std::vector<Monomial> monomial_basis_upto(int nvars, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    const auto layer = monomial_basis(nvars, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Poly change_vars(const Poly& f, const RatMatrix& m) {
  const int n = f.nvars();
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument("change of variables matrix must be " +
                                std::to_string(n) + "x" + std::to_string(n));
  }
  std::vector<Poly> images;
  images.reserve(n);
  for (int j = 0; j < n; ++j) {
    Poly img(n);
    for (int i = 0; i < n; ++i) {
      if (m.at(i, j) != 0) img += Poly::variable(n, i) * m.at(i, j);
    }
    images.push_back(img);
  }
  Poly out(n);
  for (const auto& [mono, c] : f.terms()) {
    Poly t = Poly::constant(n, c);
    for (int j = 0; j < n; ++j) {
      for (int e = 0; e < mono[j]; ++e) t = t * images[j];
    }
    out += t;
  }
  return out;
}

}  // namespace solvpair
