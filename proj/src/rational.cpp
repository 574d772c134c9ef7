#include "solvpair/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace solvpair {

namespace {

bool valid_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!valid_integer(num)) {
    throw std::invalid_argument("invalid rational \"" + text + "\"");
  }
  Int p(num);
  Int q(1);
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (!valid_integer(den)) {
      throw std::invalid_argument("invalid rational \"" + text + "\"");
    }
    q = Int(den);
    if (q == 0) {
      throw std::invalid_argument("zero denominator in \"" + text + "\"");
    }
  }
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  Rat b = base;
  unsigned long k;
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero base with negative exponent");
    b = Rat(1) / base;
    k = static_cast<unsigned long>(-(exp + 1)) + 1;
  } else {
    k = static_cast<unsigned long>(exp);
  }
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(b.get_mpq_t()), k);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(b.get_mpq_t()), k);
  return r;
}

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r{Int(num), Int(den)};
  r.canonicalize();
  return r;
}

}  // namespace solvpair
