#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "solvpair/matrix.hpp"
#include "solvpair/poly.hpp"
#include "solvpair/rational.hpp"

namespace testutil {

inline solvpair::Poly P(int nvars, const std::string& text) {
  return solvpair::parse_poly(nvars, text);
}

inline solvpair::Rat Q(const std::string& text) {
  return solvpair::rat_from_string(text);
}

inline solvpair::RatMatrix mat(
    std::initializer_list<std::initializer_list<long>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
  solvpair::RatMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long v : row) m.at(i, j++) = solvpair::Rat(v);
    ++i;
  }
  return m;
}

inline solvpair::RatMatrix matq(
    std::initializer_list<std::initializer_list<const char*>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
  solvpair::RatMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const char* v : row) m.at(i, j++) = Q(v);
    ++i;
  }
  return m;
}

}  // namespace testutil
