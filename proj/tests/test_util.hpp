#pragma once

#include <random>
#include <vector>

#include "daha/algebra.hpp"

namespace daha::testing {

inline int draw(std::mt19937_64& g, int lo, int hi) {
  return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Random Laurent polynomial with small coefficients in y, x (exponents in
// [-xr, xr]), c and h.
inline LaurentPoly random_poly(std::mt19937_64& g, int n, int terms = 4, int ydeg = 2, int xr = 1,
                               bool ch = true) {
  LaurentPoly f(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    for (int i = 0; i < n; ++i) {
      m.set_y(i, draw(g, 0, ydeg));
      m.set_x(i, draw(g, -xr, xr));
    }
    if (ch) {
      m.set_c(draw(g, 0, 1));
      m.set_h(draw(g, 0, 1));
    }
    f.add_term(m, Rational(draw(g, -5, 5), draw(g, 1, 3)));
  }
  return f;
}

inline LaurentPoly random_y_poly(std::mt19937_64& g, int n, int terms = 3, int ydeg = 2) {
  LaurentPoly f(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    for (int i = 0; i < n; ++i) m.set_y(i, draw(g, 0, ydeg));
    f.add_term(m, Rational(draw(g, -4, 4), draw(g, 1, 2)));
  }
  return f;
}

inline LaurentPoly parse(const char* s, int n) { return parse_poly(s, VarContext{n}); }

}  // namespace daha::testing
