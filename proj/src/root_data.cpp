#include "daha/root_data.hpp"

#include <set>

namespace daha {

namespace {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const int n = static_cast<int>(a.size());
  IntMatrix r(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

int det_sign(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      Rational f = m[r][col] / m[col][col];
      for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det > 0 ? 1 : -1;
}

}  // namespace

// Inverse of an integer matrix with determinant +-1 (adjugate over the rationals).
IntMatrix inverse_unimodular(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    Rational inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  IntMatrix r(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m[i][n + j].get_den() != 1) throw Error(ErrorCode::UnsupportedRootData, "non-integral Weyl element");
      r[i][j] = static_cast<int>(m[i][n + j].get_num().get_si());
    }
  return r;
}

RootData RootData::from_simple(const std::string& name, int rank,
                               const std::vector<std::vector<int>>& pos_roots,
                               const std::vector<std::vector<int>>& pos_coroots,
                               const std::vector<int>& simple_indices) {
  RootData rd;
  rd.name = name;
  rd.rank = rank;
  rd.positive_roots = pos_roots;
  rd.positive_coroots = pos_coroots;
  std::vector<IntMatrix> gens;
  for (int idx : simple_indices) {
    // s(v) = v - <alpha, v> alpha^vee on cocharacters
    IntMatrix s = identity_matrix(rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s[i][j] -= pos_coroots[idx][i] * pos_roots[idx][j];
    gens.push_back(s);
  }
  std::set<IntMatrix> seen{identity_matrix(rank)};
  std::vector<IntMatrix> order{identity_matrix(rank)};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& g : gens) {
      IntMatrix m = matmul(g, order[k]);
      if (seen.insert(m).second) order.push_back(m);
      if (order.size() > 10000) throw Error(ErrorCode::UnsupportedRootData, "Weyl group too large");
    }
  }
  rd.weyl = order;
  for (const auto& m : order) rd.weyl_sign.push_back(det_sign(m));
  return rd;
}

RootData RootData::type_A(int n) {
  std::vector<std::vector<int>> roots;
  std::vector<int> simple;
  for (int r = 0; r < n; ++r) {
    for (int s = r + 1; s < n; ++s) {
      std::vector<int> a(n, 0);
      a[r] = 1;
      a[s] = -1;
      if (s == r + 1) simple.push_back(static_cast<int>(roots.size()));
      roots.push_back(a);
    }
  }
  RootData rd = from_simple("A" + std::to_string(n - 1) + " (GL" + std::to_string(n) + ")", n,
                            roots, roots, simple);
  rd.type_a = true;
  return rd;
}

RootData RootData::sl2() { return from_simple("SL2", 1, {{2}}, {{1}}, {0}); }

RootData RootData::pgl2() { return from_simple("PGL2", 1, {{1}}, {{2}}, {0}); }

RootData RootData::c2() {
  // Sp4 coordinates: roots e1-e2, 2e2, e1+e2, 2e1.
  return from_simple("C2 (Sp4)", 2, {{1, -1}, {0, 2}, {1, 1}, {2, 0}},
                     {{1, -1}, {0, 1}, {1, 1}, {1, 0}}, {0, 1});
}

RootData RootData::g2() {
  // Coordinates in the basis of simple coroots; a1 short, a2 long.
  // Roots as functionals on the coroot lattice via the Cartan matrix.
  std::vector<std::vector<int>> roots = {{2, -1}, {-3, 2}, {-1, 1}, {1, 0}, {3, -1}, {0, 1}};
  std::vector<std::vector<int>> coroots = {{1, 0}, {0, 1}, {1, 3}, {2, 3}, {1, 1}, {1, 2}};
  return from_simple("G2", 2, roots, coroots, {0, 1});
}

LaurentPoly RootData::root_poly(std::size_t k) const {
  LaurentPoly p(rank);
  for (int i = 0; i < rank; ++i)
    if (positive_roots[k][i]) p += LaurentPoly::y(rank, i) * Rational(positive_roots[k][i]);
  return p;
}

LaurentPoly RootData::delta() const {
  LaurentPoly p(rank, 1);
  for (std::size_t k = 0; k < positive_roots.size(); ++k) p = p * root_poly(k);
  return p;
}

int RootData::pairing(std::size_t root, const std::vector<int>& lambda) const {
  int v = 0;
  for (int i = 0; i < rank; ++i) v += positive_roots[root][i] * lambda[i];
  return v;
}

LaurentPoly weyl_act(const IntMatrix& a, const LaurentPoly& f) {
  const int n = f.n();
  bool perm = true;
  for (int i = 0; i < n && perm; ++i) {
    int ones = 0;
    for (int j = 0; j < n; ++j) {
      if (a[i][j] == 1) ++ones;
      else if (a[i][j] != 0) perm = false;
    }
    perm = perm && ones == 1;
  }
  if (perm) {
    Perm w(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a[i][j] == 1) w[j] = i;
    return permute(w, f);
  }
  IntMatrix inv = inverse_unimodular(a);
  LinearSubst s = identity_subst(n);
  for (int k = 0; k < n; ++k) {
    LaurentPoly yk(n);
    for (int l = 0; l < n; ++l)
      if (inv[k][l]) yk += LaurentPoly::y(n, l) * Rational(inv[k][l]);
    s.y[k] = yk;
  }
  s.xmat = a;
  return substitute(f, s);
}

LaurentPoly project_isotypic(const RootData& rd, const LaurentPoly& f, int d) {
  LaurentPoly r(f.n());
  for (std::size_t k = 0; k < rd.weyl.size(); ++k) {
    LaurentPoly t = weyl_act(rd.weyl[k], f);
    if (d % 2 != 0 && rd.weyl_sign[k] < 0) t = -t;
    r += t;
  }
  return r * Rational(1, static_cast<unsigned long>(rd.weyl.size()));
}

}  // namespace daha
