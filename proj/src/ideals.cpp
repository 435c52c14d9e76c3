#include "daha/ideals.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "daha/coulomb.hpp"
#include "daha/rational_function.hpp"

namespace daha {

namespace {

LaurentPoly from_vec(int n, const SparseVec<Monomial>& v) {
  LaurentPoly p(n);
  for (const auto& [m, q] : v) p.add_term(m, q);
  return p;
}

// Coordinates adapted to one positive root. In type A the pair (i, j) feeds
// taylor_pair directly; otherwise the coroot direction becomes x_k and the root
// becomes y_k after a unimodular change of lattice.
struct Chart {
  bool type_a = false;
  int i = 0;
  int j = 0;
  int k = 0;
  LinearSubst subst;
  std::vector<int> points;  // values of x_k at which the ideal is supported
};

void egcd(int a, int b, int& g, int& u, int& v) {
  if (b == 0) {
    g = a;
    u = 1;
    v = 0;
    return;
  }
  int u1, v1;
  egcd(b, a % b, g, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
}

Chart make_chart(const RootData& rd, std::size_t root) {
  Chart ch;
  const int r = rd.rank;
  const auto& cor = rd.positive_coroots[root];
  const auto& al = rd.positive_roots[root];
  if (rd.type_a) {
    ch.type_a = true;
    for (int t = 0; t < r; ++t) {
      if (al[t] == 1) ch.i = t;
      if (al[t] == -1) ch.j = t;
    }
    ch.points = {1};
    return ch;
  }
  int m = 0;
  for (int v : cor) m = std::gcd(m, std::abs(v));
  if (m == 0 || m > 2)
    throw Error(ErrorCode::UnsupportedRootData, "coroot divisibility " + std::to_string(m));
  std::vector<int> prim(r);
  for (int t = 0; t < r; ++t) prim[t] = cor[t] / m;
  IntMatrix b(r, std::vector<int>(r, 0));
  for (int t = 0; t < r; ++t) b[t][t] = 1;
  int k = -1;
  for (int t = 0; t < r && k < 0; ++t)
    if (std::abs(prim[t]) == 1) k = t;
  if (k >= 0) {
    for (int t = 0; t < r; ++t) b[t][k] = prim[t];
  } else if (r == 2) {
    int g, u, v;
    egcd(prim[0], prim[1], g, u, v);
    if (g < 0) {
      u = -u;
      v = -v;
    }
    b = {{prim[0], -v}, {prim[1], u}};
    k = 0;
  } else {
    throw Error(ErrorCode::UnsupportedRootData, "no unimodular completion for coroot in rank > 2");
  }
  std::vector<int> alp(r, 0);  // root in the new coordinates
  for (int mm = 0; mm < r; ++mm)
    for (int l = 0; l < r; ++l) alp[mm] += al[l] * b[l][mm];
  ch.k = k;
  ch.subst = identity_subst(r);
  ch.subst.xmat = inverse_unimodular(b);
  LaurentPoly yk = LaurentPoly::y(r, k);
  for (int mm = 0; mm < r; ++mm)
    if (mm != k && alp[mm]) yk -= LaurentPoly::y(r, mm) * Rational(alp[mm]);
  yk = yk * Rational(1, alp[k]);
  for (int l = 0; l < r; ++l) {
    LaurentPoly img(r);
    for (int mm = 0; mm < r; ++mm) {
      if (b[l][mm] == 0) continue;
      img += (mm == k ? yk : LaurentPoly::y(r, mm)) * Rational(b[l][mm]);
    }
    ch.subst.y[l] = img;
  }
  ch.points = m == 1 ? std::vector<int>{1} : std::vector<int>{1, -1};
  return ch;
}

int chart_clearing(const LaurentPoly& f, const Chart& ch) {
  if (ch.type_a) return -f.min_x_exponent(ch.i);
  return -substitute(f, ch.subst).min_x_exponent(ch.k);
}

using OrderKey = std::tuple<int, int, int>;

std::map<OrderKey, LaurentPoly> chart_taylor(const LaurentPoly& f, const Chart& ch, int d,
                                             std::optional<int> clearing) {
  std::map<OrderKey, LaurentPoly> out;
  const int n = f.n();
  if (d <= 0) return out;
  if (ch.type_a) {
    LaurentPoly g = f;
    if (clearing) {
      if (*clearing < -f.min_x_exponent(ch.i))
        throw Error(ErrorCode::InvalidArgument, "clearing exponent too small");
      g = g * LaurentPoly::x(n, ch.i, *clearing);
    }
    TaylorResult t = taylor_pair(g, ch.i, ch.j, d);
    for (auto& [ab, p] : t.coeffs) out.emplace(OrderKey{0, ab.first, ab.second}, std::move(p));
    return out;
  }
  LaurentPoly g = substitute(f, ch.subst);
  const int need = -g.min_x_exponent(ch.k);
  const int M = clearing ? *clearing : need;
  if (M < need) throw Error(ErrorCode::InvalidArgument, "clearing exponent too small");
  for (std::size_t p = 0; p < ch.points.size(); ++p)
    for (int a = 0; a < d; ++a)
      for (int b = 0; a + b < d; ++b)
        out.emplace(OrderKey{static_cast<int>(p), a, b}, LaurentPoly(n));
  for (const auto& [m, q] : g.terms()) {
    const int e = m.x(ch.k) + M, yb = m.y(ch.k);
    if (yb >= d) continue;
    Monomial rest = m;
    rest.set_x(ch.k, 0);
    rest.set_y(ch.k, 0);
    for (std::size_t p = 0; p < ch.points.size(); ++p) {
      const int s = ch.points[p];
      // (s + u)^e
      for (int a = 0; a <= e && a + yb < d; ++a) {
        Rational coef = q * binom(e, a);
        if (s < 0 && (e - a) % 2) coef = -coef;
        out[OrderKey{static_cast<int>(p), a, yb}].add_term(rest, coef);
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> y_exponents(int n, int maxdeg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, maxdeg);
  return out;
}

std::vector<std::vector<int>> box(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, lo);
  if (hi < lo) return out;
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == hi) cur[i--] = lo;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

}  // namespace

// ---- determinant bases ----------------------------------------------------

void PlaneSubset::validate() const {
  if (points.empty() || n() > kMaxRank)
    throw Error(ErrorCode::InvalidArgument, "plane subset size out of range");
  std::set<std::pair<int, int>> seen;
  for (const auto& p : points) {
    if (p.first < 0) throw Error(ErrorCode::InvalidArgument, "negative y-exponent in plane subset");
    if (!seen.insert(p).second) throw Error(ErrorCode::InvalidArgument, "repeated point in plane subset");
  }
}

PlaneSubset PlaneSubset::canonical() const {
  PlaneSubset s = *this;
  std::sort(s.points.begin(), s.points.end());
  return s;
}

LaurentPoly delta_S_direct(const PlaneSubset& s) {
  s.validate();
  const int n = s.n();
  LaurentPoly out(n);
  for (const Perm& p : all_perms(n)) {
    Monomial m(n);
    for (int i = 0; i < n; ++i) {
      m.set_y(i, s.points[p[i]].first);
      m.set_x(i, s.points[p[i]].second);
    }
    out.add_term(m, Rational(perm_sign(p)));
  }
  return out * (1 / factorial(n));
}

LaurentPoly schur_polynomial(const std::vector<int>& mu, const std::vector<int>& vars, int n) {
  const int m = static_cast<int>(vars.size());
  std::vector<int> part = mu;
  while (!part.empty() && part.back() == 0) part.pop_back();
  if (static_cast<int>(part.size()) > m) return LaurentPoly(n);
  part.resize(m, 0);
  for (int t = 1; t < m; ++t)
    if (part[t] > part[t - 1]) throw Error(ErrorCode::InvalidArgument, "not a partition");
  LaurentPoly num(n);
  for (const Perm& p : all_perms(m)) {
    Monomial mono(n);
    for (int r = 0; r < m; ++r) mono.set_y(vars[r], part[p[r]] + m - 1 - p[r]);
    num.add_term(mono, Rational(perm_sign(p)));
  }
  for (int r = 0; r < m; ++r)
    for (int s = r + 1; s < m; ++s) {
      auto [form, sign] = LinearForm::make(vars[r], vars[s], 0, 0);
      auto q = exact_divide(num, form);
      if (!q) throw Error(ErrorCode::NotDivisible, "bialternant is not divisible");
      num = sign < 0 ? -*q : *q;
    }
  return num;
}

SchurForm delta_S_schur(const PlaneSubset& s) {
  s.validate();
  const int n = s.n();
  Perm order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& p = s.points[a];
    const auto& q = s.points[b];
    return std::make_pair(p.second, p.first) < std::make_pair(q.second, q.first);
  });
  SchurForm out;
  out.scalar = perm_sign(order);
  out.lambda.resize(n);
  for (int i = 0; i < n; ++i) out.lambda[i] = s.points[order[i]].second;
  LaurentPoly body(n, 1);
  Monomial xm(n);
  for (int i = 0; i < n; ++i) xm.set_x(i, out.lambda[i]);
  body = body * LaurentPoly::monomial(xm);
  for (int start = 0; start < n;) {
    int end = start;
    while (end < n && out.lambda[end] == out.lambda[start]) ++end;
    const int m = end - start;
    std::vector<int> vars, mu(m);
    for (int t = start; t < end; ++t) vars.push_back(t);
    for (int t = 0; t < m; ++t) mu[t] = s.points[order[end - 1 - t]].first - (m - 1 - t);
    out.mu.push_back(mu);
    body = body * schur_polynomial(mu, vars, n);
    for (int r = start; r < end; ++r)
      for (int q = r + 1; q < end; ++q) body = body * (LaurentPoly::y(n, r) - LaurentPoly::y(n, q));
    out.scalar *= factorial(m);
    if ((m * (m - 1) / 2) % 2) out.scalar = -out.scalar;
    start = end;
  }
  out.value = project_isotypic(body, 1);
  return out;
}

// ---- ideal membership -----------------------------------------------------

std::string MembershipResult::describe() const {
  if (member) return "member";
  std::ostringstream os;
  os << "root " << root << " order (" << order.first << "," << order.second
     << "): " << to_string(witness);
  return os.str();
}

std::map<std::pair<int, int>, LaurentPoly> root_taylor(const LaurentPoly& f, const RootData& rd,
                                                       std::size_t root, int d,
                                                       std::optional<int> clearing) {
  Chart ch = make_chart(rd, root);
  std::map<std::pair<int, int>, LaurentPoly> out;
  for (auto& [key, p] : chart_taylor(f, ch, d, clearing)) {
    auto [pt, a, b] = key;
    // Points beyond the first are reported with the u-order offset by d.
    out.emplace(std::make_pair(a + pt * d, b), std::move(p));
  }
  return out;
}

int root_clearing_exponent(const LaurentPoly& f, const RootData& rd, std::size_t root) {
  return chart_clearing(f, make_chart(rd, root));
}

MembershipResult membership(const LaurentPoly& f, const IdealSpec& spec) {
  if (spec.d < 0) throw Error(ErrorCode::InvalidArgument, "negative symbolic power");
  if (f.n() != spec.roots.rank) throw Error(ErrorCode::ContextMismatch, "rank mismatch");
  MembershipResult res;
  if (spec.d == 0) return res;
  for (std::size_t r = 0; r < spec.roots.positive_roots.size(); ++r) {
    for (auto& [ab, p] : root_taylor(f, spec.roots, r, spec.d)) {
      if (p.is_zero()) continue;
      res.member = false;
      res.root = r;
      res.order = ab;
      res.witness = p;
      return res;
    }
  }
  return res;
}

// ---- graded slices --------------------------------------------------------

std::size_t window_size(int n, const Window& w) {
  if (w.xhi < w.xlo || w.ydeg < 0) return 0;
  double xs = 1, ys = 1;
  for (int i = 0; i < n; ++i) xs *= (w.xhi - w.xlo + 1);
  for (int i = 1; i <= n; ++i) ys = ys * (w.ydeg + i) / i;
  double total = xs * ys;
  return total > 1e12 ? static_cast<std::size_t>(1e12) : static_cast<std::size_t>(total + 0.5);
}

std::vector<Monomial> window_monomials(int n, const Window& w) {
  std::vector<Monomial> out;
  for (const auto& xe : box(n, w.xlo, w.xhi))
    for (const auto& ye : y_exponents(n, w.ydeg)) {
      Monomial m(n);
      for (int i = 0; i < n; ++i) {
        m.set_x(i, xe[i]);
        m.set_y(i, ye[i]);
      }
      out.push_back(m);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_window(const Monomial& m, const Window& w) {
  if (m.c() || m.h()) return false;
  for (int i = 0; i < m.n(); ++i)
    if (m.x(i) < w.xlo || m.x(i) > w.xhi || m.y(i) < 0) return false;
  return m.y_degree() <= w.ydeg;
}

std::string GradedSlice::to_json() const {
  std::set<Monomial> cols;
  for (const Monomial& m : window_monomials(n, window)) cols.insert(m);
  for (const auto& b : basis)
    for (const auto& [m, q] : b.terms()) cols.insert(m);
  nlohmann::ordered_json j;
  j["n"] = n;
  j["window"] = {{"xlo", window.xlo}, {"xhi", window.xhi}, {"ydeg", window.ydeg}};
  j["isotypic"] = isotypic ? nlohmann::ordered_json(*isotypic) : nlohmann::ordered_json(nullptr);
  j["d"] = d;
  j["dimension"] = dimension();
  auto& jc = j["columns"] = nlohmann::ordered_json::array();
  for (const Monomial& m : cols) jc.push_back(to_string(LaurentPoly::monomial(m)));
  auto& jr = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& b : basis) {
    auto row = nlohmann::ordered_json::array();
    for (const Monomial& m : cols) row.push_back(to_string(b.coeff(m)));
    jr.push_back(row);
  }
  return j.dump(2);
}

GradedSlice graded_dimension(const IdealSpec& spec, std::optional<int> isotypic, const Window& w,
                             std::size_t cap) {
  const RootData& rd = spec.roots;
  const int n = rd.rank;
  if (spec.d < 0) throw Error(ErrorCode::InvalidArgument, "negative symbolic power");
  if (window_size(n, w) > cap)
    throw Error(ErrorCode::WindowTooLarge, "window has " + std::to_string(window_size(n, w)) +
                                               " monomials, cap is " + std::to_string(cap));
  Echelon<Monomial> proj;
  for (const Monomial& m : window_monomials(n, w)) {
    LaurentPoly p = LaurentPoly::monomial(m);
    if (isotypic) p = project_isotypic(rd, p, *isotypic);
    proj.insert(p.terms());
  }
  std::vector<LaurentPoly> v;
  for (const auto& [p, row] : proj.rows()) v.push_back(from_vec(n, row));

  GradedSlice out;
  out.n = n;
  out.window = w;
  out.isotypic = isotypic;
  out.d = spec.d;
  Echelon<Monomial> result;
  if (spec.d == 0) {
    for (const auto& p : v) result.insert(p.terms());
  } else {
    std::vector<Chart> charts;
    std::vector<int> clear;
    for (std::size_t r = 0; r < rd.positive_roots.size(); ++r) {
      charts.push_back(make_chart(rd, r));
      int M = 0;
      for (const auto& p : v) M = std::max(M, chart_clearing(p, charts.back()));
      clear.push_back(M);
    }
    std::vector<SparseVec<TaylorKey>> images;
    for (const auto& p : v) {
      SparseVec<TaylorKey> img;
      for (std::size_t r = 0; r < charts.size(); ++r)
        for (const auto& [key, c] : chart_taylor(p, charts[r], spec.d, clear[r])) {
          auto [pt, a, b] = key;
          for (const auto& [m, q] : c.terms())
            img.emplace(TaylorKey{r, pt * spec.d + a, b, m}, q);
        }
      images.push_back(std::move(img));
    }
    for (const auto& comb : kernel_combinations(images)) {
      LaurentPoly e(n);
      for (std::size_t k = 0; k < comb.size(); ++k)
        if (comb[k] != 0) e += v[k] * comb[k];
      result.insert(e.terms());
    }
  }
  for (const auto& row : result.rref()) out.basis.push_back(from_vec(n, row));
  return out;
}

std::size_t window_intersection_dimension(const std::vector<LaurentPoly>& gens, const Window& w) {
  Echelon<Monomial> all, outside;
  for (const auto& g : gens) {
    all.insert(g.terms());
    SparseVec<Monomial> o;
    for (const auto& [m, q] : g.terms())
      if (!in_window(m, w)) o.emplace(m, q);
    outside.insert(o);
  }
  return all.rank() - outside.rank();
}

std::size_t antisymmetric_power_dimension(const RootData& rd, int d, const Window& target,
                                          const Window& generators) {
  const int n = rd.rank;
  Echelon<Monomial> anti;
  for (const Monomial& m : window_monomials(n, generators))
    anti.insert(project_isotypic(rd, LaurentPoly::monomial(m), d == 0 ? 0 : 1).terms());
  std::vector<LaurentPoly> a;
  for (const auto& [p, row] : anti.rows()) a.push_back(from_vec(n, row));
  std::vector<LaurentPoly> products;
  if (d == 0) {
    products = a;
  } else {
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      LaurentPoly p(n, 1);
      for (std::size_t t : idx) p = p * a[t];
      products.push_back(p);
      int pos = d - 1;
      while (pos >= 0 && idx[pos] + 1 == a.size()) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int t = pos + 1; t < d; ++t) idx[t] = idx[pos];
    }
  }
  return window_intersection_dimension(products, target);
}

Report verify_spanning(int n, int d, const Window& w) {
  if (n < 1 || n > kMaxRank) throw Error(ErrorCode::InvalidRank, "rank out of range");
  RootData rd = RootData::type_A(n);
  Report rep;
  rep.suite = "spanning";
  const std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": ";
  GradedSlice slice = graded_dimension({rd, d}, d, w);
  Echelon<Monomial> slice_space, span;
  for (const auto& b : slice.basis) slice_space.insert(b.terms());

  std::size_t count = 0, failures = 0;
  std::string first;
  for (const auto& lam : box(n, w.xlo, w.xhi)) {
    int extra = 0;
    for (std::size_t k = 0; k < rd.positive_roots.size(); ++k)
      extra += std::max(0, d - std::abs(rd.pairing(k, lam)));
    if (extra > w.ydeg) continue;
    for (const auto& ye : y_exponents(n, w.ydeg - extra)) {
      Monomial m(n);
      for (int i = 0; i < n; ++i) m.set_y(i, ye[i]);
      LaurentPoly cls = class_commutative(lam, LaurentPoly::monomial(m), d, rd);
      ++count;
      MembershipResult mr = membership(cls, {rd, d});
      if (!mr.member) {
        if (failures++ == 0) first = to_string(cls);
      }
      span.insert(cls.terms());
    }
  }
  rep.add(tag + "reduced classes lie in the isotypic symbolic power (" + std::to_string(count) +
              " classes, " + std::to_string(failures) + " outside)",
          failures == 0, first);
  bool inside = true;
  std::string outside_witness;
  for (const auto& [p, row] : span.rows())
    if (!slice_space.contains(row)) {
      inside = false;
      outside_witness = to_string(from_vec(n, row));
      break;
    }
  rep.add(tag + "span contained in the slice", inside, outside_witness);
  const bool equal = inside && span.rank() == slice.dimension();
  rep.add(tag + "span dimension " + std::to_string(span.rank()) + " equals slice dimension " +
              std::to_string(slice.dimension()),
          equal, equal ? "" : std::to_string(static_cast<long>(slice.dimension()) - static_cast<long>(span.rank())));
  return rep;
}

Report verify_containment(int n, int d, int lam_max, int fdeg) {
  if (n < 1 || n > kMaxRank) throw Error(ErrorCode::InvalidRank, "rank out of range");
  RootData rd = RootData::type_A(n);
  Report rep;
  rep.suite = "containment";
  std::size_t count = 0, failures = 0;
  std::string first;
  for (const auto& lam : box(n, -lam_max, lam_max)) {
    for (const auto& ye : y_exponents(n, fdeg)) {
      Monomial m(n);
      for (int i = 0; i < n; ++i) m.set_y(i, ye[i]);
      LaurentPoly cls = class_commutative(lam, LaurentPoly::monomial(m), d, rd);
      ++count;
      MembershipResult mr = membership(cls, {rd, d});
      if (!mr.member && failures++ == 0) {
        std::string l;
        for (int i = 0; i < n; ++i) l += (i ? "," : "") + std::to_string(lam[i]);
        first = "lambda=(" + l + ") f=" + to_string(LaurentPoly::monomial(m)) + " " + mr.describe();
      }
    }
  }
  rep.add("n=" + std::to_string(n) + " d=" + std::to_string(d) + ": " + std::to_string(count) +
              " reduced classes, " + std::to_string(failures) + " outside the symbolic power",
          failures == 0, first);
  return rep;
}

}  // namespace daha
