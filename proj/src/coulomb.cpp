#include "daha/coulomb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace daha {

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<int> add_vec(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

LaurentPoly AbelianMatter::xi(std::size_t l) const {
  LaurentPoly p(rank);
  for (int k = 0; k < rank; ++k)
    if (characters[l][k]) p += LaurentPoly::y(rank, k) * Rational(characters[l][k]);
  return p;
}

int AbelianMatter::xi_of(std::size_t l, const std::vector<int>& lambda) const {
  int v = 0;
  for (int k = 0; k < rank; ++k) v += characters[l][k] * lambda[k];
  return v;
}

AbelianZElt AbelianZElt::basis(int i, int j, const std::vector<int>& lambda, int rank) {
  AbelianZElt a;
  a.i = i;
  a.j = j;
  a.add_term(lambda, LaurentPoly(rank, 1));
  return a;
}

void AbelianZElt::add_term(const std::vector<int>& lambda, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, ins] = terms.try_emplace(lambda, coeff);
  if (!ins) {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LaurentPoly abelian_structure_constant(const AbelianMatter& m, int i, int j, int k,
                                       const std::vector<int>& lambda, const std::vector<int>& mu) {
  const int r = m.rank;
  LaurentPoly out(r, 1);
  for (std::size_t l = 0; l < m.characters.size(); ++l) {
    const int L = m.xi_of(l, lambda), M = m.xi_of(l, mu);
    const int A = L + i, C = k - M;
    LaurentPoly base = m.xi(l) + LaurentPoly::c(r);
    auto factor = [&](int a) { return base + LaurentPoly::h(r) * Rational(a - L); };
    for (int a = std::max(A, C) + 1; a <= std::max({A, C, j}); ++a) out = out * factor(a);
    for (int b = std::min({A, C, j}) + 1; b <= std::min(A, C); ++b) out = out * factor(b);
  }
  return out;
}

AbelianZElt abelian_product(const AbelianMatter& m, const AbelianZElt& a, const AbelianZElt& b) {
  if (a.j != b.i) throw Error(ErrorCode::TagMismatch, "inner tags of the product differ");
  AbelianZElt out;
  out.i = a.i;
  out.j = b.j;
  for (const auto& [lambda, f] : a.terms) {
    for (const auto& [mu, g] : b.terms) {
      LaurentPoly coeff =
          f * shift(lambda, g, -1) * abelian_structure_constant(m, a.i, a.j, b.j, lambda, mu);
      out.add_term(add_vec(lambda, mu), coeff);
    }
  }
  return out;
}

ShiftOperator abelian_embed(const AbelianMatter& m, const AbelianZElt& a) {
  const int r = m.rank;
  ShiftOperator out;
  for (const auto& [lambda, f] : a.terms) {
    LaurentPoly e(r, 1);
    for (std::size_t l = 0; l < m.characters.size(); ++l) {
      const int L = m.xi_of(l, lambda);
      for (int k = L + a.i + 1; k <= a.j; ++k)
        e = e * (m.xi(l) + LaurentPoly::c(r) + LaurentPoly::h(r) * Rational(k - L));
    }
    LaurentPoly t = f * e;
    if (t.is_zero()) continue;
    auto [it, ins] = out.try_emplace(lambda, t);
    if (!ins) {
      it->second += t;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

ShiftOperator shift_compose(const ShiftOperator& a, const ShiftOperator& b) {
  ShiftOperator out;
  for (const auto& [lambda, f] : a) {
    for (const auto& [mu, g] : b) {
      LaurentPoly t = f * shift(lambda, g, -1);
      auto key = add_vec(lambda, mu);
      auto [it, ins] = out.try_emplace(key, t);
      if (!ins) it->second += t;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

int abelian_degree(const AbelianMatter& m, int i, int j, const std::vector<int>& lambda) {
  int deg = 0;
  for (std::size_t l = 0; l < m.characters.size(); ++l) deg += std::abs(m.xi_of(l, lambda) + i - j);
  return deg;
}

std::optional<int> abelian_homogeneous_degree(const AbelianMatter& m, const AbelianZElt& a) {
  std::optional<int> deg;
  for (const auto& [lambda, f] : a.terms) {
    const int base = abelian_degree(m, a.i, a.j, lambda);
    for (const auto& [mono, q] : f.terms()) {
      int d = base + 2 * (mono.y_degree() + mono.c() + mono.h());
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
  }
  return deg.value_or(0);
}

int epsilon(int x, int i, int j) { return std::max(x + i, j) - (x + i) - std::max(x, 0); }

int epsilon_pair_closed_form(int x, int i, int j) {
  const int d = j - i;
  if (std::abs(x) >= std::abs(d)) return d;
  return d + std::abs(d) - std::abs(x);
}

bool SphericalClass::is_equivariant() const {
  const RationalFunction zero{LaurentPoly(n)};
  for (const auto& [lambda, f] : terms) {
    for (const Perm& w : all_perms(n)) {
      auto it = terms.find(permute_vector(w, lambda));
      const RationalFunction& g = it == terms.end() ? zero : it->second;
      if (!g.equals(f.permuted(w))) return false;
    }
  }
  return true;
}

bool SphericalClass::equals(const SphericalClass& o) const {
  if (i != o.i || j != o.j || n != o.n) return false;
  std::map<std::vector<int>, bool> keys;
  for (const auto& [k, v] : terms) keys[k] = true;
  for (const auto& [k, v] : o.terms) keys[k] = true;
  const RationalFunction zero{LaurentPoly(n)};
  for (const auto& [k, unused] : keys) {
    auto a = terms.find(k);
    auto b = o.terms.find(k);
    if (!(a == terms.end() ? zero : a->second).equals(b == o.terms.end() ? zero : b->second))
      return false;
  }
  return true;
}

SphericalClass SphericalClass::reparam(int sc, int m, int sh) const {
  SphericalClass r = *this;
  for (auto& [k, v] : r.terms) v = v.reparam(sc, m, sh);
  return r;
}

SphericalClass SphericalClass::specialize_zero_ch() const {
  SphericalClass r = *this;
  for (auto& [k, v] : r.terms) v = v.specialize_zero_ch().simplified();
  return r;
}

SphericalClass SphericalClass::operator*(const Rational& q) const {
  SphericalClass r = *this;
  for (auto& [k, v] : r.terms) v = v * q;
  return r;
}

std::vector<std::vector<int>> weyl_orbit(const std::vector<int>& lambda) {
  std::vector<int> v = lambda;
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int stabilizer_order(const std::vector<int>& lambda) {
  std::map<int, int> mult;
  for (int v : lambda) ++mult[v];
  int s = 1;
  for (const auto& [v, k] : mult)
    for (int t = 2; t <= k; ++t) s *= t;
  return s;
}

SphericalClass class_localized(const std::vector<int>& lambda, const LaurentPoly& f, int i, int j) {
  const int n = static_cast<int>(lambda.size());
  if (f.n() != n) throw Error(ErrorCode::ContextMismatch, "f lives in a ring of different rank");
  for (const Perm& w : all_perms(n)) {
    if (permute_vector(w, lambda) == lambda && !(permute(w, f) == f))
      throw Error(ErrorCode::AsymmetricInput, "f is not symmetric under the stabilizer of lambda");
  }
  SphericalClass out;
  out.i = i;
  out.j = j;
  out.n = n;
  out.exact = is_minuscule(lambda);
  for (const Perm& w : all_perms(n)) {
    std::vector<int> lp = permute_vector(w, lambda);
    if (out.terms.count(lp)) continue;
    LaurentPoly num = permute(w, f);
    RationalFunction::Denominator den;
    int sign = 1;
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) {
        if (r == s) continue;
        const int x = lp[r] - lp[s];
        for (int l = 0; l < j - (x + i); ++l) {
          num = num * (LaurentPoly::y(n, r) - LaurentPoly::y(n, s) +
                       LaurentPoly::h(n) * Rational(x + i + l) + LaurentPoly::c(n));
        }
        for (int l = 0; l < std::max(x, 0); ++l) {
          auto [g, sg] = LinearForm::make(s, r, l, 0);
          den[g] += 1;
          sign *= sg;
        }
      }
    }
    out.terms.emplace(lp, RationalFunction(sign > 0 ? num : -num, den).simplified());
  }
  return out;
}

SphericalClass spherical_compose(const SphericalClass& a, const SphericalClass& b) {
  if (a.j != b.i) throw Error(ErrorCode::TagMismatch, "inner tags of the composition differ");
  if (a.n != b.n) throw Error(ErrorCode::ContextMismatch, "classes of different rank");
  SphericalClass out;
  out.i = a.i;
  out.j = b.j;
  out.n = a.n;
  out.exact = a.exact && b.exact;
  for (const auto& [lambda, f] : a.terms) {
    for (const auto& [mu, g] : b.terms) {
      RationalFunction t = f * g.shifted(lambda);
      auto key = add_vec(lambda, mu);
      auto [it, ins] = out.terms.try_emplace(key, t);
      if (!ins) it->second += t;
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    it->second = it->second.simplified();
    it = it->second.is_zero() ? out.terms.erase(it) : std::next(it);
  }
  return out;
}

SphericalClass restrict_to_symmetric(const DiffReflOp& op, int i, int j) {
  SphericalClass out;
  out.i = i;
  out.j = j;
  out.n = op.n();
  for (const auto& [g, f] : op.terms()) {
    auto [it, ins] = out.terms.try_emplace(g.lambda, f);
    if (!ins) it->second += f;
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    it->second = it->second.simplified();
    it = it->second.is_zero() ? out.terms.erase(it) : std::next(it);
  }
  return out;
}

LaurentPoly class_commutative(const std::vector<int>& lambda, const LaurentPoly& f, int d,
                              const RootData& roots, Normalization norm) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "degree must be non-negative");
  const int n = roots.rank;
  if (static_cast<int>(lambda.size()) != n || f.n() != n)
    throw Error(ErrorCode::ContextMismatch, "coweight and root data disagree on rank");
  LaurentPoly body = f;
  for (std::size_t k = 0; k < roots.positive_roots.size(); ++k) {
    const int a = std::abs(roots.pairing(k, lambda));
    if (a < d) body = body * roots.root_poly(k).pow(d - a);
  }
  Monomial xm(n);
  for (int i = 0; i < n; ++i) xm.set_x(i, lambda[i]);
  body = body * LaurentPoly::monomial(xm);
  LaurentPoly reduced = project_isotypic(roots, body, d);
  if (norm == Normalization::Reduced) return reduced;
  return roots.delta().pow(d) * reduced;
}

LaurentPoly x_coefficient(const LaurentPoly& f, const std::vector<int>& lambda) {
  const int n = f.n();
  LaurentPoly out(n);
  for (const auto& [m, q] : f.terms()) {
    bool match = true;
    for (int i = 0; i < n && match; ++i) match = m.x(i) == lambda[i];
    if (!match) continue;
    Monomial t = m;
    for (int i = 0; i < n; ++i) t.set_x(i, 0);
    out.add_term(t, q);
  }
  return out;
}

SphericalClass as_spherical(const LaurentPoly& f, int i, int j) {
  const int n = f.n();
  SphericalClass out;
  out.i = i;
  out.j = j;
  out.n = n;
  std::map<std::vector<int>, LaurentPoly> parts;
  for (const auto& [m, q] : f.terms()) {
    std::vector<int> lam(n);
    Monomial t = m;
    for (int k = 0; k < n; ++k) {
      lam[k] = m.x(k);
      t.set_x(k, 0);
    }
    parts.try_emplace(lam, LaurentPoly(n)).first->second.add_term(t, q);
  }
  for (auto& [lam, p] : parts) out.terms.emplace(lam, RationalFunction(p));
  return out;
}

LaurentPoly as_polynomial(const SphericalClass& s) {
  LaurentPoly out(s.n);
  for (const auto& [lam, f] : s.terms) {
    RationalFunction g = f.simplified();
    if (!g.is_polynomial())
      throw Error(ErrorCode::NotPolynomialPreserving, "class has a non-polynomial coefficient");
    Monomial xm(s.n);
    for (int k = 0; k < s.n; ++k) xm.set_x(k, lam[k]);
    out += g.numerator() * LaurentPoly::monomial(xm);
  }
  return out;
}

CoweightSplit split_coweight(const std::vector<int>& lambda, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "split needs d >= 1");
  CoweightSplit s;
  s.lambda = lambda;
  s.d = d;
  s.mu.assign(d, std::vector<int>(lambda.size(), 0));
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    int q = lambda[i] / d, r = lambda[i] % d;
    if (r < 0) {
      r += d;
      --q;
    }
    for (int k = 0; k < d; ++k) s.mu[k][i] = k < r ? q + 1 : q;
  }
  return s;
}

std::optional<std::string> check_split(const CoweightSplit& s) {
  const std::size_t n = s.lambda.size();
  std::vector<int> sum(n, 0);
  for (const auto& mu : s.mu) sum = add_vec(sum, mu);
  if (sum != s.lambda) return "sum " + vec_str(sum) + " != " + vec_str(s.lambda);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const int gap = std::abs(s.lambda[a] - s.lambda[b]);
      int equal = 0;
      for (const auto& mu : s.mu) equal += mu[a] == mu[b];
      if (gap < s.d && equal != s.d - gap)
        return "condition (1) fails for pair " + std::to_string(a + 1) + "," + std::to_string(b + 1);
      if (gap > s.d && equal != 0)
        return "condition (2) fails for pair " + std::to_string(a + 1) + "," + std::to_string(b + 1);
    }
  }
  return std::nullopt;
}

Report verify_factorization(const std::vector<int>& lambda, int d) {
  const int n = static_cast<int>(lambda.size());
  RootData rd = RootData::type_A(n);
  Report rep;
  rep.suite = "factorization";
  const std::string tag = "lambda=" + vec_str(lambda) + " d=" + std::to_string(d) + ": ";
  CoweightSplit split = split_coweight(lambda, d);
  auto bad = check_split(split);
  rep.add(tag + "split conditions", !bad, bad.value_or(""));

  const LaurentPoly one(n, 1);
  auto orbit_norm = [&](const std::vector<int>& l) -> Rational {
    return factorial(n) / Rational(stabilizer_order(l));
  };
  LaurentPoly lhs = class_commutative(lambda, one, d, rd) * orbit_norm(lambda);
  LaurentPoly rhs(n, 1);
  for (const auto& mu : split.mu) rhs = rhs * (class_commutative(mu, one, 1, rd) * orbit_norm(mu));
  std::vector<int> dom = lambda;
  std::sort(dom.begin(), dom.end(), std::greater<int>());
  LaurentPoly a = x_coefficient(lhs, dom), b = x_coefficient(rhs, dom);
  bool ok = !a.is_zero() && (a == b || a == -b);
  rep.add(tag + "leading coefficient up to sign", ok, ok ? "" : to_string(a - b));
  return rep;
}

std::string to_string(const ConventionDictionary& d) {
  std::ostringstream os;
  os << "pair_sign=" << d.pair_sign << " c->" << (d.c_sign < 0 ? "-" : "") << "c"
     << (d.c_shift >= 0 ? "+" : "") << d.c_shift << "h (level " << d.level << ")";
  return os.str();
}

std::optional<std::string> check_dictionary(const ConventionDictionary& d,
                                            const std::vector<int>& lambda, ELambdaMode mode,
                                            bool at_zero) {
  const int n = static_cast<int>(lambda.size());
  SphericalClass loc = class_localized(lambda, LaurentPoly(n, 1), d.level, d.level);
  for (auto& [lp, f] : loc.terms) {
    int pairs = 0;
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) pairs += (lp[r] - lp[s] == 1);
    if (d.pair_sign < 0 && pairs % 2) f = -f;
  }
  DiffReflOp e = e_lambda(lambda, mode, 0).reparam(d.c_sign, d.c_shift);
  SphericalClass rhs = restrict_to_symmetric(e, d.level, d.level) *
                       (factorial(n) / Rational(stabilizer_order(lambda)));
  if (at_zero) {
    loc = loc.specialize_zero_ch();
    rhs = rhs.specialize_zero_ch();
  }
  if (loc.equals(rhs)) return std::nullopt;
  for (const auto& [lp, f] : loc.terms) {
    auto it = rhs.terms.find(lp);
    RationalFunction g = it == rhs.terms.end() ? RationalFunction(LaurentPoly(n)) : it->second;
    RationalFunction diff = f - g;
    if (!diff.is_zero()) return to_string(diff.numerator());
  }
  return std::string("extra terms on the closed-form side");
}

std::vector<ConventionDictionary> dictionary_candidates(const std::vector<int>& lambda, int level,
                                                        bool at_zero) {
  std::vector<ConventionDictionary> found;
  for (int ps : {1, -1})
    for (int cs : {1, -1})
      for (int m = -2; m <= 2; ++m) {
        ConventionDictionary d{ps, cs, m, level};
        if (!check_dictionary(d, lambda, ELambdaMode::Closed, at_zero)) found.push_back(d);
      }
  return found;
}

ConventionDictionary match_conventions(int n, int level) {
  if (n < 2) throw Error(ErrorCode::InvalidRank, "convention matching needs n >= 2");
  auto found = dictionary_candidates(fundamental_coweight(n, 1), level);
  if (found.size() != 1)
    throw Error(ErrorCode::NoDictionary, std::to_string(found.size()) +
                                             " dictionaries match in the search box (need exactly one)");
  return found.front();
}

Report verify_e_lambda(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidRank, "E_lambda checks need n >= 2");
  Report rep;
  rep.suite = "e-lambda";
  const std::string tag = "n=" + std::to_string(n) + " ";
  DiffReflOp ew = plain_symmetrizer(n);
  std::optional<ConventionDictionary> dict;
  try {
    dict = match_conventions(2, 0);
    rep.add(tag + "dictionary found at n=2: " + to_string(*dict), true);
  } catch (const Error& e) {
    rep.add(tag + "dictionary search at n=2", false, "0");
  }
  for (int m = 1; m < n; ++m) {
    std::vector<int> lam = fundamental_coweight(n, m);
    std::string l;
    for (int i = 0; i < n; ++i) l += (i ? "," : "") + std::to_string(lam[i]);
    DiffReflOp gen = compose(e_lambda(lam, ELambdaMode::Generators), ew);
    DiffReflOp closed = e_lambda(lam, ELambdaMode::Closed);
    auto w = gen.difference_witness(closed);
    rep.add(tag + "lambda=(" + l + "): generators form equals closed form", !w, w.value_or(""));
    if (!dict) continue;
    for (auto mode : {ELambdaMode::Closed, ELambdaMode::Generators}) {
      auto mw = check_dictionary(*dict, lam, mode);
      rep.add(tag + "lambda=(" + l + "): localized class matches " +
                  (mode == ELambdaMode::Closed ? "closed" : "generators") + " form under the dictionary",
              !mw, mw.value_or(""));
    }
  }
  return rep;
}

}  // namespace daha
