#include "daha/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "daha/rational_function.hpp"

namespace daha {

VarContext::VarContext(int rank) : n(rank) {
  if (rank < 1 || rank > kMaxRank)
    throw Error(ErrorCode::InvalidRank, "rank must be in 1.." + std::to_string(kMaxRank));
}

Monomial::Monomial(int n) : n_(n) {
  if (n < 1 || n > kMaxRank) throw Error(ErrorCode::InvalidRank, "unsupported rank");
  e_.fill(0);
}

int Monomial::y_degree() const {
  int s = 0;
  for (int i = 0; i < n_; ++i) s += e_[i];
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](int16_t v) { return v == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = static_cast<int16_t>(e_[k] + o.e_[k]);
  return r;
}

LaurentPoly::LaurentPoly(int n, const Rational& constant) : n_(n) {
  if (constant != 0) terms_.emplace(Monomial(n), constant);
}

LaurentPoly LaurentPoly::y(int n, int i) {
  Monomial m(n);
  m.set_y(i, 1);
  return monomial(m);
}

LaurentPoly LaurentPoly::x(int n, int i, int power) {
  Monomial m(n);
  m.set_x(i, power);
  return monomial(m);
}

LaurentPoly LaurentPoly::c(int n) {
  Monomial m(n);
  m.set_c(1);
  return monomial(m);
}

LaurentPoly LaurentPoly::h(int n) {
  Monomial m(n);
  m.set_h(1);
  return monomial(m);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Rational& coeff) {
  LaurentPoly p(m.n());
  p.add_term(m, coeff);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational LaurentPoly::constant_term() const { return coeff(Monomial(n_)); }

Rational LaurentPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check(const LaurentPoly& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::ContextMismatch, "polynomials live in different rings");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, q] : r.terms_) q = -q;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check(o);
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check(o);
  for (const auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check(o);
  LaurentPoly r(n_);
  for (const auto& [ma, qa] : terms_)
    for (const auto& [mb, qb] : o.terms_) r.add_term(ma * mb, qa * qb);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& s) const {
  if (s == 0) return LaurentPoly(n_);
  LaurentPoly r = *this;
  for (auto& [m, q] : r.terms_) q *= s;
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative power of a polynomial");
  LaurentPoly result(n_, 1), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

int LaurentPoly::min_x_exponent(int i) const {
  int m = 0;
  for (const auto& [mono, q] : terms_) m = std::min(m, mono.x(i));
  return m;
}

int LaurentPoly::max_y_degree() const {
  int m = 0;
  for (const auto& [mono, q] : terms_) m = std::max(m, mono.y_degree());
  return m;
}

bool LaurentPoly::has_x() const {
  for (const auto& [mono, q] : terms_)
    for (int i = 0; i < n_; ++i)
      if (mono.x(i) != 0) return true;
  return false;
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

int perm_sign(const Perm& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

Perm transposition(int n, int i, int j) {
  Perm p = identity_perm(n);
  std::swap(p[i], p[j]);
  return p;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> permute_vector(const Perm& w, const std::vector<int>& v) {
  std::vector<int> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[w[i]] = v[i];
  return r;
}

LaurentPoly permute(const Perm& w, const LaurentPoly& f) {
  const int n = f.n();
  LaurentPoly r(n);
  for (const auto& [m, q] : f.terms()) {
    Monomial t = m;
    for (int i = 0; i < n; ++i) {
      t.set_y(w[i], m.y(i));
      t.set_x(w[i], m.x(i));
    }
    r.add_term(t, q);
  }
  return r;
}

LinearSubst identity_subst(int n) {
  LinearSubst s;
  for (int i = 0; i < n; ++i) s.y.push_back(LaurentPoly::y(n, i));
  s.c = LaurentPoly::c(n);
  s.h = LaurentPoly::h(n);
  return s;
}

namespace {

class PowerCache {
 public:
  explicit PowerCache(const LaurentPoly& base) : pows_{LaurentPoly(base.n(), 1), base} {}
  const LaurentPoly& get(int k) {
    while (static_cast<int>(pows_.size()) <= k) pows_.push_back(pows_.back() * pows_[1]);
    return pows_[k];
  }

 private:
  std::vector<LaurentPoly> pows_;
};

}  // namespace

LaurentPoly substitute(const LaurentPoly& f, const LinearSubst& s) {
  const int n = f.n();
  std::vector<PowerCache> ycache;
  for (int i = 0; i < n; ++i) ycache.emplace_back(s.y[i]);
  PowerCache ccache(s.c), hcache(s.h);
  LaurentPoly r(n);
  for (const auto& [m, q] : f.terms()) {
    Monomial xm(n);
    for (int i = 0; i < n; ++i) {
      if (s.xmat.empty()) {
        xm.set_x(i, m.x(i));
      } else {
        int v = 0;
        for (int k = 0; k < n; ++k) v += s.xmat[i][k] * m.x(k);
        xm.set_x(i, v);
      }
    }
    LaurentPoly t = LaurentPoly::monomial(xm, q);
    for (int i = 0; i < n; ++i)
      if (m.y(i)) t = t * ycache[i].get(m.y(i));
    if (m.c()) t = t * ccache.get(m.c());
    if (m.h()) t = t * hcache.get(m.h());
    r += t;
  }
  return r;
}

LaurentPoly shift(const std::vector<int>& lambda, const LaurentPoly& f, int sign) {
  const int n = f.n();
  if (std::all_of(lambda.begin(), lambda.end(), [](int v) { return v == 0; })) return f;
  LinearSubst s = identity_subst(n);
  for (int i = 0; i < n; ++i)
    if (lambda[i]) s.y[i] += LaurentPoly::h(n) * Rational(sign * lambda[i]);
  return substitute(f, s);
}

LaurentPoly act(const Perm& w, const std::vector<int>& lambda, const LaurentPoly& f) {
  return shift(lambda, permute(w, f));
}

LaurentPoly project_isotypic(const LaurentPoly& f, int d) {
  const int n = f.n();
  LaurentPoly r(n);
  Rational nfact = 1;
  for (int k = 2; k <= n; ++k) nfact *= k;
  for (const Perm& w : all_perms(n)) {
    LaurentPoly t = permute(w, f);
    if (d % 2 != 0 && perm_sign(w) < 0) t = -t;
    r += t;
  }
  return r * Rational(1 / nfact);
}

LaurentPoly reparam(const LaurentPoly& f, int sc, int m, int sh) {
  const int n = f.n();
  LinearSubst s = identity_subst(n);
  s.c = LaurentPoly::c(n) * Rational(sc) + LaurentPoly::h(n) * Rational(m);
  s.h = LaurentPoly::h(n) * Rational(sh);
  return substitute(f, s);
}

LaurentPoly specialize_zero_ch(const LaurentPoly& f) {
  LaurentPoly r(f.n());
  for (const auto& [m, q] : f.terms())
    if (m.c() == 0 && m.h() == 0) r.add_term(m, q);
  return r;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LinearForm& g) {
  const int n = f.n();
  if (f.is_zero()) return LaurentPoly(n);
  // Split f by powers of y_r, then synthetic division by (y_r - beta).
  std::map<int, LaurentPoly> parts;
  for (const auto& [m, q] : f.terms()) {
    Monomial rest = m;
    rest.set_y(g.r, 0);
    auto [it, ins] = parts.try_emplace(m.y(g.r), LaurentPoly(n));
    it->second.add_term(rest, q);
  }
  LaurentPoly beta = LaurentPoly::y(n, g.s) - LaurentPoly::h(n) * Rational(g.a) -
                     LaurentPoly::c(n) * Rational(g.b);
  const int top = parts.rbegin()->first;
  if (top == 0) return std::nullopt;
  std::vector<LaurentPoly> q(top, LaurentPoly(n));
  auto part = [&](int k) {
    auto it = parts.find(k);
    return it == parts.end() ? LaurentPoly(n) : it->second;
  };
  q[top - 1] = part(top);
  for (int k = top - 1; k >= 1; --k) q[k - 1] = part(k) + beta * q[k];
  LaurentPoly rem = part(0) + beta * q[0];
  if (!rem.is_zero()) return std::nullopt;
  LaurentPoly out(n);
  for (int k = 0; k < top; ++k) {
    for (const auto& [m, c] : q[k].terms()) {
      Monomial t = m;
      t.set_y(g.r, m.y(g.r) + k);
      out.add_term(t, c);
    }
  }
  return out;
}

bool TaylorResult::all_zero() const {
  for (const auto& [ab, p] : coeffs)
    if (!p.is_zero()) return false;
  return true;
}

Rational binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

TaylorResult taylor_pair(const LaurentPoly& f, int i, int j, int d) {
  if (i == j) throw Error(ErrorCode::InvalidIndex, "taylor_pair needs i != j");
  const int n = f.n();
  TaylorResult out;
  out.clearing_exponent = -f.min_x_exponent(i);
  for (int a = 0; a < d; ++a)
    for (int b = 0; a + b < d; ++b) out.coeffs.emplace(std::make_pair(a, b), LaurentPoly(n));
  if (d <= 0) return out;
  const int M = out.clearing_exponent;
  for (const auto& [m, q] : f.terms()) {
    const int ex = m.x(i) + M, ey = m.y(i);
    Monomial rest = m;
    rest.set_x(i, 0);
    rest.set_y(i, 0);
    // (x_j + u)^ex (y_j + v)^ey
    for (int a = 0; a <= ex && a < d; ++a) {
      for (int b = 0; b <= ey && a + b < d; ++b) {
        Monomial t = rest;
        t.set_x(j, rest.x(j) + ex - a);
        t.set_y(j, rest.y(j) + ey - b);
        out.coeffs[{a, b}].add_term(t, q * binom(ex, a) * binom(ey, b));
      }
    }
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  const int n = f.n();
  std::string out;
  bool first = true;
  for (const auto& [m, q] : f.terms()) {
    Rational a = abs(q);
    if (first) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    first = false;
    std::vector<std::string> factors;
    auto var = [&](const std::string& name, int e) {
      if (e == 0) return;
      factors.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    };
    for (int i = 0; i < n; ++i) var("y" + std::to_string(i + 1), m.y(i));
    for (int i = 0; i < n; ++i) var("x" + std::to_string(i + 1), m.x(i));
    var("c", m.c());
    var("h", m.h());
    std::string body;
    for (std::size_t k = 0; k < factors.size(); ++k) body += (k ? "*" : "") + factors[k];
    if (factors.empty())
      out += to_string(a);
    else if (a == 1)
      out += body;
    else
      out += to_string(a) + "*" + body;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& s, int n) : s_(s), n_(n) {}

  LaurentPoly parse() {
    LaurentPoly r = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_ + 1, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip();
    return pos_ < s_.size() && s_[pos_] == ch;
  }

  LaurentPoly expr() {
    skip();
    LaurentPoly r(n_);
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        r += term();
      } else if (peek('-')) {
        ++pos_;
        r -= term();
      } else {
        break;
      }
    }
    return r;
  }

  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char ch = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == 'x' || ch == 'y' || ch == 'c' ||
           ch == 'h' || ch == '(';
  }

  LaurentPoly term() {
    LaurentPoly r = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        r = r * factor();
      } else if (at_factor_start()) {
        r = r * factor();
      } else {
        break;
      }
    }
    return r;
  }

  mpz_class digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  LaurentPoly factor() {
    std::size_t start_pos = pos_;
    LaurentPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      mpz_class e = digits();
      if (!e.fits_sint_p() || e > 10000) fail("exponent too large");
      int k = static_cast<int>(e.get_si());
      if (!neg) return base.pow(k);
      if (base.size() != 1 || base.terms().begin()->first.y_degree() != 0 ||
          base.terms().begin()->first.c() != 0 || base.terms().begin()->first.h() != 0 ||
          abs(base.terms().begin()->second) != 1) {
        pos_ = start_pos;
        fail("negative exponent allowed only on x-monomials");
      }
      const auto& [m, q] = *base.terms().begin();
      Monomial inv(n_);
      for (int i = 0; i < n_; ++i) inv.set_x(i, -m.x(i) * k);
      Rational sign = (q < 0 && k % 2) ? -1 : 1;
      return LaurentPoly::monomial(inv, sign);
    }
    return base;
  }

  LaurentPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      LaurentPoly r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mpz_class num = digits();
      mpz_class den = 1;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = digits();
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return LaurentPoly(n_, q);
    }
    if (ch == 'c') {
      ++pos_;
      return LaurentPoly::c(n_);
    }
    if (ch == 'h') {
      ++pos_;
      return LaurentPoly::h(n_);
    }
    if (ch == 'x' || ch == 'y') {
      std::size_t at = pos_;
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("expected variable index");
      mpz_class idx = digits();
      if (idx < 1 || idx > n_) {
        pos_ = at;
        fail("variable index out of range for rank " + std::to_string(n_));
      }
      int i = static_cast<int>(idx.get_si()) - 1;
      return ch == 'x' ? LaurentPoly::x(n_, i) : LaurentPoly::y(n_, i);
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const std::string& s, const VarContext& ctx) {
  return PolyParser(s, ctx.n).parse();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::Syntax, "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace daha
