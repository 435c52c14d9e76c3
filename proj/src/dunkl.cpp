#include "daha/dunkl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace daha {

ExtAffineElt ExtAffineElt::identity(int n) { return {identity_perm(n), std::vector<int>(n, 0)}; }

ExtAffineElt ExtAffineElt::reflection(int n, int i) {
  if (i < 0 || i + 1 >= n) throw Error(ErrorCode::InvalidIndex, "reflection index out of range");
  return {transposition(n, i, i + 1), std::vector<int>(n, 0)};
}

ExtAffineElt ExtAffineElt::permutation(const Perm& w) {
  return {w, std::vector<int>(w.size(), 0)};
}

ExtAffineElt ExtAffineElt::translation(const std::vector<int>& lambda) {
  return {identity_perm(static_cast<int>(lambda.size())), lambda};
}

ExtAffineElt ExtAffineElt::pi(int n) {
  Perm cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::vector<int> e(n, 0);
  e[0] = 1;
  return {cyc, e};
}

ExtAffineElt ExtAffineElt::operator*(const ExtAffineElt& o) const {
  std::vector<int> mu = permute_vector(w, o.lambda);
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] += lambda[i];
  return {compose_perm(w, o.w), mu};
}

ExtAffineElt ExtAffineElt::inverse() const {
  Perm wi = inverse_perm(w);
  std::vector<int> mu = permute_vector(wi, lambda);
  for (int& v : mu) v = -v;
  return {wi, mu};
}

std::string to_string(const ExtAffineElt& g) {
  std::ostringstream os;
  os << "u^[";
  for (std::size_t i = 0; i < g.lambda.size(); ++i) os << (i ? "," : "") << g.lambda[i];
  os << "] * [";
  for (std::size_t i = 0; i < g.w.size(); ++i) os << (i ? "," : "") << g.w[i] + 1;
  os << "]";
  return os.str();
}

DiffReflOp DiffReflOp::identity(int n) {
  return element(ExtAffineElt::identity(n), RationalFunction(LaurentPoly(n, 1)));
}

DiffReflOp DiffReflOp::element(const ExtAffineElt& g, const RationalFunction& coeff) {
  DiffReflOp op(g.n());
  op.add_term(g, coeff);
  return op;
}

DiffReflOp DiffReflOp::multiplication(const RationalFunction& f) {
  return element(ExtAffineElt::identity(f.n()), f);
}

RationalFunction DiffReflOp::coeff(const ExtAffineElt& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? RationalFunction(LaurentPoly(n_)) : it->second;
}

void DiffReflOp::add_term(const ExtAffineElt& g, const RationalFunction& coeff) {
  if (coeff.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(g, coeff);
  if (!ins) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffReflOp& DiffReflOp::operator+=(const DiffReflOp& o) {
  if (o.n_ != n_) throw Error(ErrorCode::ContextMismatch, "operators of different rank");
  for (const auto& [g, f] : o.terms_) add_term(g, f);
  return *this;
}

DiffReflOp DiffReflOp::operator+(const DiffReflOp& o) const {
  DiffReflOp r = *this;
  r += o;
  return r;
}

DiffReflOp DiffReflOp::operator-(const DiffReflOp& o) const { return *this + o * Rational(-1); }

DiffReflOp DiffReflOp::operator*(const Rational& q) const {
  DiffReflOp r(n_);
  for (const auto& [g, f] : terms_) r.add_term(g, f * q);
  return r;
}

DiffReflOp DiffReflOp::operator*(const LaurentPoly& scalar) const {
  DiffReflOp r(n_);
  for (const auto& [g, f] : terms_) r.add_term(g, f * scalar);
  return r;
}

DiffReflOp DiffReflOp::simplified() const {
  DiffReflOp r(n_);
  for (const auto& [g, f] : terms_) r.add_term(g, f.simplified());
  return r;
}

DiffReflOp DiffReflOp::reparam(int sc, int m, int sh) const {
  DiffReflOp r(n_);
  for (const auto& [g, f] : terms_) r.add_term(g, f.reparam(sc, m, sh));
  return r;
}

bool DiffReflOp::equals(const DiffReflOp& o) const { return !difference_witness(o); }

std::optional<std::string> DiffReflOp::difference_witness(const DiffReflOp& o) const {
  DiffReflOp d = *this - o;
  if (d.is_zero()) return std::nullopt;
  return to_string(d.terms_.begin()->second.numerator());
}

DiffReflOp compose(const DiffReflOp& a, const DiffReflOp& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::ContextMismatch, "operators of different rank");
  DiffReflOp r(a.n());
  for (const auto& [ga, fa] : a.terms()) {
    for (const auto& [gb, fb] : b.terms()) r.add_term(ga * gb, fa * ga.act(fb));
  }
  return r.simplified();
}

LaurentPoly apply(const DiffReflOp& op, const LaurentPoly& f) {
  RationalFunction acc(LaurentPoly(f.n()));
  for (const auto& [g, coeff] : op.terms()) acc += coeff * g.act(f);
  RationalFunction s = acc.simplified();
  if (!s.is_polynomial())
    throw Error(ErrorCode::NotPolynomialPreserving,
                "operator does not preserve polynomials on this input: " + to_string(s));
  return s.numerator();
}

std::string to_string(const DiffReflOp& op) {
  if (op.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, f] : op.terms()) {
    if (!first) out += "\n+ ";
    first = false;
    out += "(" + to_string(f) + ") * " + to_string(g);
  }
  return out;
}

DiffReflOp plain_symmetrizer(int n, int d) {
  DiffReflOp op(n);
  Rational nf = 1;
  for (int k = 2; k <= n; ++k) nf *= k;
  for (const Perm& w : all_perms(n)) {
    int s = (d % 2 != 0) ? perm_sign(w) : 1;
    op.add_term(ExtAffineElt::permutation(w), RationalFunction(LaurentPoly(n, Rational(s) / nf)));
  }
  return op;
}

LaurentPoly vandermonde(int n) {
  LaurentPoly p(n, 1);
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) p = p * (LaurentPoly::y(n, r) - LaurentPoly::y(n, s));
  return p;
}

DiffReflOp vandermonde_op(int n) { return DiffReflOp::multiplication(vandermonde(n)); }

GeneratorWord parse_word(const std::string& text, int n) {
  GeneratorWord w;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void { throw SyntaxError(pos + 1, msg); };
  auto read_index = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected index");
    return std::stoi(text.substr(start, pos - start));
  };
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
      ++pos;
      continue;
    }
    std::size_t at = pos;
    Symbol sym;
    if (ch == 's') {
      ++pos;
      int i = read_index();
      if (i < 1 || i >= n) {
        pos = at;
        fail("sigma index out of range");
      }
      sym.kind = Symbol::Kind::Sigma;
      sym.index = i - 1;
    } else if (ch == 'y') {
      ++pos;
      int i = read_index();
      if (i < 1 || i > n) {
        pos = at;
        fail("y index out of range");
      }
      sym.kind = Symbol::Kind::Y;
      sym.index = i - 1;
    } else if (text.compare(pos, 5, "pi^-1") == 0) {
      pos += 5;
      sym.kind = Symbol::Kind::PiInv;
    } else if (text.compare(pos, 2, "pi") == 0) {
      pos += 2;
      sym.kind = Symbol::Kind::Pi;
    } else if (ch == '(') {
      int depth = 0;
      std::size_t end = pos;
      for (; end < text.size(); ++end) {
        if (text[end] == '(') ++depth;
        if (text[end] == ')' && --depth == 0) break;
      }
      if (end >= text.size()) fail("unbalanced parenthesis");
      LaurentPoly s;
      try {
        s = parse_poly(text.substr(pos + 1, end - pos - 1), VarContext(n));
      } catch (const SyntaxError& e) {
        throw SyntaxError(pos + 1 + e.position(), "in scalar: " + std::string(e.what()));
      }
      for (const auto& [m, q] : s.terms())
        for (int i = 0; i < n; ++i)
          if (m.x(i) != 0 || m.y(i) != 0) fail("scalar may involve only c and h");
      sym.kind = Symbol::Kind::Scalar;
      sym.scalar = s;
      pos = end + 1;
    } else {
      fail("unexpected character '" + std::string(1, ch) + "'");
    }
    w.symbols.push_back(sym);
  }
  if (w.symbols.empty()) throw SyntaxError(1, "empty word");
  return w;
}

std::string to_string(const GeneratorWord& w, int n) {
  (void)n;
  std::string out;
  for (const auto& s : w.symbols) {
    if (!out.empty()) out += " ";
    switch (s.kind) {
      case Symbol::Kind::Sigma: out += "s" + std::to_string(s.index + 1); break;
      case Symbol::Kind::Y: out += "y" + std::to_string(s.index + 1); break;
      case Symbol::Kind::Pi: out += "pi"; break;
      case Symbol::Kind::PiInv: out += "pi^-1"; break;
      case Symbol::Kind::Scalar: out += "(" + to_string(s.scalar) + ")"; break;
    }
  }
  return out;
}

GeneratorWord phi(const GeneratorWord& w, int n) {
  GeneratorWord out;
  for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it) {
    Symbol s = *it;
    switch (s.kind) {
      case Symbol::Kind::Sigma: {
        out.symbols.push_back({Symbol::Kind::Scalar, 0, LaurentPoly(n, -1)});
        s.index = n - 2 - s.index;
        out.symbols.push_back(s);
        break;
      }
      case Symbol::Kind::Y:
        s.index = n - 1 - s.index;
        out.symbols.push_back(s);
        break;
      case Symbol::Kind::Pi:
      case Symbol::Kind::PiInv: out.symbols.push_back(s); break;
      case Symbol::Kind::Scalar:
        s.scalar = reparam(s.scalar, 1, 0, -1);
        out.symbols.push_back(s);
        break;
    }
  }
  return out;
}

WordSum phi(const WordSum& s, int n) {
  WordSum out;
  for (const auto& w : s.words) out.words.push_back(phi(w, n));
  return out;
}

WordProduct phi(const WordProduct& p, int n) {
  WordProduct out;
  for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it) out.factors.push_back(phi(*it, n));
  return out;
}

GeneratorWord concat(const GeneratorWord& a, const GeneratorWord& b) {
  GeneratorWord r = a;
  r.symbols.insert(r.symbols.end(), b.symbols.begin(), b.symbols.end());
  return r;
}

DiffReflOp generator(const Symbol& sym, int n, const DahaParams& p) {
  LaurentPoly cpar = LaurentPoly::c(n) + LaurentPoly::h(n) * Rational(p.c_shift);
  switch (sym.kind) {
    case Symbol::Kind::Sigma: {
      int i = sym.index;
      if (i < 0 || i + 1 >= n) throw Error(ErrorCode::InvalidIndex, "sigma index out of range");
      LaurentPoly ci = (p.corrupt_sigma1 && i == 0) ? cpar * Rational(2) : cpar;
      RationalFunction k = RationalFunction::over(ci, i, i + 1);
      DiffReflOp op(n);
      op.add_term(ExtAffineElt::reflection(n, i), RationalFunction(LaurentPoly(n, 1)) + k);
      op.add_term(ExtAffineElt::identity(n), -k);
      return op;
    }
    case Symbol::Kind::Pi:
      return DiffReflOp::element(ExtAffineElt::pi(n), RationalFunction(LaurentPoly(n, 1)));
    case Symbol::Kind::PiInv:
      return DiffReflOp::element(ExtAffineElt::pi(n).inverse(),
                                 RationalFunction(LaurentPoly(n, 1)));
    case Symbol::Kind::Y:
      if (sym.index < 0 || sym.index >= n) throw Error(ErrorCode::InvalidIndex, "y index out of range");
      return DiffReflOp::multiplication(LaurentPoly::y(n, sym.index));
    case Symbol::Kind::Scalar:
      return DiffReflOp::multiplication(reparam(sym.scalar, 1, p.c_shift));
  }
  throw Error(ErrorCode::InvalidIndex, "unknown symbol");
}

DiffReflOp evaluate(const GeneratorWord& w, int n, const DahaParams& p) {
  DiffReflOp acc = DiffReflOp::identity(n);
  for (const auto& s : w.symbols) acc = compose(acc, generator(s, n, p));
  return acc;
}

DiffReflOp evaluate(const WordSum& s, int n, const DahaParams& p) {
  DiffReflOp acc(n);
  for (const auto& w : s.words) acc += evaluate(w, n, p);
  return acc.simplified();
}

DiffReflOp evaluate(const WordProduct& s, int n, const DahaParams& p) {
  DiffReflOp acc = DiffReflOp::identity(n);
  for (const auto& f : s.factors) acc = compose(acc, evaluate(f, n, p));
  return acc;
}

std::vector<int> reduced_word(const Perm& w) {
  // Bubble sort the one-line notation; each adjacent swap is a right
  // multiplication by a simple transposition.
  Perm p = w;
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        word.push_back(static_cast<int>(i));
        changed = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WordSum symmetrizer_word(int n) {
  WordSum s;
  Rational nf = 1;
  for (int k = 2; k <= n; ++k) nf *= k;
  for (const Perm& w : all_perms(n)) {
    GeneratorWord word;
    word.symbols.push_back({Symbol::Kind::Scalar, 0, LaurentPoly(n, 1 / nf)});
    for (int i : reduced_word(w)) word.symbols.push_back({Symbol::Kind::Sigma, i, LaurentPoly(n)});
    s.words.push_back(word);
  }
  return s;
}

namespace {

GeneratorWord x_i_word(int n, int i, bool inverse) {
  // X_i = s_{i-1} ... s_1 pi s_{n-1} ... s_i (1-based); i is 0-based here.
  GeneratorWord w;
  auto sig = [&](int k) { w.symbols.push_back({Symbol::Kind::Sigma, k, LaurentPoly(n)}); };
  if (!inverse) {
    for (int k = i - 1; k >= 0; --k) sig(k);
    w.symbols.push_back({Symbol::Kind::Pi, 0, LaurentPoly(n)});
    for (int k = n - 2; k >= i; --k) sig(k);
  } else {
    for (int k = i; k <= n - 2; ++k) sig(k);
    w.symbols.push_back({Symbol::Kind::PiInv, 0, LaurentPoly(n)});
    for (int k = 0; k <= i - 1; ++k) sig(k);
  }
  return w;
}

}  // namespace

GeneratorWord x_lambda_word(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  GeneratorWord w;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < std::abs(lambda[i]); ++k) w = concat(w, x_i_word(n, i, lambda[i] < 0));
  }
  if (w.symbols.empty()) w.symbols.push_back({Symbol::Kind::Scalar, 0, LaurentPoly(n, 1)});
  return w;
}

WordProduct e_lambda_words(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  WordProduct p;
  p.factors.push_back(symmetrizer_word(n));
  p.factors.push_back(WordSum{{x_lambda_word(lambda)}});
  p.factors.push_back(symmetrizer_word(n));
  return p;
}

bool is_dominant(const std::vector<int>& lambda) {
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  return true;
}

bool is_minuscule(const std::vector<int>& lambda) {
  if (lambda.empty()) return true;
  auto [lo, hi] = std::minmax_element(lambda.begin(), lambda.end());
  return *hi - *lo <= 1;
}

std::vector<int> fundamental_coweight(int n, int m) {
  std::vector<int> l(n, 0);
  for (int i = 0; i < m; ++i) l[i] = 1;
  return l;
}

DiffReflOp e_lambda(const std::vector<int>& lambda, ELambdaMode mode, int c_shift) {
  const int n = static_cast<int>(lambda.size());
  VarContext ctx(n);
  if (mode == ELambdaMode::Generators)
    return evaluate(e_lambda_words(lambda), n, DahaParams{c_shift, false});
  if (!is_minuscule(lambda))
    throw Error(ErrorCode::NonMinuscule, "closed form requires a minuscule coweight");
  LaurentPoly cpar = LaurentPoly::c(n) + LaurentPoly::h(n) * Rational(c_shift);
  RationalFunction coeff(LaurentPoly(n, 1));
  for (int r = 0; r < n; ++r) {
    for (int s = r + 1; s < n; ++s) {
      if (lambda[r] - lambda[s] != 1) continue;
      LaurentPoly ya = LaurentPoly::y(n, r) - LaurentPoly::y(n, s);
      coeff = coeff * RationalFunction::over(ya - cpar, r, s);
    }
  }
  DiffReflOp mid = DiffReflOp::element(ExtAffineElt::translation(lambda), coeff.simplified());
  DiffReflOp e = plain_symmetrizer(n);
  return compose(compose(e, mid), e);
}

Report verify_relations(int n, const DahaParams& p) {
  if (n < 2) throw Error(ErrorCode::InvalidRank, "relations need n >= 2");
  Report rep;
  rep.suite = "daha-relations";
  auto sig = [&](int i) { return generator({Symbol::Kind::Sigma, i, LaurentPoly(n)}, n, p); };
  auto yop = [&](int k) { return DiffReflOp::multiplication(LaurentPoly::y(n, k)); };
  DiffReflOp pi = generator({Symbol::Kind::Pi, 0, LaurentPoly(n)}, n, p);
  DiffReflOp pinv = generator({Symbol::Kind::PiInv, 0, LaurentPoly(n)}, n, p);
  DiffReflOp id = DiffReflOp::identity(n);
  LaurentPoly cpar = LaurentPoly::c(n) + LaurentPoly::h(n) * Rational(p.c_shift);
  const std::string tag = "n=" + std::to_string(n) + " ";
  auto check = [&](const std::string& label, const DiffReflOp& lhs, const DiffReflOp& rhs) {
    auto w = lhs.difference_witness(rhs);
    rep.add(tag + label, !w, w.value_or(""));
  };

  for (int i = 0; i + 1 < n; ++i)
    check("s" + std::to_string(i + 1) + "^2 = 1", compose(sig(i), sig(i)), id);
  for (int i = 0; i + 2 < n; ++i) {
    check("braid s" + std::to_string(i + 1) + " s" + std::to_string(i + 2),
          compose(compose(sig(i), sig(i + 1)), sig(i)),
          compose(compose(sig(i + 1), sig(i)), sig(i + 1)));
  }
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 2; j + 1 < n; ++j)
      check("commute s" + std::to_string(i + 1) + " s" + std::to_string(j + 1),
            compose(sig(i), sig(j)), compose(sig(j), sig(i)));
  for (int i = 0; i + 1 < n; ++i) {
    for (int k = 0; k < n; ++k) {
      int sk = k == i ? i + 1 : (k == i + 1 ? i : k);
      int pairing = (k == i) - (k == i + 1);
      DiffReflOp lhs = compose(sig(i), yop(k)) - compose(yop(sk), sig(i));
      DiffReflOp rhs = DiffReflOp::multiplication(cpar * Rational(-pairing));
      check("s" + std::to_string(i + 1) + " y" + std::to_string(k + 1) + " - y" +
                std::to_string(sk + 1) + " s" + std::to_string(i + 1),
            lhs, rhs);
    }
  }
  for (int i = 0; i < n; ++i) {
    DiffReflOp rhs = i + 1 < n ? compose(yop(i + 1), pi)
                               : compose(yop(0) + DiffReflOp::multiplication(LaurentPoly::h(n)), pi);
    check("pi y" + std::to_string(i + 1), compose(pi, yop(i)), rhs);
  }
  DiffReflOp pin = id;
  for (int k = 0; k < n; ++k) pin = compose(pin, pi);
  check("pi^n", pin,
        DiffReflOp::element(ExtAffineElt::translation(std::vector<int>(n, 1)),
                            RationalFunction(LaurentPoly(n, 1))));
  check("pi pi^-1", compose(pi, pinv), id);
  for (int i = 0; i + 2 < n; ++i)
    check("pi s" + std::to_string(i + 1) + " pi^-1", compose(compose(pi, sig(i)), pinv), sig(i + 1));
  return rep;
}

Report verify_shift_identity(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidRank, "shift identity needs n >= 2");
  Report rep;
  rep.suite = "shift-iso";
  DiffReflOp ew = plain_symmetrizer(n), ewm = plain_symmetrizer(n, 1), delta = vandermonde_op(n);
  for (int m = 1; m < n; ++m) {
    std::vector<int> lam = fundamental_coweight(n, m);
    DiffReflOp phi_e = evaluate(phi(e_lambda_words(lam), n), n);
    DiffReflOp shifted = e_lambda(lam, ELambdaMode::Generators, -1);
    DiffReflOp lhs = compose(compose(compose(ewm, phi_e), delta), ew);
    DiffReflOp rhs = compose(compose(delta, shifted), ew);
    if ((m * (n - m)) % 2) rhs = rhs * Rational(-1);
    auto w = lhs.difference_witness(rhs);
    std::string label = "n=" + std::to_string(n) + " omega_" + std::to_string(m) + " (";
    for (int i = 0; i < n; ++i) label += (i ? "," : "") + std::to_string(lam[i]);
    rep.add(label + "): Phi(E_c) Delta = Delta E_{c-h}", !w, w.value_or(""));
  }
  return rep;
}

}  // namespace daha
