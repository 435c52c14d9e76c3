#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace daha {

using Rational = mpq_class;

enum class ErrorCode {
  ContextMismatch = 1,
  Syntax,
  NotDivisible,
  NotPolynomialPreserving,
  InvalidIndex,
  NonMinuscule,
  AsymmetricInput,
  TagMismatch,
  NoDictionary,
  UnsupportedRootData,
  WindowTooLarge,
  MembershipFailure,
  UnknownSuite,
  InvalidRank,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t pos, const std::string& msg)
      : Error(ErrorCode::Syntax, "syntax error at position " + std::to_string(pos) + ": " + msg),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

constexpr int kMaxRank = 7;

struct VarContext {
  int n = 1;
  explicit VarContext(int rank = 1);
  bool operator==(const VarContext&) const = default;
};

// Exponent slots: y1..yn, x1..xn, c, h. Lexicographic comparison of the slot
// array gives the storage order (y, x, c, h).
class Monomial {
 public:
  using Slots = std::array<int16_t, 2 * kMaxRank + 2>;

  Monomial() { e_.fill(0); }
  explicit Monomial(int n);

  int n() const { return n_; }
  int y(int i) const { return e_[i]; }
  int x(int i) const { return e_[n_ + i]; }
  int c() const { return e_[2 * n_]; }
  int h() const { return e_[2 * n_ + 1]; }
  void set_y(int i, int v) { e_[i] = static_cast<int16_t>(v); }
  void set_x(int i, int v) { e_[n_ + i] = static_cast<int16_t>(v); }
  void set_c(int v) { e_[2 * n_] = static_cast<int16_t>(v); }
  void set_h(int v) { e_[2 * n_ + 1] = static_cast<int16_t>(v); }

  int y_degree() const;
  bool is_one() const;
  Monomial operator*(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  auto operator<=>(const Monomial& o) const { return e_ <=> o.e_; }

 private:
  int n_ = 0;
  Slots e_;
};

class LaurentPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(int n) : n_(n) {}
  LaurentPoly(int n, const Rational& constant);

  static LaurentPoly y(int n, int i);
  static LaurentPoly x(int n, int i, int power = 1);
  static LaurentPoly c(int n);
  static LaurentPoly h(int n);
  static LaurentPoly monomial(const Monomial& m, const Rational& coeff = 1);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& coeff);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rational& s) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly pow(int k) const;

  bool operator==(const LaurentPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator<(const LaurentPoly& o) const;

  // Most negative exponent of x_i (0 if none is negative).
  int min_x_exponent(int i) const;
  int max_y_degree() const;
  bool has_x() const;

 private:
  void check(const LaurentPoly& o) const;
  int n_ = 1;
  Terms terms_;
};

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);

// Permutations are 0-based images: p[i] = w(i).
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose_perm(const Perm& a, const Perm& b);  // (ab)(i) = a(b(i))
Perm inverse_perm(const Perm& p);
int perm_sign(const Perm& p);
Perm transposition(int n, int i, int j);
std::vector<Perm> all_perms(int n);
std::vector<int> permute_vector(const Perm& w, const std::vector<int>& v);  // (wv)_{w(i)} = v_i

// w acts by x_i -> x_{w(i)}, y_i -> y_{w(i)}.
LaurentPoly permute(const Perm& w, const LaurentPoly& f);
// y_i -> y_i + h*lambda_i.
LaurentPoly shift(const std::vector<int>& lambda, const LaurentPoly& f, int sign = 1);
// (w, lambda) is the operator u^lambda w.
LaurentPoly act(const Perm& w, const std::vector<int>& lambda, const LaurentPoly& f);

LaurentPoly project_isotypic(const LaurentPoly& f, int d);

// Substitution of y, c, h by polynomials; x-exponent vectors transformed by an
// integer matrix (new = xmat * old), identity when xmat is empty.
struct LinearSubst {
  std::vector<LaurentPoly> y;
  LaurentPoly c;
  LaurentPoly h;
  std::vector<std::vector<int>> xmat;
};
LaurentPoly substitute(const LaurentPoly& f, const LinearSubst& s);
LinearSubst identity_subst(int n);

// c -> sc*c + m*h, h -> sh*h.
LaurentPoly reparam(const LaurentPoly& f, int sc, int m, int sh = 1);
LaurentPoly specialize_zero_ch(const LaurentPoly& f);

struct LinearForm;
std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LinearForm& g);

struct TaylorResult {
  int clearing_exponent = 0;
  std::map<std::pair<int, int>, LaurentPoly> coeffs;
  bool all_zero() const;
};
TaylorResult taylor_pair(const LaurentPoly& f, int i, int j, int d);

Rational binom(int n, int k);
Rational factorial(int n);

std::string to_string(const Rational& q);
std::string to_string(const LaurentPoly& f);
LaurentPoly parse_poly(const std::string& s, const VarContext& ctx);
Rational parse_rational(const std::string& s);

}  // namespace daha
