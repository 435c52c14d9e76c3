#include "daha/rational_function.hpp"

namespace daha {

std::pair<LinearForm, int> LinearForm::make(int r, int s, int a, int b) {
  if (r == s) throw Error(ErrorCode::InvalidIndex, "linear form needs two distinct indices");
  if (r < s) return {LinearForm{r, s, a, b}, 1};
  return {LinearForm{s, r, -a, -b}, -1};
}

LaurentPoly LinearForm::to_poly(int n) const {
  return LaurentPoly::y(n, r) - LaurentPoly::y(n, s) + LaurentPoly::h(n) * Rational(a) +
         LaurentPoly::c(n) * Rational(b);
}

std::string to_string(const LinearForm& g) {
  std::string out = "y" + std::to_string(g.r + 1) + " - y" + std::to_string(g.s + 1);
  auto term = [&](int k, const char* v) {
    if (k == 0) return;
    out += k > 0 ? " + " : " - ";
    if (std::abs(k) != 1) out += std::to_string(std::abs(k)) + "*";
    out += v;
  };
  term(g.a, "h");
  term(g.b, "c");
  return out;
}

RationalFunction::RationalFunction(const LaurentPoly& num, const Denominator& den)
    : num_(num), den_(den) {
  if (num_.is_zero()) den_.clear();
  for (auto it = den_.begin(); it != den_.end();) it = it->second == 0 ? den_.erase(it) : ++it;
}

RationalFunction RationalFunction::over(const LaurentPoly& num, int r, int s, int a, int b) {
  auto [g, sign] = LinearForm::make(r, s, a, b);
  return RationalFunction(sign > 0 ? num : -num, Denominator{{g, 1}});
}

namespace {

LaurentPoly expand(const RationalFunction::Denominator& den, int n) {
  LaurentPoly p(n, 1);
  for (const auto& [g, k] : den) p = p * g.to_poly(n).pow(k);
  return p;
}

RationalFunction::Denominator merge_max(const RationalFunction::Denominator& a,
                                        const RationalFunction::Denominator& b) {
  RationalFunction::Denominator d = a;
  for (const auto& [g, k] : b) d[g] = std::max(d[g], k);
  return d;
}

RationalFunction::Denominator missing(const RationalFunction::Denominator& full,
                                      const RationalFunction::Denominator& part) {
  RationalFunction::Denominator d;
  for (const auto& [g, k] : full) {
    auto it = part.find(g);
    int have = it == part.end() ? 0 : it->second;
    if (k > have) d[g] = k - have;
  }
  return d;
}

}  // namespace

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  const int n = num_.n();
  Denominator d = merge_max(den_, o.den_);
  LaurentPoly num = num_ * expand(missing(d, den_), n) + o.num_ * expand(missing(d, o.den_), n);
  return RationalFunction(num, d);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  *this = *this + o;
  return *this;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction(LaurentPoly(num_.n()));
  Denominator d = den_;
  for (const auto& [g, k] : o.den_) d[g] += k;
  return RationalFunction(num_ * o.num_, d);
}

RationalFunction RationalFunction::operator*(const LaurentPoly& p) const {
  return RationalFunction(num_ * p, den_);
}

RationalFunction RationalFunction::operator*(const Rational& q) const {
  return RationalFunction(num_ * q, den_);
}

RationalFunction RationalFunction::simplified() const {
  if (num_.is_zero()) return RationalFunction(num_);
  LaurentPoly num = num_;
  Denominator d;
  for (const auto& [g, k] : den_) {
    int left = k;
    while (left > 0) {
      auto q = exact_divide(num, g);
      if (!q) break;
      num = *q;
      --left;
    }
    if (left > 0) d[g] = left;
  }
  return RationalFunction(num, d);
}

bool RationalFunction::equals(const RationalFunction& o) const { return (*this - o).is_zero(); }

RationalFunction RationalFunction::permuted(const Perm& w) const {
  LaurentPoly num = permute(w, num_);
  Denominator d;
  int sign = 1;
  for (const auto& [g, k] : den_) {
    auto [h, s] = LinearForm::make(w[g.r], w[g.s], g.a, g.b);
    d[h] += k;
    if (s < 0 && k % 2) sign = -sign;
  }
  return RationalFunction(sign > 0 ? num : -num, d);
}

RationalFunction RationalFunction::shifted(const std::vector<int>& lambda, int sign) const {
  Denominator d;
  for (const auto& [g, k] : den_) {
    LinearForm h = g;
    h.a += sign * (lambda[g.r] - lambda[g.s]);
    d[h] += k;
  }
  return RationalFunction(shift(lambda, num_, sign), d);
}

RationalFunction RationalFunction::acted(const Perm& w, const std::vector<int>& lambda) const {
  return permuted(w).shifted(lambda);
}

RationalFunction RationalFunction::reparam(int sc, int m, int sh) const {
  Denominator d;
  for (const auto& [g, k] : den_) {
    LinearForm h = g;
    h.a = g.a * sh + g.b * m;
    h.b = g.b * sc;
    d[h] += k;
  }
  return RationalFunction(daha::reparam(num_, sc, m, sh), d);
}

RationalFunction RationalFunction::specialize_zero_ch() const {
  Denominator d;
  for (const auto& [g, k] : den_) d[LinearForm{g.r, g.s, 0, 0}] += k;
  return RationalFunction(daha::specialize_zero_ch(num_), d);
}

std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) return to_string(f.numerator());
  std::string out = "(" + to_string(f.numerator()) + ")/(";
  bool first = true;
  for (const auto& [g, k] : f.denominator()) {
    if (!first) out += "*";
    first = false;
    out += "(" + to_string(g) + ")";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out + ")";
}

}  // namespace daha
