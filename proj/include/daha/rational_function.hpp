#pragma once

#include <map>
#include <string>
#include <vector>

#include "daha/algebra.hpp"

namespace daha {

// y_r - y_s + a*h + b*c with r < s after normalization.
struct LinearForm {
  int r = 0;
  int s = 1;
  int a = 0;
  int b = 0;

  // Builds y_r - y_s + a h + b c for any r != s; returns the sign (+1 or -1)
  // by which the stored canonical form differs from the requested one.
  static std::pair<LinearForm, int> make(int r, int s, int a, int b);

  LaurentPoly to_poly(int n) const;
  auto operator<=>(const LinearForm&) const = default;
  bool operator==(const LinearForm&) const = default;
};

std::string to_string(const LinearForm& g);

class RationalFunction {
 public:
  using Denominator = std::map<LinearForm, int>;

  RationalFunction() = default;
  explicit RationalFunction(const LaurentPoly& num) : num_(num) {}
  RationalFunction(const LaurentPoly& num, const Denominator& den);

  // num / (y_r - y_s + a h + b c), sign-normalized.
  static RationalFunction over(const LaurentPoly& num, int r, int s, int a = 0, int b = 0);

  const LaurentPoly& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  int n() const { return num_.n(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator*(const LaurentPoly& p) const;
  RationalFunction operator*(const Rational& q) const;
  RationalFunction& operator+=(const RationalFunction& o);

  // Cancels every denominator factor that divides the numerator.
  RationalFunction simplified() const;
  bool equals(const RationalFunction& o) const;

  RationalFunction permuted(const Perm& w) const;
  RationalFunction shifted(const std::vector<int>& lambda, int sign = 1) const;
  RationalFunction acted(const Perm& w, const std::vector<int>& lambda) const;
  RationalFunction reparam(int sc, int m, int sh = 1) const;
  RationalFunction specialize_zero_ch() const;

 private:
  LaurentPoly num_;
  Denominator den_;
};

std::string to_string(const RationalFunction& f);

}  // namespace daha
