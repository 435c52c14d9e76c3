#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daha/algebra.hpp"
#include "daha/dunkl.hpp"
#include "daha/rational_function.hpp"
#include "daha/report.hpp"
#include "daha/root_data.hpp"

namespace daha {

// ---- abelian Z-algebra -------------------------------------------------

// Torus of rank r; each character is an integer functional on t, written in
// the ring of rank r through y1..yr.
struct AbelianMatter {
  int rank = 1;
  std::vector<std::vector<int>> characters;

  LaurentPoly xi(std::size_t l) const;
  int xi_of(std::size_t l, const std::vector<int>& lambda) const;
};

struct AbelianZElt {
  int i = 0;
  int j = 0;
  std::map<std::vector<int>, LaurentPoly> terms;

  static AbelianZElt basis(int i, int j, const std::vector<int>& lambda, int rank);
  void add_term(const std::vector<int>& lambda, const LaurentPoly& coeff);
  bool operator==(const AbelianZElt&) const = default;
};

// Difference-operator image: lambda -> coefficient of u_lambda, where
// u_lambda g = g(y - h lambda) u_lambda.
using ShiftOperator = std::map<std::vector<int>, LaurentPoly>;

AbelianZElt abelian_product(const AbelianMatter& m, const AbelianZElt& a, const AbelianZElt& b);
LaurentPoly abelian_structure_constant(const AbelianMatter& m, int i, int j, int k,
                                       const std::vector<int>& lambda, const std::vector<int>& mu);
ShiftOperator abelian_embed(const AbelianMatter& m, const AbelianZElt& a);
ShiftOperator shift_compose(const ShiftOperator& a, const ShiftOperator& b);
int abelian_degree(const AbelianMatter& m, int i, int j, const std::vector<int>& lambda);
// Degree of a homogeneous element, or nullopt if it is not homogeneous.
std::optional<int> abelian_homogeneous_degree(const AbelianMatter& m, const AbelianZElt& a);

int epsilon(int x, int i, int j);
int epsilon_pair_closed_form(int x, int i, int j);

// ---- GL_n localized classes --------------------------------------------

struct SphericalClass {
  int i = 0;
  int j = 0;
  int n = 1;
  bool exact = true;
  std::map<std::vector<int>, RationalFunction> terms;

  bool is_equivariant() const;
  bool equals(const SphericalClass& o) const;
  SphericalClass reparam(int sc, int m, int sh = 1) const;
  SphericalClass specialize_zero_ch() const;
  SphericalClass operator*(const Rational& q) const;
};

std::vector<std::vector<int>> weyl_orbit(const std::vector<int>& lambda);
int stabilizer_order(const std::vector<int>& lambda);

SphericalClass class_localized(const std::vector<int>& lambda, const LaurentPoly& f, int i, int j);
SphericalClass spherical_compose(const SphericalClass& a, const SphericalClass& b);
// Coefficients of op restricted to symmetric functions: lambda -> sum over w.
SphericalClass restrict_to_symmetric(const DiffReflOp& op, int i = 0, int j = 0);

enum class Normalization { Raw, Reduced };
LaurentPoly class_commutative(const std::vector<int>& lambda, const LaurentPoly& f, int d,
                              const RootData& roots, Normalization norm = Normalization::Reduced);
// Coefficient of x^lambda in f, as a polynomial in the remaining variables.
LaurentPoly x_coefficient(const LaurentPoly& f, const std::vector<int>& lambda);
SphericalClass as_spherical(const LaurentPoly& f, int i, int j);
LaurentPoly as_polynomial(const SphericalClass& s);

// ---- splitting and factorization ----------------------------------------

struct CoweightSplit {
  std::vector<int> lambda;
  int d = 1;
  std::vector<std::vector<int>> mu;
};

CoweightSplit split_coweight(const std::vector<int>& lambda, int d);
// Checks sum and conditions (1), (2); returns a description of the first violation.
std::optional<std::string> check_split(const CoweightSplit& s);

Report verify_factorization(const std::vector<int>& lambda, int d);

// ---- convention matching -----------------------------------------------

struct ConventionDictionary {
  int pair_sign = 1;  // per root pair with alpha(lambda') = 1
  int c_sign = 1;     // c -> c_sign*c + c_shift*h on the closed-form side
  int c_shift = 0;
  int level = 0;      // the tag i used in the search
};

std::string to_string(const ConventionDictionary& d);
// Applies the dictionary to class_localized(lambda, 1, i, i) and compares with
// the closed E_lambda; returns a witness on mismatch.
std::optional<std::string> check_dictionary(const ConventionDictionary& d,
                                            const std::vector<int>& lambda,
                                            ELambdaMode mode = ELambdaMode::Closed,
                                            bool at_zero = false);
std::vector<ConventionDictionary> dictionary_candidates(const std::vector<int>& lambda, int level,
                                                        bool at_zero = false);
ConventionDictionary match_conventions(int n, int level = 0);
// Generators vs closed form of E_lambda for each fundamental coweight, and the
// localized classes under the dictionary found at n = 2.
Report verify_e_lambda(int n);

}  // namespace daha
