#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "daha/algebra.hpp"
#include "daha/linalg.hpp"
#include "daha/report.hpp"
#include "daha/root_data.hpp"

namespace daha {

// ---- determinant bases ----------------------------------------------------

// n distinct points (a, b) with a >= 0. The row order is kept as given since
// the determinant depends on it; canonical() returns the sorted copy.
struct PlaneSubset {
  std::vector<std::pair<int, int>> points;

  int n() const { return static_cast<int>(points.size()); }
  void validate() const;
  PlaneSubset canonical() const;
};

// (1/n!) det(y_i^{a_j} x_i^{b_j}).
LaurentPoly delta_S_direct(const PlaneSubset& s);

// Schur polynomial s_mu in the variables y_v (v in vars, 0-based) of the ring of
// rank n, by the bialternant formula. mu is a partition (non-increasing).
LaurentPoly schur_polynomial(const std::vector<int>& mu, const std::vector<int>& vars, int n);

struct SchurForm {
  LaurentPoly value;  // Alt[prod_k s_{mu_k}(y_k) x^lambda prod_{lambda_r = lambda_s, r<s}(y_r - y_s)]
  Rational scalar;    // value = scalar * delta_S_direct(s)
  std::vector<int> lambda;
  std::vector<std::vector<int>> mu;  // one partition per distinct value of lambda, ascending
};
SchurForm delta_S_schur(const PlaneSubset& s);

// ---- ideal membership -----------------------------------------------------

struct IdealSpec {
  RootData roots;
  int d = 0;
};

struct MembershipResult {
  bool member = true;
  std::size_t root = 0;       // index into positive_roots of the first failure
  std::pair<int, int> order;  // (a, b): coefficient of u^a v^b
  LaurentPoly witness;
  std::string describe() const;
};

using TaylorKey = std::tuple<std::size_t, int, int, Monomial>;

// Taylor coefficients of f along the locus of one positive root, in order < d.
// The clearing exponent is chosen from f unless given; a fixed exponent makes
// the map linear.
std::map<std::pair<int, int>, LaurentPoly> root_taylor(const LaurentPoly& f, const RootData& rd,
                                                       std::size_t root, int d,
                                                       std::optional<int> clearing = std::nullopt);
// Minimal clearing exponent needed for f at the given root.
int root_clearing_exponent(const LaurentPoly& f, const RootData& rd, std::size_t root);

MembershipResult membership(const LaurentPoly& f, const IdealSpec& spec);

// ---- graded slices --------------------------------------------------------

// x-exponents in the box [xlo, xhi]^n, total y-degree <= ydeg, no c or h.
struct Window {
  int xlo = 0;
  int xhi = 1;
  int ydeg = 1;
};

std::vector<Monomial> window_monomials(int n, const Window& w);
std::size_t window_size(int n, const Window& w);
bool in_window(const Monomial& m, const Window& w);

struct GradedSlice {
  int n = 1;
  Window window;
  std::optional<int> isotypic;
  int d = 0;
  std::vector<LaurentPoly> basis;  // reduced row echelon form in monomial coordinates

  std::size_t dimension() const { return basis.size(); }
  // Rows of rationals against the listed monomial columns.
  std::string to_json() const;
};

inline constexpr std::size_t kDefaultWindowCap = 20000;

// e_iso(span of window monomials) intersected with I^(d); no projection when
// isotypic is empty.
GradedSlice graded_dimension(const IdealSpec& spec, std::optional<int> isotypic, const Window& w,
                             std::size_t cap = kDefaultWindowCap);

// Dimension of span(gens) intersected with the window span.
std::size_t window_intersection_dimension(const std::vector<LaurentPoly>& gens, const Window& w);

// Products of d antisymmetrized monomials from the generating window, cut down
// to the target window.
std::size_t antisymmetric_power_dimension(const RootData& rd, int d, const Window& target,
                                          const Window& generators);

Report verify_spanning(int n, int d, const Window& w);
// Membership of every reduced class with |lambda_i| <= lam_max and f a
// y-monomial of degree <= fdeg.
Report verify_containment(int n, int d, int lam_max, int fdeg);

}  // namespace daha
