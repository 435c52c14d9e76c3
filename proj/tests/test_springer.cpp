#include <gtest/gtest.h>

#include <numeric>

#include "daha/dunkl.hpp"
#include "daha/springer.hpp"
#include "test_util.hpp"

using namespace daha;
using daha::testing::draw;
using daha::testing::parse;

namespace {

LaurentPoly combination(std::mt19937_64& g, const std::vector<LaurentPoly>& basis, int n) {
  LaurentPoly out(n);
  for (const auto& b : basis) out += b * Rational(draw(g, -2, 2));
  return out;
}

// Dimension of I^(d) in the window with no projection, straight from the
// Taylor coefficients of each window monomial.
std::size_t brute_force_slice(int n, int d, const Window& w) {
  std::vector<LaurentPoly> mons;
  for (const Monomial& m : window_monomials(n, w)) mons.push_back(LaurentPoly::monomial(m));
  std::vector<SparseVec<std::tuple<int, int, int, int, Monomial>>> images;
  for (const LaurentPoly& p : mons) {
    SparseVec<std::tuple<int, int, int, int, Monomial>> img;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        TaylorResult t = taylor_pair(p * LaurentPoly::x(n, i, -w.xlo + 1), i, j, d);
        for (const auto& [ab, c] : t.coeffs)
          for (const auto& [mono, coef] : c.terms())
            img.emplace(std::make_tuple(i, j, ab.first, ab.second, mono), coef);
      }
    images.push_back(img);
  }
  return kernel_combinations(images).size();
}

}  // namespace

TEST(ModuleAct, Examples) {
  EquivaluedModule mod{RootData::type_A(2), 0};
  ModuleElt one = make_module_elt(mod, 0, LaurentPoly(2, 1));
  LaurentPoly a = parse("1/2*x1 - 1/2*x2", 2);
  ModuleElt out = module_act(mod, a, 1, one);
  EXPECT_EQ(out.grade, 1);
  EXPECT_EQ(out.value, a);
  ModuleElt twice = module_act(mod, a, 1, out);
  EXPECT_EQ(twice.grade, out.grade + 1);
}

TEST(ModuleAct, RejectsElementsOutsideTheIdeal) {
  EquivaluedModule mod{RootData::type_A(2), 1};
  EXPECT_THROW(make_module_elt(mod, 0, LaurentPoly(2, 1)), Error);
  ModuleElt m = make_module_elt(mod, 0, parse("y1 - y2", 2));
  // Symmetric but not in I^(1).
  EXPECT_THROW(module_act(mod, parse("x1 + x2", 2), 1, m), Error);
  // Wrong isotypic part.
  EXPECT_THROW(module_act(mod, parse("y1 - y2", 2), 2, m), Error);
  EXPECT_THROW(module_add(m, module_act(mod, parse("y1 - y2", 2), 1, m)), Error);
}

TEST(ModuleAct, AxiomsOnRandomInstances) {
  std::mt19937_64 g(51);
  RootData rd = RootData::type_A(2);
  Window w{0, 1, 2};
  std::vector<std::vector<LaurentPoly>> acting(3);
  for (int d = 0; d <= 2; ++d) acting[d] = graded_dimension({rd, d}, d % 2, w).basis;
  for (int k = 0; k <= 1; ++k) {
    EquivaluedModule mod{rd, k};
    std::vector<std::vector<LaurentPoly>> grades(3);
    for (int j = 0; j <= 2; ++j) grades[j] = module_slice_basis(mod, j, Window{0, 1, 1}).basis;
    for (int t = 0; t < 20; ++t) {
      int d1 = draw(g, 0, 1), d2 = draw(g, 0, 1), j = draw(g, 0, 2);
      LaurentPoly a = combination(g, acting[d1], 2), b = combination(g, acting[d2], 2);
      LaurentPoly b2 = combination(g, acting[d2], 2);
      ModuleElt m = make_module_elt(mod, j, combination(g, grades[j], 2));
      ModuleElt lhs = module_act(mod, a * b, d1 + d2, m);
      ModuleElt rhs = module_act(mod, a, d1, module_act(mod, b, d2, m));
      ASSERT_EQ(lhs, rhs);
      ASSERT_EQ(lhs.grade, j + d1 + d2);
      ASSERT_EQ(module_act(mod, b + b2, d2, m), module_add(module_act(mod, b, d2, m), module_act(mod, b2, d2, m)));
    }
  }
}

TEST(ModuleSlice, Examples) {
  RootData rd = RootData::type_A(2);
  Window w{0, 1, 1};
  EXPECT_EQ(module_slice_basis({rd, 0}, 0, w).dimension(), window_size(2, w));
  std::size_t k1 = module_slice_basis({rd, 1}, 0, w).dimension();
  EXPECT_EQ(k1, brute_force_slice(2, 1, w));
  EXPECT_EQ(k1, 6u);
  for (int j = 0; j <= 2; ++j) {
    GradedSlice m = module_slice_basis({rd, 0}, j, Window{0, 1, 2});
    GradedSlice s = graded_dimension({rd, j}, std::nullopt, Window{0, 1, 2});
    EXPECT_EQ(m.basis, s.basis);
  }
}

TEST(ModuleSlice, UntwistedValueDividesByDelta) {
  EquivaluedModule mod{RootData::type_A(2), 0};
  LaurentPoly g = parse("x1 + y2", 2);
  ModuleElt m = make_module_elt(mod, 2, g * vandermonde(2).pow(2));
  RationalFunction u = untwisted_value(mod, m);
  EXPECT_TRUE(u.is_polynomial());
  EXPECT_EQ(u.numerator(), g);
}

TEST(ChainPoincare, Examples) {
  for (int d = 0; d <= 4; ++d) {
    std::vector<long> c = chain_poincare({d, 1});
    EXPECT_EQ(c, std::vector<long>(d + 2, 1));
  }
  EXPECT_EQ(chain_poincare({1, 3}), (std::vector<long>{1, 1, 3}));
  for (int d = 0; d <= 3; ++d)
    for (int l = 1; l <= 4; ++l) {
      std::vector<long> c = chain_poincare({d, l});
      EXPECT_EQ(std::accumulate(c.begin(), c.end(), 0L), (d + 2) + (l - 1));
      EXPECT_EQ(c.front(), 1);
      for (long v : c) EXPECT_GE(v, 0);
    }
  EXPECT_THROW(chain_poincare({-1, 1}), Error);
  EXPECT_THROW(chain_poincare({1, 0}), Error);
}
