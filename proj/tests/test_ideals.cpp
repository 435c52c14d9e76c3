#include <gtest/gtest.h>

#include "daha/coulomb.hpp"
#include "daha/dunkl.hpp"
#include "daha/ideals.hpp"
#include "test_util.hpp"

using namespace daha;
using daha::testing::draw;
using daha::testing::parse;

namespace {

PlaneSubset random_subset(std::mt19937_64& g, int n, int hi) {
  PlaneSubset s;
  while (s.n() < n) {
    std::pair<int, int> p{draw(g, 0, hi), draw(g, 0, hi)};
    bool fresh = true;
    for (const auto& q : s.points) fresh = fresh && q != p;
    if (fresh) s.points.push_back(p);
  }
  return s;
}

LaurentPoly swap_vars(const LaurentPoly& f, int i, int j) {
  return permute(transposition(f.n(), i, j), f);
}

// Brute force: project every window monomial, keep an independent set, and
// count the kernel of the Taylor map along every pair (i, j) directly.
std::size_t brute_force_anti_slice(int n, int d, const Window& w) {
  std::vector<LaurentPoly> anti;
  Echelon<Monomial> seen;
  for (const Monomial& m : window_monomials(n, w)) {
    LaurentPoly p = project_isotypic(LaurentPoly::monomial(m), d % 2);
    if (seen.insert(p.terms())) anti.push_back(p);
  }
  std::vector<SparseVec<std::tuple<int, int, int, int, Monomial>>> images;
  for (const LaurentPoly& p : anti) {
    SparseVec<std::tuple<int, int, int, int, Monomial>> img;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        // x_i is a unit, so a fixed clearing exponent keeps the map linear.
        LaurentPoly q = p * LaurentPoly::x(n, i, -w.xlo + 1);
        TaylorResult t = taylor_pair(q, i, j, d);
        for (const auto& [ab, c] : t.coeffs)
          for (const auto& [mono, coef] : c.terms())
            img.emplace(std::make_tuple(i, j, ab.first, ab.second, mono), coef);
      }
    images.push_back(img);
  }
  return kernel_combinations(images).size();
}

}  // namespace

TEST(DeltaS, DirectExamples) {
  EXPECT_EQ(delta_S_direct({{{1, 0}, {0, 0}}}), parse("1/2*y1 - 1/2*y2", 2));
  EXPECT_EQ(delta_S_direct({{{0, 0}, {0, 1}}}), parse("1/2*x2 - 1/2*x1", 2));
  PlaneSubset s{{{2, 0}, {1, 1}, {0, 3}}};
  PlaneSubset t{{{1, 1}, {2, 0}, {0, 3}}};
  EXPECT_EQ(delta_S_direct(t), -delta_S_direct(s));
}

TEST(DeltaS, WorkedExampleSchurForm) {
  PlaneSubset s{{{5, 0}, {3, 1}, {7, 1}, {2, 2}}};
  SchurForm sf = delta_S_schur(s);
  EXPECT_EQ(sf.lambda, (std::vector<int>{0, 1, 1, 2}));
  EXPECT_EQ(sf.mu, (std::vector<std::vector<int>>{{5}, {6, 3}, {2}}));
  // s_{6,3}(y2, y3) (y2 - y3) is the alternant y2^7 y3^3 - y2^3 y3^7.
  EXPECT_EQ(schur_polynomial({6, 3}, {1, 2}, 4) * parse("y2 - y3", 4),
            parse("y2^7*y3^3 - y2^3*y3^7", 4));
  LaurentPoly body = parse("y1^5*(y2^7*y3^3 - y2^3*y3^7)*y4^2*x2*x3*x4^2", 4);
  EXPECT_EQ(sf.value, project_isotypic(body, 1));
  // The two alternant terms contribute equally with opposite orientation.
  EXPECT_EQ(sf.scalar, Rational(-2));
  EXPECT_EQ(sf.value, delta_S_direct(s) * sf.scalar);
}

TEST(DeltaS, ColumnPartitionGivesVandermonde) {
  for (int m = 1; m <= 4; ++m) {
    PlaneSubset s;
    for (int a = 0; a < m; ++a) s.points.push_back({a, 0});
    EXPECT_EQ(delta_S_schur(s).value, vandermonde(m)) << m;
  }
}

TEST(DeltaS, SchurRouteProportionalOnRandomSubsets) {
  std::mt19937_64 g(41);
  for (int t = 0; t < 50; ++t) {
    int n = draw(g, 1, 4);
    PlaneSubset s = random_subset(g, n, n == 4 ? 3 : 4);
    SchurForm sf = delta_S_schur(s);
    LaurentPoly direct = delta_S_direct(s);
    ASSERT_FALSE(sf.scalar == 0);
    ASSERT_EQ(sf.value, direct * sf.scalar);
  }
}

TEST(DeltaS, AntisymmetricAndInFirstSymbolicPower) {
  std::mt19937_64 g(42);
  for (int t = 0; t < 30; ++t) {
    int n = draw(g, 2, 4);
    PlaneSubset s = random_subset(g, n, 3);
    LaurentPoly f = delta_S_direct(s);
    int i = draw(g, 0, n - 1), j = (i + draw(g, 1, n - 1)) % n;
    ASSERT_EQ(swap_vars(f, i, j), -f);
    ASSERT_TRUE(membership(f, {RootData::type_A(n), 1}).member);
  }
}

TEST(DeltaS, InvalidSubsets) {
  EXPECT_THROW(delta_S_direct({{{1, 0}, {1, 0}}}), Error);
  EXPECT_THROW(delta_S_direct({{{-1, 0}, {1, 0}}}), Error);
}

TEST(Membership, Examples) {
  RootData a2 = RootData::type_A(2);
  LaurentPoly delta = parse("y1 - y2", 2);
  EXPECT_TRUE(membership(delta, {a2, 1}).member);
  MembershipResult r = membership(delta, {a2, 2});
  EXPECT_FALSE(r.member);
  EXPECT_EQ(r.order, std::make_pair(0, 1));
  EXPECT_FALSE(r.witness.is_zero());
  EXPECT_TRUE(membership(parse("(x1 - x2)*(y1 - y2)", 2), {a2, 2}).member);
  EXPECT_TRUE(membership(parse("7*x1^-2 + y2", 2), {a2, 0}).member);
}

TEST(Membership, IdealProperties) {
  std::mt19937_64 g(43);
  for (int t = 0; t < 30; ++t) {
    int n = draw(g, 2, 3);
    RootData rd = RootData::type_A(n);
    LaurentPoly u(n, 1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) u = u * (LaurentPoly::x(n, i) - LaurentPoly::x(n, j));
    auto rnd = [&] { return daha::testing::random_poly(g, n, 2, 1, 1, false); };
    int d1 = draw(g, 0, 2), d2 = draw(g, 0, 2);
    LaurentPoly f = vandermonde(n).pow(d1) * rnd();
    LaurentPoly h = u.pow(d1) * rnd();
    LaurentPoly k = (vandermonde(n) * rnd() + u * rnd()).pow(d2);
    ASSERT_TRUE(membership(f, {rd, d1}).member);
    ASSERT_TRUE(membership(h, {rd, d1}).member);
    ASSERT_TRUE(membership(k, {rd, d2}).member);
    ASSERT_TRUE(membership(f + h, {rd, d1}).member);
    ASSERT_TRUE(membership(f * rnd(), {rd, d1}).member);
    ASSERT_TRUE(membership((f + h) * k, {rd, d1 + d2}).member);
  }
}

TEST(Membership, ProductRuleOnAntisymmetricProducts) {
  std::mt19937_64 g(44);
  RootData rd = RootData::type_A(2);
  for (int t = 0; t < 20; ++t) {
    PlaneSubset s1 = random_subset(g, 2, 3), s2 = random_subset(g, 2, 3);
    LaurentPoly f = delta_S_direct(s1), h = delta_S_direct(s2);
    ASSERT_TRUE(membership(f * h, {rd, 2}).member);
    ASSERT_TRUE(membership(f * h * f, {rd, 3}).member);
  }
}

TEST(Membership, GeneralChartsAgreeWithTypeA) {
  RootData a3 = RootData::type_A(3);
  RootData general = a3;
  general.type_a = false;
  for (auto lam : std::vector<std::vector<int>>{{2, 0, 0}, {1, 1, 0}, {2, 1, 0}, {0, 0, 0}, {-1, 1, 0}})
    for (int d = 1; d <= 3; ++d) {
      LaurentPoly cls = class_commutative(lam, LaurentPoly(3, 1), d, a3);
      for (int dd = 1; dd <= 3; ++dd)
        ASSERT_EQ(membership(cls, {a3, dd}).member, membership(cls, {general, dd}).member);
    }
}

TEST(Membership, OtherRootData) {
  for (RootData rd : {RootData::sl2(), RootData::pgl2(), RootData::c2(), RootData::g2()}) {
    LaurentPoly delta = rd.delta();
    EXPECT_TRUE(membership(delta, {rd, 1}).member) << rd.name;
    EXPECT_FALSE(membership(delta, {rd, 2}).member) << rd.name;
    EXPECT_TRUE(membership(delta * delta, {rd, 2}).member) << rd.name;
  }
}

TEST(GradedDimension, Examples) {
  RootData a2 = RootData::type_A(2);
  Window w{0, 1, 1};
  EXPECT_EQ(graded_dimension({a2, 0}, std::nullopt, w).dimension(), 12u);
  EXPECT_EQ(window_size(2, w), 12u);
  EXPECT_EQ(graded_dimension({a2, 1}, 1, w).dimension(), 5u);
}

TEST(GradedDimension, IndependentBruteForceOracle) {
  for (int d = 0; d <= 2; ++d)
    for (int ydeg = 1; ydeg <= 2; ++ydeg) {
      Window w{0, 1, ydeg};
      EXPECT_EQ(graded_dimension({RootData::type_A(2), d}, d % 2, w).dimension(),
                brute_force_anti_slice(2, d, w))
          << "d=" << d << " ydeg=" << ydeg;
    }
  EXPECT_EQ(brute_force_anti_slice(2, 1, Window{0, 1, 1}), 5u);
}

TEST(GradedDimension, WindowMonotone) {
  RootData a2 = RootData::type_A(2);
  for (int d = 0; d <= 2; ++d) {
    std::size_t prev = 0;
    for (Window w : {Window{0, 0, 1}, Window{0, 1, 1}, Window{0, 1, 2}, Window{-1, 1, 2}}) {
      std::size_t dim = graded_dimension({a2, d}, d % 2, w).dimension();
      EXPECT_GE(dim, prev) << "d=" << d;
      prev = dim;
    }
  }
}

TEST(GradedDimension, WindowTooLarge) {
  try {
    graded_dimension({RootData::type_A(4), 1}, 1, Window{-3, 3, 4}, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WindowTooLarge);
  }
}

TEST(GradedDimension, SliceBasisIsInTheIdeal) {
  RootData a2 = RootData::type_A(2);
  GradedSlice s = graded_dimension({a2, 2}, 0, Window{0, 1, 2});
  for (const LaurentPoly& b : s.basis) {
    EXPECT_TRUE(membership(b, {a2, 2}).member);
    EXPECT_EQ(project_isotypic(b, 0), b);
  }
}

TEST(RankOne, PglTwoSliceMatchesPowersOfAntiinvariants) {
  RootData rd = RootData::pgl2();
  const std::size_t expect[] = {5, 4, 3, 1};
  for (int d = 0; d <= 3; ++d) {
    Window target{-1, 1, 2}, gens{-3, 3, 4};
    std::size_t slice = graded_dimension({rd, d}, d, target).dimension();
    EXPECT_EQ(slice, antisymmetric_power_dimension(rd, d, target, gens)) << "d=" << d;
    EXPECT_EQ(slice, expect[d]);
  }
}

// For SL2 the torus also has the W-fixed point x = -1, where the coroot
// x^2 - 1 vanishes too, and the two sides differ from d = 2 on.
TEST(RankOne, SlTwoCharacterization) {
  RootData rd = RootData::sl2();
  const std::size_t slice_dims[] = {5, 4, 4, 2};
  const std::size_t power_dims[] = {5, 4, 3, 1};
  for (int d = 0; d <= 3; ++d) {
    Window target{-1, 1, 2}, gens{-3, 3, 4};
    EXPECT_EQ(graded_dimension({rd, d}, d, target).dimension(), slice_dims[d]);
    EXPECT_EQ(antisymmetric_power_dimension(rd, d, target, gens), power_dims[d]);
  }
}

TEST(Spanning, RankOneIsFullSlice) {
  Report r = verify_spanning(1, 0, Window{-1, 1, 2});
  EXPECT_TRUE(r.all_pass()) << serialize(r);
}

TEST(Spanning, RankTwoWindows) {
  Report r = verify_spanning(2, 1, Window{0, 1, 1});
  EXPECT_TRUE(r.all_pass()) << serialize(r);
  for (int d = 0; d <= 2; ++d) {
    Report s = verify_spanning(2, d, Window{0, 1, 2});
    EXPECT_TRUE(s.all_pass()) << serialize(s);
  }
}

// Literal reduced classes with |lambda_1 - lambda_2| < d are leading terms only;
// (x1^2 + x2^2)/2 does not vanish on the diagonal.
TEST(Containment, LiteralClassesFailFromDegreeTwo) {
  EXPECT_TRUE(verify_containment(2, 1, 2, 2).all_pass());
  Report r = verify_containment(2, 2, 2, 0);
  EXPECT_FALSE(r.all_pass());
  LaurentPoly cls = class_commutative({2, 0}, LaurentPoly(2, 1), 2, RootData::type_A(2));
  EXPECT_EQ(cls, parse("1/2*x1^2 + 1/2*x2^2", 2));
  EXPECT_FALSE(membership(cls, {RootData::type_A(2), 1}).member);
}
