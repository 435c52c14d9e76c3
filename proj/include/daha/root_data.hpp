#pragma once

#include <string>
#include <vector>

#include "daha/algebra.hpp"

namespace daha {

using IntMatrix = std::vector<std::vector<int>>;

// Roots are integer functionals on t (y_alpha = sum a_k y_k); coroots are
// cocharacters (x^{alpha^vee}). Weyl group elements act on cocharacters.
struct RootData {
  std::string name;
  int rank = 1;
  std::vector<std::vector<int>> positive_roots;
  std::vector<std::vector<int>> positive_coroots;
  std::vector<IntMatrix> weyl;  // all elements, identity first
  std::vector<int> weyl_sign;   // determinant of each element
  bool type_a = false;

  static RootData type_A(int n);
  static RootData sl2();
  static RootData pgl2();
  static RootData c2();
  static RootData g2();
  // Closes the simple reflections of the given roots under multiplication.
  static RootData from_simple(const std::string& name, int rank,
                              const std::vector<std::vector<int>>& pos_roots,
                              const std::vector<std::vector<int>>& pos_coroots,
                              const std::vector<int>& simple_indices);

  std::size_t order() const { return weyl.size(); }
  LaurentPoly root_poly(std::size_t k) const;
  LaurentPoly delta() const;  // product of y_alpha over positive roots
  int pairing(std::size_t root, const std::vector<int>& lambda) const;
};

IntMatrix inverse_unimodular(const IntMatrix& a);

// w acting on the ring: x^lambda -> x^{A lambda}, y linear forms by the dual action.
LaurentPoly weyl_act(const IntMatrix& a, const LaurentPoly& f);
LaurentPoly project_isotypic(const RootData& rd, const LaurentPoly& f, int d);

}  // namespace daha
