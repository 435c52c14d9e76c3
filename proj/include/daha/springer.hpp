#pragma once

#include <vector>

#include "daha/algebra.hpp"
#include "daha/ideals.hpp"
#include "daha/rational_function.hpp"
#include "daha/root_data.hpp"

namespace daha {

// Graded module sum_j I^(k+j) in the Delta-twisted normalization, where the
// action of sum_d e_d I^(d) is multiplication.
struct EquivaluedModule {
  RootData roots;
  int k = 0;
};

struct ModuleElt {
  int grade = 0;
  LaurentPoly value;
  bool operator==(const ModuleElt&) const = default;
};

// Checks membership of value in I^(k+j).
ModuleElt make_module_elt(const EquivaluedModule& mod, int j, const LaurentPoly& value);
// a must lie in e_d I^(d).
ModuleElt module_act(const EquivaluedModule& mod, const LaurentPoly& a, int d, const ModuleElt& m);
ModuleElt module_add(const ModuleElt& a, const ModuleElt& b);
// value / Delta^j, type A only.
RationalFunction untwisted_value(const EquivaluedModule& mod, const ModuleElt& m);
GradedSlice module_slice_basis(const EquivaluedModule& mod, int j, const Window& w,
                               std::size_t cap = kDefaultWindowCap);

struct ChainModel {
  int d = 0;
  int length = 1;
};

// Borel-Moore Poincare coefficients (index = power of q) from the affine paving.
std::vector<long> chain_poincare(const ChainModel& c);

}  // namespace daha
