#include "daha/springer.hpp"

namespace daha {

ModuleElt make_module_elt(const EquivaluedModule& mod, int j, const LaurentPoly& value) {
  if (mod.k < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "negative valuation or grade");
  MembershipResult r = membership(value, {mod.roots, mod.k + j});
  if (!r.member) throw Error(ErrorCode::MembershipFailure, "module element: " + r.describe());
  return {j, value};
}

ModuleElt module_act(const EquivaluedModule& mod, const LaurentPoly& a, int d, const ModuleElt& m) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  if (project_isotypic(mod.roots, a, d) != a)
    throw Error(ErrorCode::MembershipFailure, "acting element is not in the isotypic component");
  MembershipResult ra = membership(a, {mod.roots, d});
  if (!ra.member) throw Error(ErrorCode::MembershipFailure, "acting element: " + ra.describe());
  MembershipResult rm = membership(m.value, {mod.roots, mod.k + m.grade});
  if (!rm.member) throw Error(ErrorCode::MembershipFailure, "module element: " + rm.describe());
  return make_module_elt(mod, m.grade + d, a * m.value);
}

ModuleElt module_add(const ModuleElt& a, const ModuleElt& b) {
  if (a.grade != b.grade) throw Error(ErrorCode::TagMismatch, "grades differ");
  return {a.grade, a.value + b.value};
}

RationalFunction untwisted_value(const EquivaluedModule& mod, const ModuleElt& m) {
  if (!mod.roots.type_a) throw Error(ErrorCode::UnsupportedRootData, "untwisted view needs type A");
  const int n = mod.roots.rank;
  RationalFunction::Denominator den;
  if (m.grade > 0)
    for (int r = 0; r < n; ++r)
      for (int s = r + 1; s < n; ++s) den[LinearForm::make(r, s, 0, 0).first] = m.grade;
  return RationalFunction(m.value, den).simplified();
}

GradedSlice module_slice_basis(const EquivaluedModule& mod, int j, const Window& w, std::size_t cap) {
  if (mod.k < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "negative valuation or grade");
  return graded_dimension({mod.roots, mod.k + j}, std::nullopt, w, cap);
}

std::vector<long> chain_poincare(const ChainModel& c) {
  if (c.d < 0 || c.length < 1) throw Error(ErrorCode::InvalidArgument, "chain needs d >= 0, L >= 1");
  std::vector<long> coeffs(c.d + 2, 1);
  coeffs[c.d + 1] += c.length - 1;
  return coeffs;
}

}  // namespace daha
