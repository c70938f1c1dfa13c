#include "gsgp/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsgp {

const char* ideal_kind_name(IdealKind kind) {
  switch (kind) {
    case IdealKind::left: return "left";
    case IdealKind::right: return "right";
    case IdealKind::two_sided: return "two-sided";
    case IdealKind::quasi: return "quasi";
  }
  return "?";
}

ElementSet principal_left_ideal(const GammaSemigroup& M, Elem a) {
  ElementSet s = ElementSet::single(M.size(), a);
  return s | set_product(M, ElementSet::full(M.size()), s);
}

ElementSet principal_right_ideal(const GammaSemigroup& M, Elem a) {
  ElementSet s = ElementSet::single(M.size(), a);
  return s | set_product(M, s, ElementSet::full(M.size()));
}

ElementSet principal_two_sided_ideal(const GammaSemigroup& M, Elem a) {
  ElementSet s = ElementSet::single(M.size(), a);
  ElementSet all = ElementSet::full(M.size());
  ElementSet left = set_product(M, all, s);
  ElementSet right = set_product(M, s, all);
  return s | left | right | set_product(M, left, all);
}

ElementSet ideal_closure(const GammaSemigroup& M, const ElementSet& s, IdealKind kind) {
  if (s.empty()) throw std::invalid_argument("ideal_closure: empty generating set");
  ElementSet all = ElementSet::full(M.size());
  switch (kind) {
    case IdealKind::left:
      return s | set_product(M, all, s);
    case IdealKind::right:
      return s | set_product(M, s, all);
    case IdealKind::two_sided: {
      ElementSet left = set_product(M, all, s);
      return s | left | set_product(M, s, all) | set_product(M, left, all);
    }
    case IdealKind::quasi:
      throw std::invalid_argument("ideal_closure: quasi-ideals are not closure-generated");
  }
  throw std::invalid_argument("ideal_closure: bad kind");
}

bool is_ideal(const GammaSemigroup& M, const ElementSet& s, IdealKind kind) {
  if (s.empty()) return false;
  ElementSet all = ElementSet::full(M.size());
  switch (kind) {
    case IdealKind::left:
      return set_product(M, all, s).is_subset_of(s);
    case IdealKind::right:
      return set_product(M, s, all).is_subset_of(s);
    case IdealKind::two_sided:
      return set_product(M, all, s).is_subset_of(s) && set_product(M, s, all).is_subset_of(s);
    case IdealKind::quasi:
      return (set_product(M, all, s) & set_product(M, s, all)).is_subset_of(s);
  }
  return false;
}

std::vector<ElementSet> enumerate_ideals(const GammaSemigroup& M, IdealKind kind) {
  const int m = M.size();
  if (m > 20) throw std::invalid_argument("enumerate_ideals: carrier too large for subset scan");
  std::vector<ElementSet> out;
  for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
    ElementSet s(m);
    for (Elem a = 0; a < m; ++a)
      if (mask & (uint32_t{1} << a)) s.insert(a);
    if (is_ideal(M, s, kind)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

bool is_0_semiprime(const GammaSemigroup& M, const ElementSet& A, IdealKind kind) {
  if (!M.has_zero()) throw std::invalid_argument("is_0_semiprime: structure has no zero");
  if (!is_ideal(M, A, kind) || !A.contains(*M.zero()))
    throw std::invalid_argument("is_0_semiprime: A is not an ideal containing the zero");
  const Elem z = *M.zero();
  for (Elem x = 0; x < M.size(); ++x)
    for (int gamma = 0; gamma < M.operator_count(); ++gamma) {
      Elem sq = M.product(gamma, x, x);
      if (sq != z && A.contains(sq) && !A.contains(x)) return false;
    }
  return true;
}

bool all_ideals_0_semiprime_by_enumeration(const GammaSemigroup& M, IdealKind kind) {
  for (const ElementSet& s : enumerate_ideals(M, kind))
    if (!is_0_semiprime(M, s, kind)) return false;
  return true;
}

bool all_ideals_0_semiprime_by_closure(const GammaSemigroup& M, IdealKind kind) {
  if (!M.has_zero())
    throw std::invalid_argument("all_ideals_0_semiprime: structure has no zero");
  const Elem z = *M.zero();
  for (Elem x = 0; x < M.size(); ++x)
    for (int gamma = 0; gamma < M.operator_count(); ++gamma) {
      Elem sq = M.product(gamma, x, x);
      if (sq != z &&
          !ideal_closure(M, ElementSet::single(M.size(), sq), kind).contains(x))
        return false;
    }
  return true;
}

bool all_ideals_0_semiprime(const GammaSemigroup& M, IdealKind kind) {
  if (kind == IdealKind::quasi)
    throw std::invalid_argument("all_ideals_0_semiprime: quasi kind not supported");
  if (!M.has_zero())
    throw std::invalid_argument("all_ideals_0_semiprime: structure has no zero");
  bool a = all_ideals_0_semiprime_by_enumeration(M, kind);
  bool b = all_ideals_0_semiprime_by_closure(M, kind);
  if (a != b)
    throw std::logic_error("all_ideals_0_semiprime: enumeration and closure routes disagree");
  return a;
}

ElementSet square_set(const GammaSemigroup& M, Elem x) {
  ElementSet out(M.size());
  for (int gamma = 0; gamma < M.operator_count(); ++gamma)
    out.insert(M.product(gamma, x, x));
  return out;
}

}  // namespace gsgp
