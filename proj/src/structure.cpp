#include "gsgp/structure.hpp"

#include <stdexcept>

#include "gsgp/ideals.hpp"
#include "gsgp/regularity.hpp"

namespace gsgp {

bool is_left_simple(const GammaSemigroup& M, const ElementSet& T) {
  if (!is_sub_gamma_semigroup(M, T))
    throw std::invalid_argument("is_left_simple: T is not a sub-Gamma-semigroup");
  for (Elem a : T.elements())
    if (set_product(M, T, ElementSet::single(M.size(), a)) != T) return false;
  return true;
}

bool is_right_simple(const GammaSemigroup& M, const ElementSet& T) {
  if (!is_sub_gamma_semigroup(M, T))
    throw std::invalid_argument("is_right_simple: T is not a sub-Gamma-semigroup");
  for (Elem a : T.elements())
    if (set_product(M, ElementSet::single(M.size(), a), T) != T) return false;
  return true;
}

bool is_gamma_group(const GammaSemigroup& M, const ElementSet& T) {
  return is_left_simple(M, T) && is_right_simple(M, T);
}

std::optional<Decomposition> gamma_group_decomposition(const GammaSemigroup& M) {
  Partition h = h_partition(M);
  Decomposition dec;
  dec.mode = Decomposition::Mode::disjoint;
  for (int i = 0; i < h.block_count(); ++i) {
    ElementSet blk = h.block_set(i);
    if (!set_product(M, blk, blk).is_subset_of(blk)) return std::nullopt;
    if (!is_gamma_group(M, blk)) return std::nullopt;
    dec.components.push_back(std::move(blk));
    dec.labels.push_back("gamma-group");
  }
  return dec;
}

namespace {

ClassSimplicityDetail classes_simple(const GammaSemigroup& M, const Partition& p, bool left) {
  ClassSimplicityDetail d;
  d.all_hold = true;
  for (int i = 0; i < p.block_count(); ++i) {
    ElementSet blk = p.block_set(i);
    bool closed = set_product(M, blk, blk).is_subset_of(blk);
    bool simple = closed && (left ? is_left_simple(M, blk) : is_right_simple(M, blk));
    d.all_hold = d.all_hold && closed && simple;
    d.classes.push_back(std::move(blk));
    d.closed.push_back(closed);
    d.simple.push_back(simple);
  }
  return d;
}

}  // namespace

ClassSimplicityDetail l_classes_left_simple(const GammaSemigroup& M) {
  return classes_simple(M, l_partition(M), true);
}

ClassSimplicityDetail r_classes_right_simple(const GammaSemigroup& M) {
  return classes_simple(M, r_partition(M), false);
}

bool is_union_of_gamma_groups(const GammaSemigroup& M) {
  const int m = M.size();
  if (m > 20)
    throw std::invalid_argument("is_union_of_gamma_groups: carrier too large for subset scan");
  std::vector<bool> covered(m, false);
  for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
    ElementSet s(m);
    for (Elem a = 0; a < m; ++a)
      if (mask & (uint32_t{1} << a)) s.insert(a);
    if (!set_product(M, s, s).is_subset_of(s)) continue;
    if (!is_gamma_group(M, s)) continue;
    for (Elem a : s.elements()) covered[a] = true;
  }
  for (Elem a = 0; a < m; ++a)
    if (!covered[a]) return false;
  return true;
}

bool is_0_simple(const GammaSemigroup& M) {
  if (!M.has_zero()) throw std::invalid_argument("is_0_simple: structure has no zero");
  if (M.size() < 2) throw std::invalid_argument("is_0_simple: need at least two elements");
  const Elem z = *M.zero();
  ElementSet all = ElementSet::full(M.size());
  if (set_product(M, all, all) == ElementSet::single(M.size(), z)) return false;
  for (Elem a = 0; a < M.size(); ++a)
    if (a != z && principal_two_sided_ideal(M, a) != all) return false;
  return true;
}

namespace {

bool is_idempotent_somewhere(const GammaSemigroup& M, Elem e) {
  for (int gamma = 0; gamma < M.operator_count(); ++gamma)
    if (M.product(gamma, e, e) == e) return true;
  return false;
}

// f under e: f = f alpha e and f = e beta f for some alpha, beta. With
// several operators this is only a preorder, so primitivity below asks
// for minimality up to the induced equivalence.
bool idempotent_below(const GammaSemigroup& M, Elem f, Elem e) {
  bool left = false, right = false;
  for (int alpha = 0; alpha < M.operator_count(); ++alpha) {
    left = left || M.product(alpha, f, e) == f;
    right = right || M.product(alpha, e, f) == f;
  }
  return left && right;
}

}  // namespace

bool is_primitive_idempotent(const GammaSemigroup& M, Elem e) {
  if (!M.has_zero()) throw std::invalid_argument("is_primitive_idempotent: no zero");
  const Elem z = *M.zero();
  if (e == z || !is_idempotent_somewhere(M, e)) return false;

  for (Elem f = 0; f < M.size(); ++f) {
    if (f == z || f == e) continue;
    if (!is_idempotent_somewhere(M, f)) continue;
    if (idempotent_below(M, f, e) && !idempotent_below(M, e, f)) return false;
  }
  return true;
}

bool is_completely_0_simple(const GammaSemigroup& M) {
  if (!is_0_simple(M)) return false;
  for (Elem e = 0; e < M.size(); ++e)
    if (e != *M.zero() && is_primitive_idempotent(M, e)) return true;
  return false;
}

std::optional<GammaSemigroup> dclass_with_zero(const GammaSemigroup& M,
                                               const ElementSet& dblock) {
  if (!M.has_zero()) throw std::invalid_argument("dclass_with_zero: structure has no zero");
  const Elem z = *M.zero();
  Partition d = d_partition(M);
  bool found = false;
  for (int i = 0; i < d.block_count() && !found; ++i) found = d.block_set(i) == dblock;
  if (!found) throw std::invalid_argument("dclass_with_zero: not a block of the D-partition");
  if (dblock == ElementSet::single(M.size(), z))
    throw std::invalid_argument("dclass_with_zero: the zero class is excluded");

  ElementSet piece = dblock;
  piece.insert(z);
  if (!set_product(M, piece, piece).is_subset_of(piece)) return std::nullopt;

  std::vector<Elem> elems = piece.elements();
  std::vector<int> index_of(M.size(), -1);
  for (size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = static_cast<int>(i);

  RawTable raw;
  raw.m = static_cast<int>(elems.size());
  raw.g = M.operator_count();
  raw.entries.resize(raw.g * raw.m * raw.m);
  for (int gamma = 0; gamma < raw.g; ++gamma)
    for (size_t a = 0; a < elems.size(); ++a)
      for (size_t b = 0; b < elems.size(); ++b)
        raw.at(gamma, static_cast<Elem>(a), static_cast<Elem>(b)) =
            index_of[M.product(gamma, elems[a], elems[b])];
  for (Elem a : elems) raw.element_names.push_back(M.element_name(a));
  for (int gamma = 0; gamma < raw.g; ++gamma) raw.gamma_names.push_back(M.gamma_name(gamma));
  return must_validate(raw);
}

std::optional<Decomposition> zero_disjoint_completely_0_simple_decomposition(
    const GammaSemigroup& M) {
  if (!M.has_zero()) throw std::invalid_argument("decomposition: structure has no zero");
  const Elem z = *M.zero();
  Partition d = d_partition(M);
  Decomposition dec;
  dec.mode = Decomposition::Mode::zero_disjoint;
  for (int i = 0; i < d.block_count(); ++i) {
    ElementSet blk = d.block_set(i);
    if (blk == ElementSet::single(M.size(), z)) continue;
    std::optional<GammaSemigroup> piece = dclass_with_zero(M, blk);
    if (!piece || !is_completely_0_simple(*piece)) return std::nullopt;
    blk.insert(z);
    dec.components.push_back(std::move(blk));
    dec.labels.push_back("completely-0-simple");
  }
  return dec;
}

bool mutually_annihilating(const GammaSemigroup& M, const std::vector<ElementSet>& pieces) {
  if (!M.has_zero()) throw std::invalid_argument("mutually_annihilating: no zero");
  const Elem z = *M.zero();
  ElementSet zero_only = ElementSet::single(M.size(), z);
  for (const ElementSet& p : pieces)
    if (!p.contains(z))
      throw std::invalid_argument("mutually_annihilating: every piece must contain the zero");
  for (size_t i = 0; i < pieces.size(); ++i)
    for (size_t j = 0; j < pieces.size(); ++j) {
      if (i == j) continue;
      if (set_product(M, pieces[i], pieces[j]) != zero_only) return false;
    }
  return true;
}

std::vector<bool> dclass_annihilation(const GammaSemigroup& M) {
  if (!M.has_zero()) throw std::invalid_argument("dclass_annihilation: no zero");
  const Elem z = *M.zero();
  Partition d = d_partition(M);
  std::vector<bool> out;
  for (int i = 0; i < d.block_count(); ++i) {
    ElementSet blk = d.block_set(i);
    ElementSet prod = set_product(M, blk, blk);
    out.push_back(prod == ElementSet::single(M.size(), z));
  }
  return out;
}

}  // namespace gsgp
