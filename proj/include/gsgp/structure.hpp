#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsgp/core.hpp"
#include "gsgp/green.hpp"

// Simplicity, Gamma-groups, 0-simplicity, completely 0-simple checks and
// the decomposition machinery built on them.

namespace gsgp {

// T must be a sub-Gamma-semigroup. Left simple: T Gamma a = T for every
// a in T; right simple dually (a Gamma T = T).
bool is_left_simple(const GammaSemigroup& M, const ElementSet& T);
bool is_right_simple(const GammaSemigroup& M, const ElementSet& T);

// Left and right simple sub-Gamma-semigroup.
bool is_gamma_group(const GammaSemigroup& M, const ElementSet& T);

struct Decomposition {
  enum class Mode { disjoint, zero_disjoint };
  Mode mode = Mode::disjoint;
  std::vector<ElementSet> components;
  std::vector<std::string> labels;  // per-component classification
};

// The H-partition labeled as Gamma-groups, present iff every H-class is a
// closed Gamma-group.
std::optional<Decomposition> gamma_group_decomposition(const GammaSemigroup& M);

struct ClassSimplicityDetail {
  bool all_hold = false;
  std::vector<ElementSet> classes;
  std::vector<bool> closed;
  std::vector<bool> simple;  // meaningful only where closed
};

// Every L-class a closed, left simple sub-Gamma-semigroup (dual for R).
ClassSimplicityDetail l_classes_left_simple(const GammaSemigroup& M);
ClassSimplicityDetail r_classes_right_simple(const GammaSemigroup& M);

// Some sub-Gamma-semigroup containing each element is a Gamma-group.
// Subset scan, rejected above m = 20.
bool is_union_of_gamma_groups(const GammaSemigroup& M);

// M Gamma M != {0} and every nonzero element generates M as a two-sided
// ideal. Requires a zero and m >= 2.
bool is_0_simple(const GammaSemigroup& M);

// e (nonzero, idempotent under some gamma) is primitive when every
// nonzero idempotent f with f = f alpha e = e beta f for some alpha,
// beta equals e.
bool is_primitive_idempotent(const GammaSemigroup& M, Elem e);

// 0-simple with a primitive nonzero idempotent. Requires a zero.
bool is_completely_0_simple(const GammaSemigroup& M);

// The restriction of M to D union {0}, for D a nonzero block of the
// D-partition; nullopt when that set is not closed. Element order and
// names are inherited from M.
std::optional<GammaSemigroup> dclass_with_zero(const GammaSemigroup& M, const ElementSet& dblock);

// { D union {0} : D a nonzero D-class }, present iff every piece is
// closed and completely 0-simple. Pieces meet pairwise in {0} and cover
// M by construction.
std::optional<Decomposition> zero_disjoint_completely_0_simple_decomposition(
    const GammaSemigroup& M);

// pieces[i] Gamma pieces[j] = {0} for all i != j. Pieces must contain
// the zero.
bool mutually_annihilating(const GammaSemigroup& M, const std::vector<ElementSet>& pieces);

// Per D-class: D Gamma D = {0}. Requires a zero. Result aligned with
// d_partition block order.
std::vector<bool> dclass_annihilation(const GammaSemigroup& M);

}  // namespace gsgp
