#pragma once

#include <string>
#include <vector>

#include "gsgp/core.hpp"

// Recipes producing Gamma-semigroups from plain semigroups and groups,
// plus the canonical fixture corpus used throughout the tests and docs.

namespace gsgp {

struct PlainSemigroup {
  int n = 0;
  std::vector<Elem> table;  // n x n, row-major
  std::vector<std::string> names;

  Elem at(Elem a, Elem b) const { return table[a * n + b]; }
};

bool is_associative(const PlainSemigroup& s);
bool is_commutative(const PlainSemigroup& s);
// Every a solves a = a x a for some x.
bool is_regular_plain(const PlainSemigroup& s);
// Has a two-sided identity and inverses (associativity checked too).
bool is_group(const PlainSemigroup& s);

PlainSemigroup cyclic_group(int n);
PlainSemigroup klein_four_group();
PlainSemigroup symmetric_group_3();

// Adjoins a fresh zero to a group G and uses the group product as the
// Gamma-multiplication, Gamma a nonempty subset of G. Carrier order:
// zero first, then the group elements. The output is strongly regular.
GammaSemigroup group_with_zero(const PlainSemigroup& group, const std::vector<Elem>& gamma);

// For a commutative regular semigroup S with idempotent e, takes Gamma
// to be the maximal subgroup at e, H_e = { x : xe = x and exists y with
// ye = y, xy = e }, and uses S's own multiplication as the
// Gamma-multiplication. The output is strongly regular since S is left
// and right regular.
GammaSemigroup from_commutative_regular_semigroup(const PlainSemigroup& s, Elem e);

// Computed within a commutative semigroup; exposed for tests.
std::vector<Elem> maximal_subgroup_at(const PlainSemigroup& s, Elem e);

// Appends one fresh absorbing element; all old products preserved.
GammaSemigroup adjoin_zero(const GammaSemigroup& M);

enum class FixtureId { T1, N2, LZ2, RZ2, SL2, GZ3, B5 };

extern const std::vector<FixtureId> kAllFixtures;

const char* fixture_name(FixtureId id);
// Throws std::invalid_argument for unknown names.
FixtureId fixture_id(const std::string& name);

// T1: one element, a*a = a.
// N2: {0,a}, every product 0.
// LZ2 / RZ2: {a,b}, x*y = x / x*y = y.
// SL2: {0,e}, e*e = e, rest 0.
// GZ3: {0,e,a}, Gamma = [e], nonzero part the 2-element group, 0 absorbs.
// B5: {0,a,b,e,f}, the five-element table of 2x2 matrix units with zero.
GammaSemigroup fixture(FixtureId id);

}  // namespace gsgp
