#pragma once

#include <string>
#include <vector>

#include "gsgp/core.hpp"

// One- and two-sided ideals, quasi-ideals, generated closures, brute-force
// ideal enumeration and the 0-semiprime predicate.

namespace gsgp {

enum class IdealKind { left, right, two_sided, quasi };

const char* ideal_kind_name(IdealKind kind);

// {a} union M Gamma a.
ElementSet principal_left_ideal(const GammaSemigroup& M, Elem a);
// {a} union a Gamma M.
ElementSet principal_right_ideal(const GammaSemigroup& M, Elem a);
// {a} union M Gamma a union a Gamma M union M Gamma a Gamma M.
ElementSet principal_two_sided_ideal(const GammaSemigroup& M, Elem a);

// Smallest ideal of the given kind containing S; quasi is rejected
// (quasi-ideals are not closure-generated here). Idempotent.
ElementSet ideal_closure(const GammaSemigroup& M, const ElementSet& s, IdealKind kind);

// left: MGS in S; right: SGM in S; two_sided: both; quasi: MGS n SGM in S.
bool is_ideal(const GammaSemigroup& M, const ElementSet& s, IdealKind kind);

// All nonempty subsets passing is_ideal, ordered by size then
// lexicographically. Subset scan; m above 20 is rejected.
std::vector<ElementSet> enumerate_ideals(const GammaSemigroup& M, IdealKind kind);

// A is 0-semiprime iff every nonvanishing square forces its root in:
// for all x, gamma, x gamma x != 0 and x gamma x in A imply x in A.
// Requires a zero and A an ideal of the given kind containing it.
bool is_0_semiprime(const GammaSemigroup& M, const ElementSet& A, IdealKind kind);

// Two independent routes with the same verdict: (A) enumerate ideals and
// test each; (B) every x with a nonvanishing square x gamma x lies in
// ideal_closure({x gamma x}). Disagreement throws, since it can only be
// an implementation bug.
bool all_ideals_0_semiprime(const GammaSemigroup& M, IdealKind kind);

bool all_ideals_0_semiprime_by_enumeration(const GammaSemigroup& M, IdealKind kind);
bool all_ideals_0_semiprime_by_closure(const GammaSemigroup& M, IdealKind kind);

// { x gamma x : gamma in Gamma } for one x.
ElementSet square_set(const GammaSemigroup& M, Elem x);

}  // namespace gsgp
