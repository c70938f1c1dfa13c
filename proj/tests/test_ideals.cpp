#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsgp/constructors.hpp"
#include "gsgp/enumerate.hpp"
#include "gsgp/ideals.hpp"

using namespace gsgp;

TEST_CASE("principal ideals on fixtures") {
  GammaSemigroup n2 = fixture(FixtureId::N2);
  CHECK(principal_left_ideal(n2, 1) == ElementSet::of(2, {0, 1}));
  CHECK(principal_right_ideal(n2, 1) == ElementSet::of(2, {0, 1}));

  GammaSemigroup lz2 = fixture(FixtureId::LZ2);
  CHECK(principal_left_ideal(lz2, 0) == ElementSet::of(2, {0, 1}));
  CHECK(principal_right_ideal(lz2, 0) == ElementSet::of(2, {0}));

  GammaSemigroup t1 = fixture(FixtureId::T1);
  CHECK(principal_left_ideal(t1, 0) == ElementSet::of(1, {0}));
  CHECK(principal_two_sided_ideal(t1, 0) == ElementSet::of(1, {0}));

  GammaSemigroup b5 = fixture(FixtureId::B5);
  CHECK(principal_two_sided_ideal(b5, 1) == ElementSet::full(5));
  CHECK(principal_two_sided_ideal(n2, 1) == ElementSet::of(2, {0, 1}));
}

TEST_CASE("principal left ideals absorb from the left") {
  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    for (Elem a = 0; a < M.size(); ++a) {
      ElementSet li = principal_left_ideal(M, a);
      CHECK(set_product(M, ElementSet::full(M.size()), li).is_subset_of(li));
      ElementSet ri = principal_right_ideal(M, a);
      CHECK(set_product(M, ri, ElementSet::full(M.size())).is_subset_of(ri));
    }
  }
}

TEST_CASE("ideal_closure") {
  GammaSemigroup n2 = fixture(FixtureId::N2);
  CHECK(ideal_closure(n2, ElementSet::of(2, {1}), IdealKind::left) ==
        principal_left_ideal(n2, 1));

  GammaSemigroup lz2 = fixture(FixtureId::LZ2);
  CHECK(ideal_closure(lz2, ElementSet::of(2, {0}), IdealKind::right) == ElementSet::of(2, {0}));

  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    ElementSet all = ElementSet::full(M.size());
    for (IdealKind kind : {IdealKind::left, IdealKind::right, IdealKind::two_sided}) {
      CHECK(ideal_closure(M, all, kind) == all);
      // idempotence
      for (Elem a = 0; a < M.size(); ++a) {
        ElementSet c = ideal_closure(M, ElementSet::single(M.size(), a), kind);
        CHECK(ideal_closure(M, c, kind) == c);
      }
    }
  }
  CHECK_THROWS_AS(ideal_closure(n2, ElementSet::of(2, {0}), IdealKind::quasi),
                  std::invalid_argument);
  CHECK_THROWS_AS(ideal_closure(n2, ElementSet(2), IdealKind::left), std::invalid_argument);
}

TEST_CASE("principal ideals equal singleton closures on all small structures") {
  for (int m = 1; m <= 3; ++m) {
    EnumSpec spec;
    spec.m = m;
    spec.g = 1;
    for (const GammaSemigroup& M : enumerate_all(spec, 1))
      for (Elem a = 0; a < M.size(); ++a) {
        ElementSet s = ElementSet::single(m, a);
        CHECK(principal_left_ideal(M, a) == ideal_closure(M, s, IdealKind::left));
        CHECK(principal_right_ideal(M, a) == ideal_closure(M, s, IdealKind::right));
        CHECK(principal_two_sided_ideal(M, a) == ideal_closure(M, s, IdealKind::two_sided));
      }
  }
}

TEST_CASE("is_ideal") {
  GammaSemigroup b5 = fixture(FixtureId::B5);
  CHECK(is_ideal(b5, ElementSet::of(5, {0, 3}), IdealKind::quasi));
  GammaSemigroup lz2 = fixture(FixtureId::LZ2);
  CHECK_FALSE(is_ideal(lz2, ElementSet::of(2, {0}), IdealKind::left));
  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    for (IdealKind kind :
         {IdealKind::left, IdealKind::right, IdealKind::two_sided, IdealKind::quasi})
      CHECK(is_ideal(M, ElementSet::full(M.size()), kind));
  }
}

TEST_CASE("enumerate_ideals") {
  GammaSemigroup n2 = fixture(FixtureId::N2);
  std::vector<ElementSet> left = enumerate_ideals(n2, IdealKind::left);
  REQUIRE(left.size() == 2);
  CHECK(left[0] == ElementSet::of(2, {0}));
  CHECK(left[1] == ElementSet::of(2, {0, 1}));

  GammaSemigroup lz2 = fixture(FixtureId::LZ2);
  std::vector<ElementSet> lz_left = enumerate_ideals(lz2, IdealKind::left);
  REQUIRE(lz_left.size() == 1);
  CHECK(lz_left[0] == ElementSet::full(2));

  GammaSemigroup t1 = fixture(FixtureId::T1);
  CHECK(enumerate_ideals(t1, IdealKind::left).size() == 1);
}

TEST_CASE("every left ideal is the union of principal left ideals of its members") {
  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    for (const ElementSet& s : enumerate_ideals(M, IdealKind::left)) {
      ElementSet u(M.size());
      for (Elem a : s.elements()) u |= principal_left_ideal(M, a);
      CHECK(u == s);
    }
  }
}

TEST_CASE("every one-sided ideal is a quasi-ideal") {
  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    for (IdealKind kind : {IdealKind::left, IdealKind::right})
      for (const ElementSet& s : enumerate_ideals(M, kind))
        CHECK(is_ideal(M, s, IdealKind::quasi));
  }
}

TEST_CASE("is_0_semiprime on fixtures") {
  GammaSemigroup n2 = fixture(FixtureId::N2);
  CHECK(is_0_semiprime(n2, ElementSet::of(2, {0}), IdealKind::left));
  GammaSemigroup b5 = fixture(FixtureId::B5);
  CHECK(is_0_semiprime(b5, ElementSet::of(5, {0}), IdealKind::left));
  GammaSemigroup sl2 = fixture(FixtureId::SL2);
  CHECK(is_0_semiprime(sl2, ElementSet::of(2, {0}), IdealKind::left));

  CHECK_THROWS_AS(is_0_semiprime(fixture(FixtureId::LZ2), ElementSet::full(2), IdealKind::left),
                  std::invalid_argument);  // no zero
  CHECK_THROWS_AS(is_0_semiprime(b5, ElementSet::of(5, {3}), IdealKind::left),
                  std::invalid_argument);  // not an ideal containing zero
}

TEST_CASE("all_ideals_0_semiprime on fixtures and routes agree on small structures") {
  CHECK(all_ideals_0_semiprime(fixture(FixtureId::B5), IdealKind::left));
  CHECK(all_ideals_0_semiprime(fixture(FixtureId::N2), IdealKind::left));
  CHECK(all_ideals_0_semiprime(fixture(FixtureId::SL2), IdealKind::left));
  CHECK(all_ideals_0_semiprime(fixture(FixtureId::SL2), IdealKind::right));

  for (int m = 1; m <= 3; ++m)
    for (int g = 1; g <= 2; ++g) {
      EnumSpec spec;
      spec.m = m;
      spec.g = g;
      spec.require_zero = true;
      for (const GammaSemigroup& M : enumerate_all(spec, 1))
        for (IdealKind kind : {IdealKind::left, IdealKind::right, IdealKind::two_sided})
          CHECK(all_ideals_0_semiprime_by_enumeration(M, kind) ==
                all_ideals_0_semiprime_by_closure(M, kind));
    }
}
