#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsgp/constructors.hpp"
#include "gsgp/core.hpp"
#include "gsgp/regularity.hpp"
#include "helpers.hpp"

using namespace gsgp;

TEST_CASE("group_with_zero on Z2 with gamma {e} reproduces GZ3") {
  GammaSemigroup got = group_with_zero(cyclic_group(2), {0});
  GammaSemigroup expected = fixture(FixtureId::GZ3);
  CHECK(got.raw().entries == expected.raw().entries);
  CHECK(got.size() == 3);
  CHECK(got.zero() == 0);
  CHECK(is_strongly_regular(got));
}

TEST_CASE("group_with_zero on the trivial group") {
  GammaSemigroup M = group_with_zero(cyclic_group(1), {0});
  CHECK(M.size() == 2);
  CHECK(M.zero() == 0);
  CHECK(is_strongly_regular(M));
}

TEST_CASE("group_with_zero on Z3 with full gamma") {
  GammaSemigroup M = group_with_zero(cyclic_group(3), {0, 1, 2});
  CHECK(M.size() == 4);
  CHECK(M.operator_count() == 3);
  CHECK(is_strongly_regular(M));
}

TEST_CASE("group_with_zero rejects non-groups and empty gamma") {
  PlainSemigroup null2;
  null2.n = 2;
  null2.table = {0, 0, 0, 0};
  CHECK_THROWS_AS(group_with_zero(null2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(group_with_zero(cyclic_group(2), {}), std::invalid_argument);
  CHECK_THROWS_AS(group_with_zero(cyclic_group(2), {5}), std::invalid_argument);
}

TEST_CASE("stock groups are groups") {
  CHECK(is_group(cyclic_group(1)));
  CHECK(is_group(cyclic_group(6)));
  CHECK(is_group(klein_four_group()));
  CHECK(is_group(symmetric_group_3()));
  CHECK_FALSE(is_commutative(symmetric_group_3()));
}

TEST_CASE("from_commutative_regular_semigroup on the two-element semilattice gives SL2") {
  PlainSemigroup s;  // min on {0, e}
  s.n = 2;
  s.table = {0, 0, 0, 1};
  GammaSemigroup got = from_commutative_regular_semigroup(s, 1);
  CHECK(got.operator_count() == 1);  // H_e = {e}
  CHECK(got.raw().entries == fixture(FixtureId::SL2).raw().entries);
  CHECK(is_strongly_regular(got));
}

TEST_CASE("from_commutative_regular_semigroup on Z2 uses the whole group") {
  GammaSemigroup got = from_commutative_regular_semigroup(cyclic_group(2), 0);
  CHECK(got.size() == 2);
  CHECK(got.operator_count() == 2);
  CHECK(is_strongly_regular(got));
}

TEST_CASE("from_commutative_regular_semigroup rejects bad inputs") {
  CHECK_THROWS_AS(from_commutative_regular_semigroup(cyclic_group(3), 1),
                  std::invalid_argument);  // 1 is not idempotent in Z3
  CHECK_THROWS_AS(from_commutative_regular_semigroup(symmetric_group_3(), 0),
                  std::invalid_argument);  // not commutative
  PlainSemigroup n2;
  n2.n = 2;
  n2.table = {0, 0, 0, 0};
  CHECK_THROWS_AS(from_commutative_regular_semigroup(n2, 0),
                  std::invalid_argument);  // not regular (a has no a x a = a)
}

TEST_CASE("maximal_subgroup_at") {
  PlainSemigroup s;  // min on {0, e}
  s.n = 2;
  s.table = {0, 0, 0, 1};
  CHECK(maximal_subgroup_at(s, 1) == std::vector<Elem>{1});
  CHECK(maximal_subgroup_at(s, 0) == std::vector<Elem>{0});
  CHECK(maximal_subgroup_at(cyclic_group(4), 0) == std::vector<Elem>{0, 1, 2, 3});
}

TEST_CASE("adjoin_zero appends a fresh absorbing element") {
  GammaSemigroup t1z = adjoin_zero(fixture(FixtureId::T1));
  CHECK(t1z.size() == 2);
  CHECK(t1z.zero() == 1);
  CHECK(t1z.product(0, 0, 0) == 0);  // old product preserved

  GammaSemigroup lz2z = adjoin_zero(fixture(FixtureId::LZ2));
  CHECK(lz2z.size() == 3);
  CHECK(find_zero(lz2z) == 2);

  GammaSemigroup twice = adjoin_zero(lz2z);
  CHECK(find_zero(twice) == 3);  // only the newest element absorbs
  CHECK(zero_law_violations(twice, 2).size() > 0);
}

TEST_CASE("every fixture validates with zero violations") {
  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    ValidationResult res = validate(M.raw());
    CHECK(res.ok());
    CHECK(res.violations.empty());
    CHECK(testutil::oracle_mixed_associative(M.raw()));
  }
}

TEST_CASE("fixture id names round-trip") {
  for (FixtureId id : kAllFixtures) CHECK(fixture_id(fixture_name(id)) == id);
  CHECK_THROWS_AS(fixture_id("nope"), std::invalid_argument);
}
