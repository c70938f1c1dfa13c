#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsgp/constructors.hpp"
#include "gsgp/core.hpp"
#include "gsgp/format.hpp"
#include "helpers.hpp"

using namespace gsgp;

TEST_CASE("validate accepts the one-element table") {
  RawTable t = testutil::raw_of(1, 1, {0});
  ValidationResult res = validate(t);
  REQUIRE(res.ok());
  CHECK(res.value->size() == 1);
  CHECK(res.value->zero() == 0);  // the single element absorbs trivially
}

TEST_CASE("validate accepts the left-zero table, oracle agrees") {
  RawTable t = testutil::raw_of(2, 1, {0, 0, 1, 1});
  CHECK(testutil::oracle_mixed_associative(t));
  CHECK(validate(t).ok());
}

TEST_CASE("validate reports every associativity violation in lexicographic order") {
  // t(a,a)=b, t(a,b)=a, t(b,a)=b, t(b,b)=b is not associative
  RawTable t = testutil::raw_of(2, 1, {1, 0, 1, 1});
  CHECK_FALSE(testutil::oracle_mixed_associative(t));
  ValidationResult res = validate(t);
  REQUIRE_FALSE(res.ok());
  REQUIRE(res.violations.size() == 2);
  const Violation& v0 = res.violations[0];
  CHECK(v0.kind == Violation::Kind::associativity);
  CHECK(v0.alpha == 0);
  CHECK(v0.beta == 0);
  CHECK(v0.a == 0);
  CHECK(v0.b == 0);
  CHECK(v0.c == 0);
  CHECK(v0.lhs == 1);
  CHECK(v0.rhs == 0);
  const Violation& v1 = res.violations[1];
  CHECK(v1.a == 0);
  CHECK(v1.b == 1);
  CHECK(v1.c == 0);
}

TEST_CASE("validate reports out-of-range entries and skips the associativity scan") {
  RawTable t = testutil::raw_of(2, 1, {0, 5, 1, -1});
  ValidationResult res = validate(t);
  REQUIRE_FALSE(res.ok());
  REQUIRE(res.violations.size() == 2);
  CHECK(res.violations[0].kind == Violation::Kind::range);
  CHECK(res.violations[0].a == 0);
  CHECK(res.violations[0].b == 1);
  CHECK(res.violations[0].lhs == 5);
  CHECK(res.violations[1].lhs == -1);
}

TEST_CASE("validate rejects malformed sizes") {
  RawTable t = testutil::raw_of(2, 1, {0, 0, 0});
  CHECK_THROWS_AS(validate(t), std::invalid_argument);
  RawTable u = testutil::raw_of(0, 1, {});
  CHECK_THROWS_AS(validate(u), std::invalid_argument);
}

TEST_CASE("find_zero") {
  CHECK(find_zero(fixture(FixtureId::N2)) == 0);
  CHECK_FALSE(find_zero(fixture(FixtureId::LZ2)).has_value());
  CHECK(find_zero(fixture(FixtureId::T1)) == 0);
  CHECK(find_zero(fixture(FixtureId::B5)) == 0);
}

TEST_CASE("find_zero agrees with the cached zero and the zero-law scan") {
  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    std::optional<Elem> z = find_zero(M);
    CHECK(z == M.zero());
    for (Elem cand = 0; cand < M.size(); ++cand) {
      bool absorbs = zero_law_violations(M, cand).empty();
      CHECK(absorbs == (z == cand));
    }
  }
}

TEST_CASE("set_product on fixtures") {
  GammaSemigroup n2 = fixture(FixtureId::N2);
  CHECK(set_product(n2, ElementSet::of(2, {1}), ElementSet::of(2, {1})) ==
        ElementSet::of(2, {0}));

  GammaSemigroup lz2 = fixture(FixtureId::LZ2);
  CHECK(set_product(lz2, ElementSet::of(2, {0, 1}), ElementSet::of(2, {0})) ==
        ElementSet::of(2, {0, 1}));

  CHECK(set_product(lz2, ElementSet(2), ElementSet::full(2)).empty());
  CHECK_THROWS_AS(set_product(lz2, ElementSet::full(2), std::vector<int>{}, ElementSet::full(2)),
                  std::invalid_argument);
}

TEST_CASE("set_product is monotone and associative over the operator family") {
  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    const int m = M.size();
    for (uint32_t am = 1; am < (1u << m); ++am)
      for (uint32_t bm = 1; bm < (1u << m); ++bm) {
        ElementSet A(m), B(m), A2(m);
        for (Elem x = 0; x < m; ++x) {
          if (am & (1u << x)) A.insert(x);
          if (bm & (1u << x)) B.insert(x);
          if ((am & (1u << x)) || x == 0) A2.insert(x);
        }
        ElementSet ab = set_product(M, A, B);
        CHECK(ab.is_subset_of(set_product(M, A2, B)));
        ElementSet c = ElementSet::full(m);
        CHECK(set_product(M, ab, c) == set_product(M, A, set_product(M, B, c)));
      }
  }
}

TEST_CASE("derived_semigroup restricts the table and stays associative") {
  GammaSemigroup gz3 = fixture(FixtureId::GZ3);
  std::vector<Elem> t = derived_semigroup(gz3, 0);
  std::vector<Elem> expected = {0, 0, 0, 0, 1, 2, 0, 2, 1};
  CHECK(t == expected);

  GammaSemigroup t1 = fixture(FixtureId::T1);
  CHECK(derived_semigroup(t1, 0) == std::vector<Elem>{0});

  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    for (int gamma = 0; gamma < M.operator_count(); ++gamma)
      CHECK(testutil::oracle_plain_associative(derived_semigroup(M, gamma), M.size()));
  }
  CHECK_THROWS_AS(derived_semigroup(gz3, 1), std::invalid_argument);
}

TEST_CASE("is_sub_gamma_semigroup") {
  GammaSemigroup lz2 = fixture(FixtureId::LZ2);
  CHECK(is_sub_gamma_semigroup(lz2, ElementSet::of(2, {0})));
  GammaSemigroup b5 = fixture(FixtureId::B5);
  CHECK_FALSE(is_sub_gamma_semigroup(b5, ElementSet::of(5, {1})));  // a*a = 0
  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    CHECK(is_sub_gamma_semigroup(M, ElementSet::full(M.size())));
  }
  CHECK_THROWS_AS(is_sub_gamma_semigroup(lz2, ElementSet(2)), std::invalid_argument);
}

TEST_CASE("idempotent_pairs ordered by element then operator") {
  using P = std::pair<Elem, int>;
  CHECK(idempotent_pairs(fixture(FixtureId::B5)) ==
        std::vector<P>{{0, 0}, {3, 0}, {4, 0}});
  CHECK(idempotent_pairs(fixture(FixtureId::N2)) == std::vector<P>{{0, 0}});
  CHECK(idempotent_pairs(fixture(FixtureId::T1)) == std::vector<P>{{0, 0}});
}

TEST_CASE("validate round-trips through serialize and parse") {
  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    GsgpDocument doc = parse(serialize(M));
    ValidationResult res = validate(doc.table);
    REQUIRE(res.ok());
    CHECK(res.value->raw().entries == M.raw().entries);
    CHECK(res.value->element_names() == M.element_names());
  }
}

TEST_CASE("ElementSet algebra is exact") {
  ElementSet a = ElementSet::of(70, {0, 63, 64, 69});
  ElementSet b = ElementSet::of(70, {63, 64});
  CHECK(a.count() == 4);
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK((a & b) == b);
  CHECK((a | b) == a);
  a.erase(63);
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(a.elements() == std::vector<Elem>{0, 64, 69});
  CHECK(set_less(b, a));  // smaller first
}
