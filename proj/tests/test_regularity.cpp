#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsgp/constructors.hpp"
#include "gsgp/enumerate.hpp"
#include "gsgp/regularity.hpp"

using namespace gsgp;

TEST_CASE("regular elements and witnesses") {
  GammaSemigroup b5 = fixture(FixtureId::B5);
  auto w = regular_element_witness(b5, 1);  // a = a g b g a
  REQUIRE(w.has_value());
  CHECK(replay(b5, *w));
  CHECK(w->solvers == std::vector<Elem>{2});

  GammaSemigroup n2 = fixture(FixtureId::N2);
  CHECK_FALSE(is_regular_element(n2, 1));
  CHECK(is_regular_element(n2, 0));
  CHECK(irregular_elements(n2) == ElementSet::of(2, {1}));

  CHECK(is_regular_element(fixture(FixtureId::T1), 0));
  CHECK(irregular_elements(b5).empty());
  CHECK(is_regular(b5));
  CHECK_FALSE(is_regular(n2));
}

TEST_CASE("left and right strong regularity on fixtures") {
  CHECK(is_left_strongly_regular(fixture(FixtureId::LZ2)));
  CHECK(is_right_strongly_regular(fixture(FixtureId::LZ2)));
  CHECK(is_left_strongly_regular(fixture(FixtureId::RZ2)));
  CHECK(is_right_strongly_regular(fixture(FixtureId::RZ2)));
  CHECK_FALSE(is_left_strongly_regular(fixture(FixtureId::N2)));
  CHECK_FALSE(is_right_strongly_regular(fixture(FixtureId::N2)));
  CHECK(is_left_strongly_regular(fixture(FixtureId::T1)));

  RegularityVerdict v = left_strongly_regular_direct(fixture(FixtureId::N2));
  REQUIRE(v.failure.has_value());
  CHECK(v.failure->x == 1);
}

TEST_CASE("strong regularity routes agree on fixtures") {
  struct Expected {
    FixtureId id;
    bool strong;
  } cases[] = {{FixtureId::T1, true},  {FixtureId::N2, false}, {FixtureId::LZ2, true},
               {FixtureId::RZ2, true}, {FixtureId::SL2, true}, {FixtureId::GZ3, true},
               {FixtureId::B5, false}};
  for (const auto& [id, strong] : cases) {
    StrongRegularityReport rep = strongly_regular_report(fixture(id));
    CHECK(rep.verdict() == strong);
    CHECK_FALSE(rep.anomaly());
  }
}

TEST_CASE("positive strong-regularity verdicts replay") {
  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    StrongRegularityReport rep = strongly_regular_report(M);
    if (rep.verdict()) {
      CHECK_FALSE(rep.witnesses.empty());
      for (const RegularityWitness& w : rep.witnesses) CHECK(replay(M, w));
    }
  }
}

TEST_CASE("one-sided strong regularity agrees with the Green route everywhere small") {
  for (int m = 1; m <= 3; ++m)
    for (int g = 1; g <= 2; ++g) {
      EnumSpec spec;
      spec.m = m;
      spec.g = g;
      for (const GammaSemigroup& M : enumerate_all(spec, 1)) {
        CHECK(left_strongly_regular_direct(M).holds == left_strongly_regular_via_green(M));
        CHECK(right_strongly_regular_direct(M).holds == right_strongly_regular_via_green(M));
      }
    }
}

TEST_CASE("s(m,n) membership on fixtures") {
  GammaSemigroup n2 = fixture(FixtureId::N2);
  auto w = smn_witness(n2, 1, {2, 2, true});
  REQUIRE(w.has_value());
  CHECK(w->clause == WitnessClause::zero);
  CHECK(replay(n2, *w));
  CHECK_FALSE(in_class_smn(n2, 1, {2, 2, false}));

  GammaSemigroup b5 = fixture(FixtureId::B5);
  auto we = smn_witness(b5, 3, {2, 2, true});
  REQUIRE(we.has_value());
  CHECK(we->clause == WitnessClause::solution);
  CHECK(replay(b5, *we));

  CHECK(in_class_smn_all(n2, {2, 2, true}));
  CHECK(in_class_smn_all(fixture(FixtureId::LZ2), {0, 2, false}));
  CHECK(in_class_smn_all(fixture(FixtureId::GZ3), {2, 2, false}));
}

TEST_CASE("s(0,2) and s(2,0) coincide with the one-sided definitions") {
  for (int m = 1; m <= 3; ++m)
    for (int g = 1; g <= 2; ++g) {
      EnumSpec spec;
      spec.m = m;
      spec.g = g;
      for (const GammaSemigroup& M : enumerate_all(spec, 1)) {
        CHECK(in_class_smn_all(M, {0, 2, false}) == is_left_strongly_regular(M));
        CHECK(in_class_smn_all(M, {2, 0, false}) == is_right_strongly_regular(M));
        // class arithmetic: s(2,2) = left and right strong regularity
        CHECK(in_class_smn_all(M, {2, 2, false}) ==
              (is_left_strongly_regular(M) && is_right_strongly_regular(M)));
      }
    }
}

TEST_CASE("the plain and zero-variant classes coincide on zero-free structures") {
  for (FixtureId id : {FixtureId::LZ2, FixtureId::RZ2}) {
    GammaSemigroup M = fixture(id);
    REQUIRE_FALSE(M.has_zero());
    for (int mm = 0; mm <= 3; ++mm)
      for (int nn = 0; nn <= 3; ++nn) {
        if (mm + nn <= 1) continue;
        CHECK(in_class_smn_all(M, {mm, nn, true}) == in_class_smn_all(M, {mm, nn, false}));
      }
  }
}

TEST_CASE("plain membership implies zero-variant membership") {
  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    for (int mm = 0; mm <= 2; ++mm)
      for (int nn = 0; nn <= 2; ++nn) {
        if (mm + nn <= 1) continue;
        for (Elem x = 0; x < M.size(); ++x)
          if (in_class_smn(M, x, {mm, nn, false})) CHECK(in_class_smn(M, x, {mm, nn, true}));
      }
  }
}

TEST_CASE("s(m,n) parameter validation") {
  GammaSemigroup t1 = fixture(FixtureId::T1);
  CHECK_THROWS_AS(in_class_smn(t1, 0, {0, 0, false}), std::invalid_argument);
  CHECK_THROWS_AS(in_class_smn(t1, 0, {0, 1, true}), std::invalid_argument);
  CHECK_THROWS_AS(in_class_smn(t1, 0, {-1, 2, false}), std::invalid_argument);
  CHECK(in_class_smn(t1, 0, {0, 1, false}));  // x = u g x solves with u = x
  CHECK(in_class_smn(t1, 0, {1, 1, false}));  // ordinary regularity shape
}

TEST_CASE("2-0-strong regularity on fixtures") {
  CHECK(is_2_0_strongly_regular(fixture(FixtureId::B5)));
  CHECK(is_2_0_strongly_regular(fixture(FixtureId::N2)));
  CHECK(is_2_0_strongly_regular(fixture(FixtureId::GZ3)));
  CHECK(is_2_0_strongly_regular(fixture(FixtureId::SL2)));
  CHECK_THROWS_AS(is_2_0_strongly_regular(fixture(FixtureId::LZ2)), std::invalid_argument);

  TwoZeroReport rep = two_zero_strongly_regular_report(fixture(FixtureId::B5));
  CHECK_FALSE(rep.anomaly());
  for (const RegularityWitness& w : rep.witnesses) CHECK(replay(fixture(FixtureId::B5), w));
}

TEST_CASE("the two 2-0 routes agree on all small structures with zero") {
  for (int m = 1; m <= 3; ++m)
    for (int g = 1; g <= 2; ++g) {
      EnumSpec spec;
      spec.m = m;
      spec.g = g;
      spec.require_zero = true;
      for (const GammaSemigroup& M : enumerate_all(spec, 1)) {
        TwoZeroReport rep = two_zero_strongly_regular_report(M);
        CHECK_FALSE(rep.anomaly());
      }
    }
}

TEST_CASE("zero-aware one-sided and intra regularity on fixtures") {
  GammaSemigroup b5 = fixture(FixtureId::B5);
  CHECK(is_left_0_strongly_regular(b5));
  CHECK(is_right_0_strongly_regular(b5));
  CHECK(is_intra_0_strongly_regular(b5));

  GammaSemigroup n2 = fixture(FixtureId::N2);
  CHECK(is_left_0_strongly_regular(n2));
  CHECK(is_right_0_strongly_regular(n2));
  CHECK(is_intra_0_strongly_regular(n2));

  CHECK(is_intra_0_strongly_regular(fixture(FixtureId::SL2)));

  GammaSemigroup lz2z = adjoin_zero(fixture(FixtureId::LZ2));
  CHECK(is_left_0_strongly_regular(lz2z));
  CHECK(is_right_0_strongly_regular(lz2z));

  CHECK_THROWS_AS(is_intra_0_strongly_regular(fixture(FixtureId::LZ2)), std::invalid_argument);

  RegularityVerdict v = intra_0_strongly_regular_verdict(b5);
  CHECK(v.holds);
  for (const RegularityWitness& w : v.witnesses) CHECK(replay(b5, w));
}

TEST_CASE("witness replay detects tampering") {
  GammaSemigroup b5 = fixture(FixtureId::B5);
  auto w = regular_element_witness(b5, 1);
  REQUIRE(w.has_value());
  RegularityWitness bad = *w;
  bad.equations[0].expected = 0;
  CHECK_FALSE(replay(b5, bad));
  RegularityWitness empty;
  empty.x = 1;
  CHECK_FALSE(replay(b5, empty));
}
