#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsgp/constructors.hpp"
#include "gsgp/enumerate.hpp"
#include "gsgp/theoremcheck.hpp"

using namespace gsgp;

TEST_CASE("statement names round-trip") {
  for (StatementId id : kAllStatements) {
    CHECK(statement_id(statement_name(id)) == id);
    CHECK(std::string(statement_summary(id)).size() > 0);
  }
  CHECK_THROWS_AS(statement_id("T9.9"), std::invalid_argument);
}

TEST_CASE("spot checks on fixtures") {
  CheckReport r1 = check(fixture(FixtureId::GZ3), StatementId::T1_10);
  CHECK(r1.verdict == Verdict::holds);
  CHECK(r1.detail.find("strongly-regular=true") != std::string::npos);

  CheckReport r2 = check(fixture(FixtureId::B5), StatementId::T2_22);
  CHECK(r2.verdict == Verdict::holds);

  CheckReport r3 = check(fixture(FixtureId::N2), StatementId::C2_23);
  CHECK(r3.verdict == Verdict::holds);
}

TEST_CASE("zero-dependent statements are inapplicable without a zero") {
  GammaSemigroup lz2 = fixture(FixtureId::LZ2);
  for (StatementId id : {StatementId::P2_20, StatementId::P2_21, StatementId::T2_22,
                         StatementId::C2_23, StatementId::T2_24, StatementId::T2_25,
                         StatementId::P3_7, StatementId::T4_5, StatementId::ZeroHClass})
    CHECK(check(lz2, id).verdict == Verdict::inapplicable);
}

TEST_CASE("hypothesis-gated statements") {
  // N2 is not left or right strongly regular, so T1.9 does not apply
  CHECK(check(fixture(FixtureId::N2), StatementId::T1_9).verdict == Verdict::inapplicable);
  // N2 is not regular, so T2.25 does not apply
  CHECK(check(fixture(FixtureId::N2), StatementId::T2_25).verdict == Verdict::inapplicable);
  // B5 is not strongly regular, so the zero-H-class remark does not apply
  CHECK(check(fixture(FixtureId::B5), StatementId::ZeroHClass).verdict ==
        Verdict::inapplicable);
  CHECK(check(fixture(FixtureId::GZ3), StatementId::ZeroHClass).verdict == Verdict::holds);
}

TEST_CASE("check_all covers the whole catalog deterministically") {
  GammaSemigroup b5 = fixture(FixtureId::B5);
  std::vector<CheckReport> reports = check_all(b5);
  REQUIRE(reports.size() == kAllStatements.size());
  for (size_t i = 0; i < reports.size(); ++i) CHECK(reports[i].id == kAllStatements[i]);

  std::vector<CheckReport> again = check_all(b5);
  for (size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].verdict == again[i].verdict);
    CHECK(reports[i].detail == again[i].detail);
  }
}

TEST_CASE("no fixture violates any proved statement") {
  for (FixtureId id : kAllFixtures) {
    GammaSemigroup M = fixture(id);
    for (const CheckReport& r : check_all(M)) {
      INFO(fixture_name(id), " ", to_line(r));
      CHECK(r.verdict != Verdict::violated);
    }
  }
}

TEST_CASE("report lines are tab separated") {
  CheckReport r = check(fixture(FixtureId::B5), StatementId::P2_21);
  std::string line = to_line(r);
  CHECK(line.substr(0, 5) == "P2.21");
  CHECK(line.find('\t') != std::string::npos);
}

TEST_CASE("problems 1 and 3 hold on every structure with m <= 2") {
  for (int m = 1; m <= 2; ++m)
    for (int g = 1; g <= 2; ++g) {
      EnumSpec spec;
      spec.m = m;
      spec.g = g;
      for (const GammaSemigroup& M : enumerate_all(spec, 1))
        for (StatementId id : {StatementId::Problem1, StatementId::Problem3}) {
          INFO(to_line(check(M, id)));
          CHECK(check(M, id).verdict == Verdict::holds);
        }
    }
}

TEST_CASE("problem 2 has a genuine two-element counterexample") {
  // one operator acts as a semilattice, the other as the null operation:
  // the derived semigroup of the first is left and right regular, the
  // second blocks strong regularity
  RawTable raw;
  raw.m = 2;
  raw.g = 2;
  raw.entries = {0, 0, 0, 1, 0, 0, 0, 0};
  GammaSemigroup M = must_validate(raw);
  CheckReport r = check(M, StatementId::Problem2);
  CHECK(r.verdict == Verdict::violated);

  // problem 2 with a single operator is immune: the hypothesis and the
  // conclusion collapse to the same condition
  EnumSpec spec;
  spec.m = 2;
  for (const GammaSemigroup& N : enumerate_all(spec, 1))
    CHECK(check(N, StatementId::Problem2).verdict == Verdict::holds);
}

TEST_CASE("T4.5 reports its computed right-hand side") {
  CheckReport r = check(fixture(FixtureId::B5), StatementId::T4_5);
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.detail.find("2-0-strongly-regular=true") != std::string::npos);
  CHECK(r.detail.find("d-classes-mutually-annihilating=true") != std::string::npos);
}
