#pragma once

#include <string>
#include <vector>

#include "gsgp/core.hpp"

// Executable verdicts for the library's catalog of structural statements
// about Gamma-semigroups. Each statement is evaluated on one instance;
// biconditionals have every direction computed independently, and
// conditional statements report `inapplicable` when their hypothesis
// fails. The three Problem statements are implications under
// investigation: a violated verdict there is a counterexample, not an
// error, and always replays through the table.

namespace gsgp {

enum class StatementId {
  L1_7,
  L1_8,
  T1_9,
  T1_10,
  T2_15,
  C2_16,
  P2_17,
  P2_20,
  P2_21,
  T2_22,
  C2_23,
  T2_24,
  T2_25,
  P3_7,
  T4_5,
  ZeroHClass,
  Problem1,
  Problem2,
  Problem3,
};

extern const std::vector<StatementId> kAllStatements;

const char* statement_name(StatementId id);
// Throws std::invalid_argument for unknown names.
StatementId statement_id(const std::string& name);
// One-line description of what the statement asserts.
const char* statement_summary(StatementId id);

enum class Verdict { holds, violated, inapplicable };

const char* verdict_name(Verdict v);

struct CheckReport {
  StatementId id;
  Verdict verdict;
  std::string detail;  // witness / counterwitness / clause values
};

// STATEMENT<TAB>VERDICT<TAB>DETAIL
std::string to_line(const CheckReport& report);

CheckReport check(const GammaSemigroup& M, StatementId id);

// Every statement in catalog order.
std::vector<CheckReport> check_all(const GammaSemigroup& M);

}  // namespace gsgp
