#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gsgp/core.hpp"
#include "gsgp/theoremcheck.hpp"

// Exhaustive generation of Gamma-semigroup tables by depth-first cell
// fill (gamma-major, then row-major) with incremental associativity
// pruning, optional isomorph rejection by lexicographic canonical form,
// census counting, seeded random sampling, and the counterexample search
// driver for the three open Problem statements.

namespace gsgp {

struct EnumSpec {
  int m = 1;
  int g = 1;
  bool up_to_iso = false;
  // also quotient by the flip a*b -> b*a (only meaningful with up_to_iso)
  bool include_anti_iso = false;
  bool require_zero = false;
  std::optional<uint64_t> budget;  // node limit; a node is one cell assignment
};

struct EnumStats {
  uint64_t nodes = 0;
  uint64_t emitted = 0;
  bool budget_exhausted = false;
};

// Emits instances in lexicographic table order. The callback returns
// false to stop early. workers = 0 picks a default; budgeted runs are
// sequential so node accounting follows emission order. Results are
// identical for every worker count.
using EnumCallback = std::function<bool(const GammaSemigroup&)>;
EnumStats enumerate(const EnumSpec& spec, const EnumCallback& cb, int workers = 0);

std::vector<GammaSemigroup> enumerate_all(const EnumSpec& spec, int workers = 0);

// The lexicographically least table among all carrier/operator
// relabelings of `flat` (plus the flip when include_anti_iso).
std::vector<Elem> canonical_form(const std::vector<Elem>& flat, int m, int g,
                                 bool include_anti_iso);
bool is_canonical(const std::vector<Elem>& flat, int m, int g, bool include_anti_iso);

struct CensusOptions {
  bool up_to_iso = false;
  bool include_anti_iso = false;
  bool require_zero = false;
};

struct CensusEntry {
  int m;
  int g;
  uint64_t count;
};

// Counts for every 1 <= m <= max_m, 1 <= g <= max_g, in (m, g) order.
std::vector<CensusEntry> census(int max_m, int max_g, const CensusOptions& options = {},
                                int workers = 0);

// Rejection sampling of uniform tables under the given seed; after
// `attempts` failures falls back to a randomly relabeled stock instance
// (null, left-zero, right-zero, or a group with zero when g fits).
std::optional<GammaSemigroup> random_instance(int m, int g, uint64_t seed, int attempts);

struct SearchCounterexample {
  GammaSemigroup instance;
  CheckReport report;
};

struct SearchOutcome {
  int problem = 0;
  int max_m = 0;
  int max_g = 0;
  uint64_t nodes = 0;
  uint64_t instances = 0;
  bool budget_exhausted = false;
  std::optional<SearchCounterexample> counterexample;
};

// Walks the raw enumeration streams for every (m, g) up to the bounds in
// lexicographic order and evaluates the Problem implication on each
// instance; stops at the first violation. Deterministic for fixed bounds.
SearchOutcome search_counterexample(int problem, int max_m, int max_g,
                                    std::optional<uint64_t> budget = std::nullopt,
                                    int workers = 0);

StatementId problem_statement(int problem);

}  // namespace gsgp
