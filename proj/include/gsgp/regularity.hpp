#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsgp/core.hpp"

// The regularity hierarchy: ordinary regular elements, left/right/two-sided
// strong regularity (with independent alternate routes for each), the
// s(m,n) / s(m,n)0 classes, and the zero-aware variants. Every positive
// verdict carries witnesses that replay through the multiplication table.

namespace gsgp {

enum class WitnessClause { zero, solution };

// Alternating product a0 g0 a1 g1 ... a_k, evaluated left to right,
// claimed to equal `expected`.
struct ProductExpr {
  std::vector<Elem> atoms;
  std::vector<int> ops;  // size = atoms.size() - 1
  Elem expected = -1;
};

Elem eval_product(const GammaSemigroup& M, const ProductExpr& e);
bool replays(const GammaSemigroup& M, const ProductExpr& e);

struct RegularityWitness {
  Elem x = -1;
  WitnessClause clause = WitnessClause::solution;
  std::vector<int> operators;   // operator binding, in quantifier order
  std::vector<Elem> solvers;    // solving elements, in discovery order
  std::vector<ProductExpr> equations;
};

// All equations of the witness hold in the table.
bool replay(const GammaSemigroup& M, const RegularityWitness& w);

std::string to_string(const GammaSemigroup& M, const RegularityWitness& w);

// The obligation that failed: element x under the given operators.
struct FailureWitness {
  Elem x = -1;
  std::vector<int> operators;
};

struct RegularityVerdict {
  bool holds = false;
  std::vector<RegularityWitness> witnesses;
  std::optional<FailureWitness> failure;
};

// a in a Gamma M Gamma a, witness a = a g1 u g2 a.
std::optional<RegularityWitness> regular_element_witness(const GammaSemigroup& M, Elem a);
bool is_regular_element(const GammaSemigroup& M, Elem a);
ElementSet irregular_elements(const GammaSemigroup& M);
bool is_regular(const GammaSemigroup& M);  // every element regular

// Left: every (a, gamma) solves a = u gamma a gamma a. Right is dual,
// a = a gamma a gamma u. The via_green routes test instead that a and
// a gamma a generate the same one-sided principal ideal.
RegularityVerdict left_strongly_regular_direct(const GammaSemigroup& M);
RegularityVerdict right_strongly_regular_direct(const GammaSemigroup& M);
bool left_strongly_regular_via_green(const GammaSemigroup& M);
bool right_strongly_regular_via_green(const GammaSemigroup& M);
bool is_left_strongly_regular(const GammaSemigroup& M);
bool is_right_strongly_regular(const GammaSemigroup& M);

// Three routes to strong regularity:
//   left_right — left and right strong regularity together;
//   derived    — every derived semigroup (M, gamma) is left and right
//                regular as a plain semigroup;
//   mixed      — every (a, g1, g2) solves a = u1 g1 a g2 a = a g2 a g1 u2.
// The reported verdict is left_right; any disagreement is surfaced, never
// reconciled silently.
struct StrongRegularityReport {
  bool left_right = false;
  bool derived = false;
  bool mixed = false;
  std::vector<RegularityWitness> witnesses;  // from the left_right route
  std::optional<FailureWitness> failure;

  bool verdict() const { return left_right; }
  bool anomaly() const { return left_right != derived || derived != mixed; }
};

StrongRegularityReport strongly_regular_report(const GammaSemigroup& M);
bool is_strongly_regular(const GammaSemigroup& M);

// Membership class s(m,n) / s(m,n)0. An element x qualifies when
//   (zero variant, m > 0)  some alpha-power x^m vanishes, or
//   (zero variant, n > 0)  some beta-power x^n vanishes, or
//   for all alpha, beta there is u with x = x^m alpha u beta x^n,
// where a zero-length power is omitted together with its adjacent
// operator (and its quantifier). The plain variant keeps only the last
// clause. Structures without a zero evaluate the vanishing clauses as
// false, so s(m,n) and s(m,n)0 coincide there.
struct SmnParams {
  int m = 0;
  int n = 0;
  bool zero_variant = false;
};

// m, n >= 0; plain needs m+n >= 1, the zero variant m+n > 1.
void validate_params(const SmnParams& p);

std::optional<RegularityWitness> smn_witness(const GammaSemigroup& M, Elem x, const SmnParams& p);
bool in_class_smn(const GammaSemigroup& M, Elem x, const SmnParams& p);
bool in_class_smn_all(const GammaSemigroup& M, const SmnParams& p);
RegularityVerdict smn_verdict(const GammaSemigroup& M, const SmnParams& p);

// 2-0-strong regularity, two routes, both per (x, gamma) so that the
// catalog equivalences hold with several operators in play (requires a
// zero):
//   definitional — the square x gamma x vanishes or x = x g x g u g x g x
//                  solves for that same gamma;
//   via_green    — the square vanishes or lands in H_x.
struct TwoZeroReport {
  bool definitional = false;
  bool via_green = false;
  std::vector<RegularityWitness> witnesses;
  std::optional<FailureWitness> failure;

  bool verdict() const { return definitional; }
  bool anomaly() const { return definitional != via_green; }
};

TwoZeroReport two_zero_strongly_regular_report(const GammaSemigroup& M);
bool is_2_0_strongly_regular(const GammaSemigroup& M);

bool is_left_0_strongly_regular(const GammaSemigroup& M);   // s(0,2)0
bool is_right_0_strongly_regular(const GammaSemigroup& M);  // s(2,0)0

// Per element: some square vanishes, or for every alpha there are u, v
// with x = u alpha x alpha x alpha v. Requires a zero.
RegularityVerdict intra_0_strongly_regular_verdict(const GammaSemigroup& M);
bool is_intra_0_strongly_regular(const GammaSemigroup& M);

}  // namespace gsgp
