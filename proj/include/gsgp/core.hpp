#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

// Core representation of a finite Gamma-semigroup: a carrier M of m
// elements, a set Gamma of g operators, and a total multiplication
// (gamma, a, b) -> a gamma b satisfying the mixed associativity law
//   (a alpha b) beta c == a alpha (b beta c)   for all a,b,c, alpha,beta.
//
// Elements and operators are dense 0-based indices; names are
// presentation-only metadata.

namespace gsgp {

using Elem = int;

// Unvalidated input: sizes plus a flat table of g*m*m entries,
// entry index (gamma*m + a)*m + b.
struct RawTable {
  int m = 0;
  int g = 0;
  std::vector<Elem> entries;
  std::vector<std::string> element_names;  // empty = defaults e0..e{m-1}
  std::vector<std::string> gamma_names;    // empty = defaults g0..g{g-1}

  Elem& at(int gamma, Elem a, Elem b) { return entries[(gamma * m + a) * m + b]; }
  Elem at(int gamma, Elem a, Elem b) const { return entries[(gamma * m + a) * m + b]; }
};

struct Violation {
  enum class Kind { range, associativity, zero_law };
  Kind kind;
  // associativity: (a alpha b) beta c != a alpha (b beta c), lhs/rhs the two products.
  // range: table cell (alpha, a, b) holds lhs, an index outside [0, m).
  // zero_law: z alpha a != z (or a alpha z != z); lhs is the offending product.
  int alpha = -1;
  int beta = -1;
  Elem a = -1;
  Elem b = -1;
  Elem c = -1;
  Elem lhs = -1;
  Elem rhs = -1;
};

std::string to_string(const Violation& v);

class GammaSemigroup;
struct ValidationResult;
ValidationResult validate(const RawTable& raw);

class GammaSemigroup {
 public:
  int size() const { return m_; }
  int operator_count() const { return g_; }

  Elem product(int gamma, Elem a, Elem b) const {
    return table_[(gamma * m_ + a) * m_ + b];
  }

  // k-fold gamma-power x gamma x gamma ... gamma x (k >= 1 copies of x).
  Elem power(Elem x, int gamma, int k) const;

  std::optional<Elem> zero() const { return zero_; }
  bool has_zero() const { return zero_.has_value(); }

  std::span<const Elem> flat_table() const { return table_; }
  const std::vector<std::string>& element_names() const { return element_names_; }
  const std::vector<std::string>& gamma_names() const { return gamma_names_; }
  std::string element_name(Elem a) const;
  std::string gamma_name(int gamma) const;

  RawTable raw() const;

 private:
  friend ValidationResult validate(const RawTable& raw);
  GammaSemigroup() = default;

  int m_ = 0;
  int g_ = 0;
  std::vector<Elem> table_;
  std::vector<std::string> element_names_;
  std::vector<std::string> gamma_names_;
  std::optional<Elem> zero_;
};

// Checks sizes, entry ranges and the mixed associativity law. Range
// violations (ordered by (gamma, a, b)) suppress the associativity scan,
// since products of out-of-range entries are undefined. Associativity
// violations are ordered by (alpha, beta, a, b, c). On success the
// designated zero, if any, is detected and cached.
struct ValidationResult {
  std::optional<GammaSemigroup> value;
  std::vector<Violation> violations;

  bool ok() const { return value.has_value(); }
};

// validate() that throws std::invalid_argument on any violation.
GammaSemigroup must_validate(const RawTable& raw);

// The unique z with z gamma x == x gamma z == z for all x, gamma; scans
// the table directly.
std::optional<Elem> find_zero(const GammaSemigroup& M);

// Violations of the zero law for a claimed zero z; empty iff z absorbs
// from both sides.
std::vector<Violation> zero_law_violations(const GammaSemigroup& M, Elem z);

// Subset of the carrier of a fixed structure, with exact set algebra.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(int universe);
  static ElementSet of(int universe, std::initializer_list<Elem> elems);
  static ElementSet single(int universe, Elem a);

  int universe() const { return universe_; }
  bool contains(Elem a) const { return (words_[a >> 6] >> (a & 63)) & 1; }
  void insert(Elem a) { words_[a >> 6] |= uint64_t{1} << (a & 63); }
  void erase(Elem a) { words_[a >> 6] &= ~(uint64_t{1} << (a & 63)); }

  int count() const;
  bool empty() const;

  bool operator==(const ElementSet&) const = default;
  bool is_subset_of(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  std::vector<Elem> elements() const;  // ascending

 private:
  int universe_ = 0;
  std::vector<uint64_t> words_;
};

// Ordering by (size, sorted element list); used wherever sets of sets
// need a deterministic order.
bool set_less(const ElementSet& a, const ElementSet& b);

std::string to_string(const GammaSemigroup& M, const ElementSet& s);

// { a gamma b : a in A, gamma in gammas, b in B }. Empty operands give
// the empty set; an empty operator list is a precondition failure.
ElementSet set_product(const GammaSemigroup& M, const ElementSet& A,
                       std::span<const int> gammas, const ElementSet& B);

// Product over all of Gamma: A Gamma B.
ElementSet set_product(const GammaSemigroup& M, const ElementSet& A, const ElementSet& B);

std::vector<int> all_gammas(const GammaSemigroup& M);

// The plain semigroup (M, gamma): m x m table x*y = x gamma y.
std::vector<Elem> derived_semigroup(const GammaSemigroup& M, int gamma);

// T Gamma T included in T; empty T is a precondition failure.
bool is_sub_gamma_semigroup(const GammaSemigroup& M, const ElementSet& T);

// All (e, gamma) with e gamma e == e, ordered by (e, gamma).
std::vector<std::pair<Elem, int>> idempotent_pairs(const GammaSemigroup& M);

}  // namespace gsgp
