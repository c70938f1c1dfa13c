#include "gsgp/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace gsgp {

std::string to_string(const Violation& v) {
  std::ostringstream os;
  switch (v.kind) {
    case Violation::Kind::range:
      os << "range: table[" << v.alpha << "][" << v.a << "][" << v.b << "] = " << v.lhs;
      break;
    case Violation::Kind::associativity:
      os << "associativity: (a" << v.alpha << "b)" << v.beta << "c != a" << v.alpha << "(b"
         << v.beta << "c) at a=" << v.a << " b=" << v.b << " c=" << v.c << " (" << v.lhs
         << " != " << v.rhs << ")";
      break;
    case Violation::Kind::zero_law:
      os << "zero-law: product with claimed zero " << v.a << " gives " << v.lhs;
      break;
  }
  return os.str();
}

Elem GammaSemigroup::power(Elem x, int gamma, int k) const {
  Elem acc = x;
  for (int i = 1; i < k; ++i) acc = product(gamma, acc, x);
  return acc;
}

std::string GammaSemigroup::element_name(Elem a) const {
  if (!element_names_.empty()) return element_names_[a];
  return "e" + std::to_string(a);
}

std::string GammaSemigroup::gamma_name(int gamma) const {
  if (!gamma_names_.empty()) return gamma_names_[gamma];
  return "g" + std::to_string(gamma);
}

RawTable GammaSemigroup::raw() const {
  RawTable r;
  r.m = m_;
  r.g = g_;
  r.entries = table_;
  r.element_names = element_names_;
  r.gamma_names = gamma_names_;
  return r;
}

namespace {

std::optional<Elem> detect_zero(int m, int g, const std::vector<Elem>& t) {
  for (Elem z = 0; z < m; ++z) {
    bool absorbs = true;
    for (int gamma = 0; gamma < g && absorbs; ++gamma) {
      for (Elem x = 0; x < m; ++x) {
        if (t[(gamma * m + z) * m + x] != z || t[(gamma * m + x) * m + z] != z) {
          absorbs = false;
          break;
        }
      }
    }
    if (absorbs) return z;  // at most one element can absorb from both sides
  }
  return std::nullopt;
}

}  // namespace

ValidationResult validate(const RawTable& raw) {
  ValidationResult res;
  if (raw.m < 1 || raw.g < 1)
    throw std::invalid_argument("validate: need m >= 1 and g >= 1");
  if (static_cast<int>(raw.entries.size()) != raw.g * raw.m * raw.m)
    throw std::invalid_argument("validate: table must have g*m*m entries");
  if (!raw.element_names.empty() && static_cast<int>(raw.element_names.size()) != raw.m)
    throw std::invalid_argument("validate: element name count != m");
  if (!raw.gamma_names.empty() && static_cast<int>(raw.gamma_names.size()) != raw.g)
    throw std::invalid_argument("validate: gamma name count != g");

  const int m = raw.m, g = raw.g;
  for (int gamma = 0; gamma < g; ++gamma)
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b) {
        Elem v = raw.at(gamma, a, b);
        if (v < 0 || v >= m)
          res.violations.push_back({Violation::Kind::range, gamma, -1, a, b, -1, v, -1});
      }
  if (!res.violations.empty()) return res;

  for (int alpha = 0; alpha < g; ++alpha)
    for (int beta = 0; beta < g; ++beta)
      for (Elem a = 0; a < m; ++a)
        for (Elem b = 0; b < m; ++b)
          for (Elem c = 0; c < m; ++c) {
            Elem lhs = raw.at(beta, raw.at(alpha, a, b), c);
            Elem rhs = raw.at(alpha, a, raw.at(beta, b, c));
            if (lhs != rhs)
              res.violations.push_back(
                  {Violation::Kind::associativity, alpha, beta, a, b, c, lhs, rhs});
          }
  if (!res.violations.empty()) return res;

  GammaSemigroup M;
  M.m_ = m;
  M.g_ = g;
  M.table_ = raw.entries;
  M.element_names_ = raw.element_names;
  M.gamma_names_ = raw.gamma_names;
  M.zero_ = detect_zero(m, g, M.table_);
  res.value = std::move(M);
  return res;
}

GammaSemigroup must_validate(const RawTable& raw) {
  ValidationResult res = validate(raw);
  if (!res.ok()) {
    std::ostringstream os;
    os << "invalid Gamma-semigroup table:";
    for (const auto& v : res.violations) os << "\n  " << to_string(v);
    throw std::invalid_argument(os.str());
  }
  return *std::move(res.value);
}

std::optional<Elem> find_zero(const GammaSemigroup& M) {
  for (Elem z = 0; z < M.size(); ++z)
    if (zero_law_violations(M, z).empty()) return z;
  return std::nullopt;
}

std::vector<Violation> zero_law_violations(const GammaSemigroup& M, Elem z) {
  std::vector<Violation> out;
  for (int gamma = 0; gamma < M.operator_count(); ++gamma)
    for (Elem x = 0; x < M.size(); ++x) {
      if (Elem p = M.product(gamma, z, x); p != z)
        out.push_back({Violation::Kind::zero_law, gamma, -1, z, x, -1, p, z});
      if (Elem p = M.product(gamma, x, z); p != z)
        out.push_back({Violation::Kind::zero_law, gamma, -1, x, z, -1, p, z});
    }
  return out;
}

ElementSet ElementSet::full(int universe) {
  ElementSet s(universe);
  for (Elem a = 0; a < universe; ++a) s.insert(a);
  return s;
}

ElementSet ElementSet::of(int universe, std::initializer_list<Elem> elems) {
  ElementSet s(universe);
  for (Elem a : elems) s.insert(a);
  return s;
}

ElementSet ElementSet::single(int universe, Elem a) {
  ElementSet s(universe);
  s.insert(a);
  return s;
}

int ElementSet::count() const {
  int n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool ElementSet::empty() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<Elem> ElementSet::elements() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < universe_; ++a)
    if (contains(a)) out.push_back(a);
  return out;
}

bool set_less(const ElementSet& a, const ElementSet& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.elements() < b.elements();
}

std::string to_string(const GammaSemigroup& M, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Elem a : s.elements()) {
    if (!first) out += ",";
    out += M.element_name(a);
    first = false;
  }
  return out + "}";
}

ElementSet set_product(const GammaSemigroup& M, const ElementSet& A,
                       std::span<const int> gammas, const ElementSet& B) {
  if (gammas.empty()) throw std::invalid_argument("set_product: empty operator set");
  ElementSet out(M.size());
  for (Elem a : A.elements())
    for (int gamma : gammas)
      for (Elem b : B.elements()) out.insert(M.product(gamma, a, b));
  return out;
}

ElementSet set_product(const GammaSemigroup& M, const ElementSet& A, const ElementSet& B) {
  std::vector<int> gammas = all_gammas(M);
  return set_product(M, A, gammas, B);
}

std::vector<int> all_gammas(const GammaSemigroup& M) {
  std::vector<int> out(M.operator_count());
  for (int i = 0; i < M.operator_count(); ++i) out[i] = i;
  return out;
}

std::vector<Elem> derived_semigroup(const GammaSemigroup& M, int gamma) {
  if (gamma < 0 || gamma >= M.operator_count())
    throw std::invalid_argument("derived_semigroup: operator index out of range");
  std::vector<Elem> t(M.size() * M.size());
  for (Elem a = 0; a < M.size(); ++a)
    for (Elem b = 0; b < M.size(); ++b) t[a * M.size() + b] = M.product(gamma, a, b);
  return t;
}

bool is_sub_gamma_semigroup(const GammaSemigroup& M, const ElementSet& T) {
  if (T.empty()) throw std::invalid_argument("is_sub_gamma_semigroup: empty subset");
  return set_product(M, T, T).is_subset_of(T);
}

std::vector<std::pair<Elem, int>> idempotent_pairs(const GammaSemigroup& M) {
  std::vector<std::pair<Elem, int>> out;
  for (Elem e = 0; e < M.size(); ++e)
    for (int gamma = 0; gamma < M.operator_count(); ++gamma)
      if (M.product(gamma, e, e) == e) out.emplace_back(e, gamma);
  return out;
}

}  // namespace gsgp
