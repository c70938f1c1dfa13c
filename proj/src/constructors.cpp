#include "gsgp/constructors.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsgp {

bool is_associative(const PlainSemigroup& s) {
  for (Elem a = 0; a < s.n; ++a)
    for (Elem b = 0; b < s.n; ++b)
      for (Elem c = 0; c < s.n; ++c)
        if (s.at(s.at(a, b), c) != s.at(a, s.at(b, c))) return false;
  return true;
}

bool is_commutative(const PlainSemigroup& s) {
  for (Elem a = 0; a < s.n; ++a)
    for (Elem b = 0; b < a; ++b)
      if (s.at(a, b) != s.at(b, a)) return false;
  return true;
}

bool is_regular_plain(const PlainSemigroup& s) {
  for (Elem a = 0; a < s.n; ++a) {
    bool ok = false;
    for (Elem x = 0; x < s.n && !ok; ++x) ok = s.at(s.at(a, x), a) == a;
    if (!ok) return false;
  }
  return true;
}

bool is_group(const PlainSemigroup& s) {
  if (s.n < 1 || !is_associative(s)) return false;
  Elem e = -1;
  for (Elem cand = 0; cand < s.n && e < 0; ++cand) {
    bool ident = true;
    for (Elem a = 0; a < s.n && ident; ++a)
      ident = s.at(cand, a) == a && s.at(a, cand) == a;
    if (ident) e = cand;
  }
  if (e < 0) return false;
  for (Elem a = 0; a < s.n; ++a) {
    bool inv = false;
    for (Elem b = 0; b < s.n && !inv; ++b) inv = s.at(a, b) == e && s.at(b, a) == e;
    if (!inv) return false;
  }
  return true;
}

PlainSemigroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: order must be >= 1");
  PlainSemigroup s;
  s.n = n;
  s.table.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) s.table[a * n + b] = (a + b) % n;
  return s;
}

PlainSemigroup klein_four_group() {
  // Z2 x Z2: index = 2*x + y, product = componentwise xor.
  PlainSemigroup s;
  s.n = 4;
  s.table.resize(16);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) s.table[a * 4 + b] = a ^ b;
  return s;
}

PlainSemigroup symmetric_group_3() {
  // Permutations of {0,1,2} in lexicographic one-line order.
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  PlainSemigroup s;
  s.n = 6;
  s.table.resize(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int comp[3];  // (a o b)(x) = a(b(x))
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      s.table[a * 6 + b] = index_of(comp);
    }
  return s;
}

GammaSemigroup group_with_zero(const PlainSemigroup& group, const std::vector<Elem>& gamma) {
  if (!is_group(group)) throw std::invalid_argument("group_with_zero: input is not a group");
  if (gamma.empty()) throw std::invalid_argument("group_with_zero: gamma must be nonempty");
  for (Elem x : gamma)
    if (x < 0 || x >= group.n)
      throw std::invalid_argument("group_with_zero: gamma element out of range");

  const int n = group.n;
  RawTable raw;
  raw.m = n + 1;
  raw.g = static_cast<int>(gamma.size());
  raw.entries.assign(raw.g * raw.m * raw.m, 0);  // zero is index 0
  for (int gi = 0; gi < raw.g; ++gi)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        raw.at(gi, a + 1, b + 1) = group.at(group.at(a, gamma[gi]), b) + 1;

  raw.element_names.push_back("0");
  for (Elem a = 0; a < n; ++a)
    raw.element_names.push_back(group.names.empty() ? "x" + std::to_string(a) : group.names[a]);
  for (Elem x : gamma) raw.gamma_names.push_back(raw.element_names[x + 1]);
  return must_validate(raw);
}

std::vector<Elem> maximal_subgroup_at(const PlainSemigroup& s, Elem e) {
  std::vector<Elem> out;
  for (Elem x = 0; x < s.n; ++x) {
    if (s.at(x, e) != x) continue;
    for (Elem y = 0; y < s.n; ++y)
      if (s.at(y, e) == y && s.at(x, y) == e) {
        out.push_back(x);
        break;
      }
  }
  return out;
}

GammaSemigroup from_commutative_regular_semigroup(const PlainSemigroup& s, Elem e) {
  if (!is_associative(s))
    throw std::invalid_argument("from_commutative_regular_semigroup: not associative");
  if (!is_commutative(s))
    throw std::invalid_argument("from_commutative_regular_semigroup: not commutative");
  if (!is_regular_plain(s))
    throw std::invalid_argument("from_commutative_regular_semigroup: not regular");
  if (e < 0 || e >= s.n || s.at(e, e) != e)
    throw std::invalid_argument("from_commutative_regular_semigroup: e is not an idempotent");

  // Gamma is the maximal subgroup at e; the Gamma-multiplication is S's
  // own product, a gamma b = a*b.
  std::vector<Elem> gamma = maximal_subgroup_at(s, e);
  RawTable raw;
  raw.m = s.n;
  raw.g = static_cast<int>(gamma.size());
  raw.entries.assign(raw.g * raw.m * raw.m, 0);
  for (int gi = 0; gi < raw.g; ++gi)
    for (Elem a = 0; a < s.n; ++a)
      for (Elem b = 0; b < s.n; ++b) raw.at(gi, a, b) = s.at(a, b);
  if (!s.names.empty()) {
    raw.element_names = s.names;
    for (Elem x : gamma) raw.gamma_names.push_back(s.names[x]);
  } else {
    for (Elem x : gamma) raw.gamma_names.push_back("e" + std::to_string(x));
  }
  return must_validate(raw);
}

GammaSemigroup adjoin_zero(const GammaSemigroup& M) {
  const int m = M.size(), g = M.operator_count();
  RawTable raw;
  raw.m = m + 1;
  raw.g = g;
  raw.entries.assign(g * raw.m * raw.m, m);  // the new element absorbs
  for (int gamma = 0; gamma < g; ++gamma)
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b) raw.at(gamma, a, b) = M.product(gamma, a, b);
  if (!M.element_names().empty()) {
    raw.element_names = M.element_names();
    std::string z = "z";
    while (std::find(raw.element_names.begin(), raw.element_names.end(), z) !=
           raw.element_names.end())
      z += "z";
    raw.element_names.push_back(z);
  }
  raw.gamma_names = M.gamma_names();
  return must_validate(raw);
}

const std::vector<FixtureId> kAllFixtures = {FixtureId::T1,  FixtureId::N2,  FixtureId::LZ2,
                                             FixtureId::RZ2, FixtureId::SL2, FixtureId::GZ3,
                                             FixtureId::B5};

const char* fixture_name(FixtureId id) {
  switch (id) {
    case FixtureId::T1: return "T1";
    case FixtureId::N2: return "N2";
    case FixtureId::LZ2: return "LZ2";
    case FixtureId::RZ2: return "RZ2";
    case FixtureId::SL2: return "SL2";
    case FixtureId::GZ3: return "GZ3";
    case FixtureId::B5: return "B5";
  }
  return "?";
}

FixtureId fixture_id(const std::string& name) {
  for (FixtureId id : kAllFixtures)
    if (name == fixture_name(id)) return id;
  throw std::invalid_argument("unknown fixture id: " + name);
}

GammaSemigroup fixture(FixtureId id) {
  RawTable raw;
  switch (id) {
    case FixtureId::T1:
      raw.m = 1;
      raw.g = 1;
      raw.entries = {0};
      raw.element_names = {"a"};
      raw.gamma_names = {"g0"};
      break;
    case FixtureId::N2:
      raw.m = 2;
      raw.g = 1;
      raw.entries = {0, 0, 0, 0};
      raw.element_names = {"0", "a"};
      raw.gamma_names = {"g0"};
      break;
    case FixtureId::LZ2:
      raw.m = 2;
      raw.g = 1;
      raw.entries = {0, 0, 1, 1};
      raw.element_names = {"a", "b"};
      raw.gamma_names = {"g0"};
      break;
    case FixtureId::RZ2:
      raw.m = 2;
      raw.g = 1;
      raw.entries = {0, 1, 0, 1};
      raw.element_names = {"a", "b"};
      raw.gamma_names = {"g0"};
      break;
    case FixtureId::SL2:
      raw.m = 2;
      raw.g = 1;
      raw.entries = {0, 0, 0, 1};
      raw.element_names = {"0", "e"};
      raw.gamma_names = {"g0"};
      break;
    case FixtureId::GZ3:
      raw.m = 3;
      raw.g = 1;
      // carrier [0, e, a]; nonzero part the 2-element group with identity e
      raw.entries = {0, 0, 0, 0, 1, 2, 0, 2, 1};
      raw.element_names = {"0", "e", "a"};
      raw.gamma_names = {"e"};
      break;
    case FixtureId::B5:
      raw.m = 5;
      raw.g = 1;
      // carrier [0, a, b, e, f]: a*b=e, b*a=f, e*a=a, a*f=a, f*b=b, b*e=b,
      // e*e=e, f*f=f, all else 0
      raw.entries = {
          0, 0, 0, 0, 0,  //
          0, 0, 3, 0, 1,  //
          0, 4, 0, 2, 0,  //
          0, 1, 0, 3, 0,  //
          0, 0, 2, 0, 4,  //
      };
      raw.element_names = {"0", "a", "b", "e", "f"};
      raw.gamma_names = {"g0"};
      break;
  }
  return must_validate(raw);
}

}  // namespace gsgp
