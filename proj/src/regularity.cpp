#include "gsgp/regularity.hpp"

#include <sstream>
#include <stdexcept>

#include "gsgp/green.hpp"

namespace gsgp {

Elem eval_product(const GammaSemigroup& M, const ProductExpr& e) {
  if (e.atoms.empty() || e.ops.size() != e.atoms.size() - 1)
    throw std::invalid_argument("eval_product: malformed expression");
  Elem acc = e.atoms[0];
  for (size_t i = 0; i < e.ops.size(); ++i) acc = M.product(e.ops[i], acc, e.atoms[i + 1]);
  return acc;
}

bool replays(const GammaSemigroup& M, const ProductExpr& e) {
  return eval_product(M, e) == e.expected;
}

bool replay(const GammaSemigroup& M, const RegularityWitness& w) {
  if (w.equations.empty()) return false;
  for (const ProductExpr& e : w.equations)
    if (!replays(M, e)) return false;
  return true;
}

std::string to_string(const GammaSemigroup& M, const RegularityWitness& w) {
  std::ostringstream os;
  os << M.element_name(w.x) << ": ";
  bool first = true;
  for (const ProductExpr& e : w.equations) {
    if (!first) os << "; ";
    first = false;
    for (size_t i = 0; i < e.atoms.size(); ++i) {
      if (i) os << " " << M.gamma_name(e.ops[i - 1]) << " ";
      os << M.element_name(e.atoms[i]);
    }
    os << " = " << M.element_name(e.expected);
  }
  return os.str();
}

std::optional<RegularityWitness> regular_element_witness(const GammaSemigroup& M, Elem a) {
  for (int g1 = 0; g1 < M.operator_count(); ++g1)
    for (Elem u = 0; u < M.size(); ++u)
      for (int g2 = 0; g2 < M.operator_count(); ++g2)
        if (M.product(g2, M.product(g1, a, u), a) == a) {
          RegularityWitness w;
          w.x = a;
          w.clause = WitnessClause::solution;
          w.operators = {g1, g2};
          w.solvers = {u};
          w.equations = {{{a, u, a}, {g1, g2}, a}};
          return w;
        }
  return std::nullopt;
}

bool is_regular_element(const GammaSemigroup& M, Elem a) {
  return regular_element_witness(M, a).has_value();
}

ElementSet irregular_elements(const GammaSemigroup& M) {
  ElementSet out(M.size());
  for (Elem a = 0; a < M.size(); ++a)
    if (!is_regular_element(M, a)) out.insert(a);
  return out;
}

bool is_regular(const GammaSemigroup& M) { return irregular_elements(M).empty(); }

namespace {

// side: true = left (u g a g a), false = right (a g a g u).
RegularityVerdict strongly_regular_one_sided(const GammaSemigroup& M, bool left) {
  RegularityVerdict v;
  v.holds = true;
  for (Elem a = 0; a < M.size() && v.holds; ++a)
    for (int gamma = 0; gamma < M.operator_count(); ++gamma) {
      std::optional<Elem> found;
      for (Elem u = 0; u < M.size() && !found; ++u) {
        Elem p = left ? M.product(gamma, M.product(gamma, u, a), a)
                      : M.product(gamma, M.product(gamma, a, a), u);
        if (p == a) found = u;
      }
      if (!found) {
        v.holds = false;
        v.witnesses.clear();
        v.failure = FailureWitness{a, {gamma}};
        break;
      }
      RegularityWitness w;
      w.x = a;
      w.clause = WitnessClause::solution;
      w.operators = {gamma};
      w.solvers = {*found};
      if (left)
        w.equations = {{{*found, a, a}, {gamma, gamma}, a}};
      else
        w.equations = {{{a, a, *found}, {gamma, gamma}, a}};
      v.witnesses.push_back(std::move(w));
    }
  return v;
}

}  // namespace

RegularityVerdict left_strongly_regular_direct(const GammaSemigroup& M) {
  return strongly_regular_one_sided(M, true);
}

RegularityVerdict right_strongly_regular_direct(const GammaSemigroup& M) {
  return strongly_regular_one_sided(M, false);
}

bool left_strongly_regular_via_green(const GammaSemigroup& M) {
  Partition l = l_partition(M);
  for (Elem a = 0; a < M.size(); ++a)
    for (int gamma = 0; gamma < M.operator_count(); ++gamma)
      if (!l.same_block(a, M.product(gamma, a, a))) return false;
  return true;
}

bool right_strongly_regular_via_green(const GammaSemigroup& M) {
  Partition r = r_partition(M);
  for (Elem a = 0; a < M.size(); ++a)
    for (int gamma = 0; gamma < M.operator_count(); ++gamma)
      if (!r.same_block(a, M.product(gamma, a, a))) return false;
  return true;
}

bool is_left_strongly_regular(const GammaSemigroup& M) {
  return left_strongly_regular_direct(M).holds;
}

bool is_right_strongly_regular(const GammaSemigroup& M) {
  return right_strongly_regular_direct(M).holds;
}

namespace {

// Plain-semigroup checks on an n x n table, kept free of the
// Gamma-machinery on purpose: this is the alternate route.
bool plain_left_regular(const std::vector<Elem>& t, int n) {
  for (Elem a = 0; a < n; ++a) {
    Elem sq = t[a * n + a];
    bool ok = false;
    for (Elem x = 0; x < n && !ok; ++x) ok = t[x * n + sq] == a;
    if (!ok) return false;
  }
  return true;
}

bool plain_right_regular(const std::vector<Elem>& t, int n) {
  for (Elem a = 0; a < n; ++a) {
    Elem sq = t[a * n + a];
    bool ok = false;
    for (Elem y = 0; y < n && !ok; ++y) ok = t[sq * n + y] == a;
    if (!ok) return false;
  }
  return true;
}

bool mixed_strongly_regular(const GammaSemigroup& M) {
  for (Elem a = 0; a < M.size(); ++a)
    for (int g1 = 0; g1 < M.operator_count(); ++g1)
      for (int g2 = 0; g2 < M.operator_count(); ++g2) {
        bool left = false, right = false;
        for (Elem u = 0; u < M.size() && !(left && right); ++u) {
          if (!left && M.product(g2, M.product(g1, u, a), a) == a) left = true;
          if (!right && M.product(g1, M.product(g2, a, a), u) == a) right = true;
        }
        if (!left || !right) return false;
      }
  return true;
}

}  // namespace

StrongRegularityReport strongly_regular_report(const GammaSemigroup& M) {
  StrongRegularityReport rep;
  RegularityVerdict l = left_strongly_regular_direct(M);
  RegularityVerdict r = right_strongly_regular_direct(M);
  rep.left_right = l.holds && r.holds;
  if (rep.left_right) {
    rep.witnesses = std::move(l.witnesses);
    rep.witnesses.insert(rep.witnesses.end(), r.witnesses.begin(), r.witnesses.end());
  } else {
    rep.failure = l.holds ? r.failure : l.failure;
  }

  rep.derived = true;
  for (int gamma = 0; gamma < M.operator_count() && rep.derived; ++gamma) {
    std::vector<Elem> t = derived_semigroup(M, gamma);
    rep.derived = plain_left_regular(t, M.size()) && plain_right_regular(t, M.size());
  }

  rep.mixed = mixed_strongly_regular(M);
  return rep;
}

bool is_strongly_regular(const GammaSemigroup& M) {
  return strongly_regular_report(M).verdict();
}

void validate_params(const SmnParams& p) {
  if (p.m < 0 || p.n < 0) throw std::invalid_argument("s(m,n): m and n must be nonnegative");
  if (p.zero_variant) {
    if (p.m + p.n <= 1) throw std::invalid_argument("s(m,n)0: m + n must exceed 1");
  } else {
    if (p.m + p.n < 1) throw std::invalid_argument("s(m,n): m + n must be at least 1");
  }
}

std::optional<RegularityWitness> smn_witness(const GammaSemigroup& M, Elem x,
                                             const SmnParams& p) {
  validate_params(p);
  const int g = M.operator_count();

  if (p.zero_variant && M.has_zero()) {
    const Elem z = *M.zero();
    for (int side = 0; side < 2; ++side) {
      int k = side == 0 ? p.m : p.n;
      if (k <= 0) continue;
      for (int gamma = 0; gamma < g; ++gamma)
        if (M.power(x, gamma, k) == z) {
          RegularityWitness w;
          w.x = x;
          w.clause = WitnessClause::zero;
          w.operators = {gamma};
          ProductExpr e;
          e.atoms.assign(k, x);
          e.ops.assign(k - 1, gamma);
          e.expected = z;
          w.equations = {std::move(e)};
          return w;
        }
    }
  }

  RegularityWitness w;
  w.x = x;
  w.clause = WitnessClause::solution;
  auto try_pair = [&](int alpha, int beta) -> bool {
    // alpha < 0 / beta < 0 mark an omitted side
    for (Elem u = 0; u < M.size(); ++u) {
      ProductExpr e;
      if (p.m > 0) {
        e.atoms.assign(p.m, x);
        e.ops.assign(p.m - 1, alpha);
        e.atoms.push_back(u);
        e.ops.push_back(alpha);
      } else {
        e.atoms = {u};
      }
      if (p.n > 0) {
        e.ops.push_back(beta);
        for (int i = 0; i < p.n; ++i) {
          e.atoms.push_back(x);
          if (i) e.ops.push_back(beta);
        }
      }
      e.expected = x;
      if (eval_product(M, e) == x) {
        if (alpha >= 0) w.operators.push_back(alpha);
        if (beta >= 0) w.operators.push_back(beta);
        w.solvers.push_back(u);
        w.equations.push_back(std::move(e));
        return true;
      }
    }
    return false;
  };

  if (p.m > 0 && p.n > 0) {
    for (int alpha = 0; alpha < g; ++alpha)
      for (int beta = 0; beta < g; ++beta)
        if (!try_pair(alpha, beta)) return std::nullopt;
  } else if (p.m > 0) {
    for (int alpha = 0; alpha < g; ++alpha)
      if (!try_pair(alpha, -1)) return std::nullopt;
  } else {
    for (int beta = 0; beta < g; ++beta)
      if (!try_pair(-1, beta)) return std::nullopt;
  }
  return w;
}

bool in_class_smn(const GammaSemigroup& M, Elem x, const SmnParams& p) {
  return smn_witness(M, x, p).has_value();
}

bool in_class_smn_all(const GammaSemigroup& M, const SmnParams& p) {
  return smn_verdict(M, p).holds;
}

RegularityVerdict smn_verdict(const GammaSemigroup& M, const SmnParams& p) {
  RegularityVerdict v;
  v.holds = true;
  for (Elem x = 0; x < M.size(); ++x) {
    std::optional<RegularityWitness> w = smn_witness(M, x, p);
    if (!w) {
      v.holds = false;
      v.witnesses.clear();
      v.failure = FailureWitness{x, {}};
      return v;
    }
    v.witnesses.push_back(*std::move(w));
  }
  return v;
}

TwoZeroReport two_zero_strongly_regular_report(const GammaSemigroup& M) {
  if (!M.has_zero())
    throw std::invalid_argument("is_2_0_strongly_regular: structure has no zero");
  const Elem z = *M.zero();
  const int g = M.operator_count();

  TwoZeroReport rep;
  rep.definitional = true;
  for (Elem x = 0; x < M.size() && rep.definitional; ++x)
    for (int gamma = 0; gamma < g; ++gamma) {
      if (M.product(gamma, x, x) == z) {
        RegularityWitness w;
        w.x = x;
        w.clause = WitnessClause::zero;
        w.operators = {gamma};
        w.equations = {{{x, x}, {gamma}, z}};
        rep.witnesses.push_back(std::move(w));
        continue;
      }
      std::optional<Elem> found;
      for (Elem u = 0; u < M.size() && !found; ++u) {
        ProductExpr e{{x, x, u, x, x}, {gamma, gamma, gamma, gamma}, x};
        if (eval_product(M, e) == x) found = u;
      }
      if (!found) {
        rep.definitional = false;
        rep.witnesses.clear();
        rep.failure = FailureWitness{x, {gamma}};
        break;
      }
      RegularityWitness w;
      w.x = x;
      w.clause = WitnessClause::solution;
      w.operators = {gamma};
      w.solvers = {*found};
      w.equations = {{{x, x, *found, x, x}, {gamma, gamma, gamma, gamma}, x}};
      rep.witnesses.push_back(std::move(w));
    }

  rep.via_green = true;
  Partition h = h_partition(M);
  for (Elem x = 0; x < M.size() && rep.via_green; ++x)
    for (int gamma = 0; gamma < g; ++gamma) {
      Elem sq = M.product(gamma, x, x);
      if (sq != z && !h.same_block(x, sq)) {
        rep.via_green = false;
        break;
      }
    }
  return rep;
}

bool is_2_0_strongly_regular(const GammaSemigroup& M) {
  return two_zero_strongly_regular_report(M).verdict();
}

bool is_left_0_strongly_regular(const GammaSemigroup& M) {
  return in_class_smn_all(M, {0, 2, true});
}

bool is_right_0_strongly_regular(const GammaSemigroup& M) {
  return in_class_smn_all(M, {2, 0, true});
}

RegularityVerdict intra_0_strongly_regular_verdict(const GammaSemigroup& M) {
  if (!M.has_zero())
    throw std::invalid_argument("is_intra_0_strongly_regular: structure has no zero");
  const Elem z = *M.zero();
  const int g = M.operator_count();

  RegularityVerdict v;
  v.holds = true;
  for (Elem x = 0; x < M.size() && v.holds; ++x) {
    int zgamma = -1;
    for (int gamma = 0; gamma < g && zgamma < 0; ++gamma)
      if (M.product(gamma, x, x) == z) zgamma = gamma;
    if (zgamma >= 0) {
      RegularityWitness w;
      w.x = x;
      w.clause = WitnessClause::zero;
      w.operators = {zgamma};
      w.equations = {{{x, x}, {zgamma}, z}};
      v.witnesses.push_back(std::move(w));
      continue;
    }
    RegularityWitness w;
    w.x = x;
    w.clause = WitnessClause::solution;
    for (int alpha = 0; alpha < g; ++alpha) {
      std::optional<std::pair<Elem, Elem>> found;
      for (Elem u = 0; u < M.size() && !found; ++u)
        for (Elem vv = 0; vv < M.size() && !found; ++vv) {
          ProductExpr e{{u, x, x, vv}, {alpha, alpha, alpha}, x};
          if (eval_product(M, e) == x) found = {u, vv};
        }
      if (!found) {
        v.holds = false;
        v.witnesses.clear();
        v.failure = FailureWitness{x, {alpha}};
        break;
      }
      w.operators.push_back(alpha);
      w.solvers.push_back(found->first);
      w.solvers.push_back(found->second);
      w.equations.push_back({{found->first, x, x, found->second}, {alpha, alpha, alpha}, x});
    }
    if (v.holds) v.witnesses.push_back(std::move(w));
  }
  return v;
}

bool is_intra_0_strongly_regular(const GammaSemigroup& M) {
  return intra_0_strongly_regular_verdict(M).holds;
}

}  // namespace gsgp
