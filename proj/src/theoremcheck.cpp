#include "gsgp/theoremcheck.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "gsgp/green.hpp"
#include "gsgp/ideals.hpp"
#include "gsgp/regularity.hpp"
#include "gsgp/structure.hpp"

namespace gsgp {

const std::vector<StatementId> kAllStatements = {
    StatementId::L1_7,  StatementId::L1_8,  StatementId::T1_9,  StatementId::T1_10,
    StatementId::T2_15, StatementId::C2_16, StatementId::P2_17, StatementId::P2_20,
    StatementId::P2_21, StatementId::T2_22, StatementId::C2_23, StatementId::T2_24,
    StatementId::T2_25, StatementId::P3_7,  StatementId::T4_5,  StatementId::ZeroHClass,
    StatementId::Problem1, StatementId::Problem2, StatementId::Problem3,
};

const char* statement_name(StatementId id) {
  switch (id) {
    case StatementId::L1_7: return "L1.7";
    case StatementId::L1_8: return "L1.8";
    case StatementId::T1_9: return "T1.9";
    case StatementId::T1_10: return "T1.10";
    case StatementId::T2_15: return "T2.15";
    case StatementId::C2_16: return "C2.16";
    case StatementId::P2_17: return "P2.17";
    case StatementId::P2_20: return "P2.20";
    case StatementId::P2_21: return "P2.21";
    case StatementId::T2_22: return "T2.22";
    case StatementId::C2_23: return "C2.23";
    case StatementId::T2_24: return "T2.24";
    case StatementId::T2_25: return "T2.25";
    case StatementId::P3_7: return "P3.7";
    case StatementId::T4_5: return "T4.5";
    case StatementId::ZeroHClass: return "ZeroHClass";
    case StatementId::Problem1: return "Problem1";
    case StatementId::Problem2: return "Problem2";
    case StatementId::Problem3: return "Problem3";
  }
  return "?";
}

StatementId statement_id(const std::string& name) {
  for (StatementId id : kAllStatements)
    if (name == statement_name(id)) return id;
  throw std::invalid_argument("unknown statement id: " + name);
}

const char* statement_summary(StatementId id) {
  switch (id) {
    case StatementId::L1_7:
      return "left strong regularity is equivalent to a L (a g a) for all a, g";
    case StatementId::L1_8:
      return "right strong regularity is equivalent to a R (a g a) for all a, g";
    case StatementId::T1_9:
      return "under left (right) strong regularity every L (R) class is a left (right) "
             "simple sub-Gamma-semigroup";
    case StatementId::T1_10:
      return "union of Gamma-groups, strong regularity, every H-class a Gamma-group and "
             "disjoint Gamma-group decomposition are equivalent";
    case StatementId::T2_15:
      return "union of Gamma-groups is equivalent to left plus right strong regularity";
    case StatementId::C2_16:
      return "s(2,2), s(2,0) intersected with s(0,2), and union of Gamma-groups coincide";
    case StatementId::P2_17:
      return "s(n,n)0 equals s(0,n)0 intersected with s(n,0)0 (n = 2, 3)";
    case StatementId::P2_20:
      return "left/right/intra 0-strong regularity, 0-semiprime ideals, Green relations to "
             "squares and ideal membership of squares line up in three flavors";
    case StatementId::P2_21:
      return "all one- and two-sided ideals 0-semiprime iff 2-0-strongly regular";
    case StatementId::T2_22:
      return "2-0-strong regularity iff every square vanishes or stays in its H-class";
    case StatementId::C2_23:
      return "in a 2-0-strongly regular structure irregular elements lie in D-classes with "
             "D Gamma D = {0}";
    case StatementId::T2_24:
      return "in a 2-0-strongly regular structure every nonzero regular D-class plus zero is "
             "completely 0-simple";
    case StatementId::T2_25:
      return "for regular structures with zero: 2-0-strong regularity, 0-disjoint completely "
             "0-simple decomposition, left+right 0-strong regularity and 0-semiprime one-sided "
             "ideals are equivalent";
    case StatementId::P3_7:
      return "if every H-class plus zero is a quasi-ideal then the structure is 2-0-strongly "
             "regular";
    case StatementId::T4_5:
      return "computes 2-0-strong regularity plus mutual annihilation of D-classes with zero "
             "(the right-hand side of the absorbency characterization)";
    case StatementId::ZeroHClass:
      return "in a strongly regular structure with zero the H-class of zero is {0}";
    case StatementId::Problem1:
      return "open: does left (right) simplicity of every L (R) class force left (right) "
             "strong regularity?";
    case StatementId::Problem2:
      return "open: does one derived semigroup being left and right regular force strong "
             "regularity?";
    case StatementId::Problem3:
      return "open: does regular plus one-sided strong regularity force strong regularity?";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "?";
}

std::string to_line(const CheckReport& report) {
  std::string out = statement_name(report.id);
  out += '\t';
  out += verdict_name(report.verdict);
  out += '\t';
  out += report.detail;
  return out;
}

namespace {

CheckReport equivalence_report(StatementId id, const std::vector<std::pair<std::string, bool>>& clauses) {
  bool all_same = true;
  for (const auto& [name, value] : clauses) all_same = all_same && value == clauses[0].second;
  std::ostringstream os;
  for (size_t i = 0; i < clauses.size(); ++i) {
    if (i) os << " ";
    os << clauses[i].first << "=" << (clauses[i].second ? "true" : "false");
  }
  return {id, all_same ? Verdict::holds : Verdict::violated, os.str()};
}

std::string name_list(const GammaSemigroup& M, const std::vector<Elem>& elems) {
  std::string out = "{";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += M.element_name(elems[i]);
  }
  return out + "}";
}

bool all_squares_nonzero(const GammaSemigroup& M, Elem x) {
  for (int gamma = 0; gamma < M.operator_count(); ++gamma)
    if (M.product(gamma, x, x) == *M.zero()) return false;
  return true;
}

// Clause (3) of the three-flavor statement: whenever no square of x
// vanishes, x relates to each of its squares under rel.
bool squares_related(const GammaSemigroup& M, GreenRel rel) {
  Partition p = green_partition(M, rel);
  for (Elem x = 0; x < M.size(); ++x) {
    if (!all_squares_nonzero(M, x)) continue;
    for (int gamma = 0; gamma < M.operator_count(); ++gamma)
      if (!p.same_block(x, M.product(gamma, x, x))) return false;
  }
  return true;
}

// Clause (4): whenever no square of x vanishes, x lies in M G (xgx),
// (xgx) G M, or M G (xgx) G M according to the flavor.
bool squares_generate(const GammaSemigroup& M, IdealKind kind) {
  ElementSet all = ElementSet::full(M.size());
  for (Elem x = 0; x < M.size(); ++x) {
    if (!all_squares_nonzero(M, x)) continue;
    for (int gamma = 0; gamma < M.operator_count(); ++gamma) {
      ElementSet sq = ElementSet::single(M.size(), M.product(gamma, x, x));
      ElementSet reach(M.size());
      switch (kind) {
        case IdealKind::left: reach = set_product(M, all, sq); break;
        case IdealKind::right: reach = set_product(M, sq, all); break;
        default: reach = set_product(M, set_product(M, all, sq), all); break;
      }
      if (!reach.contains(x)) return false;
    }
  }
  return true;
}

// All set partitions of the nonzero part; each part plus zero must be a
// closed completely 0-simple sub-structure. The D-class candidate is
// tried first since it settles the positive case immediately.
bool exists_zero_disjoint_c0s_decomposition(const GammaSemigroup& M) {
  if (zero_disjoint_completely_0_simple_decomposition(M).has_value()) return true;

  const Elem z = *M.zero();
  std::vector<Elem> rest;
  for (Elem a = 0; a < M.size(); ++a)
    if (a != z) rest.push_back(a);
  if (rest.size() > 16)
    return false;  // beyond the partition scan bound the D-class route decides

  auto piece_ok = [&](const ElementSet& part) {
    ElementSet piece = part;
    piece.insert(z);
    if (!set_product(M, piece, piece).is_subset_of(piece)) return false;
    std::vector<Elem> elems = piece.elements();
    std::vector<int> index_of(M.size(), -1);
    for (size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = static_cast<int>(i);
    RawTable raw;
    raw.m = static_cast<int>(elems.size());
    raw.g = M.operator_count();
    raw.entries.resize(raw.g * raw.m * raw.m);
    for (int gamma = 0; gamma < raw.g; ++gamma)
      for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = 0; b < elems.size(); ++b)
          raw.at(gamma, static_cast<Elem>(a), static_cast<Elem>(b)) =
              index_of[M.product(gamma, elems[a], elems[b])];
    ValidationResult res = validate(raw);
    if (!res.ok()) return false;
    return res.value->size() >= 2 && is_completely_0_simple(*res.value);
  };

  // restricted-growth assignment of nonzero elements to parts
  std::vector<int> part_of(rest.size(), 0);
  std::function<bool(size_t, int)> rec = [&](size_t i, int used) -> bool {
    if (i == rest.size()) {
      std::vector<ElementSet> parts(used, ElementSet(M.size()));
      for (size_t k = 0; k < rest.size(); ++k) parts[part_of[k]].insert(rest[k]);
      for (const ElementSet& p : parts)
        if (!piece_ok(p)) return false;
      return true;
    }
    for (int b = 0; b <= used && b < static_cast<int>(rest.size()); ++b) {
      part_of[i] = b;
      if (rec(i + 1, b == used ? used + 1 : used)) return true;
    }
    return false;
  };
  if (rest.empty()) return true;  // {0} alone is the empty 0-disjoint union
  return rec(0, 0);
}

CheckReport check_impl(const GammaSemigroup& M, StatementId id) {
  const bool has_zero = M.has_zero();
  switch (id) {
    case StatementId::L1_7: {
      bool direct = left_strongly_regular_direct(M).holds;
      bool green = left_strongly_regular_via_green(M);
      return equivalence_report(id, {{"direct", direct}, {"via-green", green}});
    }
    case StatementId::L1_8: {
      bool direct = right_strongly_regular_direct(M).holds;
      bool green = right_strongly_regular_via_green(M);
      return equivalence_report(id, {{"direct", direct}, {"via-green", green}});
    }
    case StatementId::T1_9: {
      bool left = is_left_strongly_regular(M);
      bool right = is_right_strongly_regular(M);
      if (!left && !right)
        return {id, Verdict::inapplicable, "neither left nor right strongly regular"};
      std::ostringstream os;
      bool ok = true;
      if (left) {
        ClassSimplicityDetail d = l_classes_left_simple(M);
        ok = ok && d.all_hold;
        os << "left: L-classes left simple=" << (d.all_hold ? "true" : "false");
        if (!d.all_hold)
          for (size_t i = 0; i < d.classes.size(); ++i)
            if (!d.closed[i] || !d.simple[i])
              os << " offending=" << name_list(M, d.classes[i].elements());
      }
      if (right) {
        ClassSimplicityDetail d = r_classes_right_simple(M);
        ok = ok && d.all_hold;
        if (left) os << " ";
        os << "right: R-classes right simple=" << (d.all_hold ? "true" : "false");
        if (!d.all_hold)
          for (size_t i = 0; i < d.classes.size(); ++i)
            if (!d.closed[i] || !d.simple[i])
              os << " offending=" << name_list(M, d.classes[i].elements());
      }
      return {id, ok ? Verdict::holds : Verdict::violated, os.str()};
    }
    case StatementId::T1_10: {
      bool c1 = is_union_of_gamma_groups(M);
      bool c2 = is_strongly_regular(M);
      Partition h = h_partition(M);
      bool c3 = true;
      for (int i = 0; i < h.block_count() && c3; ++i) {
        ElementSet blk = h.block_set(i);
        c3 = set_product(M, blk, blk).is_subset_of(blk) && is_gamma_group(M, blk);
      }
      bool c4 = gamma_group_decomposition(M).has_value();
      return equivalence_report(id, {{"union-of-gamma-groups", c1},
                                     {"strongly-regular", c2},
                                     {"h-classes-gamma-groups", c3},
                                     {"disjoint-decomposition", c4}});
    }
    case StatementId::T2_15: {
      bool c1 = is_union_of_gamma_groups(M);
      bool c2 = is_left_strongly_regular(M) && is_right_strongly_regular(M);
      return equivalence_report(id, {{"union-of-gamma-groups", c1}, {"left-and-right", c2}});
    }
    case StatementId::C2_16: {
      bool c1 = in_class_smn_all(M, {2, 2, false});
      bool c2 = in_class_smn_all(M, {2, 0, false}) && in_class_smn_all(M, {0, 2, false});
      bool c3 = is_union_of_gamma_groups(M);
      return equivalence_report(
          id, {{"s(2,2)", c1}, {"s(2,0)&s(0,2)", c2}, {"union-of-gamma-groups", c3}});
    }
    case StatementId::P2_17: {
      std::ostringstream os;
      bool ok = true;
      for (int n = 2; n <= 3; ++n) {
        bool diag = in_class_smn_all(M, {n, n, true});
        bool split = in_class_smn_all(M, {0, n, true}) && in_class_smn_all(M, {n, 0, true});
        ok = ok && diag == split;
        if (n > 2) os << " ";
        os << "n=" << n << ": s(n,n)0=" << (diag ? "true" : "false")
           << " s(0,n)0&s(n,0)0=" << (split ? "true" : "false");
      }
      return {id, ok ? Verdict::holds : Verdict::violated, os.str()};
    }
    case StatementId::P2_20: {
      if (!has_zero) return {id, Verdict::inapplicable, "no zero"};
      std::ostringstream os;
      bool ok = true;
      struct Flavor {
        const char* name;
        bool c1, c2, c3, c4;
      };
      Flavor flavors[3] = {
          {"left", is_left_0_strongly_regular(M),
           all_ideals_0_semiprime(M, IdealKind::left), squares_related(M, GreenRel::L),
           squares_generate(M, IdealKind::left)},
          {"right", is_right_0_strongly_regular(M),
           all_ideals_0_semiprime(M, IdealKind::right), squares_related(M, GreenRel::R),
           squares_generate(M, IdealKind::right)},
          {"intra", is_intra_0_strongly_regular(M),
           all_ideals_0_semiprime(M, IdealKind::two_sided), squares_related(M, GreenRel::J),
           squares_generate(M, IdealKind::two_sided)},
      };
      for (int i = 0; i < 3; ++i) {
        const Flavor& f = flavors[i];
        bool agree = f.c1 == f.c2 && f.c2 == f.c3 && f.c3 == f.c4;
        ok = ok && agree;
        if (i) os << " ";
        os << f.name << ":[" << (f.c1 ? "t" : "f") << (f.c2 ? "t" : "f") << (f.c3 ? "t" : "f")
           << (f.c4 ? "t" : "f") << "]";
      }
      return {id, ok ? Verdict::holds : Verdict::violated, os.str()};
    }
    case StatementId::P2_21: {
      if (!has_zero) return {id, Verdict::inapplicable, "no zero"};
      bool c1 = all_ideals_0_semiprime(M, IdealKind::left) &&
                all_ideals_0_semiprime(M, IdealKind::right) &&
                all_ideals_0_semiprime(M, IdealKind::two_sided);
      bool c2 = is_2_0_strongly_regular(M);
      return equivalence_report(id,
                                {{"ideals-0-semiprime", c1}, {"2-0-strongly-regular", c2}});
    }
    case StatementId::T2_22: {
      if (!has_zero) return {id, Verdict::inapplicable, "no zero"};
      TwoZeroReport rep = two_zero_strongly_regular_report(M);
      return equivalence_report(
          id, {{"definitional", rep.definitional}, {"squares-in-h-class", rep.via_green}});
    }
    case StatementId::C2_23: {
      if (!has_zero) return {id, Verdict::inapplicable, "no zero"};
      if (!is_2_0_strongly_regular(M))
        return {id, Verdict::inapplicable, "not 2-0-strongly regular"};
      Partition d = d_partition(M);
      std::vector<bool> annihilates = dclass_annihilation(M);
      for (Elem x : irregular_elements(M).elements())
        if (!annihilates[d.block_index(x)]) {
          std::ostringstream os;
          os << "irregular " << M.element_name(x) << " lies in D-class "
             << name_list(M, d.block(d.block_index(x))) << " with nonzero products";
          return {id, Verdict::violated, os.str()};
        }
      return {id, Verdict::holds, "irregular elements lie in annihilating D-classes"};
    }
    case StatementId::T2_24: {
      if (!has_zero) return {id, Verdict::inapplicable, "no zero"};
      if (!is_2_0_strongly_regular(M))
        return {id, Verdict::inapplicable, "not 2-0-strongly regular"};
      const Elem z = *M.zero();
      Partition d = d_partition(M);
      int checked = 0;
      for (int i = 0; i < d.block_count(); ++i) {
        ElementSet blk = d.block_set(i);
        if (blk == ElementSet::single(M.size(), z)) continue;
        bool regular_class = true;
        for (Elem x : blk.elements()) regular_class = regular_class && is_regular_element(M, x);
        if (!regular_class) continue;
        ++checked;
        std::optional<GammaSemigroup> piece = dclass_with_zero(M, blk);
        if (!piece)
          return {id, Verdict::violated,
                  "regular D-class " + name_list(M, blk.elements()) + " plus zero not closed"};
        if (!is_completely_0_simple(*piece))
          return {id, Verdict::violated,
                  "regular D-class " + name_list(M, blk.elements()) +
                      " plus zero not completely 0-simple"};
      }
      return {id, Verdict::holds,
              "checked " + std::to_string(checked) + " nonzero regular D-classes"};
    }
    case StatementId::T2_25: {
      if (!has_zero) return {id, Verdict::inapplicable, "no zero"};
      if (!is_regular(M)) return {id, Verdict::inapplicable, "not regular"};
      bool c1 = is_2_0_strongly_regular(M);
      bool c2 = exists_zero_disjoint_c0s_decomposition(M);
      bool c3 = is_left_0_strongly_regular(M) && is_right_0_strongly_regular(M);
      bool c4 = all_ideals_0_semiprime(M, IdealKind::left) &&
                all_ideals_0_semiprime(M, IdealKind::right);
      return equivalence_report(id, {{"2-0-strongly-regular", c1},
                                     {"0-disjoint-c0s-decomposition", c2},
                                     {"left-and-right-0-strongly-regular", c3},
                                     {"one-sided-ideals-0-semiprime", c4}});
    }
    case StatementId::P3_7: {
      if (!has_zero) return {id, Verdict::inapplicable, "no zero"};
      const Elem z = *M.zero();
      Partition h = h_partition(M);
      bool hypothesis = true;
      for (int i = 0; i < h.block_count() && hypothesis; ++i) {
        ElementSet blk = h.block_set(i);
        blk.insert(z);
        hypothesis = is_ideal(M, blk, IdealKind::quasi);
      }
      if (!hypothesis)
        return {id, Verdict::inapplicable, "some H-class plus zero is not a quasi-ideal"};
      bool conclusion = is_2_0_strongly_regular(M);
      return {id, conclusion ? Verdict::holds : Verdict::violated,
              std::string("h-classes-quasi-ideals=true 2-0-strongly-regular=") +
                  (conclusion ? "true" : "false")};
    }
    case StatementId::T4_5: {
      if (!has_zero) return {id, Verdict::inapplicable, "no zero"};
      const Elem z = *M.zero();
      Partition d = d_partition(M);
      std::vector<ElementSet> pieces;
      for (int i = 0; i < d.block_count(); ++i) {
        ElementSet blk = d.block_set(i);
        blk.insert(z);
        pieces.push_back(std::move(blk));
      }
      bool two_zero = is_2_0_strongly_regular(M);
      bool annihilating = mutually_annihilating(M, pieces);
      std::ostringstream os;
      os << "2-0-strongly-regular=" << (two_zero ? "true" : "false")
         << " d-classes-mutually-annihilating=" << (annihilating ? "true" : "false");
      return {id, Verdict::holds, os.str()};
    }
    case StatementId::ZeroHClass: {
      if (!has_zero) return {id, Verdict::inapplicable, "no zero"};
      if (!is_strongly_regular(M))
        return {id, Verdict::inapplicable, "not strongly regular"};
      const Elem z = *M.zero();
      Partition h = h_partition(M);
      ElementSet hz = h.block_set(h.block_index(z));
      if (hz == ElementSet::single(M.size(), z))
        return {id, Verdict::holds, "H-class of zero is {" + M.element_name(z) + "}"};
      return {id, Verdict::violated, "H-class of zero is " + name_list(M, hz.elements())};
    }
    case StatementId::Problem1: {
      bool l_hyp = l_classes_left_simple(M).all_hold;
      bool r_hyp = r_classes_right_simple(M).all_hold;
      bool l_con = is_left_strongly_regular(M);
      bool r_con = is_right_strongly_regular(M);
      bool ok = (!l_hyp || l_con) && (!r_hyp || r_con);
      std::ostringstream os;
      os << "left:[classes-simple=" << (l_hyp ? "true" : "false")
         << " strongly-regular=" << (l_con ? "true" : "false") << "]"
         << " right:[classes-simple=" << (r_hyp ? "true" : "false")
         << " strongly-regular=" << (r_con ? "true" : "false") << "]";
      return {id, ok ? Verdict::holds : Verdict::violated, os.str()};
    }
    case StatementId::Problem2: {
      int witness_gamma = -1;
      for (int gamma = 0; gamma < M.operator_count() && witness_gamma < 0; ++gamma) {
        std::vector<Elem> t = derived_semigroup(M, gamma);
        const int n = M.size();
        bool left = true, right = true;
        for (Elem a = 0; a < n && (left || right); ++a) {
          Elem sq = t[a * n + a];
          bool l = false, r = false;
          for (Elem x = 0; x < n; ++x) {
            l = l || t[x * n + sq] == a;
            r = r || t[sq * n + x] == a;
          }
          left = left && l;
          right = right && r;
        }
        if (left && right) witness_gamma = gamma;
      }
      bool conclusion = is_strongly_regular(M);
      bool ok = witness_gamma < 0 || conclusion;
      std::ostringstream os;
      if (witness_gamma < 0)
        os << "no derived semigroup is left and right regular";
      else
        os << "derived " << M.gamma_name(witness_gamma)
           << " left and right regular, strongly-regular=" << (conclusion ? "true" : "false");
      return {id, ok ? Verdict::holds : Verdict::violated, os.str()};
    }
    case StatementId::Problem3: {
      bool reg = is_regular(M);
      bool left = is_left_strongly_regular(M);
      bool right = is_right_strongly_regular(M);
      bool strong = left && right;
      bool ok = (!(reg && right) || strong) && (!(reg && left) || strong);
      std::ostringstream os;
      os << "regular=" << (reg ? "true" : "false") << " left=" << (left ? "true" : "false")
         << " right=" << (right ? "true" : "false");
      return {id, ok ? Verdict::holds : Verdict::violated, os.str()};
    }
  }
  throw std::invalid_argument("check: unknown statement id");
}

}  // namespace

CheckReport check(const GammaSemigroup& M, StatementId id) { return check_impl(M, id); }

std::vector<CheckReport> check_all(const GammaSemigroup& M) {
  std::vector<CheckReport> out;
  out.reserve(kAllStatements.size());
  for (StatementId id : kAllStatements) out.push_back(check_impl(M, id));
  return out;
}

}  // namespace gsgp
