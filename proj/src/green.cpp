#include "gsgp/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gsgp/ideals.hpp"

namespace gsgp {

Partition Partition::from_block_ids(const std::vector<int>& raw_ids) {
  Partition p;
  const int n = static_cast<int>(raw_ids.size());
  p.block_of_.assign(n, -1);
  std::map<int, int> renumber;  // raw id -> block index, by least element
  for (Elem a = 0; a < n; ++a) {
    auto [it, fresh] = renumber.try_emplace(raw_ids[a], static_cast<int>(p.blocks_.size()));
    if (fresh) p.blocks_.emplace_back();
    p.block_of_[a] = it->second;
    p.blocks_[it->second].push_back(a);
  }
  return p;
}

ElementSet Partition::block_set(int i) const {
  ElementSet s(size());
  for (Elem a : blocks_[i]) s.insert(a);
  return s;
}

bool Partition::refines(const Partition& coarser) const {
  for (const auto& blk : blocks_)
    for (size_t i = 1; i < blk.size(); ++i)
      if (!coarser.same_block(blk[0], blk[i])) return false;
  return true;
}

Partition Partition::meet(const Partition& a, const Partition& b) {
  const int n = a.size();
  std::vector<int> ids(n);
  for (Elem x = 0; x < n; ++x) ids[x] = a.block_index(x) * (b.block_count() + 1) + b.block_index(x);
  return from_block_ids(ids);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

Partition Partition::join(const Partition& a, const Partition& b) {
  const int n = a.size();
  UnionFind uf(n);
  for (const auto& blk : a.blocks())
    for (size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
  for (const auto& blk : b.blocks())
    for (size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
  std::vector<int> ids(n);
  for (Elem x = 0; x < n; ++x) ids[x] = uf.find(x);
  return from_block_ids(ids);
}

const char* green_rel_name(GreenRel rel) {
  switch (rel) {
    case GreenRel::L: return "L";
    case GreenRel::R: return "R";
    case GreenRel::H: return "H";
    case GreenRel::D: return "D";
    case GreenRel::J: return "J";
  }
  return "?";
}

namespace {

// Groups elements by equality of a per-element set.
Partition partition_by_sets(const GammaSemigroup& M, ElementSet (*ideal)(const GammaSemigroup&, Elem)) {
  const int m = M.size();
  std::vector<ElementSet> sets;
  sets.reserve(m);
  for (Elem a = 0; a < m; ++a) sets.push_back(ideal(M, a));
  std::vector<int> ids(m);
  for (Elem a = 0; a < m; ++a) {
    ids[a] = a;
    for (Elem b = 0; b < a; ++b)
      if (sets[b] == sets[a]) {
        ids[a] = ids[b];
        break;
      }
  }
  return Partition::from_block_ids(ids);
}

}  // namespace

Partition l_partition(const GammaSemigroup& M) {
  return partition_by_sets(M, principal_left_ideal);
}

Partition r_partition(const GammaSemigroup& M) {
  return partition_by_sets(M, principal_right_ideal);
}

Partition h_partition(const GammaSemigroup& M) {
  return Partition::meet(l_partition(M), r_partition(M));
}

Partition d_partition(const GammaSemigroup& M) {
  return Partition::join(l_partition(M), r_partition(M));
}

Partition j_partition(const GammaSemigroup& M) {
  return partition_by_sets(M, principal_two_sided_ideal);
}

Partition green_partition(const GammaSemigroup& M, GreenRel rel) {
  switch (rel) {
    case GreenRel::L: return l_partition(M);
    case GreenRel::R: return r_partition(M);
    case GreenRel::H: return h_partition(M);
    case GreenRel::D: return d_partition(M);
    case GreenRel::J: return j_partition(M);
  }
  throw std::invalid_argument("green_partition: bad relation");
}

bool related(const GammaSemigroup& M, GreenRel rel, Elem a, Elem b) {
  if (a < 0 || a >= M.size() || b < 0 || b >= M.size())
    throw std::invalid_argument("related: element out of range");
  return green_partition(M, rel).same_block(a, b);
}

bool l_compose_r(const GammaSemigroup& M, Elem a, Elem b) {
  Partition l = l_partition(M), r = r_partition(M);
  for (Elem c = 0; c < M.size(); ++c)
    if (l.same_block(a, c) && r.same_block(c, b)) return true;
  return false;
}

bool r_compose_l(const GammaSemigroup& M, Elem a, Elem b) {
  Partition r = r_partition(M), l = l_partition(M);
  for (Elem c = 0; c < M.size(); ++c)
    if (r.same_block(a, c) && l.same_block(c, b)) return true;
  return false;
}

Eggbox eggbox(const GammaSemigroup& M, const ElementSet& dblock) {
  Partition d = d_partition(M);
  int dbi = -1;
  for (int i = 0; i < d.block_count(); ++i)
    if (d.block_set(i) == dblock) {
      dbi = i;
      break;
    }
  if (dbi < 0) throw std::invalid_argument("eggbox: not a block of the D-partition");

  Partition l = l_partition(M), r = r_partition(M);
  Eggbox box;
  box.dclass = d.block(dbi);

  auto restricted_blocks = [&](const Partition& p) {
    std::vector<std::vector<Elem>> out;
    std::vector<bool> seen(p.block_count(), false);
    for (Elem a : box.dclass) {
      int bi = p.block_index(a);
      if (seen[bi]) continue;
      seen[bi] = true;
      std::vector<Elem> blk;
      for (Elem x : p.block(bi))
        if (dblock.contains(x)) blk.push_back(x);
      out.push_back(std::move(blk));
    }
    // box.dclass is ascending, so blocks already appear by least element
    return out;
  };
  box.rows = restricted_blocks(r);
  box.cols = restricted_blocks(l);

  box.cells.resize(box.rows.size());
  for (size_t i = 0; i < box.rows.size(); ++i) {
    box.cells[i].resize(box.cols.size());
    for (size_t j = 0; j < box.cols.size(); ++j) {
      std::vector<Elem> cell;
      std::set_intersection(box.rows[i].begin(), box.rows[i].end(), box.cols[j].begin(),
                            box.cols[j].end(), std::back_inserter(cell));
      box.cells[i][j] = std::move(cell);
    }
  }
  return box;
}

std::vector<Eggbox> all_eggboxes(const GammaSemigroup& M) {
  Partition d = d_partition(M);
  std::vector<Eggbox> out;
  for (int i = 0; i < d.block_count(); ++i) out.push_back(eggbox(M, d.block_set(i)));
  return out;
}

std::string render_eggboxes(const GammaSemigroup& M) {
  std::ostringstream os;
  bool first = true;
  for (const Eggbox& box : all_eggboxes(M)) {
    if (!first) os << "\n";
    first = false;
    for (const auto& row : box.cells) {
      for (size_t j = 0; j < row.size(); ++j) {
        if (j) os << " ";
        if (row[j].empty()) {
          os << "·";
        } else {
          os << "{";
          for (size_t k = 0; k < row[j].size(); ++k) {
            if (k) os << ",";
            os << M.element_name(row[j][k]);
          }
          os << "}";
        }
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace gsgp
