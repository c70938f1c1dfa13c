#pragma once

#include <string>
#include <vector>

#include "gsgp/core.hpp"

// Green's relations L, R, H, D, J as partitions of the carrier. L and R
// compare principal one-sided ideals of the {a} union MGa shape, H is
// their meet, D the join (transitive closure of L union R), J compares
// principal two-sided ideals.

namespace gsgp {

class Partition {
 public:
  Partition() = default;

  // Normalizes arbitrary block ids: blocks are renumbered in order of
  // their least element, each block sorted ascending.
  static Partition from_block_ids(const std::vector<int>& raw_ids);

  int size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_index(Elem a) const { return block_of_[a]; }
  const std::vector<Elem>& block(int i) const { return blocks_[i]; }
  const std::vector<std::vector<Elem>>& blocks() const { return blocks_; }
  bool same_block(Elem a, Elem b) const { return block_of_[a] == block_of_[b]; }

  ElementSet block_set(int i) const;

  bool operator==(const Partition&) const = default;

  // True iff every block of *this lies inside a block of coarser.
  bool refines(const Partition& coarser) const;

  static Partition meet(const Partition& a, const Partition& b);
  // Smallest common coarsening (union-find over both block structures).
  static Partition join(const Partition& a, const Partition& b);

 private:
  std::vector<int> block_of_;
  std::vector<std::vector<Elem>> blocks_;
};

enum class GreenRel { L, R, H, D, J };

const char* green_rel_name(GreenRel rel);

Partition l_partition(const GammaSemigroup& M);
Partition r_partition(const GammaSemigroup& M);
Partition h_partition(const GammaSemigroup& M);
Partition d_partition(const GammaSemigroup& M);
Partition j_partition(const GammaSemigroup& M);

Partition green_partition(const GammaSemigroup& M, GreenRel rel);

bool related(const GammaSemigroup& M, GreenRel rel, Elem a, Elem b);

// Relational composition L.R as a partition-like matrix test helper:
// true iff some c has a L c and c R b.
bool l_compose_r(const GammaSemigroup& M, Elem a, Elem b);
bool r_compose_l(const GammaSemigroup& M, Elem a, Elem b);

// One D-class laid out as a grid: rows are the R-classes meeting it,
// columns the L-classes, cells the (possibly empty) H-class
// intersections. Rows and columns are ordered by least element.
struct Eggbox {
  std::vector<Elem> dclass;                       // sorted
  std::vector<std::vector<Elem>> rows;            // R-classes restricted to the D-class
  std::vector<std::vector<Elem>> cols;            // L-classes restricted to the D-class
  std::vector<std::vector<std::vector<Elem>>> cells;  // [row][col], empty = no H-class
};

// dblock must be exactly one block of d_partition; anything else throws.
Eggbox eggbox(const GammaSemigroup& M, const ElementSet& dblock);

std::vector<Eggbox> all_eggboxes(const GammaSemigroup& M);

// One D-class per paragraph, rows as lines, H-classes as brace-delimited
// element-name lists, empty cells rendered as "·".
std::string render_eggboxes(const GammaSemigroup& M);

}  // namespace gsgp
