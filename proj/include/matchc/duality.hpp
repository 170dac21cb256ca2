#pragma once

#include <map>
#include <utility>

#include "matchc/partition.hpp"
#include "matchc/virtual_rep.hpp"

namespace matchc {

// Syzygy-strand position of homology degree i on ground set n (block size 3):
// strand index p = i + 1 and twist b = n mod 3, with n = 3(p + q) + b.
struct KoszulIndex {
  int p = 0;
  int q = 0;
  int b = 0;
};

KoszulIndex koszul_index(int n, int degree);
std::pair<int, int> homology_index(const KoszulIndex& k);  // -> (n, degree)

// Partner slot of a partition under one of the box dualities. `vacuous`
// marks images whose ground set or degree falls outside honest complexes;
// those encode vanishing, except that ground sets below 3 carry the trivial
// representation in degree -1 (the reduced homology of an empty complex).
struct DualImage {
  Partition partition;
  int p = 0;  // partner strand index; partner homology degree is p - 1
  int n = 0;  // partner ground-set size
  bool vacuous = false;
};

// Two-row duality in the 2 x 5 box: lam -> (5 - lam_2, 5 - lam_1), strand
// p -> 2 - p, ground set n -> 10 - n. The partition must be a partition of n.
// Throws std::domain_error off the box (rows > 2, lam_1 > 5, n > 10).
DualImage dual2(const Partition& lam, int p, int n);

// Three-row duality in the 3 x 9 box: lam -> (9 - lam_3, 9 - lam_2, 9 - lam_1),
// strand p -> 7 - p, ground set n -> 27 - n. Throws std::domain_error off the
// box (rows > 3, lam_1 > 9, n > 27).
DualImage dual3(const Partition& lam, int p, int n);

// Table lookup extended by the small-ground-set conventions: ground sets 0..2
// (empty complexes) carry the trivial representation in degree -1 and nothing
// else; ground set 3 (a point) has no reduced homology at all. Entries absent
// from the table are zero.
VirtualRep homology_with_convention(const std::map<std::pair<int, int>, VirtualRep>& table,
                                    int n, int degree);

// The rows <= 3 content of every reduced homology group for 14 <= n <= 24,
// obtained by carrying the completed n <= 13 table across the 3 x 9 box.
// Requires the input table to cover every ground set 4..13; only nonzero
// results are returned.
std::map<std::pair<int, int>, VirtualRep> low_row_table(
    const std::map<std::pair<int, int>, VirtualRep>& table_upto_13);

}  // namespace matchc
