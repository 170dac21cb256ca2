#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "matchc/numbers.hpp"

namespace matchc {

// An integer partition: weakly decreasing positive parts. The empty partition
// (the unique partition of 0) is valid and important as a base case.
//
// Canonical order of the partitions of a fixed n is reverse-lexicographic:
// (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).  operator< implements
// "comes earlier in canonical order" (for different sizes, smaller n first)
// so Partition can key ordered maps deterministically.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // validates shape

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }                           // sum of parts
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const {  // 0-based, 0 beyond the last row
    return i < rows() ? parts_[static_cast<size_t>(i)] : 0;
  }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  std::strong_ordering operator<=>(const Partition& o) const;

  std::string to_string() const;  // "(3,1)", "()" for empty

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n in canonical (reverse-lexicographic) order,
// optionally restricted to at most max_rows rows (0 = unrestricted).
std::vector<Partition> enumerate_partitions(int n, int max_rows = 0);

// Hook lengths cell by cell, row-major.
std::vector<std::vector<int>> hook_lengths(const Partition& lam);

// Dimension of the irreducible S_n-representation indexed by lam
// (hook length formula, exact division).
BigInt dim_sn(const Partition& lam);

// Dimension of the irreducible polynomial GL_m-representation indexed by lam
// (hook content formula); 0 when lam has more than m rows.
BigInt dim_gl(const Partition& lam, int m);

// Conjugate (transpose) partition.
Partition conjugate(const Partition& lam);

// Partitions obtained from lam by removing one corner box, canonical order.
std::vector<Partition> remove_box(const Partition& lam);

// Partitions obtained from lam by adding one box, canonical order.
std::vector<Partition> add_box(const Partition& lam);

// Partitions obtained by adding a horizontal k-strip (no two added boxes in
// the same column): the Pieri rule for tensoring with Sym^k / inducing with a
// trivial factor. Canonical order, each result exactly once.
std::vector<Partition> add_horizontal_strips(const Partition& lam, int k);

}  // namespace matchc
