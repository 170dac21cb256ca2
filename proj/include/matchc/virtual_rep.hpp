#pragma once

#include <map>
#include <string>

#include "matchc/partition.hpp"

namespace matchc {

// An integer-multiplicity formal sum of partitions of a fixed n: an element
// of the representation ring of S_n. "Effective" means every multiplicity is
// non-negative (an actual representation).
class VirtualRep {
 public:
  VirtualRep() = default;
  explicit VirtualRep(int n) : n_(n) {}
  VirtualRep(int n, std::initializer_list<std::pair<Partition, long long>> terms);

  int n() const { return n_; }
  bool is_zero() const { return mults_.empty(); }
  bool effective() const;
  long long mult(const Partition& lam) const;
  void add_term(const Partition& lam, long long c);  // accumulate, drop zeros
  const std::map<Partition, long long>& terms() const { return mults_; }
  long long term_count() const { return static_cast<long long>(mults_.size()); }

  VirtualRep& operator+=(const VirtualRep& o);
  VirtualRep& operator-=(const VirtualRep& o);
  VirtualRep& operator*=(long long c);
  bool operator==(const VirtualRep& o) const = default;

  std::string to_string() const;  // "(5,1,1) + 2*(3,3,1)"; "0" when empty

 private:
  int n_ = 0;
  std::map<Partition, long long> mults_;
};

VirtualRep vr_add(const VirtualRep& x, const VirtualRep& y);
VirtualRep vr_sub(const VirtualRep& x, const VirtualRep& y);
inline VirtualRep operator+(VirtualRep x, const VirtualRep& y) { return x += y; }
inline VirtualRep operator-(VirtualRep x, const VirtualRep& y) { return x -= y; }

// Componentwise min / max (meet / join of multiplicity vectors).
VirtualRep vr_min(const VirtualRep& x, const VirtualRep& y);
VirtualRep vr_max(const VirtualRep& x, const VirtualRep& y);

// x <= y componentwise (every multiplicity of x bounded by y's).
bool vr_leq(const VirtualRep& x, const VirtualRep& y);

// Componentwise max(x, 0).
VirtualRep vr_pos(const VirtualRep& x);

// Restriction to S_{n-1}: branching rule, each partition sums its
// remove-one-box images. Exact on virtual reps (extended linearly).
VirtualRep restrict_rep(const VirtualRep& x);

// Induction Ind_{S_n x S_k}^{S_{n+k}} (x tensor trivial): Pieri rule, each
// partition sums its add-horizontal-k-strip images.
VirtualRep induce_trivial_strip(const VirtualRep& x, int k);

// Partitions with at most k rows (the k-row truncation), and its complement
// (partitions with more than k rows).
VirtualRep truncate_rows(const VirtualRep& x, int k);
VirtualRep upper_rows(const VirtualRep& x, int k);

// Total dimensions (exact): as an S_n-representation, and of the associated
// GL_m polynomial functor evaluated at an m-dimensional space (partitions
// with more than m rows contribute 0).
BigInt vr_dim_sn(const VirtualRep& x);
BigInt vr_dim_gl(const VirtualRep& x, int m);

}  // namespace matchc
