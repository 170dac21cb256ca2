#pragma once

#include <cstdint>
#include <vector>

#include "matchc/partition.hpp"
#include "matchc/virtual_rep.hpp"

namespace matchc {

// A conjugacy class of S_n is a cycle type: a partition of n whose parts are
// the cycle lengths (fixed points included as parts equal to 1).
using CycleType = Partition;

// Order of the conjugacy class with cycle type t in S_{|t|}:
// n! / prod_i (i^{m_i} m_i!) where m_i = multiplicity of i among the parts.
BigInt class_size(const CycleType& t);

// Canonical representative of the class: cycles taken in the type's part
// order, each filled with the next run of consecutive integers. Returned as
// 1-based images, perm[i-1] = sigma(i).
std::vector<int> class_representative(const CycleType& t);

// Irreducible character value chi^lam(t) by the Murnaghan-Nakayama rule
// (rim-hook recursion over the cycles of length >= 2; the all-fixed-point
// tail is resolved by the hook length formula). Values for n <= 24 fit in
// a signed 64-bit integer (max |chi| <= max dim ~ 8e11 at n = 24).
long long mn_character(const Partition& lam, const CycleType& t);

// Full character table of S_n. Rows and columns are both indexed by the
// partitions of n in canonical order. Memoized per n up to the given cap
// (recomputation dominates otherwise: p(24) = 1575 rows); thread-safe.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;           // canonical order
  std::vector<BigInt> class_sizes;             // per column
  std::vector<std::vector<long long>> chi;     // chi[lam index][class index]

  int index_of(const Partition& p) const;      // position in canonical order
};

const CharacterTable& character_table(int n, int cap = 24);

// A class function on S_n with exact rational values, indexed by the
// canonical order of cycle types (same order as CharacterTable columns).
struct ClassFunction {
  int n = 0;
  std::vector<Rational> values;
};

// The character of a virtual representation as a class function.
ClassFunction to_class_function(const VirtualRep& x);

// Exact decomposition of a class function into irreducible characters via
// <f, chi^lam> = (1/n!) sum_t |class_t| f(t) chi^lam(t).
// Throws if any multiplicity fails to be an integer (names the first
// offending partition); the result may have negative multiplicities
// (virtual characters are legitimate inputs).
VirtualRep decompose(const ClassFunction& f);

}  // namespace matchc
