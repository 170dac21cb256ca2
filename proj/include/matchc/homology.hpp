#pragma once

#include <map>

#include "matchc/characters.hpp"
#include "matchc/matching_complex.hpp"
#include "matchc/rank.hpp"
#include "matchc/virtual_rep.hpp"

namespace matchc {

// How the traces on boundary images are computed.
enum class TraceStrategy {
  CertifiedModular,  // two distinct primes, symmetric lift, results must agree
  RationalExact,     // dense rational inverses; slow reference for small cases
};

struct EquivariantHomology {
  int d = 0;
  int n = 0;
  std::map<int, long long> betti;     // degree -> reduced Betti number (nonzero only)
  std::map<int, VirtualRep> entries;  // degree -> decomposition into irreducibles
};

// Reduced Betti numbers (nonzero degrees only) by rank-nullity over the
// rationals. The empty complex (n < d) has a single class in degree -1.
// Passing an engine lets callers pool rank statistics; nullptr uses a local
// certified-modular engine.
std::map<int, long long> betti_numbers(const MatchingComplexChain& cx,
                                       RankEngine* engine = nullptr);

// Character of the reduced homology in one degree, as a class function over
// the cycle types in canonical order: the trace of each class representative
// on the chain group minus its traces on the two adjacent boundary images
// (Hopf trace formula applied degreewise).
ClassFunction homology_character(const MatchingComplexChain& cx, int degree,
                                 TraceStrategy strategy = TraceStrategy::CertifiedModular);

// Homology of every degree as symmetric-group representations, with the full
// battery of consistency checks: Euler characteristic against the face
// counts, the Hopf trace identity per conjugacy class, integrality and
// effectivity of every decomposition, and dimension agreement with the Betti
// numbers. Throws std::logic_error when any of them fails.
EquivariantHomology equivariant_homology(const MatchingComplexChain& cx,
                                         TraceStrategy strategy = TraceStrategy::CertifiedModular);

// Reduced equivariant Euler characteristic sum_i (-1)^i [H~_i(C^d_n)] as a
// virtual representation, computed WITHOUT building the complex: on a class
// of cycle type t, the trace equals minus the signed count of families of
// disjoint t-stable block orbits, where a family weighs (-1)^(#orbits). An
// orbit of length l is assembled from cycles whose lengths are divisible by
// l and sum to d*l, in l^(cycles-1) ways. Feasible through n = 24 (the cost
// is the S_n character table). Agrees with the alternating sum of
// equivariant_homology entries wherever both are computable.
VirtualRep equivariant_euler_rep(int d, int n);

}  // namespace matchc
