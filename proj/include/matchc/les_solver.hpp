#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matchc/partition.hpp"
#include "matchc/virtual_rep.hpp"

namespace matchc {

// Two-sided componentwise bounds on the restriction of one unknown homology
// group to the ground set one smaller.
struct DegreeBounds {
  VirtualRep lower;
  VirtualRep upper;
};

// Exactness bounds on Res H~_i(C^d_n) for every degree 0 <= i <= n/d - 1,
// derived from the vertex-deletion long exact sequence
//   ... -> I_i -> B_i -> Res X_i -> I_{i-1} -> B_{i-1} -> ...
// with B_i the homology of the complex on n-1 points and I_i the homology of
// the complex on n-d points induced up by a trivial (d-1)-strip. `h_prev` and
// `h_prev3` map degree to entry (absent = zero) for ground sets n-1 and n-d;
// for ground sets below d the degree -1 entry is the trivial representation
// (reduced homology of the empty complex).
std::map<int, DegreeBounds> les_bounds(int d, int n,
                                       const std::map<int, VirtualRep>& h_prev,
                                       const std::map<int, VirtualRep>& h_prev3);

// All partitions of upper.n() + 1 whose restriction is componentwise bounded
// by `upper` (an effective rep). With extra_row_cap > 0, only partitions with
// at most that many rows are kept.
std::vector<Partition> candidate_partitions(const VirtualRep& upper, int extra_row_cap = 0);

enum class RelOp { Eq, Le, Ge };

struct Relation {
  std::vector<std::pair<int, long long>> terms;  // (variable id, coefficient)
  RelOp op = RelOp::Eq;
  long long bound = 0;
  std::string label;
};

// Linear equalities/inequalities over non-negative bounded integer variables.
// Primary variables are multiplicities x_{i,lambda} of partition lambda of n
// in the unknown homology group of degree i; auxiliary variables are named
// (here: image multiplicities of the connecting maps, bounded by
// min(B_i, I_i) componentwise).
class ConstraintSystem {
 public:
  ConstraintSystem() = default;
  explicit ConstraintSystem(int n) : n_(n) {}

  int n() const { return n_; }
  int add_primary(int degree, const Partition& lam, long long ub);
  int add_auxiliary(const std::string& name, long long ub);
  int primary_id(int degree, const Partition& lam) const;  // -1 when absent
  // Narrow a variable to a single value. Throws std::invalid_argument when
  // the value lies outside the variable's current bounds (an inconsistent pin).
  void fix(int var, long long value);
  void add_relation(Relation r);

  long long var_count() const { return static_cast<long long>(lo_.size()); }
  bool is_primary(int var) const;
  const std::pair<int, Partition>& primary_key(int var) const;
  const std::string& aux_name(int var) const;
  long long lower_bound(int var) const { return lo_.at(static_cast<size_t>(var)); }
  long long upper_bound(int var) const { return hi_.at(static_cast<size_t>(var)); }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::map<std::pair<int, Partition>, int>& primaries() const { return primary_ids_; }
  const std::map<std::string, int>& auxiliaries() const { return aux_ids_; }

  std::string to_json() const;
  static ConstraintSystem from_json(const std::string& text);

 private:
  int n_ = 0;
  std::vector<long long> lo_;
  std::vector<long long> hi_;
  std::vector<std::pair<int, Partition>> primary_keys_;  // empty partition for aux slots
  std::vector<std::string> aux_names_;                   // empty string for primary slots
  std::vector<bool> primary_flag_;
  std::map<std::pair<int, Partition>, int> primary_ids_;
  std::map<std::string, int> aux_ids_;
  std::vector<Relation> relations_;
};

struct LesSolution {
  std::map<int, VirtualRep> primaries;  // degree -> effective rep of n; absent = zero
  std::map<std::string, long long> auxiliaries;
  bool operator==(const LesSolution& o) const = default;
};

std::string solution_to_json(const LesSolution& s);

// ALL non-negative integer solutions, found by depth-first search over
// variables in decreasing dim_sn order with interval propagation to a
// fixpoint at every node. Deterministic output order (lexicographic in the
// search order). `extra` appends relations (e.g. dimension pins) without
// mutating the system. Throws std::length_error past max_solutions (callers
// probing "is this unique?" can pass a small cap to bail out cheaply).
std::vector<LesSolution> solve_nonneg(const ConstraintSystem& sys,
                                      const std::vector<Relation>& extra = {},
                                      long long max_solutions = 100000);

// Assemble the coupled system for ground set n: per degree 0 <= i <= n/d - 1
// and partition mu of n-1, the multiplicity row
//   Res X_i(mu) + a_i(mu) + a_{i-1}(mu) = B_i(mu) + I_{i-1}(mu)
// over candidate multiplicities of X_i and image variables a_i bounded by
// min(B_i, I_i). `table` must contain every nonzero entry for ground sets
// n-1 and n-d (ground sets below d follow the empty-complex convention).
ConstraintSystem build_les_system(int d, int n,
                                  const std::map<std::pair<int, int>, VirtualRep>& table,
                                  int extra_row_cap = 0);

}  // namespace matchc
