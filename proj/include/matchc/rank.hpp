#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "matchc/numbers.hpp"

namespace matchc {

// Sparse matrix with exact rational entries; zero entries are absent.
struct SparseExactMatrix {
  long long rows = 0;
  long long cols = 0;
  std::map<std::pair<long long, long long>, Rational> entries;

  SparseExactMatrix() = default;
  SparseExactMatrix(long long r, long long c) : rows(r), cols(c) {}

  void set(long long r, long long c, const Rational& v);
  void add(long long r, long long c, const Rational& v);
  Rational get(long long r, long long c) const;
  long long nnz() const { return static_cast<long long>(entries.size()); }
  bool operator==(const SparseExactMatrix&) const = default;
};

SparseExactMatrix multiply(const SparseExactMatrix& a, const SparseExactMatrix& b);
bool is_zero(const SparseExactMatrix& m);

// Column-major sparse integer matrix, the workhorse format for elimination.
struct SparseIntMatrix {
  long long rows = 0;
  long long cols = 0;
  // per column: (row, value) pairs sorted by row, values nonzero
  std::vector<std::vector<std::pair<long long, long long>>> col_entries;

  SparseIntMatrix() = default;
  SparseIntMatrix(long long r, long long c)
      : rows(r), cols(c), col_entries(static_cast<size_t>(c)) {}

  void add_entry(long long r, long long c, long long v);  // appends
  void normalize();  // sorts each column by row, merges duplicates, drops zeros
  long long nnz() const;

  // Clears denominators column by column (column scaling preserves rank and
  // pivot structure).
  static SparseIntMatrix from_exact(const SparseExactMatrix& m);
};

// Result of a single-prime sparse elimination.  pivot_rows/pivot_cols list
// positions in the ORIGINAL matrix, in elimination order; the square submatrix
// on them has nonzero determinant mod prime (hence nonzero over Q as well).
struct PivotStructure {
  std::uint32_t prime = 0;
  long long rank = 0;
  std::vector<long long> pivot_rows;
  std::vector<long long> pivot_cols;
};

// Right-looking sparse Gaussian elimination over Z/prime with sparsity-guided
// (Markowitz-style) pivoting.
PivotStructure eliminate_modp(const SparseIntMatrix& a, std::uint32_t prime);

// Exact integer-preserving sparse elimination (cross-multiplication steps with
// per-row content removal); the reference rank path.
long long rank_exact(const SparseIntMatrix& a);

// Dense inverse of the square submatrix a[pivot_rows, pivot_cols] over
// Z/prime, row-major flat layout.  Throws if the submatrix is singular mod
// prime (cannot happen for pivot structures produced by eliminate_modp with
// the same prime).
std::vector<std::uint32_t> dense_inverse_modp(const SparseIntMatrix& a,
                                              const std::vector<long long>& pivot_rows,
                                              const std::vector<long long>& pivot_cols,
                                              std::uint32_t prime);

// Dense inverse over the rationals for the same submatrix; the slow exact
// reference used by tests and the rational trace path.
std::vector<Rational> dense_inverse_exact(const SparseIntMatrix& a,
                                          const std::vector<long long>& pivot_rows,
                                          const std::vector<long long>& pivot_cols);

enum class RankStrategy {
  Exact,             // integer-preserving elimination only
  CertifiedModular,  // two-prime modular ranks + sampled exact certification
};

// Rank oracle implementing the two-path policy: modular ranks are accepted
// only when two distinct primes agree, and a seeded random sample of the
// matrices within the certification budget is re-checked on the exact path.
class RankEngine {
 public:
  static constexpr std::uint32_t kPrimeA = 998244353u;
  static constexpr std::uint32_t kPrimeB = 1000000007u;
  // matrices with at most this many nonzeros are eligible for exact spot checks
  static constexpr long long kCertifyNnzBudget = 60000;
  // fraction of eligible matrices re-checked exactly
  static constexpr double kCertifyFraction = 0.10;

  explicit RankEngine(RankStrategy strategy = RankStrategy::CertifiedModular,
                      std::uint64_t seed = 0x5eed5eedULL);

  long long rank(const SparseIntMatrix& a);

  // Spot-certification entry point for callers that already computed and
  // cross-checked modular ranks themselves: draws from the same seeded stream
  // and budget policy, and throws if the exact rank disagrees.
  void maybe_certify(const SparseIntMatrix& a, long long claimed_rank);

  struct Stats {
    long long calls = 0;
    long long certified = 0;  // calls that also ran the exact path
  };
  const Stats& stats() const { return stats_; }
  RankStrategy strategy() const { return strategy_; }

 private:
  RankStrategy strategy_;
  std::mt19937_64 rng_;
  Stats stats_;
};

}  // namespace matchc
