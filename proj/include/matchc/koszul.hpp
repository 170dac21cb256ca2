#pragma once

#include <map>
#include <string>
#include <vector>

#include "matchc/numbers.hpp"
#include "matchc/virtual_rep.hpp"

namespace matchc {

// Hilbert-series numerator data of the strand module M = sum_k Sym^{kd+b} V
// over the polynomial ring on Sym^d V, with m = dim V.
struct HData {
  int d = 0;
  int b = 0;
  int m = 0;
  std::vector<BigInt> h;  // h-vector (numerator coefficients)
  BigInt codim = 0;       // C(m-1+d, d) - m
};

// Expand sum_k dim Sym^{kd+b}(C^m) t^k times (1-t)^m. The result must be a
// polynomial with non-negative coefficients (these modules are
// Cohen-Macaulay); anything else signals a bug and throws std::logic_error.
HData h_vector(int d, int b, int m);

// Alternating strand sum  sum_j (-1)^{mdeg-j} h_j C(codim, mdeg-j), which
// equals sum_{p+q=mdeg} (-1)^p dim K_{p,q} for the module above (from the
// Hilbert-series identity of its graded free resolution over the ambient
// polynomial ring).
BigInt strand_euler(const HData& hd, int mdeg);

// Dimension of the Koszul cohomology K_{p,q} of the strand module for
// dim V = m: homology at the middle of
//   Wedge^{p+1} U (x) Sym^{(q-1)d+b} -> Wedge^p U (x) Sym^{qd+b}
//     -> Wedge^{p-1} U (x) Sym^{(q+1)d+b},   U = Sym^d V,
// computed by exact sparse rank over lexicographic monomial bases. `budget`
// caps the dimension of any of the three terms; exceeding it throws
// std::length_error ("infeasible at desk scale"), never a wrong answer.
long long koszul_dim_direct(int m, int d, int b, int p, int q, long long budget = 200000);

// Predicted Koszul dimension from a homology table entry: the GL(m) dimension
// of its rows <= m part.
BigInt trans_dim_check(const VirtualRep& x, int m);

// A numeric fact with explicit provenance, consumed by the derivation
// pipeline. Allowed provenance values: "paper-M2" (imported from the original
// Macaulay2 computation), "recomputed" (re-derived by this code base),
// "external-theorem" (a published theorem, cited).
struct Fact {
  std::string name;
  long long value = 0;
  std::string provenance;
  std::string citation;
};

class FactsRegistry {
 public:
  // The four imported Macaulay2 results (two linear-strand dimensions, two
  // row bounds) and the two external theorems this pipeline consumes.
  static FactsRegistry defaults();
  static FactsRegistry load_json(const std::string& path);
  void save_json(const std::string& path) const;

  void add(Fact f);                              // validates provenance
  bool contains(const std::string& name) const;
  // Throws std::out_of_range when missing; facts with unknown provenance are
  // rejected at insertion time.
  const Fact& require(const std::string& name) const;
  const std::map<std::string, Fact>& all() const { return facts_; }

 private:
  std::map<std::string, Fact> facts_;
};

// Well-known fact names.
inline constexpr const char* kFactK60 = "dim_K_6_0_twist2_m4";
inline constexpr const char* kFactK70 = "dim_K_7_0_twist2_m4";
inline constexpr const char* kFactVeroneseP3N6 = "third_veronese_P3_property_N6";
inline constexpr const char* kFactNonvanishingKp2 = "nonvanishing_K_p_2_at_3d_minus_2";
// Row-bound companions of the two syzygy dimensions (value 1 means "holds"):
// the m = 4 dimensions pin the at-most-4-row content of the two groups they
// target, and these record the original computation's claim that nothing
// lives above 4 rows there. Without them the derivation is non-unique and
// aborts with the ambiguity report.
inline constexpr const char* kFactRowsH4C20 = "rows_le4_H4_C3_20";
inline constexpr const char* kFactRowsH5C23 = "rows_le4_H5_C3_23";

}  // namespace matchc
