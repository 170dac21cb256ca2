// Standalone acceptance gate: one [PASS]/[FAIL] line per criterion, exit 1 on
// any failure. Every check recomputes its inputs through the public API; the
// single shared artifact is one full derivation run reused where a criterion
// speaks about the final table.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matchc/characters.hpp"
#include "matchc/duality.hpp"
#include "matchc/homology.hpp"
#include "matchc/koszul.hpp"
#include "matchc/matching_complex.hpp"
#include "matchc/partition.hpp"
#include "matchc/pipeline.hpp"
#include "matchc/rank.hpp"
#include "matchc/virtual_rep.hpp"

using namespace matchc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome failure(std::string why) { return {false, std::move(why)}; }

template <typename F>
Outcome run(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("unexpected exception: ") + e.what()};
  }
}

std::string slot(int n, int i) {
  return "(" + std::to_string(n) + "," + std::to_string(i) + ")";
}

const std::map<int, std::set<int>>& expected_support() {
  static const std::map<int, std::set<int>> s = {
      {4, {0}},  {5, {0}},     {6, {0}},  {7, {1}},  {8, {1}},     {9, {1}},  {10, {1, 2}},
      {11, {2}}, {12, {2}},    {13, {2, 3}},         {14, {3}},    {15, {3}}, {16, {3, 4}},
      {17, {4}}, {18, {4}},    {19, {4, 5}},         {20, {4, 5}}, {21, {5}}, {22, {5, 6}},
      {23, {5, 6}},            {24, {6}}};
  return s;
}

Rational matrix_trace(const SparseExactMatrix& m) {
  Rational t = 0;
  for (const auto& [rc, v] : m.entries)
    if (rc.first == rc.second) t += v;
  return t;
}

// 1. Brute-force equivariant homology on 4..10 points equals the published
//    tables exactly, and every other degree vanishes.
Outcome criterion1() {
  const HomologyTable t = brute_force_range(3, 4, 10);
  const auto& pub = published_entries();
  for (int n = 4; n <= 10; ++n) {
    if (t.support(n) != expected_support().at(n))
      return failure("support mismatch at n = " + std::to_string(n));
    for (int i : t.support(n)) {
      const auto it = pub.find({n, i});
      if (it == pub.end() || !(t.at(n, i) == it->second))
        return failure("entry mismatch at " + slot(n, i));
    }
  }
  return {};
}

// 2. The linear-system stage alone (no imported facts) reproduces the
//    published tables on 11..13 points; uniqueness is asserted inside
//    derive_all and any violation surfaces as an exception.
Outcome criterion2() {
  const DerivationResult r = derive_all(3, 13, FactsRegistry());
  const auto& pub = published_entries();
  for (int n = 11; n <= 13; ++n) {
    if (r.table.support(n) != expected_support().at(n))
      return failure("support mismatch at n = " + std::to_string(n));
    for (int i : r.table.support(n))
      if (!(r.table.at(n, i) == pub.at({n, i})))
        return failure("entry mismatch at " + slot(n, i));
  }
  return {};
}

// 3. Dimension identities: the two h-vectors, and the bounds 1991 and
//    14760 = 11520 + 3240 recovered both from strand arithmetic and from the
//    printed partitions.
Outcome criterion3(const FactsRegistry& facts) {
  const HData h13 = h_vector(3, 1, 3);
  if (h13.h != std::vector<BigInt>{3, 6} || h13.codim != 7)
    return failure("h-vector of the twist-1 strand in three variables");
  const HData h24 = h_vector(3, 2, 4);
  if (h24.h != std::vector<BigInt>{10, 16, 1} || h24.codim != 16)
    return failure("h-vector of the twist-2 strand in four variables");

  const auto& pub = published_entries();
  const BigInt bound20 = BigInt(facts.require(kFactK60).value) - strand_euler(h24, 6);
  if (bound20 != 1991) return failure("strand arithmetic for the degree-4 bound: " + bound20.str());
  if (trans_dim_check(pub.at({20, 4}), 4) != 1991)
    return failure("printed (20,4) partitions do not sum to 1991");

  const BigInt bound23 = BigInt(facts.require(kFactK70).value) + strand_euler(h24, 7);
  if (bound23 != 14760)
    return failure("strand arithmetic for the degree-5 bound: " + bound23.str());
  if (trans_dim_check(pub.at({23, 5}), 4) != 14760)
    return failure("printed (23,5) partitions do not sum to 14760");

  // The restriction-forced part of the printed (23,5) table carries 11520 of
  // that total, leaving exactly 3240 for the remaining six constituents.
  VirtualRep forced(23);
  for (const std::vector<int>& parts :
       std::vector<std::vector<int>>{{8, 8, 6, 1},
                                     {9, 7, 6, 1},
                                     {9, 8, 5, 1},
                                     {10, 6, 6, 1},
                                     {10, 8, 4, 1},
                                     {9, 8, 6}})
    forced.add_term(Partition(std::vector<int>(parts)), 1);
  if (trans_dim_check(forced, 4) != 11520)
    return failure("restriction-forced part of (23,5) does not sum to 11520");
  VirtualRep rest = pub.at({23, 5});
  rest -= forced;
  if (!rest.effective() || rest.term_count() != 6 || trans_dim_check(rest, 4) != 3240)
    return failure("remainder of (23,5) does not sum to 3240");
  return {};
}

// 4. Duality closure on the final table: multiplicity equality across the
//    full 2 x 5 box (ground sets <= 10) and the full 3 x 9 box.
Outcome criterion4(const HomologyTable& t) {
  for (const auto& [key, rep] : t.entries) {
    if (key.first > 10) continue;
    for (const auto& [lam, mult] : rep.terms())
      if (lam.rows() <= 2 && lam.part(0) > 5)
        return failure("constituent outside the 2 x 5 box at " + slot(key.first, key.second));
  }
  int checked2 = 0;
  for (int a = 1; a <= 5; ++a)
    for (int b = 0; b <= a; ++b) {
      std::vector<int> parts{a};
      if (b > 0) parts.push_back(b);
      const Partition lam(std::move(parts));
      const int n = lam.size();
      if (n < 4 || n > 10) continue;
      for (int p = 0; p <= 3; ++p) {
        const long long lhs = homology_with_convention(t.entries, n, p - 1).mult(lam);
        const DualImage img = dual2(lam, p, n);
        long long rhs = 0;
        if (!img.vacuous || img.n < 3)
          rhs = homology_with_convention(t.entries, img.n, img.p - 1).mult(img.partition);
        if (lhs != rhs)
          return failure("two-row duality mismatch for " + lam.to_string() + " at " +
                         slot(n, p - 1));
        ++checked2;
      }
    }
  int checked3 = 0;
  for (int a = 1; a <= 9; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) {
        std::vector<int> parts{a};
        if (b > 0) parts.push_back(b);
        if (c > 0) parts.push_back(c);
        const Partition lam(std::move(parts));
        const int n = lam.size();
        if (n < 4 || n > 24) continue;
        for (int p = 0; p <= 7; ++p) {
          const long long lhs = homology_with_convention(t.entries, n, p - 1).mult(lam);
          const DualImage img = dual3(lam, p, n);
          long long rhs = 0;
          if (!img.vacuous || img.n < 3)
            rhs = homology_with_convention(t.entries, img.n, img.p - 1).mult(img.partition);
          if (lhs != rhs)
            return failure("three-row duality mismatch for " + lam.to_string() + " at " +
                           slot(n, p - 1));
          ++checked3;
        }
      }
  if (checked2 == 0 || checked3 == 0) return failure("empty duality sweep");
  return {};
}

// 5. The two-variable Koszul oracle: the twisted cubic resolution comes out
//    exactly, and every direct dimension agrees with the two-row content of
//    the corresponding final-table entry.
Outcome criterion5(const HomologyTable& t) {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 3; ++q) {
      const long long want = (p == 0 && q == 0) ? 1 : (p == 1 && q == 1) ? 3
                             : (p == 2 && q == 1)                        ? 2
                                                                         : 0;
      const long long got = koszul_dim_direct(2, 3, 0, p, q);
      if (got != want)
        return failure("twisted cubic K_{" + std::to_string(p) + "," + std::to_string(q) +
                       "} = " + std::to_string(got) + ", expected " + std::to_string(want));
    }
  int checked = 0;
  for (int n = 4; n <= 24; ++n)
    for (int degree = -1; degree <= 6; ++degree) {
      const KoszulIndex k = koszul_index(n, degree);
      if (k.q < 0) continue;
      const BigInt want = trans_dim_check(homology_with_convention(t.entries, n, degree), 2);
      const long long got = koszul_dim_direct(2, 3, k.b, k.p, k.q);
      if (want != got) return failure("two-variable cross-check failed at " + slot(n, degree));
      ++checked;
    }
  if (checked == 0) return failure("empty cross-check sweep");
  return {};
}

// 6. End-to-end: the full derivation completed (it is handed in), the
//    comparison against every published value is clean, and the conclusion
//    holds: on 24 points only degree 6 survives and it equals the Euler
//    representation.
Outcome criterion6(const HomologyTable& t) {
  const VerifyReport rep = verify_paper(t);
  if (!rep.complete) return failure("table incomplete: " + (rep.diffs.empty() ? "" : rep.diffs.front()));
  if (!rep.diffs.empty())
    return failure(std::to_string(rep.diffs.size()) + " difference(s), first: " + rep.diffs.front());
  if (rep.compared != 80)
    return failure("expected 80 reference slots, compared " + std::to_string(rep.compared));
  if (t.support(24) != std::set<int>{6})
    return failure("homology on 24 points is not concentrated in degree 6");
  if (!(t.at(24, 6) == equivariant_euler_rep(3, 24)))
    return failure("the (24,6) entry differs from the Euler representation");
  return {};
}

// 7. Always-on structural properties, re-asserted on fresh objects: boundary
//    squares to zero, the group action commutes with it, Hopf traces match
//    the closed-form Euler representation class by class, characters are
//    orthonormal, induction and restriction are adjoint, restriction
//    preserves dimension, induction by a trivial strip multiplies dimension
//    by the index binomial, and every final entry is effective.
Outcome criterion7(const HomologyTable& t) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 7}, {3, 8}, {2, 6}}) {
    const auto cx = build_matching_complex(d, n);
    for (int r = 1; r <= cx.r_max; ++r)
      if (!is_zero(multiply(boundary_matrix(cx, r - 1), boundary_matrix(cx, r))))
        return failure("boundary does not square to zero for d = " + std::to_string(d) +
                       ", n = " + std::to_string(n));
  }
  {
    const auto cx = build_matching_complex(3, 7);
    for (const auto& type : character_table(7).partitions) {
      const auto sigma = class_representative(type);
      for (int r = 1; r <= cx.r_max; ++r)
        if (!(multiply(boundary_matrix(cx, r), action_matrix(cx, r, sigma)) ==
              multiply(action_matrix(cx, r - 1, sigma), boundary_matrix(cx, r))))
          return failure("action does not commute with the boundary at class " +
                         type.to_string());
    }
  }
  for (int n : {6, 7, 8}) {
    const auto cx = build_matching_complex(3, n);
    const ClassFunction euler = to_class_function(equivariant_euler_rep(3, n));
    const CharacterTable& ct = character_table(n);
    for (size_t c = 0; c < ct.partitions.size(); ++c) {
      const auto sigma = class_representative(ct.partitions[c]);
      Rational alt = -1;  // the empty face in reduced degree -1
      for (int r = 0; r <= cx.r_max; ++r) {
        const Rational tr = matrix_trace(action_matrix(cx, r, sigma));
        alt += (r % 2 == 0) ? tr : -tr;
      }
      if (alt != euler.values[c])
        return failure("Hopf trace mismatch at n = " + std::to_string(n) + ", class " +
                       ct.partitions[c].to_string());
    }
  }
  for (int n = 2; n <= 9; ++n) {
    const CharacterTable& ct = character_table(n);
    const BigInt order = factorial(n);
    for (size_t a = 0; a < ct.partitions.size(); ++a)
      for (size_t b = a; b < ct.partitions.size(); ++b) {
        BigInt inner = 0;
        for (size_t c = 0; c < ct.class_sizes.size(); ++c)
          inner += ct.class_sizes[c] * ct.chi[a][c] * ct.chi[b][c];
        if (inner != (a == b ? order : BigInt(0)))
          return failure("character orthonormality fails at n = " + std::to_string(n));
      }
  }
  for (const Partition& lam : enumerate_partitions(6))
    for (const Partition& mu : enumerate_partitions(7)) {
      VirtualRep vl(6);
      vl.add_term(lam, 1);
      VirtualRep vm(7);
      vm.add_term(mu, 1);
      if (induce_trivial_strip(vl, 1).mult(mu) != restrict_rep(vm).mult(lam))
        return failure("induction/restriction adjunction fails for " + lam.to_string() + " / " +
                       mu.to_string());
    }
  for (const Partition& lam : enumerate_partitions(8)) {
    VirtualRep v(8);
    v.add_term(lam, 1);
    if (vr_dim_sn(restrict_rep(v)) != dim_sn(lam))
      return failure("restriction changes dimension for " + lam.to_string());
  }
  for (const Partition& lam : enumerate_partitions(5))
    for (int k = 1; k <= 3; ++k) {
      VirtualRep v(5);
      v.add_term(lam, 1);
      if (vr_dim_sn(induce_trivial_strip(v, k)) != dim_sn(lam) * binomial(5 + k, k))
        return failure("trivial-strip induction misses the binomial factor for " +
                       lam.to_string());
    }
  for (const auto& [key, rep] : t.entries)
    if (rep.is_zero() || !rep.effective())
      return failure("non-effective entry at " + slot(key.first, key.second));
  return {};
}

// 8. The two large syzygy dimensions are consumed as provenance-tagged
//    imports: recomputing them in four variables refuses the default budget,
//    and the derivation aborts loudly when the import is withheld. The
//    optional recompute path is exercised nowhere in this run.
Outcome criterion8() {
  const FactsRegistry facts = FactsRegistry::defaults();
  const Fact& k60 = facts.require(kFactK60);
  const Fact& k70 = facts.require(kFactK70);
  if (k60.value != 14003 || k60.provenance != "paper-M2")
    return failure("first imported dimension has the wrong value or provenance");
  if (k70.value != 5400 || k70.provenance != "paper-M2")
    return failure("second imported dimension has the wrong value or provenance");
  try {
    koszul_dim_direct(4, 3, 2, 6, 0);
    return failure("the four-variable Koszul slot should exceed the default budget");
  } catch (const std::length_error&) {
  }
  FactsRegistry without;
  for (const auto& [name, fact] : facts.all())
    if (name != kFactK60) without.add(fact);
  try {
    derive_all(3, 24, without);
    return failure("derivation ran without the imported dimension");
  } catch (const DerivationError& e) {
    if (std::string(e.what()).find(kFactK60) == std::string::npos)
      return failure("abort message does not name the missing import");
  }
  return {};
}

}  // namespace

int main() {
  std::cout << "acceptance: exact-arithmetic homology of block matching complexes\n";
  int failures = 0;
  const auto report = [&failures](int idx, const std::string& text, const Outcome& o) {
    if (o.ok) {
      std::cout << "[PASS] criterion " << idx << ": " << text << "\n";
    } else {
      std::cout << "[FAIL] criterion " << idx << ": " << text << " -- " << o.detail << "\n";
      ++failures;
    }
  };

  const FactsRegistry facts = FactsRegistry::defaults();
  std::optional<DerivationResult> full;
  std::string full_err;
  try {
    full = derive_all(3, 24, facts);
  } catch (const std::exception& e) {
    full_err = std::string("full derivation failed: ") + e.what();
  }
  const auto with_table = [&](Outcome (*f)(const HomologyTable&)) -> Outcome {
    if (!full) return {false, full_err};
    return run([&] { return f(full->table); });
  };

  report(1, "brute-force homology on 4..10 points matches the published tables", run(criterion1));
  report(2, "the linear-system stage reproduces 11..13 points uniquely", run(criterion2));
  report(3, "h-vectors and the dimension bounds 1991 and 11520 + 3240 = 14760",
         run([&] { return criterion3(facts); }));
  report(4, "duality closure across the two-row and three-row boxes", with_table(criterion4));
  report(5, "two-variable Koszul oracle and full-table cross-check", with_table(criterion5));
  report(6, "end-to-end derivation to 24 points with zero reference diffs",
         with_table(criterion6));
  report(7, "structural property suite on fresh objects", with_table(criterion7));
  report(8, "large syzygy dimensions behave as imports, not recomputations", run(criterion8));

  if (failures == 0) {
    std::cout << "acceptance: all 8 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
