#include <doctest.h>

#include <map>
#include <vector>

#include "matchc/characters.hpp"
#include "matchc/partition.hpp"
#include "matchc/virtual_rep.hpp"

using namespace matchc;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Oracle: permutation character of the Young subgroup S_mu.  Its value on a
// class is the number of ways to assign the cycles of a representative to the
// rows of mu so that each row's assigned cycle lengths sum exactly to its part.
long long perm_char_rec(const std::vector<int>& cyc, size_t idx, std::vector<int>& room) {
  if (idx == cyc.size()) return 1;
  long long ways = 0;
  for (auto& r : room) {
    if (r < cyc[idx]) continue;
    r -= cyc[idx];
    ways += perm_char_rec(cyc, idx + 1, room);
    r += cyc[idx];
  }
  return ways;
}

long long perm_char(const Partition& mu, const CycleType& type) {
  std::vector<int> room = mu.parts();
  return perm_char_rec(type.parts(), 0, room);
}

// Oracle: the full character table of S_n, built without the engine's
// recursion.  Permutation characters of Young subgroups expand as the target
// irreducible plus earlier (in canonical order) irreducibles, so peeling in
// canonical order recovers every row.
std::vector<std::vector<Rational>> oracle_table(int n) {
  auto parts = enumerate_partitions(n);
  const size_t k = parts.size();
  std::vector<Rational> weight(k);  // |class| / n!
  for (size_t t = 0; t < k; ++t)
    weight[t] = Rational(class_size(parts[t]), factorial(n));
  std::vector<std::vector<Rational>> rows;
  for (size_t m = 0; m < k; ++m) {
    std::vector<Rational> f(k);
    for (size_t t = 0; t < k; ++t) f[t] = perm_char(parts[m], parts[t]);
    for (const auto& prev : rows) {
      Rational ip = 0;
      for (size_t t = 0; t < k; ++t) ip += weight[t] * f[t] * prev[t];
      for (size_t t = 0; t < k; ++t) f[t] -= ip * prev[t];
    }
    rows.push_back(std::move(f));
  }
  return rows;
}

}  // namespace

TEST_CASE("class sizes partition the group") {
  for (int n = 1; n <= 10; ++n) {
    BigInt total = 0;
    for (const auto& t : enumerate_partitions(n)) total += class_size(t);
    CHECK(total == factorial(n));
  }
  CHECK(class_size(P({2, 1, 1})) == 6);   // transpositions in S_4
  CHECK(class_size(P({3, 3})) == 40);     // (3,3) class in S_6
  CHECK(class_size(P({24})) == factorial(23));
}

TEST_CASE("character spot values") {
  CHECK(mn_character(P({2}), P({2})) == 1);
  CHECK(mn_character(P({1, 1}), P({2})) == -1);
  CHECK(mn_character(P({2, 1}), P({3})) == -1);
  CHECK(mn_character(P({2, 1}), P({1, 1, 1})) == 2);
  // trivial character is identically one; sign character is the cycle parity
  for (const auto& t : enumerate_partitions(7)) {
    CHECK(mn_character(P({7}), t) == 1);
    int sign = (7 - t.rows()) % 2 == 0 ? 1 : -1;
    CHECK(mn_character(P({1, 1, 1, 1, 1, 1, 1}), t) == sign);
  }
  // value at the identity is the dimension
  for (const auto& lam : enumerate_partitions(9))
    CHECK(mn_character(lam, P(std::vector<int>(9, 1))) == dim_sn(lam));
}

TEST_CASE("full tables match the permutation-module oracle") {
  for (int n : {2, 3, 4, 5, 6}) {
    const auto& tab = character_table(n);
    auto oracle = oracle_table(n);
    REQUIRE(tab.partitions.size() == oracle.size());
    for (size_t r = 0; r < oracle.size(); ++r)
      for (size_t c = 0; c < oracle.size(); ++c)
        CHECK(Rational(tab.chi[r][c]) == oracle[r][c]);
  }
}

TEST_CASE("row orthonormality") {
  const auto& tab = character_table(7);
  const size_t k = tab.partitions.size();
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a; b < k; ++b) {
      Rational ip = 0;
      for (size_t t = 0; t < k; ++t)
        ip += Rational(tab.class_sizes[t], factorial(7)) * tab.chi[a][t] * tab.chi[b][t];
      CHECK(ip == (a == b ? 1 : 0));
    }
}

TEST_CASE("decompose round-trips virtual representations") {
  VirtualRep x(8);
  x.add_term(P({5, 2, 1}), 3);
  x.add_term(P({4, 4}), -2);
  x.add_term(P({2, 2, 2, 2}), 1);
  auto f = to_class_function(x);
  CHECK(decompose(f) == x);
  // a non-integral class function is rejected
  ClassFunction bad{2, {Rational(1), Rational(0)}};
  CHECK_THROWS(decompose(bad));
}

TEST_CASE("table caching returns consistent objects") {
  const auto& a = character_table(6);
  const auto& b = character_table(6);
  CHECK(&a == &b);
  int idx = a.index_of(P({3, 2, 1}));
  CHECK(idx >= 0);
  CHECK(a.partitions[static_cast<size_t>(idx)] == P({3, 2, 1}));
}
