#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "matchc/partition.hpp"

using namespace matchc;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Independent oracle: count standard tableaux of shape lam by walking the
// Young lattice (add boxes one at a time in every legal way).
long long count_syt_rec(std::vector<int>& cur, const Partition& lam) {
  int total = 0;
  bool full = true;
  long long ways = 0;
  for (size_t i = 0; i < cur.size(); ++i) total += cur[i];
  if (total == lam.size()) return 1;
  for (int i = 0; i < lam.rows(); ++i) {
    if (cur[static_cast<size_t>(i)] >= lam.part(i)) continue;
    full = false;
    if (i > 0 && cur[static_cast<size_t>(i - 1)] <= cur[static_cast<size_t>(i)]) continue;
    ++cur[static_cast<size_t>(i)];
    ways += count_syt_rec(cur, lam);
    --cur[static_cast<size_t>(i)];
  }
  (void)full;
  return ways;
}

long long count_syt(const Partition& lam) {
  std::vector<int> cur(static_cast<size_t>(lam.rows()), 0);
  return count_syt_rec(cur, lam);
}

// Independent oracle: count semistandard tableaux with entries in 1..m
// (weakly increasing along rows, strictly increasing down columns).
long long count_ssyt_rec(std::vector<std::vector<int>>& fill, const Partition& lam,
                         int r, int c, int m) {
  if (r == lam.rows()) return 1;
  const int next_r = (c + 1 < lam.part(r)) ? r : r + 1;
  const int next_c = (c + 1 < lam.part(r)) ? c + 1 : 0;
  const int left = c > 0 ? fill[static_cast<size_t>(r)][static_cast<size_t>(c - 1)] : 1;
  const int up = (r > 0 && c < lam.part(r - 1))
                     ? fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1
                     : 1;
  long long ways = 0;
  for (int v = std::max(left, up); v <= m; ++v) {
    fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
    ways += count_ssyt_rec(fill, lam, next_r, next_c, m);
  }
  return ways;
}

long long count_ssyt(const Partition& lam, int m) {
  if (lam.empty()) return 1;
  std::vector<std::vector<int>> fill(static_cast<size_t>(lam.rows()));
  for (int i = 0; i < lam.rows(); ++i)
    fill[static_cast<size_t>(i)].assign(static_cast<size_t>(lam.part(i)), 0);
  return count_ssyt_rec(fill, lam, 0, 0, m);
}

}  // namespace

TEST_CASE("partition validation and ordering") {
  CHECK_THROWS(P({1, 2}));
  CHECK_THROWS(P({3, 0}));
  CHECK(Partition{}.size() == 0);
  CHECK(Partition{}.rows() == 0);
  // canonical order of partitions of 4
  auto all = enumerate_partitions(4);
  REQUIRE(all.size() == 5);
  CHECK(all[0] == P({4}));
  CHECK(all[1] == P({3, 1}));
  CHECK(all[2] == P({2, 2}));
  CHECK(all[3] == P({2, 1, 1}));
  CHECK(all[4] == P({1, 1, 1, 1}));
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("partition counts") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(10).size() == 42);
  CHECK(enumerate_partitions(24).size() == 1575);
  // partitions of 10 with at most 2 rows
  CHECK(enumerate_partitions(10, 2).size() == 6);
}

TEST_CASE("dim_sn matches standard tableau enumeration") {
  CHECK(dim_sn(P({3, 1})) == 3);
  CHECK(dim_sn(P({4, 2})) == 9);
  CHECK(dim_sn(Partition{}) == 1);
  for (int n = 1; n <= 8; ++n)
    for (const auto& lam : enumerate_partitions(n))
      CHECK(dim_sn(lam) == count_syt(lam));
  // sum of squares is n!
  for (int n = 1; n <= 8; ++n) {
    BigInt s = 0;
    for (const auto& lam : enumerate_partitions(n)) s += dim_sn(lam) * dim_sn(lam);
    CHECK(s == factorial(n));
  }
}

TEST_CASE("dim_gl matches semistandard tableau enumeration") {
  CHECK(dim_gl(P({5, 5}), 3) == 21);
  CHECK(dim_gl(P({4, 2}), 2) == 3);
  CHECK(dim_gl(P({5, 4}), 2) == 2);
  CHECK(dim_gl(P({8, 8, 4}), 4) == 1375);
  CHECK(dim_gl(P({8, 6, 6}), 4) == 616);
  CHECK(dim_gl(P({2, 1, 1}), 2) == 0);  // more rows than the dimension
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n <= 6; ++n)
      for (const auto& lam : enumerate_partitions(n))
        CHECK(dim_gl(lam, m) == count_ssyt(lam, m));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P({4, 2})) == P({2, 2, 1, 1}));
  CHECK(conjugate(Partition{}) == Partition{});
  for (const auto& lam : enumerate_partitions(9)) {
    CHECK(conjugate(conjugate(lam)) == lam);
    CHECK(dim_sn(conjugate(lam)) == dim_sn(lam));
  }
}

TEST_CASE("add and remove box") {
  auto rb = remove_box(P({5, 3, 1}));
  REQUIRE(rb.size() == 3);
  CHECK(rb[0] == P({5, 3}));
  CHECK(rb[1] == P({5, 2, 1}));
  CHECK(rb[2] == P({4, 3, 1}));
  CHECK(remove_box(Partition{}).empty());
  auto ab = add_box(P({2, 2}));
  REQUIRE(ab.size() == 2);
  CHECK(ab[0] == P({3, 2}));
  CHECK(ab[1] == P({2, 2, 1}));
  // add_box and remove_box are adjoint: mu in add_box(lam) iff lam in remove_box(mu)
  for (const auto& lam : enumerate_partitions(6))
    for (const auto& mu : add_box(lam)) {
      auto back = remove_box(mu);
      CHECK(std::count(back.begin(), back.end(), lam) == 1);
    }
}

TEST_CASE("horizontal strips (Pieri)") {
  auto s = add_horizontal_strips(P({3, 1}), 2);
  REQUIRE(s.size() == 5);
  CHECK(s[0] == P({5, 1}));
  CHECK(s[1] == P({4, 2}));
  CHECK(s[2] == P({4, 1, 1}));
  CHECK(s[3] == P({3, 3}));
  CHECK(s[4] == P({3, 2, 1}));

  auto t = add_horizontal_strips(P({5, 5}), 2);
  REQUIRE(t.size() == 3);
  CHECK(t[0] == P({7, 5}));
  CHECK(t[1] == P({6, 5, 1}));
  CHECK(t[2] == P({5, 5, 2}));

  // k = 1 strips are exactly add_box
  for (const auto& lam : enumerate_partitions(7))
    CHECK(add_horizontal_strips(lam, 1) == add_box(lam));

  // strip results are distinct and never repeat
  for (const auto& lam : enumerate_partitions(6))
    for (int k = 0; k <= 3; ++k) {
      auto v = add_horizontal_strips(lam, k);
      std::set<Partition> uniq(v.begin(), v.end());
      CHECK(uniq.size() == v.size());
    }
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(16, 6) == 8008);
  CHECK(binomial(16, 7) == 11440);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(factorial(24) == BigInt("620448401733239439360000"));
}
