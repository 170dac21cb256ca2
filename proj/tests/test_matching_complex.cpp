#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "matchc/characters.hpp"
#include "matchc/matching_complex.hpp"

using namespace matchc;

namespace {

std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Cycle type of a permutation, computed from scratch.
Partition cycle_type_of(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> lengths;
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<size_t>(s - 1)]) continue;
    int len = 0, cur = s;
    do {
      seen[static_cast<size_t>(cur - 1)] = true;
      cur = perm[static_cast<size_t>(cur - 1)];
      ++len;
    } while (cur != s);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

}  // namespace

TEST_CASE("face counts match the closed-form product formula") {
  auto f = [](int d, int n) { return build_matching_complex(d, n).f_vector(); };
  CHECK(f(3, 4) == std::vector<long long>{4});
  CHECK(f(3, 6) == std::vector<long long>{20, 10});
  CHECK(f(3, 7) == std::vector<long long>{35, 70});
  CHECK(f(3, 9) == std::vector<long long>{84, 840, 280});
  CHECK(f(3, 10) == std::vector<long long>{120, 2100, 2800});
  CHECK(f(3, 11) == std::vector<long long>{165, 4620, 15400});
  CHECK(f(2, 4) == std::vector<long long>{6, 3});
  CHECK(f(2, 6) == std::vector<long long>{15, 45, 15});
}

TEST_CASE("small and degenerate ground sets") {
  const auto none = build_matching_complex(3, 2);
  CHECK(none.empty());
  CHECK(none.r_max == -1);
  CHECK(none.f_vector().empty());
  CHECK(none.reduced_euler() == -1);

  const auto point = build_matching_complex(3, 3);
  CHECK(point.r_max == 0);
  CHECK(point.face_count(0) == 1);
  CHECK(point.reduced_euler() == 0);

  CHECK(build_matching_complex(3, 6).reduced_euler() == 9);  // 20 - 10 - 1
  CHECK_THROWS_AS(build_matching_complex(3, 16), std::length_error);
}

TEST_CASE("faces are sorted, disjoint, and indexable") {
  for (int n : {6, 7, 9}) {
    const auto cx = build_matching_complex(3, n);
    for (int r = 0; r <= cx.r_max; ++r) {
      const auto& list = cx.faces[static_cast<size_t>(r)];
      CHECK(std::is_sorted(list.begin(), list.end()));
      for (size_t i = 0; i < list.size(); ++i) {
        const auto& face = list[i];
        REQUIRE(static_cast<int>(face.size()) == r + 1);
        std::uint32_t mask = 0;
        for (size_t k = 0; k < face.size(); ++k) {
          if (k > 0) CHECK(face[k - 1] < face[k]);
          const auto bm = cx.block_masks[static_cast<size_t>(face[k])];
          CHECK((mask & bm) == 0);
          mask |= bm;
        }
        CHECK(cx.face_index(r, face) == static_cast<long long>(i));
      }
    }
    for (size_t b = 0; b < cx.blocks.size(); ++b)
      CHECK(cx.block_index(cx.blocks[b]) == static_cast<int>(b));
  }
}

TEST_CASE("boundary columns have alternating unit entries and square to zero") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 7}, {3, 9}, {2, 6}, {2, 8}}) {
    const auto cx = build_matching_complex(d, n);
    for (int r = 1; r <= cx.r_max; ++r) {
      const auto bd = boundary_matrix_int(cx, r);
      CHECK(bd.rows == cx.face_count(r - 1));
      CHECK(bd.cols == cx.face_count(r));
      for (const auto& col : bd.col_entries) {
        CHECK(static_cast<int>(col.size()) == r + 1);
        long long pos = 0, neg = 0;
        for (const auto& [row, v] : col) {
          CHECK((v == 1 || v == -1));
          (v == 1 ? pos : neg) += 1;
        }
        CHECK(pos == (r + 2) / 2);
        CHECK(neg == (r + 1) / 2);
      }
      CHECK(is_zero(multiply(boundary_matrix(cx, r - 1), boundary_matrix(cx, r))));
    }
  }
}

TEST_CASE("augmentation row in reduced degree zero") {
  const auto cx = build_matching_complex(3, 7);
  const auto aug = boundary_matrix_int(cx, 0, true);
  CHECK(aug.rows == 1);
  CHECK(aug.cols == 35);
  CHECK(aug.nnz() == 35);
  const auto bare = boundary_matrix_int(cx, 0, false);
  CHECK(bare.rows == 0);
  CHECK(bare.nnz() == 0);
  CHECK_THROWS_AS(boundary_matrix_int(cx, 5, true), std::out_of_range);
}

TEST_CASE("group action is a signed permutation commuting with the boundary") {
  std::mt19937 rng(31337);
  for (int n : {6, 7}) {
    const auto cx = build_matching_complex(3, n);
    std::vector<std::vector<int>> perms;
    for (const auto& t : character_table(n).partitions) perms.push_back(class_representative(t));
    for (int k = 0; k < 4; ++k) perms.push_back(random_permutation(n, rng));
    for (const auto& sigma : perms) {
      for (int r = 0; r <= cx.r_max; ++r) {
        const auto m = action_matrix(cx, r, sigma);
        // signed permutation: one +-1 entry per column, one per row
        CHECK(m.nnz() == cx.face_count(r));
        std::vector<int> row_hits(static_cast<size_t>(m.rows), 0);
        for (const auto& [rc, v] : m.entries) {
          CHECK((v == 1 || v == -1));
          ++row_hits[static_cast<size_t>(rc.first)];
        }
        CHECK(std::count(row_hits.begin(), row_hits.end(), 1) == m.rows);
        if (r >= 1) {
          const auto prev = action_matrix(cx, r - 1, sigma);
          const auto bd = boundary_matrix(cx, r);
          CHECK(multiply(bd, m) == multiply(prev, bd));
        }
      }
      // inverse permutation gives the inverse matrix
      std::vector<int> inv(sigma.size());
      for (size_t i = 0; i < sigma.size(); ++i) inv[static_cast<size_t>(sigma[i] - 1)] = static_cast<int>(i) + 1;
      const auto a = action_matrix(cx, cx.r_max, sigma);
      const auto b = action_matrix(cx, cx.r_max, inv);
      const auto prod = multiply(a, b);
      bool ok = true;
      for (long long j = 0; j < prod.cols && ok; ++j) ok = prod.get(j, j) == Rational(1);
      CHECK(ok);
      CHECK(prod.nnz() == prod.cols);
    }
  }
}

TEST_CASE("class representatives realize their cycle type") {
  for (int n : {1, 4, 6, 9}) {
    for (const auto& t : enumerate_partitions(n)) {
      const auto perm = class_representative(t);
      REQUIRE(static_cast<int>(perm.size()) == n);
      CHECK(cycle_type_of(perm) == t);
    }
  }
}

TEST_CASE("face dump uses bar and comma separators") {
  const auto k4 = build_matching_complex(2, 4);
  CHECK(dump_faces(k4, 1) == "1,2|3,4\n1,3|2,4\n1,4|2,3\n");
  const auto cx = build_matching_complex(3, 6);
  const auto text = dump_faces(cx, 1);
  CHECK(std::count(text.begin(), text.end(), '\n') == 10);
  CHECK(text.substr(0, text.find('\n')) == "1,2,3|4,5,6");
  CHECK(dump_faces(cx, 0).substr(0, 6) == "1,2,3\n");
}
