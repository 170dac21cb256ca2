#include "matchc/matching_complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "matchc/partition.hpp"

namespace matchc {

long long MatchingComplexChain::face_count(int r) const {
  if (r < 0 || r > r_max) return 0;
  return static_cast<long long>(faces[static_cast<size_t>(r)].size());
}

long long MatchingComplexChain::face_index(int r, const std::vector<int>& face) const {
  if (r < 0 || r > r_max) return -1;
  const auto& list = faces[static_cast<size_t>(r)];
  auto it = std::lower_bound(list.begin(), list.end(), face);
  if (it == list.end() || *it != face) return -1;
  return it - list.begin();
}

int MatchingComplexChain::block_index(const std::vector<int>& block_sorted) const {
  auto it = std::lower_bound(blocks.begin(), blocks.end(), block_sorted);
  if (it == blocks.end() || *it != block_sorted) return -1;
  return static_cast<int>(it - blocks.begin());
}

std::vector<long long> MatchingComplexChain::f_vector() const {
  std::vector<long long> f;
  for (int r = 0; r <= r_max; ++r) f.push_back(face_count(r));
  return f;
}

long long MatchingComplexChain::reduced_euler() const {
  long long e = -1;  // empty face, placed in degree -1
  for (int r = 0; r <= r_max; ++r) e += (r % 2 == 0 ? 1 : -1) * face_count(r);
  return e;
}

namespace {

// Number of faces in each degree by the product formula: an r-face is an
// unordered set of r+1 disjoint blocks, so f_r = prod_i C(n - d*i, d) / (r+1)!.
std::vector<BigInt> predicted_f_vector(int d, int n) {
  std::vector<BigInt> f;
  BigInt ordered = 1;
  BigInt fact = 1;
  int used = 0, r = 0;
  while (n - used >= d) {
    ordered *= binomial(n - used, d);
    fact *= (r + 1);
    f.push_back(ordered / fact);
    used += d;
    ++r;
  }
  return f;
}

constexpr long long kFaceBudget = 20'000'000;

}  // namespace

MatchingComplexChain build_matching_complex(int d, int n) {
  if (d < 1 || d > 8) throw std::invalid_argument("build_matching_complex: block size out of range");
  if (n < 0 || n > 31) throw std::invalid_argument("build_matching_complex: ground set out of range");

  BigInt total = 0;
  for (const auto& fr : predicted_f_vector(d, n)) total += fr;
  if (total > kFaceBudget)
    throw std::length_error("build_matching_complex: face count exceeds the enumeration budget");

  MatchingComplexChain cx;
  cx.d = d;
  cx.n = n;

  // Blocks: all d-subsets of {1..n} in lexicographic order.
  std::vector<int> pick(static_cast<size_t>(d));
  auto emit_blocks = [&](auto&& self, int next, int depth) -> void {
    if (depth == d) {
      cx.blocks.push_back(pick);
      std::uint32_t m = 0;
      for (int e : pick) m |= (1u << (e - 1));
      cx.block_masks.push_back(m);
      return;
    }
    for (int e = next; e <= n - (d - depth - 1); ++e) {
      pick[static_cast<size_t>(depth)] = e;
      self(self, e + 1, depth + 1);
    }
  };
  if (n >= d) emit_blocks(emit_blocks, 1, 0);

  cx.r_max = n >= d ? n / d - 1 : -1;
  cx.faces.resize(static_cast<size_t>(cx.r_max + 1));

  // Faces: increasing block-id tuples with pairwise disjoint masks. Because a
  // block's smallest element is weakly increasing along the lex order of
  // blocks, id order within a face agrees with ordering blocks by minimum.
  const int nblocks = static_cast<int>(cx.blocks.size());
  std::vector<int> face;
  auto emit_faces = [&](auto&& self, int next, std::uint32_t mask) -> void {
    if (!face.empty())
      cx.faces[face.size() - 1].push_back(face);
    if (static_cast<int>(face.size()) == cx.r_max + 1) return;
    for (int b = next; b < nblocks; ++b) {
      if (cx.block_masks[static_cast<size_t>(b)] & mask) continue;
      face.push_back(b);
      self(self, b + 1, mask | cx.block_masks[static_cast<size_t>(b)]);
      face.pop_back();
    }
  };
  emit_faces(emit_faces, 0, 0u);

  // The recursion emits faces in lex order over id tuples; face_index relies
  // on that, and the predicted counts double-check the enumeration.
  const auto predicted = predicted_f_vector(d, n);
  if (static_cast<int>(predicted.size()) != cx.r_max + 1)
    throw std::logic_error("build_matching_complex: degree count mismatch");
  for (int r = 0; r <= cx.r_max; ++r)
    if (BigInt(cx.face_count(r)) != predicted[static_cast<size_t>(r)])
      throw std::logic_error("build_matching_complex: face count mismatch");
  return cx;
}

SparseIntMatrix boundary_matrix_int(const MatchingComplexChain& cx, int r, bool reduced) {
  if (r < 0 || r > cx.r_max) throw std::out_of_range("boundary_matrix: degree out of range");
  if (r == 0) {
    SparseIntMatrix a(reduced ? 1 : 0, cx.face_count(0));
    if (reduced)
      for (long long j = 0; j < a.cols; ++j) a.add_entry(0, j, 1);
    a.normalize();
    return a;
  }
  SparseIntMatrix a(cx.face_count(r - 1), cx.face_count(r));
  const auto& top = cx.faces[static_cast<size_t>(r)];
  std::vector<int> sub(static_cast<size_t>(r));
  for (long long j = 0; j < a.cols; ++j) {
    const auto& face = top[static_cast<size_t>(j)];
    for (int i = 0; i <= r; ++i) {
      sub.clear();
      for (int k = 0; k <= r; ++k)
        if (k != i) sub.push_back(face[static_cast<size_t>(k)]);
      const long long row = cx.face_index(r - 1, sub);
      if (row < 0) throw std::logic_error("boundary_matrix: missing subface");
      a.add_entry(row, j, i % 2 == 0 ? 1 : -1);
    }
  }
  a.normalize();
  return a;
}

SparseExactMatrix boundary_matrix(const MatchingComplexChain& cx, int r, bool reduced) {
  const SparseIntMatrix a = boundary_matrix_int(cx, r, reduced);
  SparseExactMatrix out(a.rows, a.cols);
  for (long long j = 0; j < a.cols; ++j)
    for (const auto& [row, val] : a.col_entries[static_cast<size_t>(j)])
      out.set(row, j, Rational(val));
  return out;
}

std::vector<int> block_image_table(const MatchingComplexChain& cx,
                                   const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != cx.n)
    throw std::invalid_argument("block_image_table: permutation size mismatch");
  std::vector<bool> seen(static_cast<size_t>(cx.n), false);
  for (int v : sigma) {
    if (v < 1 || v > cx.n || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("block_image_table: not a permutation");
    seen[static_cast<size_t>(v - 1)] = true;
  }
  std::vector<int> img(cx.blocks.size());
  std::vector<int> tmp(static_cast<size_t>(cx.d));
  for (size_t b = 0; b < cx.blocks.size(); ++b) {
    for (int k = 0; k < cx.d; ++k)
      tmp[static_cast<size_t>(k)] = sigma[static_cast<size_t>(cx.blocks[b][static_cast<size_t>(k)] - 1)];
    std::sort(tmp.begin(), tmp.end());
    const int idx = cx.block_index(tmp);
    if (idx < 0) throw std::logic_error("block_image_table: image block missing");
    img[b] = idx;
  }
  return img;
}

std::pair<long long, int> map_face(const MatchingComplexChain& cx, int r,
                                   const std::vector<int>& block_img, long long face) {
  const auto& src = cx.faces[static_cast<size_t>(r)][static_cast<size_t>(face)];
  // Insertion sort of the image ids; the swap parity is the sign of the
  // permutation that re-sorts the image blocks by minimum element.
  std::vector<int> ids(src.size());
  int swaps = 0;
  for (size_t i = 0; i < src.size(); ++i) {
    int v = block_img[static_cast<size_t>(src[i])];
    size_t j = i;
    while (j > 0 && ids[j - 1] > v) {
      ids[j] = ids[j - 1];
      --j;
      ++swaps;
    }
    ids[j] = v;
  }
  const long long idx = cx.face_index(r, ids);
  if (idx < 0) throw std::logic_error("map_face: image face missing");
  return {idx, swaps % 2 == 0 ? 1 : -1};
}

SparseExactMatrix action_matrix(const MatchingComplexChain& cx, int r,
                                const std::vector<int>& sigma) {
  if (r < 0 || r > cx.r_max) throw std::out_of_range("action_matrix: degree out of range");
  const auto img = block_image_table(cx, sigma);
  const long long m = cx.face_count(r);
  SparseExactMatrix a(m, m);
  for (long long j = 0; j < m; ++j) {
    const auto [row, sign] = map_face(cx, r, img, j);
    a.set(row, j, Rational(sign));
  }
  return a;
}

std::string dump_faces(const MatchingComplexChain& cx, int r) {
  if (r < 0 || r > cx.r_max) throw std::out_of_range("dump_faces: degree out of range");
  std::ostringstream out;
  for (const auto& face : cx.faces[static_cast<size_t>(r)]) {
    bool first_block = true;
    for (int b : face) {
      if (!first_block) out << '|';
      first_block = false;
      bool first_el = true;
      for (int e : cx.blocks[static_cast<size_t>(b)]) {
        if (!first_el) out << ',';
        first_el = false;
        out << e;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace matchc
