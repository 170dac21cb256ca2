#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matchc/rank.hpp"

namespace matchc {

// Chain-level data of the matching complex on {1..n} with block size d:
// vertices are the d-subsets, faces are collections of pairwise disjoint
// blocks, ordered canonically (blocks within a face sorted by minimum element,
// face lists sorted lexicographically over block indices).
struct MatchingComplexChain {
  int d = 0;
  int n = 0;
  int r_max = -1;  // dimension of the top faces; -1 when there are no vertices

  std::vector<std::vector<int>> blocks;     // all d-subsets of {1..n}, lex order
  std::vector<std::uint32_t> block_masks;   // bitmask per block
  // faces[r]: list of r-faces, each a strictly increasing list of block ids
  std::vector<std::vector<std::vector<int>>> faces;

  bool empty() const { return blocks.empty(); }
  long long face_count(int r) const;
  long long face_index(int r, const std::vector<int>& face) const;  // -1 if absent
  int block_index(const std::vector<int>& block_sorted) const;      // -1 if absent
  std::vector<long long> f_vector() const;
  // Signed face count including the empty face, with signs arranged so that
  // the value equals the alternating sum of reduced Betti numbers.
  long long reduced_euler() const;
};

MatchingComplexChain build_matching_complex(int d, int n);

// Simplicial boundary of degree r (omit the i-th block with sign (-1)^i).
// In reduced mode r = 0 yields the 1 x f_0 augmentation row.
SparseExactMatrix boundary_matrix(const MatchingComplexChain& cx, int r, bool reduced = true);
SparseIntMatrix boundary_matrix_int(const MatchingComplexChain& cx, int r, bool reduced = true);

// Signed permutation action of sigma (1-based images, sigma[i-1] = sigma(i))
// on the degree-r faces; the sign is the parity of the block re-sort.
SparseExactMatrix action_matrix(const MatchingComplexChain& cx, int r,
                                const std::vector<int>& sigma);

// Per-permutation block translation table, and the face-level action derived
// from it: returns (image face index, sign).
std::vector<int> block_image_table(const MatchingComplexChain& cx,
                                   const std::vector<int>& sigma);
std::pair<long long, int> map_face(const MatchingComplexChain& cx, int r,
                                   const std::vector<int>& block_img, long long face);

// One face per line, blocks separated by '|', elements by ',' — e.g. "1,2,3|4,5,6".
std::string dump_faces(const MatchingComplexChain& cx, int r);

}  // namespace matchc
