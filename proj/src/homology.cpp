#include "matchc/homology.hpp"

#include <cstdint>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matchc {

namespace {

// Block translation tables for one canonical representative per conjugacy
// class, in the character-table column order.
std::vector<std::vector<int>> class_block_tables(const MatchingComplexChain& cx) {
  std::vector<std::vector<int>> tables;
  for (const auto& t : character_table(cx.n).partitions)
    tables.push_back(block_image_table(cx, class_representative(t)));
  return tables;
}

// Signed count of degree-r faces fixed by the permutation: the trace of its
// action on the chain group C_r.
long long chain_trace(const MatchingComplexChain& cx, int r, const std::vector<int>& block_img) {
  long long tr = 0;
  const long long m = cx.face_count(r);
  for (long long f = 0; f < m; ++f) {
    const auto [img, sign] = map_face(cx, r, block_img, f);
    if (img == f) tr += sign;
  }
  return tr;
}

struct ImageTraces {
  long long rank = 0;
  std::vector<long long> trace;  // per class, canonical column order
};

// Trace of each class representative on im(boundary_r), one prime at a time.
//
// With pivots (I, J) of the boundary matrix A and W = inverse of A[I,J] mod
// prime, the image trace is tr(W * N) where column k of N is the action image
// of basis vector A e_{J_k}: by equivariance that is sign_k * A e_{pi(J_k)},
// so N needs no row bookkeeping beyond restricting to I.
ImageTraces image_traces_one_prime(const MatchingComplexChain& cx, int r,
                                   const std::vector<std::vector<int>>& tables,
                                   const SparseIntMatrix& a, std::uint32_t prime) {
  ImageTraces out;
  const auto ps = eliminate_modp(a, prime);
  out.rank = ps.rank;
  const size_t k = ps.pivot_rows.size();
  if (k == 0) {
    out.trace.assign(tables.size(), 0);
    return out;
  }
  const auto w = dense_inverse_modp(a, ps.pivot_rows, ps.pivot_cols, prime);
  std::vector<long long> pos(static_cast<size_t>(a.rows), -1);
  for (size_t i = 0; i < k; ++i)
    pos[static_cast<size_t>(ps.pivot_rows[i])] = static_cast<long long>(i);
  const auto p64 = static_cast<std::uint64_t>(prime);
  for (const auto& block_img : tables) {
    std::uint64_t acc = 0;
    for (size_t t = 0; t < k; ++t) {
      const auto [img_col, sign] = map_face(cx, r, block_img, ps.pivot_cols[t]);
      std::uint64_t dot = 0;
      for (const auto& [row, val] : a.col_entries[static_cast<size_t>(img_col)]) {
        const long long i = pos[static_cast<size_t>(row)];
        if (i < 0) continue;
        const auto v = static_cast<std::uint64_t>(((val % prime) + prime) % prime);
        dot = (dot + w[t * k + static_cast<size_t>(i)] * v) % p64;
      }
      acc = sign > 0 ? (acc + dot) % p64 : (acc + p64 - dot) % p64;
    }
    // symmetric lift: finite-order operators on a rank-dimensional space have
    // traces bounded by the rank, far below prime/2
    long long lifted = static_cast<long long>(acc);
    if (lifted > static_cast<long long>(prime / 2)) lifted -= static_cast<long long>(prime);
    if (lifted > out.rank || lifted < -out.rank)
      throw std::logic_error("image trace exceeds the rank bound; lift is not trustworthy");
    out.trace.push_back(lifted);
  }
  return out;
}

// Same computation with dense rational inverses; the pivot structure comes
// from a prime whose rank agrees with the exact one (such a prime certifies
// that its pivot submatrix is invertible over Q as well).
ImageTraces image_traces_exact(const MatchingComplexChain& cx, int r,
                               const std::vector<std::vector<int>>& tables,
                               const SparseIntMatrix& a) {
  const long long exact_rank = rank_exact(a);
  PivotStructure ps = eliminate_modp(a, RankEngine::kPrimeA);
  if (ps.rank != exact_rank) ps = eliminate_modp(a, RankEngine::kPrimeB);
  if (ps.rank != exact_rank)
    throw std::logic_error("both working primes miss the exact rank on one matrix");
  ImageTraces out;
  out.rank = exact_rank;
  const size_t k = ps.pivot_rows.size();
  if (k == 0) {
    out.trace.assign(tables.size(), 0);
    return out;
  }
  const auto w = dense_inverse_exact(a, ps.pivot_rows, ps.pivot_cols);
  std::vector<long long> pos(static_cast<size_t>(a.rows), -1);
  for (size_t i = 0; i < k; ++i)
    pos[static_cast<size_t>(ps.pivot_rows[i])] = static_cast<long long>(i);
  for (const auto& block_img : tables) {
    Rational acc(0);
    for (size_t t = 0; t < k; ++t) {
      const auto [img_col, sign] = map_face(cx, r, block_img, ps.pivot_cols[t]);
      Rational dot(0);
      for (const auto& [row, val] : a.col_entries[static_cast<size_t>(img_col)]) {
        const long long i = pos[static_cast<size_t>(row)];
        if (i < 0) continue;
        dot += w[t * k + static_cast<size_t>(i)] * Rational(val);
      }
      acc += sign > 0 ? dot : -dot;
    }
    if (boost::multiprecision::denominator(acc) != 1)
      throw std::logic_error("exact image trace is not an integer");
    out.trace.push_back(boost::multiprecision::numerator(acc).convert_to<long long>());
  }
  return out;
}

// Trace table for boundary map r, where r = 0 is the reduced augmentation
// (rank one, trace one: the image is the trivial representation) and
// r > r_max is the zero map.
ImageTraces image_traces(const MatchingComplexChain& cx, int r,
                         const std::vector<std::vector<int>>& tables,
                         TraceStrategy strategy) {
  const size_t ncls = tables.size();
  if (r > cx.r_max) return {0, std::vector<long long>(ncls, 0)};
  if (r == 0) return {1, std::vector<long long>(ncls, 1)};
  const SparseIntMatrix a = boundary_matrix_int(cx, r, true);
  if (strategy == TraceStrategy::RationalExact) return image_traces_exact(cx, r, tables, a);
  auto fut = std::async(std::launch::async, [&] {
    return image_traces_one_prime(cx, r, tables, a, RankEngine::kPrimeB);
  });
  const ImageTraces ta = image_traces_one_prime(cx, r, tables, a, RankEngine::kPrimeA);
  const ImageTraces tb = fut.get();
  if (ta.rank != tb.rank)
    throw std::logic_error("the two working primes disagree on a boundary rank");
  if (ta.trace != tb.trace)
    throw std::logic_error("the two working primes disagree on an image trace");
  // seeded exact spot check of the agreed rank, same policy as the rank
  // engine; the seed mixes in the matrix identity so distinct calls draw
  // distinct (but reproducible) samples
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  for (long long ingredient : {static_cast<long long>(cx.n), static_cast<long long>(r),
                               a.rows, a.cols, a.nnz()})
    seed = (seed ^ static_cast<std::uint64_t>(ingredient)) * 0xbf58476d1ce4e5b9ULL;
  RankEngine certifier(RankStrategy::CertifiedModular, seed);
  certifier.maybe_certify(a, ta.rank);
  return ta;
}

}  // namespace

std::map<int, long long> betti_numbers(const MatchingComplexChain& cx, RankEngine* engine) {
  std::map<int, long long> betti;
  if (cx.empty()) {
    betti[-1] = 1;
    return betti;
  }
  RankEngine local(RankStrategy::CertifiedModular);
  if (engine == nullptr) engine = &local;
  std::vector<long long> rank(static_cast<size_t>(cx.r_max + 2), 0);
  rank[0] = 1;  // reduced augmentation of a nonempty complex
  for (int r = 1; r <= cx.r_max; ++r)
    rank[static_cast<size_t>(r)] = engine->rank(boundary_matrix_int(cx, r, true));
  long long euler = 0;
  for (int i = 0; i <= cx.r_max; ++i) {
    const long long b = cx.face_count(i) - rank[static_cast<size_t>(i)] - rank[static_cast<size_t>(i + 1)];
    if (b < 0) throw std::logic_error("negative Betti number from rank-nullity");
    if (b != 0) betti[i] = b;
    euler += (i % 2 == 0 ? 1 : -1) * b;
  }
  if (euler != cx.reduced_euler())
    throw std::logic_error("Betti numbers fail the Euler characteristic check");
  return betti;
}

ClassFunction homology_character(const MatchingComplexChain& cx, int degree,
                                 TraceStrategy strategy) {
  if (cx.empty() || degree < 0 || degree > cx.r_max)
    throw std::invalid_argument("homology_character: degree out of range");
  const auto tables = class_block_tables(cx);
  const auto lower = image_traces(cx, degree, tables, strategy);
  const auto upper = image_traces(cx, degree + 1, tables, strategy);
  ClassFunction f;
  f.n = cx.n;
  for (size_t c = 0; c < tables.size(); ++c)
    f.values.push_back(Rational(chain_trace(cx, degree, tables[c]) - lower.trace[c] -
                                upper.trace[c]));
  return f;
}

EquivariantHomology equivariant_homology(const MatchingComplexChain& cx, TraceStrategy strategy) {
  EquivariantHomology h;
  h.d = cx.d;
  h.n = cx.n;
  if (cx.empty()) {
    // no vertices: only the empty face survives, one class in degree -1
    // carrying the trivial representation
    h.betti[-1] = 1;
    VirtualRep triv(cx.n);
    triv.add_term(cx.n > 0 ? Partition(std::vector<int>{cx.n}) : Partition(), 1);
    h.entries.emplace(-1, std::move(triv));
    return h;
  }

  const auto tables = class_block_tables(cx);
  const size_t ncls = tables.size();
  const int rmax = cx.r_max;

  std::vector<std::vector<long long>> chain(static_cast<size_t>(rmax + 1),
                                            std::vector<long long>(ncls));
  for (int r = 0; r <= rmax; ++r)
    for (size_t c = 0; c < ncls; ++c)
      chain[static_cast<size_t>(r)][c] = chain_trace(cx, r, tables[c]);

  std::vector<ImageTraces> img(static_cast<size_t>(rmax + 2));
  {
    std::vector<std::future<ImageTraces>> futs;
    for (int r = 1; r <= rmax; ++r)
      futs.push_back(std::async(std::launch::async,
                                [&, r] { return image_traces(cx, r, tables, strategy); }));
    img[0] = image_traces(cx, 0, tables, strategy);
    img[static_cast<size_t>(rmax + 1)] = image_traces(cx, rmax + 1, tables, strategy);
    for (int r = 1; r <= rmax; ++r) img[static_cast<size_t>(r)] = futs[static_cast<size_t>(r - 1)].get();
  }

  // Betti numbers by rank-nullity, then the Euler cross-check.
  long long euler = 0;
  for (int i = 0; i <= rmax; ++i) {
    const long long b = cx.face_count(i) - img[static_cast<size_t>(i)].rank -
                        img[static_cast<size_t>(i + 1)].rank;
    if (b < 0) throw std::logic_error("negative Betti number from rank-nullity");
    if (b != 0) h.betti[i] = b;
    euler += (i % 2 == 0 ? 1 : -1) * b;
  }
  if (euler != cx.reduced_euler())
    throw std::logic_error("equivariant homology fails the Euler characteristic check");

  // Hopf trace identity per class: the alternating sum of homology traces
  // must match the alternating sum of chain traces (empty face included).
  for (size_t c = 0; c < ncls; ++c) {
    long long lhs = -1;
    long long rhs = 0;
    for (int i = 0; i <= rmax; ++i) {
      const int s = i % 2 == 0 ? 1 : -1;
      lhs += s * chain[static_cast<size_t>(i)][c];
      rhs += s * (chain[static_cast<size_t>(i)][c] - img[static_cast<size_t>(i)].trace[c] -
                  img[static_cast<size_t>(i + 1)].trace[c]);
    }
    if (lhs != rhs)
      throw std::logic_error("Hopf trace identity fails on a conjugacy class");
  }

  for (int i = 0; i <= rmax; ++i) {
    ClassFunction f;
    f.n = cx.n;
    bool all_zero = true;
    for (size_t c = 0; c < ncls; ++c) {
      const long long v = chain[static_cast<size_t>(i)][c] - img[static_cast<size_t>(i)].trace[c] -
                          img[static_cast<size_t>(i + 1)].trace[c];
      if (v != 0) all_zero = false;
      f.values.push_back(Rational(v));
    }
    const long long b = h.betti.count(i) ? h.betti.at(i) : 0;
    if (b == 0) {
      if (!all_zero)
        throw std::logic_error("vanishing homology carries a nonzero character");
      continue;
    }
    VirtualRep rep = decompose(f);
    for (const auto& [lam, m] : rep.terms())
      if (m < 0)
        throw std::logic_error("homology character decomposes with a negative multiplicity");
    if (vr_dim_sn(rep) != BigInt(b))
      throw std::logic_error("homology decomposition dimension disagrees with the Betti number");
    h.entries.emplace(i, std::move(rep));
  }
  return h;
}

namespace {

// Signed count of families of disjoint block orbits over a multiset of cycle
// lengths, each family weighted (-1)^(#orbits). The recursion anchors on the
// first cycle: it is either unused, or it belongs to an orbit of length l
// (l divides its length) completed by further cycles with lengths divisible
// by l that bring the total point count to d*l; a completed orbit admits
// l^(cycles-1) distinct realizations.
struct BlockOrbitCounter {
  int d = 0;
  std::map<std::vector<int>, BigInt> memo;

  BigInt signed_families(const std::vector<int>& state) {
    if (state.empty()) return 1;
    auto hit = memo.find(state);
    if (hit != memo.end()) return hit->second;
    const int anchor = state[0];
    const std::vector<int> rest(state.begin() + 1, state.end());
    BigInt total = signed_families(rest);
    // (length, multiplicity) runs over the remaining cycles
    std::vector<std::pair<int, int>> runs;
    for (size_t i = 0; i < rest.size();) {
      size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      runs.emplace_back(rest[i], static_cast<int>(j - i));
      i = j;
    }
    std::vector<int> take(runs.size(), 0);
    for (int l = 1; l <= anchor; ++l) {
      if (anchor % l != 0) continue;
      const int need = d * l - anchor;
      if (need < 0) continue;
      complete_orbit(l, need, 0, 0, 1, runs, take, rest, total);
    }
    memo.emplace(state, total);
    return total;
  }

 private:
  void complete_orbit(int l, int need, size_t idx, int extra, BigInt ways,
                      const std::vector<std::pair<int, int>>& runs, std::vector<int>& take,
                      const std::vector<int>& rest, BigInt& total) {
    if (need == 0) {
      std::map<int, int> used;
      for (size_t a = 0; a < runs.size(); ++a) used[runs[a].first] += take[a];
      std::vector<int> next;
      next.reserve(rest.size());
      for (int v : rest) {
        auto it = used.find(v);
        if (it != used.end() && it->second > 0) {
          --it->second;
          continue;
        }
        next.push_back(v);
      }
      BigInt realizations = ways;
      for (int e = 0; e < extra; ++e) realizations *= l;
      total -= realizations * signed_families(next);
      return;
    }
    if (idx >= runs.size()) return;
    const auto [len, avail] = runs[idx];
    const bool usable = len % l == 0 && len <= need;
    const int cap = usable ? std::min(avail, need / len) : 0;
    for (int c = 0; c <= cap; ++c) {
      BigInt w = ways;
      for (int x = 0; x < c; ++x) w = w * (avail - x) / (x + 1);  // binomial(avail, c)
      take[idx] = c;
      complete_orbit(l, need - c * len, idx + 1, extra + c, w, runs, take, rest, total);
      take[idx] = 0;
    }
  }
};

}  // namespace

VirtualRep equivariant_euler_rep(int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("equivariant_euler_rep: need d >= 1, n >= 0");
  BlockOrbitCounter counter{d, {}};
  const CharacterTable& ct = character_table(n);
  ClassFunction f;
  f.n = n;
  f.values.reserve(ct.partitions.size());
  for (const auto& t : ct.partitions) {
    const std::vector<int> state(t.parts().begin(), t.parts().end());
    f.values.push_back(Rational(-counter.signed_families(state)));
  }
  return decompose(f);
}

}  // namespace matchc
