#include "matchc/rank.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace matchc {

namespace {

struct Barrett {
  std::uint64_t p;
  std::uint64_t magic;  // floor((2^64 - 1) / p)
  explicit Barrett(std::uint64_t prime) : p(prime), magic(~0ULL / prime) {}
  std::uint64_t reduce(std::uint64_t a) const {
    auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * magic) >> 64);
    std::uint64_t r = a - q * p;
    while (r >= p) r -= p;
    return r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
};

std::uint32_t pow_modp(std::uint64_t base, std::uint64_t exp, const Barrett& bar) {
  std::uint64_t acc = 1 % bar.p;
  base %= bar.p;
  while (exp > 0) {
    if (exp & 1) acc = bar.mul(acc, base);
    base = bar.mul(base, base);
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t inv_modp(std::uint32_t a, const Barrett& bar) {
  return pow_modp(a, bar.p - 2, bar);  // prime modulus
}

std::uint32_t to_modp(long long v, std::uint64_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint32_t>(r);
}

// Shared skeleton for the two sparse eliminations: right-looking row updates
// with pivots chosen in the sparsest available column.
template <class Value, class Ops>
struct SparseElimination {
  using Entry = std::pair<int, Value>;  // (col, value)
  const Ops& ops;
  long long n_rows, n_cols;
  std::vector<std::vector<Entry>> rows;
  std::vector<char> row_alive, col_alive;
  std::vector<int> col_count;
  std::vector<std::vector<int>> col_rows;  // superset of rows touching a column

  SparseElimination(const SparseIntMatrix& a, const Ops& o)
      : ops(o),
        n_rows(a.rows),
        n_cols(a.cols),
        rows(static_cast<size_t>(a.rows)),
        row_alive(static_cast<size_t>(a.rows), 1),
        col_alive(static_cast<size_t>(a.cols), 1),
        col_count(static_cast<size_t>(a.cols), 0),
        col_rows(static_cast<size_t>(a.cols)) {
    for (long long c = 0; c < a.cols; ++c)
      for (const auto& [r, v] : a.col_entries[static_cast<size_t>(c)]) {
        Value mv = ops.from_int(v);
        if (ops.is_zero(mv)) continue;
        rows[static_cast<size_t>(r)].push_back({static_cast<int>(c), std::move(mv)});
        ++col_count[static_cast<size_t>(c)];
        col_rows[static_cast<size_t>(c)].push_back(static_cast<int>(r));
      }
    for (auto& row : rows)
      std::sort(row.begin(), row.end(),
                [](const Entry& x, const Entry& y) { return x.first < y.first; });
  }

  const Value* row_value(int r, int c) const {
    const auto& row = rows[static_cast<size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it == row.end() || it->first != c) return nullptr;
    return &it->second;
  }

  // row_r <- row_r * a - row_p * b, updating column bookkeeping
  void combine_rows(int r, int pr, const Value& a, const Value& b) {
    const auto& x = rows[static_cast<size_t>(r)];
    const auto& y = rows[static_cast<size_t>(pr)];
    std::vector<Entry> out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back({x[i].first, ops.mul(x[i].second, a)});
        if (ops.is_zero(out.back().second)) {  // only possible mod p when a == 0
          --col_count[static_cast<size_t>(out.back().first)];
          out.pop_back();
        }
        ++i;
      } else if (i == x.size() || y[j].first < x[i].first) {
        Value nv = ops.neg(ops.mul(y[j].second, b));
        if (!ops.is_zero(nv)) {  // fill-in
          ++col_count[static_cast<size_t>(y[j].first)];
          col_rows[static_cast<size_t>(y[j].first)].push_back(r);
          out.push_back({y[j].first, std::move(nv)});
        }
        ++j;
      } else {
        Value nv = ops.sub(ops.mul(x[i].second, a), ops.mul(y[j].second, b));
        if (ops.is_zero(nv)) {
          --col_count[static_cast<size_t>(x[i].first)];
        } else {
          out.push_back({x[i].first, std::move(nv)});
        }
        ++i;
        ++j;
      }
    }
    ops.normalize_row(out);
    rows[static_cast<size_t>(r)] = std::move(out);
  }

  PivotStructure run() {
    PivotStructure res;
    for (;;) {
      int best_c = -1, best_count = std::numeric_limits<int>::max();
      for (long long c = 0; c < n_cols; ++c)
        if (col_alive[static_cast<size_t>(c)] && col_count[static_cast<size_t>(c)] > 0 &&
            col_count[static_cast<size_t>(c)] < best_count) {
          best_count = col_count[static_cast<size_t>(c)];
          best_c = static_cast<int>(c);
          if (best_count == 1) break;
        }
      if (best_c < 0) break;

      // validate the candidate list in place and choose the pivot row
      auto& cand = col_rows[static_cast<size_t>(best_c)];
      int pr = -1;
      std::pair<int, size_t> best_score{std::numeric_limits<int>::max(),
                                        std::numeric_limits<size_t>::max()};
      size_t w = 0;
      for (int r : cand) {
        if (!row_alive[static_cast<size_t>(r)]) continue;
        const Value* v = row_value(r, best_c);
        if (v == nullptr) continue;
        cand[w++] = r;
        std::pair<int, size_t> score{ops.pivot_penalty(*v), rows[static_cast<size_t>(r)].size()};
        if (score < best_score || (score == best_score && (pr < 0 || r < pr))) {
          best_score = score;
          pr = r;
        }
      }
      cand.resize(w);
      if (pr < 0) {  // stale counts only; column is actually empty
        col_alive[static_cast<size_t>(best_c)] = 0;
        col_count[static_cast<size_t>(best_c)] = 0;
        continue;
      }

      const Value pv = *row_value(pr, best_c);
      for (int r : std::vector<int>(cand.begin(), cand.end())) {
        if (r == pr || !row_alive[static_cast<size_t>(r)]) continue;
        const Value* rv = row_value(r, best_c);
        if (rv == nullptr) continue;
        auto [a, b] = ops.elimination_pair(pv, *rv);
        combine_rows(r, pr, a, b);
      }

      res.pivot_rows.push_back(pr);
      res.pivot_cols.push_back(best_c);
      for (const auto& [c, v] : rows[static_cast<size_t>(pr)])
        --col_count[static_cast<size_t>(c)];
      row_alive[static_cast<size_t>(pr)] = 0;
      col_alive[static_cast<size_t>(best_c)] = 0;
    }
    res.rank = static_cast<long long>(res.pivot_rows.size());
    return res;
  }
};

struct ModpOps {
  Barrett bar;
  explicit ModpOps(std::uint32_t p) : bar(p) {}
  using V = std::uint32_t;
  V from_int(long long v) const { return to_modp(v, bar.p); }
  bool is_zero(V v) const { return v == 0; }
  V mul(V a, V b) const { return static_cast<V>(bar.mul(a, b)); }
  V sub(V a, V b) const { return a >= b ? a - b : static_cast<V>(a + bar.p - b); }
  V neg(V a) const { return a == 0 ? 0 : static_cast<V>(bar.p - a); }
  int pivot_penalty(V) const { return 0; }
  void normalize_row(std::vector<std::pair<int, V>>&) const {}
  // eliminate r via row_r <- row_r * 1 - row_p * (rv / pv)
  std::pair<V, V> elimination_pair(V pv, V rv) const {
    return {1u, static_cast<V>(bar.mul(rv, inv_modp(pv, bar)))};
  }
};

struct ExactOps {
  using V = BigInt;
  V from_int(long long v) const { return BigInt(v); }
  bool is_zero(const V& v) const { return v.is_zero(); }
  V mul(const V& a, const V& b) const { return a * b; }
  V sub(const V& a, const V& b) const { return a - b; }
  V neg(const V& a) const { return -a; }
  int pivot_penalty(const V& v) const { return (v == 1 || v == -1) ? 0 : 1; }
  void normalize_row(std::vector<std::pair<int, V>>& row) const {
    if (row.empty()) return;
    BigInt g = 0;
    for (const auto& [c, v] : row) {
      g = boost::multiprecision::gcd(g, v);
      if (g == 1) return;
    }
    for (auto& [c, v] : row) v /= g;
  }
  // cross-multiplication keeps entries integral: row_r * pv - row_p * rv
  std::pair<V, V> elimination_pair(const V& pv, const V& rv) const { return {pv, rv}; }
};

}  // namespace

void SparseExactMatrix::set(long long r, long long c, const Rational& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::out_of_range("SparseExactMatrix::set: index out of range");
  if (v == 0)
    entries.erase({r, c});
  else
    entries[{r, c}] = v;
}

void SparseExactMatrix::add(long long r, long long c, const Rational& v) {
  set(r, c, get(r, c) + v);
}

Rational SparseExactMatrix::get(long long r, long long c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Rational(0) : it->second;
}

SparseExactMatrix multiply(const SparseExactMatrix& a, const SparseExactMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: dimension mismatch");
  // group a's entries by column for the middle contraction
  std::vector<std::vector<std::pair<long long, Rational>>> a_by_col(
      static_cast<size_t>(a.cols));
  for (const auto& [rc, v] : a.entries) a_by_col[static_cast<size_t>(rc.second)].push_back({rc.first, v});
  SparseExactMatrix out(a.rows, b.cols);
  for (const auto& [rc, bv] : b.entries) {
    const auto& [k, j] = rc;
    for (const auto& [i, av] : a_by_col[static_cast<size_t>(k)]) out.add(i, j, av * bv);
  }
  return out;
}

bool is_zero(const SparseExactMatrix& m) { return m.entries.empty(); }

void SparseIntMatrix::add_entry(long long r, long long c, long long v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::out_of_range("SparseIntMatrix::add_entry: index out of range");
  col_entries[static_cast<size_t>(c)].push_back({r, v});
}

void SparseIntMatrix::normalize() {
  for (auto& col : col_entries) {
    std::sort(col.begin(), col.end());
    std::vector<std::pair<long long, long long>> merged;
    for (const auto& [r, v] : col) {
      if (!merged.empty() && merged.back().first == r)
        merged.back().second += v;
      else
        merged.push_back({r, v});
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    col = std::move(merged);
  }
}

long long SparseIntMatrix::nnz() const {
  long long total = 0;
  for (const auto& col : col_entries) total += static_cast<long long>(col.size());
  return total;
}

SparseIntMatrix SparseIntMatrix::from_exact(const SparseExactMatrix& m) {
  SparseIntMatrix out(m.rows, m.cols);
  std::vector<BigInt> denom(static_cast<size_t>(m.cols), 1);
  for (const auto& [rc, v] : m.entries) {
    auto& d = denom[static_cast<size_t>(rc.second)];
    d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(v));
  }
  for (const auto& [rc, v] : m.entries) {
    BigInt scaled = boost::multiprecision::numerator(v) *
                    (denom[static_cast<size_t>(rc.second)] / boost::multiprecision::denominator(v));
    if (scaled > std::numeric_limits<long long>::max() ||
        scaled < std::numeric_limits<long long>::min())
      throw std::overflow_error("from_exact: scaled entry exceeds 64 bits");
    out.add_entry(rc.first, rc.second, scaled.convert_to<long long>());
  }
  out.normalize();
  return out;
}

PivotStructure eliminate_modp(const SparseIntMatrix& a, std::uint32_t prime) {
  ModpOps ops(prime);
  SparseElimination<std::uint32_t, ModpOps> elim(a, ops);
  PivotStructure res = elim.run();
  res.prime = prime;
  return res;
}

long long rank_exact(const SparseIntMatrix& a) {
  ExactOps ops;
  SparseElimination<BigInt, ExactOps> elim(a, ops);
  return elim.run().rank;
}

namespace {

// Gathers the dense submatrix a[pivot_rows, pivot_cols] in row-major order.
template <class Mapper>
auto gather_submatrix(const SparseIntMatrix& a, const std::vector<long long>& pivot_rows,
                      const std::vector<long long>& pivot_cols, Mapper map_value) {
  const size_t n = pivot_rows.size();
  if (n != pivot_cols.size())
    throw std::invalid_argument("gather_submatrix: pivot lists differ in length");
  std::vector<long long> pos(static_cast<size_t>(a.rows), -1);
  for (size_t i = 0; i < n; ++i) pos[static_cast<size_t>(pivot_rows[i])] = static_cast<long long>(i);
  std::vector<decltype(map_value(0LL))> m(n * n);
  for (size_t k = 0; k < n; ++k)
    for (const auto& [r, v] : a.col_entries[static_cast<size_t>(pivot_cols[k])]) {
      long long i = pos[static_cast<size_t>(r)];
      if (i >= 0) m[static_cast<size_t>(i) * n + k] = map_value(v);
    }
  return m;
}

}  // namespace

std::vector<std::uint32_t> dense_inverse_modp(const SparseIntMatrix& a,
                                              const std::vector<long long>& pivot_rows,
                                              const std::vector<long long>& pivot_cols,
                                              std::uint32_t prime) {
  const Barrett bar(prime);
  const size_t n = pivot_rows.size();
  auto m = gather_submatrix(a, pivot_rows, pivot_cols,
                            [&](long long v) { return to_modp(v, prime); });
  // augmented [m | I], flat rows of width 2n
  std::vector<std::uint32_t> w(n * 2 * n, 0);
  for (size_t i = 0; i < n; ++i) {
    std::copy(m.begin() + static_cast<std::ptrdiff_t>(i * n),
              m.begin() + static_cast<std::ptrdiff_t>((i + 1) * n),
              w.begin() + static_cast<std::ptrdiff_t>(i * 2 * n));
    w[i * 2 * n + n + i] = 1;
  }
  const size_t width = 2 * n;
  for (size_t k = 0; k < n; ++k) {
    size_t pr = k;
    while (pr < n && w[pr * width + k] == 0) ++pr;
    if (pr == n) throw std::logic_error("dense_inverse_modp: singular pivot submatrix");
    if (pr != k)
      std::swap_ranges(w.begin() + static_cast<std::ptrdiff_t>(pr * width),
                       w.begin() + static_cast<std::ptrdiff_t>((pr + 1) * width),
                       w.begin() + static_cast<std::ptrdiff_t>(k * width));
    std::uint32_t inv = inv_modp(w[k * width + k], bar);
    std::uint32_t* rowk = &w[k * width];
    for (size_t j = k; j < width; ++j) rowk[j] = static_cast<std::uint32_t>(bar.mul(rowk[j], inv));
    for (size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      std::uint64_t f = w[r * width + k];
      if (f == 0) continue;
      std::uint64_t fneg = prime - f;
      std::uint32_t* rowr = &w[r * width];
      for (size_t j = k; j < width; ++j)
        rowr[j] = static_cast<std::uint32_t>(bar.reduce(rowr[j] + fneg * rowk[j]));
    }
  }
  std::vector<std::uint32_t> inv(n * n);
  for (size_t i = 0; i < n; ++i)
    std::copy(w.begin() + static_cast<std::ptrdiff_t>(i * width + n),
              w.begin() + static_cast<std::ptrdiff_t>(i * width + width),
              inv.begin() + static_cast<std::ptrdiff_t>(i * n));
  return inv;
}

std::vector<Rational> dense_inverse_exact(const SparseIntMatrix& a,
                                          const std::vector<long long>& pivot_rows,
                                          const std::vector<long long>& pivot_cols) {
  const size_t n = pivot_rows.size();
  auto m = gather_submatrix(a, pivot_rows, pivot_cols,
                            [](long long v) { return Rational(v); });
  std::vector<Rational> w(n * 2 * n, Rational(0));
  const size_t width = 2 * n;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) w[i * width + j] = m[i * n + j];
    w[i * width + n + i] = 1;
  }
  for (size_t k = 0; k < n; ++k) {
    size_t pr = k;
    while (pr < n && w[pr * width + k] == 0) ++pr;
    if (pr == n) throw std::logic_error("dense_inverse_exact: singular pivot submatrix");
    if (pr != k)
      std::swap_ranges(w.begin() + static_cast<std::ptrdiff_t>(pr * width),
                       w.begin() + static_cast<std::ptrdiff_t>((pr + 1) * width),
                       w.begin() + static_cast<std::ptrdiff_t>(k * width));
    Rational inv = 1 / w[k * width + k];
    for (size_t j = k; j < width; ++j) w[k * width + j] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      Rational f = w[r * width + k];
      if (f == 0) continue;
      for (size_t j = k; j < width; ++j) w[r * width + j] -= f * w[k * width + j];
    }
  }
  std::vector<Rational> inv(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i * n + j] = w[i * width + n + j];
  return inv;
}

RankEngine::RankEngine(RankStrategy strategy, std::uint64_t seed)
    : strategy_(strategy), rng_(seed) {}

long long RankEngine::rank(const SparseIntMatrix& a) {
  ++stats_.calls;
  if (strategy_ == RankStrategy::Exact) {
    ++stats_.certified;
    return rank_exact(a);
  }
  const long long r1 = eliminate_modp(a, kPrimeA).rank;
  const long long r2 = eliminate_modp(a, kPrimeB).rank;
  if (r1 != r2) {
    // a prime divided some pivot minor; the exact path settles it
    ++stats_.certified;
    return rank_exact(a);
  }
  maybe_certify(a, r1);
  return r1;
}

void RankEngine::maybe_certify(const SparseIntMatrix& a, long long claimed_rank) {
  const bool eligible = a.nnz() <= kCertifyNnzBudget;
  if (!eligible || std::uniform_real_distribution<double>(0.0, 1.0)(rng_) >= kCertifyFraction)
    return;
  ++stats_.certified;
  if (rank_exact(a) != claimed_rank)
    throw std::logic_error(
        "RankEngine: modular rank failed exact certification; two primes undercounted "
        "simultaneously");
}

}  // namespace matchc
