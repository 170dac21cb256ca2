#include "matchc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace matchc {

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (size_ != o.size_) return size_ <=> o.size_;
  // Reverse-lexicographic canonical order: lexicographically larger part
  // sequences come first.
  const size_t k = std::min(parts_.size(), o.parts_.size());
  for (size_t i = 0; i < k; ++i)
    if (parts_[i] != o.parts_[i]) return o.parts_[i] <=> parts_[i];
  return o.parts_.size() <=> parts_.size();
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

namespace {

void enumerate_rec(int remaining, int max_part, int rows_left,
                   std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    enumerate_rec(remaining - p, p, rows_left - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int max_rows) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_rec(n, n == 0 ? 1 : n, max_rows == 0 ? n : max_rows, acc, out);
  if (n == 0) out.assign(1, Partition{});
  return out;  // descending first parts = canonical reverse-lex order
}

std::vector<std::vector<int>> hook_lengths(const Partition& lam) {
  const auto& p = lam.parts();
  const Partition conj = conjugate(lam);
  std::vector<std::vector<int>> h(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    h[i].resize(static_cast<size_t>(p[i]));
    for (int j = 0; j < p[i]; ++j) {
      const int arm = p[i] - j - 1;
      const int leg = conj.part(j) - static_cast<int>(i) - 1;
      h[i][static_cast<size_t>(j)] = arm + leg + 1;
    }
  }
  return h;
}

BigInt dim_sn(const Partition& lam) {
  BigInt num = factorial(lam.size());
  for (const auto& row : hook_lengths(lam))
    for (int h : row) num /= h;
  return num;
}

BigInt dim_gl(const Partition& lam, int m) {
  if (lam.rows() > m) return 0;
  BigInt num = 1, den = 1;
  const auto hooks = hook_lengths(lam);
  for (int i = 0; i < lam.rows(); ++i)
    for (int j = 0; j < lam.part(i); ++j) {
      num *= m + j - i;  // m + content
      den *= hooks[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  return num / den;
}

Partition conjugate(const Partition& lam) {
  if (lam.empty()) return Partition{};
  std::vector<int> c(static_cast<size_t>(lam.part(0)), 0);
  for (int i = 0; i < lam.rows(); ++i)
    for (int j = 0; j < lam.part(i); ++j) ++c[static_cast<size_t>(j)];
  return Partition(std::move(c));
}

std::vector<Partition> remove_box(const Partition& lam) {
  std::vector<Partition> out;
  for (int i = 0; i < lam.rows(); ++i) {
    if (lam.part(i) == lam.part(i + 1)) continue;  // not a corner
    std::vector<int> p = lam.parts();
    if (--p[static_cast<size_t>(i)] == 0) p.pop_back();
    out.emplace_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> add_box(const Partition& lam) {
  std::vector<Partition> out;
  for (int i = 0; i <= lam.rows(); ++i) {
    if (i > 0 && lam.part(i) == lam.part(i - 1)) continue;  // would break shape
    std::vector<int> p = lam.parts();
    if (i == lam.rows())
      p.push_back(1);
    else
      ++p[static_cast<size_t>(i)];
    out.emplace_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Distribute a horizontal strip: row i of the result may grow from lam_i up to
// lam_{i-1} (so no added box sits on top of another added box in its column).
void strip_rec(const Partition& lam, int row, int remaining,
               std::vector<int>& acc, std::vector<Partition>& out) {
  if (row > lam.rows()) {
    if (remaining == 0) {
      std::vector<int> p = acc;
      while (!p.empty() && p.back() == 0) p.pop_back();
      out.emplace_back(std::move(p));
    }
    return;
  }
  const int lo = lam.part(row);
  const int hi = row == 0 ? lam.part(0) + remaining
                          : std::min(lam.part(row - 1), lo + remaining);
  for (int v = lo; v <= hi; ++v) {
    acc.push_back(v);
    strip_rec(lam, row + 1, remaining - (v - lo), acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> add_horizontal_strips(const Partition& lam, int k) {
  if (k < 0) throw std::invalid_argument("add_horizontal_strips: k < 0");
  if (k == 0) return {lam};
  std::vector<Partition> out;
  std::vector<int> acc;
  strip_rec(lam, 0, k, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace matchc
