#include "matchc/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace matchc {

BigInt class_size(const CycleType& t) {
  BigInt denom = 1;
  int prev = -1, mult = 0;
  for (int part : t.parts()) {
    if (part == prev) {
      ++mult;
    } else {
      prev = part;
      mult = 1;
    }
    denom *= part;   // one factor of the cycle length per cycle
    denom *= mult;   // builds up m_i! incrementally
  }
  return factorial(t.size()) / denom;
}

std::vector<int> class_representative(const CycleType& t) {
  std::vector<int> perm(static_cast<size_t>(t.size()));
  int next = 1;
  for (int len : t.parts()) {
    for (int i = 0; i < len - 1; ++i) perm[static_cast<size_t>(next + i - 1)] = next + i + 1;
    perm[static_cast<size_t>(next + len - 2)] = next;
    next += len;
  }
  return perm;
}

namespace {

// dim_sn as int64, cached per partition size (used as the base case of the
// Murnaghan-Nakayama recursion once only fixed points remain).
const std::map<Partition, long long>& dims_of_size(int n) {
  static std::mutex mu;
  static std::map<int, std::map<Partition, long long>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::map<Partition, long long> dims;
    for (const auto& lam : enumerate_partitions(n))
      dims[lam] = dim_sn(lam).convert_to<long long>();
    it = cache.emplace(n, std::move(dims)).first;
  }
  return it->second;
}

// Beta numbers of lam in a frame of its own row count: strictly decreasing.
std::vector<int> beta_numbers(const Partition& lam) {
  const int r = lam.rows();
  std::vector<int> b(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) b[static_cast<size_t>(i)] = lam.part(i) + (r - 1 - i);
  return b;
}

Partition partition_from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<int>());
  const int r = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < r; ++i) {
    int v = b[static_cast<size_t>(i)] - (r - 1 - i);
    if (v > 0) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

struct MnKey {
  Partition mu;
  int idx;
  bool operator<(const MnKey& o) const {
    if (idx != o.idx) return idx < o.idx;
    return mu < o.mu;
  }
};

// Remove rim hooks of length cycles[idx] from mu in every possible way.
// In beta-number language a rim hook of length L is a beta value b with
// b - L >= 0 not already present; the leg length is the number of beta values
// strictly between b - L and b.
long long mn_rec(const Partition& mu, const std::vector<int>& cycles, size_t idx,
                 std::map<MnKey, long long>& memo) {
  if (idx == cycles.size()) return dims_of_size(mu.size()).at(mu);
  MnKey key{mu, static_cast<int>(idx)};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const int L = cycles[idx];
  long long total = 0;
  const std::vector<int> beta = beta_numbers(mu);
  for (size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - L;
    if (target < 0) continue;
    bool occupied = false;
    int leg = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++leg;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    const long long sub = mn_rec(partition_from_beta(std::move(nb)), cycles, idx + 1, memo);
    total += (leg % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::vector<int> big_cycles(const CycleType& t) {
  std::vector<int> c;
  for (int part : t.parts())
    if (part >= 2) c.push_back(part);
  return c;  // already descending
}

}  // namespace

long long mn_character(const Partition& lam, const CycleType& t) {
  if (lam.size() != t.size())
    throw std::invalid_argument("mn_character: |lam| != |t|");
  std::map<MnKey, long long> memo;
  return mn_rec(lam, big_cycles(t), 0, memo);
}

int CharacterTable::index_of(const Partition& p) const {
  auto it = std::lower_bound(partitions.begin(), partitions.end(), p);
  if (it == partitions.end() || !(*it == p))
    throw std::invalid_argument("CharacterTable: unknown partition " + p.to_string());
  return static_cast<int>(it - partitions.begin());
}

const CharacterTable& character_table(int n, int cap) {
  if (n < 0) throw std::invalid_argument("character_table: n < 0");
  if (n > cap) throw std::invalid_argument("character_table: n exceeds cap");
  static std::mutex mu;
  static std::map<int, CharacterTable> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  CharacterTable tab;
  tab.n = n;
  tab.partitions = enumerate_partitions(n);
  const size_t k = tab.partitions.size();
  tab.class_sizes.reserve(k);
  for (const auto& t : tab.partitions) tab.class_sizes.push_back(class_size(t));
  tab.chi.assign(k, std::vector<long long>(k, 0));
  for (size_t col = 0; col < k; ++col) {
    // one shared memo per column: the recursion states only depend on the
    // cycle type, so all rows of the column reuse each other's subproblems
    std::map<MnKey, long long> memo;
    const std::vector<int> cycles = big_cycles(tab.partitions[col]);
    for (size_t row = 0; row < k; ++row)
      tab.chi[row][col] = mn_rec(tab.partitions[row], cycles, 0, memo);
  }
  return cache.emplace(n, std::move(tab)).first->second;
}

ClassFunction to_class_function(const VirtualRep& x) {
  const CharacterTable& tab = character_table(x.n());
  ClassFunction f;
  f.n = x.n();
  f.values.assign(tab.partitions.size(), Rational(0));
  for (const auto& [lam, c] : x.terms()) {
    const int row = tab.index_of(lam);
    for (size_t col = 0; col < tab.partitions.size(); ++col)
      f.values[col] += Rational(c) * tab.chi[static_cast<size_t>(row)][col];
  }
  return f;
}

VirtualRep decompose(const ClassFunction& f) {
  const CharacterTable& tab = character_table(f.n);
  if (f.values.size() != tab.partitions.size())
    throw std::invalid_argument("decompose: class function has wrong length");
  const BigInt order = factorial(f.n);
  VirtualRep out(f.n);
  for (size_t row = 0; row < tab.partitions.size(); ++row) {
    Rational ip = 0;
    for (size_t col = 0; col < tab.partitions.size(); ++col) {
      if (f.values[col] == 0) continue;
      ip += Rational(tab.class_sizes[col]) * f.values[col] * tab.chi[row][col];
    }
    ip /= Rational(order);
    if (denominator(ip) != 1)
      throw std::runtime_error("decompose: non-integral multiplicity at " +
                               tab.partitions[row].to_string());
    const BigInt num = numerator(ip);
    if (num != 0) out.add_term(tab.partitions[row], num.convert_to<long long>());
  }
  return out;
}

}  // namespace matchc
