#include "matchc/koszul.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "matchc/rank.hpp"

namespace matchc {

namespace {

// dim Sym^k(C^m) = C(k+m-1, m-1); zero for k < 0.
BigInt sym_dim(long long k, int m) {
  if (k < 0) return 0;
  return binomial(k + m - 1, m - 1);
}

// All degree-k monomials in m variables as exponent vectors, lex order.
std::vector<std::vector<int>> monomials(long long k, int m) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  std::vector<int> cur(static_cast<size_t>(m), 0);
  auto rec = [&](auto&& self, int pos, long long rem) -> void {
    if (pos == m - 1) {
      cur[static_cast<size_t>(pos)] = static_cast<int>(rem);
      out.push_back(cur);
      return;
    }
    for (long long e = rem; e >= 0; --e) {
      cur[static_cast<size_t>(pos)] = static_cast<int>(e);
      self(self, pos + 1, rem - e);
    }
  };
  if (m == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, k);
  return out;
}

// All strictly increasing k-tuples from {0,...,n-1}, lex order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<size_t>(k));
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n - (k - pos); ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

struct TermBasis {
  // Basis of Wedge^k U (x) Sym^e V, flattened as wedge_index * sym_count +
  // sym_index. Empty when the term vanishes.
  std::vector<std::vector<int>> wedges;
  std::vector<std::vector<int>> syms;
  std::map<std::vector<int>, long long> wedge_index;
  std::map<std::vector<int>, long long> sym_index;
  long long dim = 0;
};

TermBasis term_basis(int dim_u, int k, long long e, int m) {
  TermBasis t;
  if (k < 0 || k > dim_u || e < 0) return t;
  t.wedges = subsets(dim_u, k);
  t.syms = monomials(e, m);
  for (size_t i = 0; i < t.wedges.size(); ++i)
    t.wedge_index[t.wedges[i]] = static_cast<long long>(i);
  for (size_t i = 0; i < t.syms.size(); ++i)
    t.sym_index[t.syms[i]] = static_cast<long long>(i);
  t.dim = static_cast<long long>(t.wedges.size()) * static_cast<long long>(t.syms.size());
  return t;
}

// Koszul differential Wedge^k U (x) Sym^e -> Wedge^{k-1} U (x) Sym^{e+d}:
// contract one wedge factor into the symmetric part by multiplication.
SparseIntMatrix koszul_map(const TermBasis& src, const TermBasis& dst,
                           const std::vector<std::vector<int>>& u_basis) {
  SparseIntMatrix a(dst.dim, src.dim);
  if (src.dim == 0 || dst.dim == 0) return a;
  const long long dst_syms = static_cast<long long>(dst.syms.size());
  const int m = static_cast<int>(u_basis.empty() ? 0 : u_basis[0].size());
  std::vector<int> rest;
  std::vector<int> prod(static_cast<size_t>(m));
  for (size_t wi = 0; wi < src.wedges.size(); ++wi) {
    const std::vector<int>& s = src.wedges[wi];
    for (size_t k = 0; k < s.size(); ++k) {
      rest.assign(s.begin(), s.end());
      rest.erase(rest.begin() + static_cast<long long>(k));
      const long long dst_w = dst.wedge_index.at(rest);
      const long long sign = (k % 2 == 0) ? 1 : -1;
      const std::vector<int>& u = u_basis[static_cast<size_t>(s[k])];
      for (size_t si = 0; si < src.syms.size(); ++si) {
        for (int v = 0; v < m; ++v) prod[static_cast<size_t>(v)] = src.syms[si][static_cast<size_t>(v)] + u[static_cast<size_t>(v)];
        const long long dst_s = dst.sym_index.at(prod);
        a.add_entry(dst_w * dst_syms + dst_s,
                    static_cast<long long>(wi) * static_cast<long long>(src.syms.size()) + static_cast<long long>(si),
                    sign);
      }
    }
  }
  a.normalize();
  return a;
}

void validate_strand_args(int d, int b, int m) {
  if (d < 1 || m < 1 || b < 0)
    throw std::invalid_argument("strand parameters require d >= 1, m >= 1, b >= 0");
}

const std::set<std::string>& allowed_provenance() {
  static const std::set<std::string> s = {"paper-M2", "recomputed", "external-theorem"};
  return s;
}

}  // namespace

HData h_vector(int d, int b, int m) {
  validate_strand_args(d, b, m);
  HData hd;
  hd.d = d;
  hd.b = b;
  hd.m = m;
  hd.codim = binomial(m - 1 + d, d) - m;
  std::vector<BigInt> c(static_cast<size_t>(m) + 3, BigInt(0));
  for (int j = 0; j <= m + 2; ++j) {
    BigInt v = 0;
    for (int i = 0; i <= std::min(j, m); ++i) {
      BigInt t = binomial(m, i) * sym_dim(static_cast<long long>(j - i) * d + b, m);
      if (i % 2 == 0) v += t; else v -= t;
    }
    c[static_cast<size_t>(j)] = v;
  }
  if (c[static_cast<size_t>(m) + 1] != 0 || c[static_cast<size_t>(m) + 2] != 0)
    throw std::logic_error("strand Hilbert numerator does not terminate at degree m");
  while (!c.empty() && c.back() == 0) c.pop_back();
  for (const BigInt& v : c)
    if (v < 0) throw std::logic_error("strand Hilbert numerator has a negative coefficient");
  hd.h = std::move(c);
  return hd;
}

BigInt strand_euler(const HData& hd, int mdeg) {
  if (mdeg < 0) throw std::invalid_argument("strand_euler: negative degree");
  const long long codim = hd.codim.convert_to<long long>();
  BigInt s = 0;
  for (size_t j = 0; j < hd.h.size(); ++j) {
    const long long k = mdeg - static_cast<long long>(j);
    BigInt t = hd.h[j] * binomial(codim, k);
    if (k % 2 == 0) s += t; else s -= t;
  }
  return s;
}

long long koszul_dim_direct(int m, int d, int b, int p, int q, long long budget) {
  validate_strand_args(d, b, m);
  if (p < 0) throw std::invalid_argument("koszul_dim_direct: p must be >= 0");
  if (budget < 1) throw std::invalid_argument("koszul_dim_direct: budget must be positive");

  const BigInt dim_u_big = sym_dim(d, m);
  const long long qd = static_cast<long long>(q) * d;
  const BigInt dim_left = binomial(dim_u_big.convert_to<long long>(), p + 1) * sym_dim(qd - d + b, m);
  const BigInt dim_mid = binomial(dim_u_big.convert_to<long long>(), p) * sym_dim(qd + b, m);
  const BigInt dim_right = binomial(dim_u_big.convert_to<long long>(), p - 1) * sym_dim(qd + d + b, m);
  if (dim_mid == 0) return 0;
  if (dim_left > budget || dim_mid > budget || dim_right > budget)
    throw std::length_error("koszul_dim_direct: term dimension exceeds budget; infeasible at desk scale");

  const int dim_u = static_cast<int>(dim_u_big.convert_to<long long>());
  const std::vector<std::vector<int>> u_basis = monomials(d, m);
  const TermBasis left = term_basis(dim_u, p + 1, qd - d + b, m);
  const TermBasis mid = term_basis(dim_u, p, qd + b, m);
  const TermBasis right = term_basis(dim_u, p - 1, qd + d + b, m);
  if (mid.dim != dim_mid.convert_to<long long>() ||
      left.dim != dim_left.convert_to<long long>() ||
      right.dim != dim_right.convert_to<long long>())
    throw std::logic_error("koszul_dim_direct: enumerated basis size disagrees with closed form");

  RankEngine engine;
  long long rank_left = 0;
  long long rank_right = 0;
  if (left.dim > 0) {
    SparseIntMatrix a = koszul_map(left, mid, u_basis);
    rank_left = engine.rank(a);
  }
  if (right.dim > 0) {
    SparseIntMatrix a = koszul_map(mid, right, u_basis);
    rank_right = engine.rank(a);
  }
  const long long dim = mid.dim - rank_left - rank_right;
  if (dim < 0)
    throw std::logic_error("koszul_dim_direct: negative homology dimension (ranks overlap)");
  return dim;
}

BigInt trans_dim_check(const VirtualRep& x, int m) {
  if (m < 1) throw std::invalid_argument("trans_dim_check: m must be >= 1");
  return vr_dim_gl(truncate_rows(x, m), m);
}

FactsRegistry FactsRegistry::defaults() {
  FactsRegistry r;
  r.add({kFactK60, 14003, "paper-M2",
         "imported from the original Macaulay2 computation: dim K_{6,0} of the "
         "twist-2 strand module over Sym^3 C^4"});
  r.add({kFactK70, 5400, "paper-M2",
         "imported from the original Macaulay2 computation: dim K_{7,0} of the "
         "twist-2 strand module over Sym^3 C^4"});
  r.add({kFactVeroneseP3N6, 1, "external-theorem",
         "Ottaviani-Paoletti, Syzygies of Veronese embeddings: the third "
         "Veronese embedding of P^3 satisfies property N_6"});
  r.add({kFactNonvanishingKp2, 7, "external-theorem",
         "Ottaviani-Paoletti: K_{p,2} != 0 at p = 3d-2 for cubic Veronese, "
         "dim V >= 3 (sharpness; reported, not consumed)"});
  r.add({kFactRowsH4C20, 1, "paper-M2",
         "imported from the original Macaulay2 computation: degree-4 homology "
         "of the triple matching complex on 20 points has no constituent with "
         "more than 4 rows"});
  r.add({kFactRowsH5C23, 1, "paper-M2",
         "imported from the original Macaulay2 computation: degree-5 homology "
         "of the triple matching complex on 23 points has no constituent with "
         "more than 4 rows"});
  return r;
}

void FactsRegistry::add(Fact f) {
  if (f.name.empty()) throw std::invalid_argument("fact name must be non-empty");
  if (allowed_provenance().count(f.provenance) == 0)
    throw std::invalid_argument("fact '" + f.name + "' has unknown provenance '" + f.provenance +
                                "' (allowed: paper-M2, recomputed, external-theorem)");
  facts_[f.name] = std::move(f);
}

bool FactsRegistry::contains(const std::string& name) const {
  return facts_.count(name) > 0;
}

const Fact& FactsRegistry::require(const std::string& name) const {
  auto it = facts_.find(name);
  if (it == facts_.end())
    throw std::out_of_range("required fact '" + name + "' is not in the registry");
  return it->second;
}

FactsRegistry FactsRegistry::load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open facts file: " + path);
  nlohmann::json j;
  in >> j;
  if (!j.is_array()) throw std::runtime_error("facts file must contain a JSON array: " + path);
  FactsRegistry r;
  for (const auto& e : j) {
    Fact f;
    f.name = e.at("name").get<std::string>();
    f.value = e.at("value").get<long long>();
    f.provenance = e.at("provenance").get<std::string>();
    f.citation = e.value("citation", std::string());
    r.add(std::move(f));
  }
  return r;
}

void FactsRegistry::save_json(const std::string& path) const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [name, f] : facts_) {
    nlohmann::ordered_json e;
    e["name"] = f.name;
    e["value"] = f.value;
    e["provenance"] = f.provenance;
    e["citation"] = f.citation;
    arr.push_back(std::move(e));
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write facts file: " + path);
  out << arr.dump(2) << "\n";
}

}  // namespace matchc
