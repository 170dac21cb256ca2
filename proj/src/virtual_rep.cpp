#include "matchc/virtual_rep.hpp"

#include <stdexcept>

namespace matchc {

VirtualRep::VirtualRep(int n, std::initializer_list<std::pair<Partition, long long>> terms)
    : n_(n) {
  for (const auto& [lam, c] : terms) add_term(lam, c);
}

bool VirtualRep::effective() const {
  for (const auto& [lam, c] : mults_)
    if (c < 0) return false;
  return true;
}

long long VirtualRep::mult(const Partition& lam) const {
  auto it = mults_.find(lam);
  return it == mults_.end() ? 0 : it->second;
}

void VirtualRep::add_term(const Partition& lam, long long c) {
  if (c == 0) return;
  if (lam.size() != n_)
    throw std::invalid_argument("VirtualRep: partition of wrong size " + lam.to_string());
  auto [it, inserted] = mults_.try_emplace(lam, 0);
  it->second += c;
  if (it->second == 0) mults_.erase(it);
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && mults_.empty()) n_ = o.n_;  // allow default-constructed accumulators
  if (n_ != o.n_) throw std::invalid_argument("VirtualRep: size mismatch in +=");
  for (const auto& [lam, c] : o.mults_) add_term(lam, c);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && mults_.empty()) n_ = o.n_;
  if (n_ != o.n_) throw std::invalid_argument("VirtualRep: size mismatch in -=");
  for (const auto& [lam, c] : o.mults_) add_term(lam, -c);
  return *this;
}

VirtualRep& VirtualRep::operator*=(long long c) {
  if (c == 0) {
    mults_.clear();
    return *this;
  }
  for (auto& [lam, m] : mults_) m *= c;
  return *this;
}

std::string VirtualRep::to_string() const {
  if (mults_.empty()) return "0";
  std::string s;
  for (const auto& [lam, c] : mults_) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += lam.to_string();
  }
  return s;
}

VirtualRep vr_add(const VirtualRep& x, const VirtualRep& y) { return x + y; }
VirtualRep vr_sub(const VirtualRep& x, const VirtualRep& y) { return x - y; }

VirtualRep vr_min(const VirtualRep& x, const VirtualRep& y) {
  VirtualRep out(x.n());
  for (const auto& [lam, c] : x.terms()) {
    long long m = std::min(c, y.mult(lam));
    out.add_term(lam, m);
  }
  for (const auto& [lam, c] : y.terms())
    if (x.mult(lam) == 0) out.add_term(lam, std::min(c, 0LL));
  return out;
}

VirtualRep vr_max(const VirtualRep& x, const VirtualRep& y) {
  VirtualRep out(x.n());
  for (const auto& [lam, c] : x.terms()) out.add_term(lam, std::max(c, y.mult(lam)));
  for (const auto& [lam, c] : y.terms())
    if (x.mult(lam) == 0) out.add_term(lam, std::max(c, 0LL));
  return out;
}

bool vr_leq(const VirtualRep& x, const VirtualRep& y) {
  for (const auto& [lam, c] : x.terms())
    if (c > y.mult(lam)) return false;
  for (const auto& [lam, c] : y.terms())
    if (c < 0 && x.mult(lam) == 0) return false;
  return true;
}

VirtualRep vr_pos(const VirtualRep& x) {
  VirtualRep out(x.n());
  for (const auto& [lam, c] : x.terms())
    if (c > 0) out.add_term(lam, c);
  return out;
}

VirtualRep restrict_rep(const VirtualRep& x) {
  if (x.n() == 0) throw std::invalid_argument("restrict_rep: nothing below S_0");
  VirtualRep out(x.n() - 1);
  for (const auto& [lam, c] : x.terms())
    for (const auto& mu : remove_box(lam)) out.add_term(mu, c);
  return out;
}

VirtualRep induce_trivial_strip(const VirtualRep& x, int k) {
  VirtualRep out(x.n() + k);
  for (const auto& [lam, c] : x.terms())
    for (const auto& mu : add_horizontal_strips(lam, k)) out.add_term(mu, c);
  return out;
}

VirtualRep truncate_rows(const VirtualRep& x, int k) {
  VirtualRep out(x.n());
  for (const auto& [lam, c] : x.terms())
    if (lam.rows() <= k) out.add_term(lam, c);
  return out;
}

VirtualRep upper_rows(const VirtualRep& x, int k) {
  VirtualRep out(x.n());
  for (const auto& [lam, c] : x.terms())
    if (lam.rows() > k) out.add_term(lam, c);
  return out;
}

BigInt vr_dim_sn(const VirtualRep& x) {
  BigInt s = 0;
  for (const auto& [lam, c] : x.terms()) s += BigInt(c) * dim_sn(lam);
  return s;
}

BigInt vr_dim_gl(const VirtualRep& x, int m) {
  BigInt s = 0;
  for (const auto& [lam, c] : x.terms()) s += BigInt(c) * dim_gl(lam, m);
  return s;
}

}  // namespace matchc
