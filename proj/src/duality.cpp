#include "matchc/duality.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace matchc {

KoszulIndex koszul_index(int n, int degree) {
  if (n < 0) throw std::invalid_argument("koszul_index: negative ground set");
  KoszulIndex k;
  k.b = n % 3;
  k.p = degree + 1;
  k.q = n / 3 - degree - 1;
  return k;
}

std::pair<int, int> homology_index(const KoszulIndex& k) {
  return {3 * (k.p + k.q) + k.b, k.p - 1};
}

namespace {

// Complement of lam (padded to `rows` rows) in a rows x width box, read
// upside down; empty parts are trimmed by the Partition constructor.
Partition box_complement(const Partition& lam, int rows, int width) {
  std::vector<int> parts;
  for (int i = rows - 1; i >= 0; --i) {
    const int v = width - (i < lam.rows() ? lam.part(i) : 0);
    if (v > 0) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

void check_box(const Partition& lam, int n, int rows, int width, int n_cap, const char* name) {
  if (lam.size() != n)
    throw std::invalid_argument(std::string(name) + ": partition does not have weight n");
  if (lam.rows() > rows)
    throw std::domain_error(std::string(name) + ": partition has too many rows for the box");
  if (lam.rows() > 0 && lam.part(0) > width)
    throw std::domain_error(std::string(name) + ": first part exceeds the box width");
  if (n < 0 || n > n_cap)
    throw std::domain_error(std::string(name) + ": ground set outside the box range");
}

}  // namespace

DualImage dual2(const Partition& lam, int p, int n) {
  check_box(lam, n, 2, 5, 10, "dual2");
  DualImage img;
  img.partition = box_complement(lam, 2, 5);
  img.p = 2 - p;
  img.n = 10 - n;
  img.vacuous = img.n < 3 || img.p < 1;
  return img;
}

DualImage dual3(const Partition& lam, int p, int n) {
  check_box(lam, n, 3, 9, 27, "dual3");
  DualImage img;
  img.partition = box_complement(lam, 3, 9);
  img.p = 7 - p;
  img.n = 27 - n;
  img.vacuous = img.n < 3 || img.p < 1;
  return img;
}

VirtualRep homology_with_convention(const std::map<std::pair<int, int>, VirtualRep>& table,
                                    int n, int degree) {
  if (n < 0) throw std::invalid_argument("homology_with_convention: negative ground set");
  if (n < 3) {
    VirtualRep x(n);
    if (degree == -1) x.add_term(n > 0 ? Partition(std::vector<int>{n}) : Partition(), 1);
    return x;
  }
  const auto it = table.find({n, degree});
  return it == table.end() ? VirtualRep(n) : it->second;
}

std::map<std::pair<int, int>, VirtualRep> low_row_table(
    const std::map<std::pair<int, int>, VirtualRep>& table_upto_13) {
  for (int n = 4; n <= 13; ++n) {
    const auto it = table_upto_13.lower_bound({n, -10});
    if (it == table_upto_13.end() || it->first.first != n)
      throw std::invalid_argument("low_row_table: input table is missing ground set " +
                                  std::to_string(n));
  }
  std::map<std::pair<int, int>, VirtualRep> out;
  for (int n = 14; n <= 24; ++n) {
    for (int degree = 0; degree <= n / 3 - 1; ++degree) {
      const int partner_n = 27 - n;
      const int partner_degree = 5 - degree;
      const VirtualRep partner = homology_with_convention(table_upto_13, partner_n, partner_degree);
      VirtualRep low(n);
      for (const auto& [mu, mult] : partner.terms()) {
        if (mu.rows() > 3 || (mu.rows() > 0 && mu.part(0) > 9)) continue;
        const DualImage img = dual3(mu, partner_degree + 1, partner_n);
        if (img.n != n || img.p - 1 != degree)
          throw std::logic_error("low_row_table: duality bookkeeping is inconsistent");
        low.add_term(img.partition, mult);
      }
      if (!low.is_zero()) out.emplace(std::make_pair(n, degree), std::move(low));
    }
  }
  return out;
}

}  // namespace matchc
