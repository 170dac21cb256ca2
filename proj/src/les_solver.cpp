#include "matchc/les_solver.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace matchc {

namespace {

VirtualRep single(int n, const Partition& lam) {
  VirtualRep x(n);
  x.add_term(lam, 1);
  return x;
}

long long floor_div(long long a, long long b) {
  const long long q = a / b;
  const long long r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) {
  const long long q = a / b;
  const long long r = a % b;
  return (r != 0 && ((r < 0) == (b < 0))) ? q + 1 : q;
}

struct Box {
  std::vector<long long> lo;
  std::vector<long long> hi;
};

// Bounds-consistency propagation to a fixpoint; false means wiped out.
bool propagate(const std::vector<const Relation*>& rels, Box& b) {
  bool changed = true;
  int guard = 0;
  while (changed && ++guard <= 10000) {
    changed = false;
    for (const Relation* rp : rels) {
      const Relation& r = *rp;
      long long min_sum = 0;
      long long max_sum = 0;
      for (const auto& [v, c] : r.terms) {
        min_sum += c > 0 ? c * b.lo[static_cast<size_t>(v)] : c * b.hi[static_cast<size_t>(v)];
        max_sum += c > 0 ? c * b.hi[static_cast<size_t>(v)] : c * b.lo[static_cast<size_t>(v)];
      }
      if (r.op == RelOp::Eq && (r.bound < min_sum || r.bound > max_sum)) return false;
      if (r.op == RelOp::Le && min_sum > r.bound) return false;
      if (r.op == RelOp::Ge && max_sum < r.bound) return false;
      for (const auto& [v, c] : r.terms) {
        const size_t vi = static_cast<size_t>(v);
        const long long tmin = c > 0 ? c * b.lo[vi] : c * b.hi[vi];
        const long long tmax = c > 0 ? c * b.hi[vi] : c * b.lo[vi];
        const long long rest_min = min_sum - tmin;
        const long long rest_max = max_sum - tmax;
        bool has_a = false;
        bool has_b = false;
        long long ia = 0;  // allowed interval [ia, ib] for c * x
        long long ib = 0;
        if (r.op == RelOp::Eq || r.op == RelOp::Ge) {
          has_a = true;
          ia = r.bound - rest_max;
        }
        if (r.op == RelOp::Eq || r.op == RelOp::Le) {
          has_b = true;
          ib = r.bound - rest_min;
        }
        long long new_lo = b.lo[vi];
        long long new_hi = b.hi[vi];
        if (c > 0) {
          if (has_a) new_lo = std::max(new_lo, ceil_div(ia, c));
          if (has_b) new_hi = std::min(new_hi, floor_div(ib, c));
        } else {
          if (has_b) new_lo = std::max(new_lo, ceil_div(ib, c));
          if (has_a) new_hi = std::min(new_hi, floor_div(ia, c));
        }
        if (new_lo > new_hi) return false;
        if (new_lo != b.lo[vi] || new_hi != b.hi[vi]) {
          b.lo[vi] = new_lo;
          b.hi[vi] = new_hi;
          changed = true;
        }
      }
    }
  }
  return true;
}


}  // namespace

std::map<int, DegreeBounds> les_bounds(int d, int n,
                                       const std::map<int, VirtualRep>& h_prev,
                                       const std::map<int, VirtualRep>& h_prev3) {
  if (d < 1) throw std::invalid_argument("les_bounds: d must be >= 1");
  if (n < d + 1) throw std::invalid_argument("les_bounds: requires n >= d + 1");
  const int rmax = n / d - 1;
  const auto get = [](const std::map<int, VirtualRep>& m, int i, int ground) {
    const auto it = m.find(i);
    return it == m.end() ? VirtualRep(ground) : it->second;
  };
  std::map<int, DegreeBounds> out;
  for (int i = 0; i <= rmax; ++i) {
    const VirtualRep b_i = get(h_prev, i, n - 1);
    const VirtualRep i_i = induce_trivial_strip(get(h_prev3, i, n - d), d - 1);
    const VirtualRep b_prev = get(h_prev, i - 1, n - 1);
    const VirtualRep i_prev = induce_trivial_strip(get(h_prev3, i - 1, n - d), d - 1);
    DegreeBounds db;
    db.upper = b_i + i_prev;
    db.lower = (b_i - vr_min(b_i, i_i)) + (i_prev - vr_min(b_prev, i_prev));
    if (!vr_leq(db.lower, db.upper))
      throw std::domain_error("les_bounds: lower bound exceeds upper bound at degree " +
                              std::to_string(i));
    out.emplace(i, std::move(db));
  }
  return out;
}

std::vector<Partition> candidate_partitions(const VirtualRep& upper, int extra_row_cap) {
  if (!upper.effective())
    throw std::invalid_argument("candidate_partitions: upper bound must be effective");
  std::set<Partition> seen;
  for (const auto& [mu, mult] : upper.terms())
    for (const Partition& lam : add_box(mu)) seen.insert(lam);
  std::vector<Partition> out;
  for (const Partition& lam : seen) {
    if (extra_row_cap > 0 && lam.rows() > extra_row_cap) continue;
    if (vr_leq(restrict_rep(single(upper.n() + 1, lam)), upper)) out.push_back(lam);
  }
  return out;
}

int ConstraintSystem::add_primary(int degree, const Partition& lam, long long ub) {
  if (ub < 0) throw std::invalid_argument("add_primary: negative upper bound");
  if (lam.size() != n_) throw std::invalid_argument("add_primary: partition weight differs from n");
  const std::pair<int, Partition> key{degree, lam};
  if (primary_ids_.count(key))
    throw std::logic_error("add_primary: duplicate variable for degree " + std::to_string(degree) +
                           " partition " + lam.to_string());
  const int id = static_cast<int>(lo_.size());
  lo_.push_back(0);
  hi_.push_back(ub);
  primary_keys_.push_back(key);
  aux_names_.emplace_back();
  primary_flag_.push_back(true);
  primary_ids_.emplace(key, id);
  return id;
}

int ConstraintSystem::add_auxiliary(const std::string& name, long long ub) {
  if (ub < 0) throw std::invalid_argument("add_auxiliary: negative upper bound");
  if (name.empty()) throw std::invalid_argument("add_auxiliary: empty name");
  if (aux_ids_.count(name)) throw std::logic_error("add_auxiliary: duplicate variable " + name);
  const int id = static_cast<int>(lo_.size());
  lo_.push_back(0);
  hi_.push_back(ub);
  primary_keys_.emplace_back(0, Partition());
  aux_names_.push_back(name);
  primary_flag_.push_back(false);
  aux_ids_.emplace(name, id);
  return id;
}

int ConstraintSystem::primary_id(int degree, const Partition& lam) const {
  const auto it = primary_ids_.find({degree, lam});
  return it == primary_ids_.end() ? -1 : it->second;
}

void ConstraintSystem::fix(int var, long long value) {
  const size_t vi = static_cast<size_t>(var);
  if (var < 0 || vi >= lo_.size()) throw std::out_of_range("fix: unknown variable");
  if (value < lo_[vi] || value > hi_[vi])
    throw std::invalid_argument("fix: value " + std::to_string(value) +
                                " outside bounds of variable " + std::to_string(var));
  lo_[vi] = value;
  hi_[vi] = value;
}

void ConstraintSystem::add_relation(Relation r) {
  for (const auto& [v, c] : r.terms) {
    if (v < 0 || static_cast<size_t>(v) >= lo_.size())
      throw std::out_of_range("add_relation: unknown variable in relation " + r.label);
    if (c == 0) throw std::invalid_argument("add_relation: zero coefficient in relation " + r.label);
  }
  relations_.push_back(std::move(r));
}

bool ConstraintSystem::is_primary(int var) const {
  return primary_flag_.at(static_cast<size_t>(var));
}

const std::pair<int, Partition>& ConstraintSystem::primary_key(int var) const {
  if (!is_primary(var)) throw std::logic_error("primary_key: variable is auxiliary");
  return primary_keys_.at(static_cast<size_t>(var));
}

const std::string& ConstraintSystem::aux_name(int var) const {
  if (is_primary(var)) throw std::logic_error("aux_name: variable is primary");
  return aux_names_.at(static_cast<size_t>(var));
}

std::string ConstraintSystem::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  nlohmann::ordered_json vars = nlohmann::ordered_json::array();
  for (size_t i = 0; i < lo_.size(); ++i) {
    nlohmann::ordered_json v;
    v["id"] = i;
    if (primary_flag_[i]) {
      v["kind"] = "primary";
      v["degree"] = primary_keys_[i].first;
      v["partition"] = primary_keys_[i].second.parts();
    } else {
      v["kind"] = "aux";
      v["name"] = aux_names_[i];
    }
    v["lo"] = lo_[i];
    v["hi"] = hi_[i];
    vars.push_back(std::move(v));
  }
  j["variables"] = std::move(vars);
  nlohmann::ordered_json rels = nlohmann::ordered_json::array();
  for (const Relation& r : relations_) {
    nlohmann::ordered_json e;
    e["terms"] = r.terms;
    e["op"] = r.op == RelOp::Eq ? "eq" : (r.op == RelOp::Le ? "le" : "ge");
    e["bound"] = r.bound;
    e["label"] = r.label;
    rels.push_back(std::move(e));
  }
  j["relations"] = std::move(rels);
  return j.dump(2);
}

ConstraintSystem ConstraintSystem::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ConstraintSystem sys(j.at("n").get<int>());
  for (const auto& v : j.at("variables")) {
    const long long hi = v.at("hi").get<long long>();
    int id;
    if (v.at("kind").get<std::string>() == "primary") {
      id = sys.add_primary(v.at("degree").get<int>(),
                           Partition(v.at("partition").get<std::vector<int>>()), hi);
    } else {
      id = sys.add_auxiliary(v.at("name").get<std::string>(), hi);
    }
    if (id != v.at("id").get<int>())
      throw std::invalid_argument("ConstraintSystem::from_json: ids must be consecutive from 0");
    const long long lo = v.at("lo").get<long long>();
    if (lo != 0) {
      if (lo != hi)
        throw std::invalid_argument("ConstraintSystem::from_json: partial lower bounds unsupported");
      sys.fix(id, lo);
    }
  }
  for (const auto& e : j.at("relations")) {
    Relation r;
    r.terms = e.at("terms").get<std::vector<std::pair<int, long long>>>();
    const std::string op = e.at("op").get<std::string>();
    if (op == "eq") r.op = RelOp::Eq;
    else if (op == "le") r.op = RelOp::Le;
    else if (op == "ge") r.op = RelOp::Ge;
    else throw std::invalid_argument("ConstraintSystem::from_json: unknown op " + op);
    r.bound = e.at("bound").get<long long>();
    r.label = e.value("label", std::string());
    sys.add_relation(std::move(r));
  }
  return sys;
}

std::string solution_to_json(const LesSolution& s) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json prim;
  for (const auto& [degree, rep] : s.primaries) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [lam, mult] : rep.terms()) {
      nlohmann::ordered_json t;
      t["partition"] = lam.parts();
      t["mult"] = mult;
      terms.push_back(std::move(t));
    }
    prim[std::to_string(degree)] = std::move(terms);
  }
  j["primaries"] = std::move(prim);
  nlohmann::ordered_json aux;
  for (const auto& [name, value] : s.auxiliaries) aux[name] = value;
  j["auxiliaries"] = std::move(aux);
  return j.dump(2);
}

std::vector<LesSolution> solve_nonneg(const ConstraintSystem& sys,
                                      const std::vector<Relation>& extra,
                                      long long max_solutions) {
  if (max_solutions < 1) throw std::invalid_argument("solve_nonneg: max_solutions must be positive");
  const size_t nvars = static_cast<size_t>(sys.var_count());
  std::vector<const Relation*> rels;
  rels.reserve(sys.relations().size() + extra.size());
  for (const Relation& r : sys.relations()) rels.push_back(&r);
  for (const Relation& r : extra) {
    for (const auto& [v, c] : r.terms) {
      (void)c;
      if (v < 0 || static_cast<size_t>(v) >= nvars)
        throw std::out_of_range("solve_nonneg: unknown variable in extra relation " + r.label);
    }
    rels.push_back(&r);
  }

  // Search order: primaries by decreasing dimension, then auxiliaries by name.
  std::vector<int> order;
  {
    std::vector<std::pair<BigInt, int>> prim;
    for (const auto& [key, id] : sys.primaries()) prim.emplace_back(dim_sn(key.second), id);
    std::stable_sort(prim.begin(), prim.end(), [&](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return sys.primary_key(a.second) < sys.primary_key(b.second);
    });
    for (const auto& [dim, id] : prim) order.push_back(id);
    for (const auto& [name, id] : sys.auxiliaries()) order.push_back(id);
  }

  Box init;
  init.lo.resize(nvars);
  init.hi.resize(nvars);
  for (size_t v = 0; v < nvars; ++v) {
    init.lo[v] = sys.lower_bound(static_cast<int>(v));
    init.hi[v] = sys.upper_bound(static_cast<int>(v));
  }

  std::vector<LesSolution> results;
  auto emit = [&](const Box& b) {
    for (const Relation* rp : rels) {
      long long s = 0;
      for (const auto& [v, c] : rp->terms) s += c * b.lo[static_cast<size_t>(v)];
      const bool ok = rp->op == RelOp::Eq ? s == rp->bound
                      : rp->op == RelOp::Le ? s <= rp->bound
                                            : s >= rp->bound;
      if (!ok) return;  // defensive; propagation already enforced this
    }
    LesSolution sol;
    for (const auto& [key, id] : sys.primaries()) {
      const long long val = b.lo[static_cast<size_t>(id)];
      if (val == 0) continue;
      sol.primaries.try_emplace(key.first, VirtualRep(sys.n())).first->second.add_term(key.second, val);
    }
    for (const auto& [name, id] : sys.auxiliaries())
      sol.auxiliaries[name] = b.lo[static_cast<size_t>(id)];
    results.push_back(std::move(sol));
    if (static_cast<long long>(results.size()) > max_solutions)
      throw std::length_error("solve_nonneg: solution count exceeds enumeration cap");
  };

  auto rec = [&](auto&& self, Box b) -> void {
    if (!propagate(rels, b)) return;
    int branch = -1;
    for (const int v : order) {
      if (b.lo[static_cast<size_t>(v)] < b.hi[static_cast<size_t>(v)]) {
        branch = v;
        break;
      }
    }
    if (branch < 0) {
      emit(b);
      return;
    }
    const long long lo = b.lo[static_cast<size_t>(branch)];
    const long long hi = b.hi[static_cast<size_t>(branch)];
    for (long long val = lo; val <= hi; ++val) {
      Box next = b;
      next.lo[static_cast<size_t>(branch)] = val;
      next.hi[static_cast<size_t>(branch)] = val;
      self(self, std::move(next));
    }
  };
  rec(rec, init);
  return results;
}

ConstraintSystem build_les_system(int d, int n,
                                  const std::map<std::pair<int, int>, VirtualRep>& table,
                                  int extra_row_cap) {
  if (d < 1) throw std::invalid_argument("build_les_system: d must be >= 1");
  if (n < d + 1) throw std::invalid_argument("build_les_system: requires n >= d + 1");
  const int rmax = n / d - 1;

  const auto entry = [&](int m, int i) -> VirtualRep {
    if (m < d) {
      VirtualRep x(m);
      if (i == -1) x.add_term(m > 0 ? Partition(std::vector<int>{m}) : Partition(), 1);
      return x;
    }
    const auto it = table.find({m, i});
    return it == table.end() ? VirtualRep(m) : it->second;
  };

  std::vector<VirtualRep> b(static_cast<size_t>(rmax) + 1, VirtualRep(n - 1));
  std::vector<VirtualRep> ind(static_cast<size_t>(rmax) + 2, VirtualRep(n - 1));  // ind[i+1] = I_i
  for (int i = 0; i <= rmax; ++i) b[static_cast<size_t>(i)] = entry(n - 1, i);
  for (int i = -1; i <= rmax; ++i)
    ind[static_cast<size_t>(i + 1)] = induce_trivial_strip(entry(n - d, i), d - 1);

  ConstraintSystem sys(n);
  std::map<std::pair<int, Partition>, int> aux_id;
  for (int i = 0; i <= rmax; ++i) {
    const VirtualRep cap = vr_min(b[static_cast<size_t>(i)], ind[static_cast<size_t>(i + 1)]);
    for (const auto& [mu, mult] : cap.terms()) {
      const int id = sys.add_auxiliary("a" + std::to_string(i) + "|" + mu.to_string(), mult);
      aux_id.emplace(std::make_pair(i, mu), id);
    }
  }

  std::vector<VirtualRep> upper;
  upper.reserve(static_cast<size_t>(rmax) + 1);
  for (int i = 0; i <= rmax; ++i)
    upper.push_back(b[static_cast<size_t>(i)] + ind[static_cast<size_t>(i)]);

  for (int i = 0; i <= rmax; ++i) {
    for (const Partition& lam : candidate_partitions(upper[static_cast<size_t>(i)], extra_row_cap)) {
      long long ub = std::numeric_limits<long long>::max();
      for (const Partition& mu : remove_box(lam))
        ub = std::min(ub, upper[static_cast<size_t>(i)].mult(mu));
      sys.add_primary(i, lam, ub);
    }
  }

  for (int i = 0; i <= rmax; ++i) {
    for (const auto& [mu, bound] : upper[static_cast<size_t>(i)].terms()) {
      Relation r;
      r.op = RelOp::Eq;
      r.bound = bound;
      r.label = "deg " + std::to_string(i) + " mu=" + mu.to_string();
      for (const Partition& lam : add_box(mu)) {
        const int id = sys.primary_id(i, lam);
        if (id >= 0) r.terms.emplace_back(id, 1);
      }
      const auto cur = aux_id.find({i, mu});
      if (cur != aux_id.end()) r.terms.emplace_back(cur->second, 1);
      const auto prev = aux_id.find({i - 1, mu});
      if (prev != aux_id.end()) r.terms.emplace_back(prev->second, 1);
      if (!r.terms.empty() || r.bound != 0) sys.add_relation(std::move(r));
    }
  }
  return sys;
}

}  // namespace matchc
