#include "conjrank/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "conjrank/errors.hpp"

namespace conjrank {

IndexedGroup::IndexedGroup(const Group& g) : group_(&g), n_(static_cast<int>(g.order())) {
  index_.reserve(g.elements.size() * 2);
  for (int i = 0; i < n_; ++i) index_.emplace(g.elements[i], i);
  id_ = index_.at(Permutation::identity(g.degree));

  if (n_ <= kTableLimit) {
    table_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        table_[static_cast<std::size_t>(a) * n_ + b] =
            index_.at(g.elements[a] * g.elements[b]);
  }

  inv_.resize(n_);
  for (int a = 0; a < n_; ++a) inv_[a] = index_.at(g.elements[a].inverse());
  orders_.resize(n_);
  for (int a = 0; a < n_; ++a) orders_[a] = g.elements[a].order();
}

int IndexedGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n_ + b];
  return index_.at(group_->elements[a] * group_->elements[b]);
}

int IndexedGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw NotASubgroup("element does not belong to the ambient group");
  return it->second;
}

std::vector<int> IndexedGroup::closure(const std::vector<int>& subset,
                                       std::optional<int> extra) const {
  std::vector<bool> in(n_, false);
  std::vector<int> members;
  std::deque<int> todo;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      todo.push_back(x);
    }
  };
  add(id_);
  for (int x : subset) add(x);
  if (extra) add(*extra);
  // generators of the closure: the seed set itself
  std::vector<int> gens = members;
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop_front();
    for (int g : gens) add(mul(cur, g));
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> IndexedGroup::cyclic_subgroup(int a) const {
  std::vector<int> members{id_};
  int x = a;
  while (x != id_) {
    members.push_back(x);
    x = mul(x, a);
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> IndexedGroup::conjugate_subgroup(const std::vector<int>& sub, int g) const {
  std::vector<int> out(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) out[i] = conj(g, sub[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> IndexedGroup::indices_of(const Group& subgroup) const {
  std::vector<int> out;
  out.reserve(subgroup.elements.size());
  for (const auto& p : subgroup.elements) out.push_back(index_of(p));
  std::sort(out.begin(), out.end());
  return out;
}

Group IndexedGroup::to_group(const std::vector<int>& sub, const std::string& name) const {
  std::vector<Permutation> elements;
  elements.reserve(sub.size());
  for (int i : sub) elements.push_back(group_->elements[i]);
  return group_from_elements(group_->degree, std::move(elements), name);
}

namespace {

// All subgroups of `within` (default: the whole group), as sorted index
// vectors, by cyclic bottom-up extension: seed with every <x>, then close
// <A, x> until nothing new appears.
std::vector<std::vector<int>> all_subgroups(const IndexedGroup& ig,
                                            const std::vector<int>* within, long cap) {
  std::vector<int> universe;
  if (within) {
    universe = *within;
  } else {
    universe.resize(ig.size());
    for (int i = 0; i < ig.size(); ++i) universe[i] = i;
  }

  std::set<std::vector<int>> seen;
  std::deque<const std::vector<int>*> todo;
  auto add = [&](std::vector<int> sub) {
    auto [it, fresh] = seen.insert(std::move(sub));
    if (fresh) {
      if (static_cast<long>(seen.size()) > cap)
        throw CapExceeded("subgroup enumeration exceeds cap of " + std::to_string(cap));
      todo.push_back(&*it);
    }
  };

  add({ig.identity()});
  for (int x : universe) add(ig.cyclic_subgroup(x));

  while (!todo.empty()) {
    const std::vector<int>& sub = *todo.front();
    todo.pop_front();
    if (static_cast<long>(sub.size()) * 2 > static_cast<long>(universe.size())) continue;
    for (int x : universe) {
      if (std::binary_search(sub.begin(), sub.end(), x)) continue;
      add(ig.closure(sub, x));
    }
  }
  return {seen.begin(), seen.end()};
}

bool subgroup_is_cyclic(const IndexedGroup& ig, const std::vector<int>& sub) {
  auto n = static_cast<long>(sub.size());
  return std::any_of(sub.begin(), sub.end(), [&](int x) { return ig.element_order(x) == n; });
}

// Partitions the given subgroups into conjugation orbits of the ambient
// group.  The orbit of a subgroup may leave the given set (conjugates that
// are not subgroups of H); those are tracked but not reported.
std::vector<std::vector<std::vector<int>>> conjugacy_orbits(
    const IndexedGroup& ig, const std::vector<std::vector<int>>& subs) {
  std::vector<int> gen_idx;
  for (const auto& g : ig.group().generators) gen_idx.push_back(ig.index_of(g));

  std::set<std::vector<int>> target(subs.begin(), subs.end());
  std::set<std::vector<int>> classified;
  std::vector<std::vector<std::vector<int>>> orbits;

  for (const auto& sub : subs) {
    if (classified.count(sub)) continue;
    std::set<std::vector<int>> orbit;
    std::deque<std::vector<int>> todo;
    orbit.insert(sub);
    todo.push_back(sub);
    while (!todo.empty()) {
      std::vector<int> cur = std::move(todo.front());
      todo.pop_front();
      for (int g : gen_idx) {
        auto img = ig.conjugate_subgroup(cur, g);
        if (orbit.insert(img).second) todo.push_back(std::move(img));
      }
    }
    std::vector<std::vector<int>> members;
    for (const auto& m : orbit)
      if (target.count(m)) {
        members.push_back(m);
        classified.insert(m);
      }
    orbits.push_back(std::move(members));
  }
  return orbits;
}

std::vector<SubgroupClass> build_classes(const IndexedGroup& ig,
                                         std::vector<std::vector<std::vector<int>>> orbits,
                                         const std::string& ambient_name) {
  std::vector<SubgroupClass> classes;
  classes.reserve(orbits.size());
  for (auto& orbit : orbits) {
    SubgroupClass c;
    c.order = static_cast<long>(orbit.front().size());
    c.cyclic = subgroup_is_cyclic(ig, orbit.front());
    c.ambient_name = ambient_name;
    for (const auto& m : orbit) c.members.push_back(ig.to_group(m));
    // index vectors sort like canonical element lists, so front() is least
    c.representative = c.members.front();
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.representative.elements < b.representative.elements;
  });
  assign_class_labels(classes);
  return classes;
}

}  // namespace

void assign_class_labels(std::vector<SubgroupClass>& classes) {
  long prev_order = -1;
  int k = 0;
  for (auto& c : classes) {
    k = (c.order == prev_order) ? k + 1 : 1;
    prev_order = c.order;
    c.label = "o" + std::to_string(c.order) + "_" + std::to_string(k);
  }
}

std::vector<SubgroupClass> enumerate_subgroup_classes(const Group& g, const Caps& caps) {
  if (g.order() > caps.order)
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds cap");
  IndexedGroup ig(g);
  auto subs = all_subgroups(ig, nullptr, caps.subgroups);
  return build_classes(ig, conjugacy_orbits(ig, subs), g.name);
}

std::vector<SubgroupClass> classes_under_ambient(const Group& g, const Group& h,
                                                 const Caps& caps) {
  if (!h.is_subgroup_of(g)) throw NotASubgroup("H is not a subgroup of G");
  if (g.order() > caps.order)
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds cap");
  IndexedGroup ig(g);
  auto h_idx = ig.indices_of(h);
  auto subs = all_subgroups(ig, &h_idx, caps.subgroups);
  return build_classes(ig, conjugacy_orbits(ig, subs), g.name);
}

long double_coset_count(const Group& g, const Group& p, const Group& q) {
  if (!p.is_subgroup_of(g) || !q.is_subgroup_of(g))
    throw NotASubgroup("double cosets require subgroups of G");
  IndexedGroup ig(g);
  std::vector<int> left, right;
  for (const auto& x : p.generators) left.push_back(ig.index_of(x));
  for (const auto& x : q.generators) right.push_back(ig.index_of(x));

  std::vector<bool> seen(ig.size(), false);
  long orbits = 0;
  std::deque<int> todo;
  for (int s = 0; s < ig.size(); ++s) {
    if (seen[s]) continue;
    ++orbits;
    seen[s] = true;
    todo.push_back(s);
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop_front();
      auto visit = [&](int x) {
        if (!seen[x]) {
          seen[x] = true;
          todo.push_back(x);
        }
      };
      for (int a : left) visit(ig.mul(a, cur));
      for (int b : right) visit(ig.mul(cur, b));
    }
  }
  return orbits;
}

bool is_cyclic(const Group& p) {
  long n = p.order();
  return std::any_of(p.elements.begin(), p.elements.end(),
                     [&](const Permutation& x) { return x.order() == n; });
}

Group normalizer(const Group& g, const Group& p) {
  if (!p.is_subgroup_of(g)) throw NotASubgroup("normalizer requires P <= G");
  std::vector<Permutation> members;
  for (const auto& x : g.elements) {
    Permutation xi = x.inverse();
    bool ok = std::all_of(p.generators.begin(), p.generators.end(), [&](const Permutation& s) {
      return p.contains(x * s * xi);
    });
    if (p.generators.empty()) ok = true;
    if (ok) members.push_back(x);
  }
  return group_from_elements(g.degree, std::move(members), "");
}

Group sylow_subgroup(const Group& g, long p, const Caps& caps) {
  if (p < 2) throw Error("p must be a prime");
  long order = g.order();
  long target = 1;
  while (order % p == 0) {
    target *= p;
    order /= p;
  }

  auto is_p_power = [&](long n) {
    while (n % p == 0) n /= p;
    return n == 1;
  };

  Group current = trivial_group(g.degree);
  while (current.order() < target) {
    Group n = normalizer(g, current);
    bool grew = false;
    for (const auto& x : n.elements) {
      if (!is_p_power(x.order()) || current.contains(x)) continue;
      std::vector<Permutation> gens = current.generators;
      gens.push_back(x);
      Group candidate = close_generators(g.degree, gens, caps.order);
      if (is_p_power(candidate.order())) {
        current = std::move(candidate);
        grew = true;
        break;
      }
    }
    if (!grew) throw InternalError("sylow growth stalled");
  }
  current.name = g.name.empty() ? "" : g.name + "_sylow" + std::to_string(p);
  return current;
}

Group conjugate_subgroup(const Group& h, const Permutation& g) {
  Permutation gi = g.inverse();
  std::vector<Permutation> elements;
  elements.reserve(h.elements.size());
  for (const auto& x : h.elements) elements.push_back(g * x * gi);
  return group_from_elements(h.degree, std::move(elements), h.name);
}

bool is_conjugate_in(const Group& g, const Group& p, const Group& q) {
  if (p.order() != q.order()) return false;
  for (const auto& x : g.elements) {
    Permutation xi = x.inverse();
    bool ok = std::all_of(p.generators.begin(), p.generators.end(), [&](const Permutation& s) {
      return q.contains(x * s * xi);
    });
    if (p.generators.empty()) ok = q.order() == 1;
    if (ok) return true;
  }
  return false;
}

bool is_subconjugate_in(const Group& g, const Group& p, const Group& q) {
  if (p.order() > q.order()) return false;
  if (p.order() == 1) return true;
  for (const auto& x : g.elements) {
    Permutation xi = x.inverse();
    bool ok = std::all_of(p.generators.begin(), p.generators.end(), [&](const Permutation& s) {
      return q.contains(x * s * xi);
    });
    if (ok) return true;
  }
  return false;
}

int class_index_of(const std::vector<SubgroupClass>& classes, const Group& subgroup) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].order != subgroup.order()) continue;
    for (const auto& m : classes[i].members)
      if (m.elements == subgroup.elements) return static_cast<int>(i);
  }
  throw ClassMismatch("subgroup not found in any class");
}

}  // namespace conjrank
