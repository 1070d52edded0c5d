#include "conjrank/biset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "conjrank/errors.hpp"

namespace conjrank {

namespace {

int elt_index(const Group& g, const Permutation& p) {
  auto it = std::lower_bound(g.elements.begin(), g.elements.end(), p);
  if (it == g.elements.end() || *it != p)
    throw NotASubgroup("element does not belong to the group");
  return static_cast<int>(it - g.elements.begin());
}

}  // namespace

Biset::Biset(Group s, int points, const std::vector<Permutation>& left_gen_action,
             const std::vector<Permutation>& right_gen_action, std::string name)
    : s_(std::move(s)), points_(points), name_(std::move(name)) {
  if (left_gen_action.size() != s_.generators.size() ||
      right_gen_action.size() != s_.generators.size())
    throw ParseError("one left and one right action row per generator of S");
  for (const auto& a : left_gen_action)
    if (a.degree() != points_) throw DegreeMismatch("left action degree != point count");
  for (const auto& a : right_gen_action)
    if (a.degree() != points_) throw DegreeMismatch("right action degree != point count");

  long order = s_.order();
  if (order * order > 1000000)
    throw CapExceeded("product group S x S too large for biset analysis");

  // close the generator actions over all of S, validating both the action
  // axioms and commutativity
  int n = static_cast<int>(order);
  auto close_action = [&](const std::vector<Permutation>& gen_action, bool left) {
    std::vector<std::vector<int>> table(n);
    std::vector<bool> known(n, false);
    int id = elt_index(s_, Permutation::identity(s_.degree));
    table[id].resize(points_);
    std::iota(table[id].begin(), table[id].end(), 0);
    known[id] = true;
    std::deque<int> todo{id};
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop_front();
      for (std::size_t k = 0; k < s_.generators.size(); ++k) {
        int next = elt_index(s_, cur == id ? s_.generators[k]
                                           : s_.elements[cur] * s_.generators[k]);
        std::vector<int> img(points_);
        for (int pt = 0; pt < points_; ++pt) {
          // lambda(s*g) = lambda(s) o lambda(g); rho(s*g) = rho(g) o rho(s)
          int mid = left ? gen_action[k].apply(static_cast<Point>(pt))
                         : table[cur][pt];
          img[pt] = left ? table[cur][mid]
                         : gen_action[k].apply(static_cast<Point>(mid));
        }
        if (known[next]) {
          if (table[next] != img)
            throw ParseError("generator actions do not define a group action");
        } else {
          table[next] = std::move(img);
          known[next] = true;
          todo.push_back(next);
        }
      }
    }
    return table;
  };
  left_ = close_action(left_gen_action, true);
  right_ = close_action(right_gen_action, false);

  for (const auto& a : left_)
    for (const auto& b : right_)
      for (int pt = 0; pt < points_; ++pt)
        if (b[a[pt]] != a[b[pt]])
          throw ParseError("left and right actions do not commute");

  ss_ = direct_product(s_, s_, (s_.name.empty() ? "S" : s_.name) + "^2");
}

std::vector<std::vector<int>> Biset::product_orbits() const {
  std::vector<int> orbit_of(points_, -1);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < points_; ++start) {
    if (orbit_of[start] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<int> members;
    std::deque<int> todo{start};
    orbit_of[start] = id;
    while (!todo.empty()) {
      int pt = todo.front();
      todo.pop_front();
      members.push_back(pt);
      for (const auto& g : s_.generators) {
        int gi = elt_index(s_, g);
        for (int next : {left_[gi][pt], right_[gi][pt]}) {
          if (orbit_of[next] < 0) {
            orbit_of[next] = id;
            todo.push_back(next);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  return orbits;
}

Group Biset::point_stabilizer(int point) const {
  std::vector<Permutation> members;
  int n = static_cast<int>(s_.order());
  for (int si = 0; si < n; ++si)
    for (int ti = 0; ti < n; ++ti)
      if (left_[si][point] == right_[ti][point])
        members.push_back(product_embed(s_.elements[si], s_.elements[ti]));
  return group_from_elements(ss_.degree, std::move(members), "");
}

Biset group_as_biset(const Group& g, const Group& s) {
  if (!s.is_subgroup_of(g)) throw NotASubgroup("S is not a subgroup of G");
  int n = static_cast<int>(g.order());
  std::vector<Permutation> left, right;
  for (const auto& gen : s.generators) {
    std::vector<Point> l(n), r(n);
    for (int x = 0; x < n; ++x) {
      l[x] = static_cast<Point>(elt_index(g, gen * g.elements[x]));
      r[x] = static_cast<Point>(elt_index(g, g.elements[x] * gen));
    }
    left.emplace_back(std::move(l));
    right.emplace_back(std::move(r));
  }
  return Biset(s, n, left, right, g.name.empty() ? "omega" : g.name);
}

namespace {

std::optional<TwistedDiagonal> identify_twisted(const Group& s, const Group& stab) {
  int d = s.degree;
  TwistedDiagonal td;
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (const auto& e : stab.elements) {
    auto [a, b] = product_split(e, d);
    if (a.is_identity() && !b.is_identity()) return std::nullopt;  // meets 1 x S
    if (b.is_identity() && !a.is_identity()) return std::nullopt;  // meets S x 1
    pairs.emplace_back(std::move(a), std::move(b));
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Permutation> from, to;
  for (auto& [a, b] : pairs) {
    from.push_back(a);
    to.push_back(b);
  }
  td.p = group_from_elements(d, from, "");
  td.from = std::move(from);
  td.to = std::move(to);
  return td;
}

// phi(u) for u in the diagonal's domain
const Permutation& twisted_image(const TwistedDiagonal& td, const Permutation& u) {
  auto it = std::lower_bound(td.from.begin(), td.from.end(), u);
  if (it == td.from.end() || *it != u) throw InternalError("element outside twisted domain");
  return td.to[it - td.from.begin()];
}

// True when some h in the ambient group satisfies phi(u) = h u h^-1 on the
// domain's generators.
bool realized_by_conjugation(const Group& ambient, const TwistedDiagonal& td) {
  const auto& gens = td.p.generators;
  if (gens.empty()) return true;  // trivial domain: phi is the identity map
  for (const auto& h : ambient.elements) {
    Permutation hi = h.inverse();
    bool ok = std::all_of(gens.begin(), gens.end(), [&](const Permutation& u) {
      return twisted_image(td, u) == h * u * hi;
    });
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::vector<OrbitType> orbit_types(const Biset& omega) {
  auto orbits = omega.product_orbits();
  std::vector<Group> stabs;
  stabs.reserve(orbits.size());
  for (const auto& orbit : orbits) stabs.push_back(omega.point_stabilizer(orbit.front()));

  std::vector<OrbitType> types;
  std::vector<bool> used(orbits.size(), false);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (used[i]) continue;
    OrbitType t;
    t.stabilizer = stabs[i];
    t.multiplicity = 1;
    t.orbit_size = static_cast<long>(orbits[i].size());
    used[i] = true;
    for (std::size_t j = i + 1; j < orbits.size(); ++j) {
      if (used[j] || stabs[j].order() != stabs[i].order()) continue;
      if (is_conjugate_in(omega.product_group(), stabs[j], stabs[i])) {
        used[j] = true;
        ++t.multiplicity;
      }
    }
    t.twisted = identify_twisted(omega.s(), t.stabilizer);
    types.push_back(std::move(t));
  }
  std::sort(types.begin(), types.end(), [](const OrbitType& a, const OrbitType& b) {
    if (a.stabilizer.order() != b.stabilizer.order())
      return a.stabilizer.order() > b.stabilizer.order();
    return a.stabilizer.elements < b.stabilizer.elements;
  });
  return types;
}

bool is_f_generated(const Biset& omega, const FusionSystem& f) {
  if (!omega.s().same_group(f.s)) throw ClassMismatch("biset and fusion system disagree on S");
  auto types = orbit_types(omega);
  return std::all_of(types.begin(), types.end(), [&](const OrbitType& t) {
    return t.twisted && realized_by_conjugation(f.ambient, *t.twisted);
  });
}

namespace {

// Fixed points of a subgroup of S x S on the biset, via its generators.
long fixed_point_count(const Biset& omega, const Group& stab) {
  const Group& s = omega.s();
  struct GenPair {
    int si, ti;
  };
  std::vector<GenPair> gens;
  for (const auto& e : stab.generators) {
    auto [a, b] = product_split(e, s.degree);
    gens.push_back({elt_index(s, a), elt_index(s, b)});
  }
  long count = 0;
  for (int pt = 0; pt < omega.size(); ++pt) {
    bool ok = std::all_of(gens.begin(), gens.end(), [&](const GenPair& g) {
      return omega.left_apply(g.si, pt) == omega.right_apply(g.ti, pt);
    });
    if (ok) ++count;
  }
  return count;
}

StabilityReport full_stability(const Biset& omega, const FusionSystem& f, const Caps& caps) {
  Group gg = direct_product(f.ambient, f.ambient);
  if (gg.order() > caps.order)
    throw CapExceeded("|G x G| exceeds the order cap for the stability check");
  FusionSystem ff = realize(gg, omega.product_group(), f.p, caps);

  StabilityReport report;
  report.mode = StabilityMode::full;
  report.stable = true;
  std::vector<long> marks(ff.s_classes.size());
  for (std::size_t i = 0; i < ff.s_classes.size(); ++i)
    marks[i] = fixed_point_count(omega, ff.s_classes[i].representative);
  for (const FClass& c : ff.f_classes) {
    long first = marks[c.s_class_indices.front()];
    for (int j : c.s_class_indices)
      if (marks[j] != first) {
        report.stable = false;
        return report;
      }
  }
  return report;
}

struct DiagonalNode {
  TwistedDiagonal td;
  Group delta;  // as subgroup of S x S
  int f_class;  // fusion class of the domain P
};

// All twisted diagonals Delta(P, c_g) with P an S-class representative and
// g P g^-1 <= S, deduplicated.
std::vector<DiagonalNode> twisted_diagonal_nodes(const Biset& omega, const FusionSystem& f) {
  std::vector<DiagonalNode> nodes;
  std::set<std::vector<Permutation>> seen;
  for (std::size_t ci = 0; ci < f.s_classes.size(); ++ci) {
    const Group& p = f.s_classes[ci].representative;
    for (const auto& g : f.ambient.elements) {
      Permutation gi = g.inverse();
      bool into_s = std::all_of(p.generators.begin(), p.generators.end(),
                                [&](const Permutation& u) { return f.s.contains(g * u * gi); });
      if (!into_s) continue;
      std::vector<Permutation> члены;
      std::vector<Permutation> from, to, members;
      for (const auto& u : p.elements) {
        Permutation v = g * u * gi;
        from.push_back(u);
        to.push_back(v);
        members.push_back(product_embed(u, v));
      }
      std::sort(members.begin(), members.end());
      if (!seen.insert(members).second) continue;
      DiagonalNode node;
      node.td.p = p;
      node.td.from = from;
      node.td.to = to;
      node.delta = group_from_elements(omega.product_group().degree, members, "");
      node.f_class = f.f_class_of[static_cast<int>(ci)];
      nodes.push_back(std::move(node));
    }
  }
  return nodes;
}

// Are two twisted diagonals conjugate under G x G, i.e. related by a pair of
// fusion morphisms?
bool diagonals_fused(const FusionSystem& f, const DiagonalNode& x, const DiagonalNode& y) {
  if (x.td.p.order() != y.td.p.order()) return false;
  for (const auto& a : f.ambient.elements) {
    Permutation ai = a.inverse();
    bool maps = std::all_of(x.td.p.generators.begin(), x.td.p.generators.end(),
                            [&](const Permutation& u) { return y.td.p.contains(a * u * ai); });
    if (x.td.p.generators.empty()) maps = y.td.p.order() == 1;
    if (!maps) continue;
    // psi = phi_x o c_{a^-1} on y's domain; look for b with phi_y = c_b o psi
    for (const auto& b : f.ambient.elements) {
      Permutation bi = b.inverse();
      bool ok = true;
      for (const auto& u : y.td.p.generators) {
        Permutation w = twisted_image(x.td, ai * u * a);
        if (twisted_image(y.td, u) != b * w * bi) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    if (y.td.p.generators.empty()) return true;
  }
  return false;
}

StabilityReport partial_stability(const Biset& omega, const FusionSystem& f) {
  StabilityReport report;
  report.mode = StabilityMode::partial;
  report.stable = true;

  auto nodes = twisted_diagonal_nodes(omega, f);
  std::vector<long> marks(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    marks[i] = fixed_point_count(omega, nodes[i].delta);

  std::vector<int> bucket(nodes.size());
  std::iota(bucket.begin(), bucket.end(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (bucket[i] != static_cast<int>(i)) continue;
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (bucket[j] != static_cast<int>(j)) continue;
      if (nodes[i].f_class != nodes[j].f_class) continue;
      if (marks[i] == marks[j]) continue;  // only disagreeing marks matter
      if (diagonals_fused(f, nodes[i], nodes[j])) {
        report.stable = false;
        return report;
      }
    }
  }
  return report;
}

}  // namespace

StabilityReport f_stability(const Biset& omega, const FusionSystem& f, const Caps& caps) {
  if (!omega.s().same_group(f.s)) throw ClassMismatch("biset and fusion system disagree on S");
  if (f.s.order() <= caps.stability_order) return full_stability(omega, f, caps);
  return partial_stability(omega, f);
}

bool is_f_stable(const Biset& omega, const FusionSystem& f, const Caps& caps) {
  return f_stability(omega, f, caps).stable;
}

CharacteristicReport is_characteristic(const Biset& omega, const FusionSystem& f,
                                       const Caps& caps) {
  if (omega.size() % f.s.order() != 0)
    throw IndexError("|S| does not divide |Omega|");
  CharacteristicReport report;
  StabilityReport st = f_stability(omega, f, caps);
  report.f_stable = st.stable;
  report.stability_mode = st.mode;
  report.f_generated = is_f_generated(omega, f);
  long index = omega.size() / f.s.order();
  report.index_coprime = index % f.p != 0;
  report.holds = report.f_stable && report.f_generated && report.index_coprime;
  return report;
}

ContainsSReport contains_s_report(const Biset& omega, const FusionSystem& f) {
  if (!omega.s().same_group(f.s)) throw ClassMismatch("biset and fusion system disagree on S");
  ContainsSReport report;
  for (const OrbitType& t : orbit_types(omega)) {
    if (!t.twisted || t.twisted->p.order() != f.s.order()) continue;
    if (realized_by_conjugation(f.ambient, *t.twisted)) {
      report.orbit_route = true;
      break;
    }
  }
  report.mark_route = true;
  for (std::size_t ci = 0; ci < f.s_classes.size(); ++ci) {
    BurnsideElt q = right_quotient(omega, f.s_classes[ci].representative, f.s_ring);
    if (q.mark(static_cast<int>(ci)) == 0) {
      report.mark_route = false;
      break;
    }
  }
  report.agree = report.orbit_route == report.mark_route;
  return report;
}

bool contains_s(const Biset& omega, const FusionSystem& f) {
  return contains_s_report(omega, f).orbit_route;
}

BurnsideElt right_quotient(const Biset& omega, const Group& p, const RingPtr& ring) {
  if (!p.is_subgroup_of(omega.s())) throw NotASubgroup("quotient requires P <= S");
  const Group& s = omega.s();

  // right P-orbit partition
  std::vector<int> orbit_of(omega.size(), -1);
  std::vector<int> reps;
  std::vector<int> p_gens;
  for (const auto& u : p.generators) p_gens.push_back(elt_index(s, u));
  for (int start = 0; start < omega.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(start);
    orbit_of[start] = id;
    std::deque<int> todo{start};
    while (!todo.empty()) {
      int pt = todo.front();
      todo.pop_front();
      for (int g : p_gens) {
        int next = omega.right_apply(g, pt);
        if (orbit_of[next] < 0) {
          orbit_of[next] = id;
          todo.push_back(next);
        }
      }
    }
  }

  // marks of the quotient left S-set on each class of S
  const auto& classes = ring->classes();
  std::vector<Rational> marks(classes.size());
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    std::vector<int> q_gens;
    for (const auto& u : classes[ci].representative.generators)
      q_gens.push_back(elt_index(s, u));
    long fixed = 0;
    for (int rep : reps) {
      bool ok = std::all_of(q_gens.begin(), q_gens.end(), [&](int g) {
        return orbit_of[omega.left_apply(g, rep)] == orbit_of[rep];
      });
      if (ok) ++fixed;
    }
    marks[ci] = fixed;
  }
  return ring->element_from_marks(marks);
}

BurnsideElt right_quotient(const Biset& omega, const Group& p) {
  return right_quotient(omega, p, BurnsideRing::create(omega.s()));
}

RationalMatrix orbit_matrix(const Biset& omega, const FusionSystem& f) {
  if (!omega.s().same_group(f.s)) throw ClassMismatch("biset and fusion system disagree on S");
  const Group& s = omega.s();
  int fc = f.f_class_count();
  RationalMatrix m(fc, fc);
  for (int i = 0; i < fc; ++i) {
    m.row_labels[i] = f.f_classes[i].label;
    m.col_labels[i] = f.f_classes[i].label;
  }
  for (int i = 0; i < fc; ++i) {
    std::vector<int> left_gens;
    for (const auto& u : f.f_classes[i].representative.generators)
      left_gens.push_back(elt_index(s, u));
    for (int j = 0; j < fc; ++j) {
      std::vector<int> right_gens;
      for (const auto& u : f.f_classes[j].representative.generators)
        right_gens.push_back(elt_index(s, u));
      std::vector<bool> seen(omega.size(), false);
      long orbits = 0;
      std::deque<int> todo;
      for (int start = 0; start < omega.size(); ++start) {
        if (seen[start]) continue;
        ++orbits;
        seen[start] = true;
        todo.push_back(start);
        while (!todo.empty()) {
          int pt = todo.front();
          todo.pop_front();
          auto visit = [&](int next) {
            if (!seen[next]) {
              seen[next] = true;
              todo.push_back(next);
            }
          };
          for (int g : left_gens) visit(omega.left_apply(g, pt));
          for (int g : right_gens) visit(omega.right_apply(g, pt));
        }
      }
      m.at(i, j) = orbits;
    }
  }
  return m;
}

BisetRankReport verify_general_biset(const Biset& omega, const FusionSystem& f,
                                     const Caps& caps) {
  if (!omega.s().same_group(f.s)) throw ClassMismatch("biset and fusion system disagree on S");
  BisetRankReport report;

  StabilityReport st = f_stability(omega, f, caps);
  report.hypotheses.f_stable = st.stable;
  report.hypotheses.stability_mode = st.mode;
  if (!st.stable) throw HypothesisFailed("f_stable");
  report.hypotheses.f_generated = is_f_generated(omega, f);
  if (!report.hypotheses.f_generated) throw HypothesisFailed("f_generated");
  report.contains_s = contains_s_report(omega, f);
  if (!report.contains_s.orbit_route) throw HypothesisFailed("contains_s");
  if (f.s.order() > 0 && omega.size() % f.s.order() == 0)
    report.hypotheses.index_coprime = (omega.size() / f.s.order()) % f.p != 0;
  report.hypotheses.holds = true;

  int fc = f.f_class_count();
  std::vector<BurnsideElt> quotients;
  for (int i = 0; i < fc; ++i)
    quotients.push_back(right_quotient(omega, f.f_classes[i].representative, f.s_ring));

  report.quotient_pattern_ok = true;
  report.quotient_norm_bound_ok = true;
  RationalMatrix change(fc, fc);
  for (int q = 0; q < fc; ++q) {
    int s_idx = f.f_classes[q].s_class_indices.front();
    for (int p = 0; p < fc; ++p) {
      const Rational& mk = quotients[p].mark(s_idx);
      change.at(q, p) = mk;
      if (mk != 0 &&
          !is_subconjugate_in(f.ambient, f.f_classes[q].representative,
                              f.f_classes[p].representative))
        report.quotient_pattern_ok = false;
    }
  }
  for (int p = 0; p < fc; ++p) {
    const Group& rep = f.f_classes[p].representative;
    long bound = normalizer(f.s, rep).order() / rep.order();
    int s_idx = f.f_classes[p].s_class_indices.front();
    if (quotients[p].mark(s_idx) < bound) report.quotient_norm_bound_ok = false;
  }
  report.quotient_basis_ok = rank(change) == fc;

  report.matrix = orbit_matrix(omega, f);
  // the orbit counts must match the orbit functional on the quotients
  for (int i = 0; i < fc; ++i)
    for (int j = 0; j < fc; ++j) {
      Rational via_rho = f.s_ring->orbit_count(f.f_classes[i].representative, quotients[j]);
      if (via_rho != report.matrix.at(i, j))
        throw InternalError("orbit matrix disagrees with the orbit functional");
    }
  report.rank = rank(report.matrix);
  report.cyclic_f_classes = f.cyclic_f_class_count();
  report.holds = report.rank == report.cyclic_f_classes &&
                 report.quotient_pattern_ok && report.quotient_norm_bound_ok &&
                 report.quotient_basis_ok;
  return report;
}

}  // namespace conjrank
