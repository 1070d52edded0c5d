#include "conjrank/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "conjrank/errors.hpp"

namespace conjrank {

bool Group::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool Group::is_subgroup_of(const Group& other) const {
  if (degree != other.degree) return false;
  return std::all_of(elements.begin(), elements.end(),
                     [&](const Permutation& p) { return other.contains(p); });
}

Group close_generators(int degree, std::vector<Permutation> gens, long cap,
                       const std::string& name) {
  if (degree < 1) throw Error("degree must be at least 1");
  if (cap < 1) throw Error("cap must be at least 1");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " + std::to_string(degree));

  std::unordered_set<Permutation, PermHash> seen;
  std::deque<Permutation> todo;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Permutation cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : gens) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        if (static_cast<long>(seen.size()) > cap)
          throw CapExceeded("group closure exceeds cap of " + std::to_string(cap) +
                            " elements");
        todo.push_back(std::move(next));
      }
    }
  }

  Group g;
  g.degree = degree;
  g.name = name;
  g.generators = std::move(gens);
  g.elements.assign(seen.begin(), seen.end());
  std::sort(g.elements.begin(), g.elements.end());
  return g;
}

Group trivial_group(int degree) {
  Group g;
  g.degree = degree;
  g.elements = {Permutation::identity(degree)};
  return g;
}

namespace {

// Greedy small generating set: extend whenever the closure so far misses an
// element.  Elements are scanned in canonical order, so the result is
// deterministic.
std::vector<Permutation> pick_generators(int degree, const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermHash> closed;
  closed.insert(Permutation::identity(degree));
  for (const auto& x : elements) {
    if (closed.count(x)) continue;
    gens.push_back(x);
    // rebuild the closure with the enlarged generating set
    std::deque<Permutation> todo(closed.begin(), closed.end());
    while (!todo.empty()) {
      Permutation cur = std::move(todo.front());
      todo.pop_front();
      for (const auto& g : gens) {
        Permutation next = cur * g;
        if (closed.insert(next).second) todo.push_back(std::move(next));
      }
    }
    if (closed.size() == elements.size()) break;
  }
  return gens;
}

}  // namespace

Group group_from_elements(int degree, std::vector<Permutation> elements,
                          const std::string& name) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity()) {
    if (!std::any_of(elements.begin(), elements.end(),
                     [](const Permutation& p) { return p.is_identity(); }))
      throw Error("element list lacks the identity");
  }
  Group g;
  g.degree = degree;
  g.name = name;
  g.generators = pick_generators(degree, elements);
  g.elements = std::move(elements);
  return g;
}

Permutation product_embed(const Permutation& left, const Permutation& right) {
  std::vector<Point> img(left.degree() + right.degree());
  for (int x = 0; x < left.degree(); ++x) img[x] = left.apply(static_cast<Point>(x));
  for (int x = 0; x < right.degree(); ++x)
    img[left.degree() + x] =
        static_cast<Point>(left.degree() + right.apply(static_cast<Point>(x)));
  return Permutation(std::move(img));
}

Permutation product_left(const Permutation& p, int right_degree) {
  return product_embed(p, Permutation::identity(right_degree));
}

Permutation product_right(const Permutation& p, int left_degree) {
  return product_embed(Permutation::identity(left_degree), p);
}

std::pair<Permutation, Permutation> product_split(const Permutation& p, int left_degree) {
  std::vector<Point> a(left_degree);
  std::vector<Point> b(p.degree() - left_degree);
  for (int x = 0; x < left_degree; ++x) a[x] = p.apply(static_cast<Point>(x));
  for (int x = left_degree; x < p.degree(); ++x)
    b[x - left_degree] = static_cast<Point>(p.apply(static_cast<Point>(x)) - left_degree);
  return {Permutation(std::move(a)), Permutation(std::move(b))};
}

Group direct_product(const Group& a, const Group& b, const std::string& name) {
  Group g;
  g.degree = a.degree + b.degree;
  g.name = name.empty() ? a.name + "x" + b.name : name;
  for (const auto& x : a.generators) g.generators.push_back(product_left(x, b.degree));
  for (const auto& y : b.generators) g.generators.push_back(product_right(y, a.degree));
  g.elements.reserve(a.elements.size() * b.elements.size());
  for (const auto& x : a.elements)
    for (const auto& y : b.elements) g.elements.push_back(product_embed(x, y));
  std::sort(g.elements.begin(), g.elements.end());
  return g;
}

}  // namespace conjrank
