#pragma once

#include <string>
#include <vector>

#include "conjrank/caps.hpp"
#include "conjrank/perm.hpp"

namespace conjrank {

// A finite permutation group given by its full, sorted element list.
// Instances are immutable after construction; subgroups share the degree
// of their ambient group.
struct Group {
  int degree = 1;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted, closed, contains identity
  std::string name;

  long order() const { return static_cast<long>(elements.size()); }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const Group& other) const;

  // Groups compare by element set; names are labels only.
  bool same_group(const Group& other) const {
    return degree == other.degree && elements == other.elements;
  }
};

// Closes a generating set by breadth-first multiplication.  Throws
// CapExceeded once more than `cap` elements appear and DegreeMismatch if the
// generators disagree on degree.
Group close_generators(int degree, std::vector<Permutation> gens, long cap,
                       const std::string& name = "");

inline Group close_generators(int degree, std::vector<Permutation> gens,
                              const Caps& caps, const std::string& name = "") {
  return close_generators(degree, std::move(gens), caps.order, name);
}

Group trivial_group(int degree);

// Builds a group from an already closed element list (validated), picking a
// small generating set greedily.
Group group_from_elements(int degree, std::vector<Permutation> elements,
                          const std::string& name = "");

// The direct product acting on the disjoint union of the two point sets.
Group direct_product(const Group& a, const Group& b, const std::string& name = "");

// Embeddings into a direct product of two degree-d groups.
Permutation product_embed(const Permutation& left, const Permutation& right);
Permutation product_left(const Permutation& p, int right_degree);
Permutation product_right(const Permutation& p, int left_degree);
// Splits an element of a direct product back into its two factors.
std::pair<Permutation, Permutation> product_split(const Permutation& p, int left_degree);

}  // namespace conjrank
