#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "conjrank/caps.hpp"
#include "conjrank/group.hpp"

namespace conjrank {

// Element-index view of a group: all subgroup work happens on sorted vectors
// of indices into the parent's canonical element list.  Groups of order up to
// kTableLimit get a dense multiplication table.
class IndexedGroup {
 public:
  static constexpr long kTableLimit = 2048;

  explicit IndexedGroup(const Group& g);

  const Group& group() const { return *group_; }
  int size() const { return n_; }
  int identity() const { return id_; }

  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }  // g x g^-1
  long element_order(int a) const { return orders_[a]; }
  int index_of(const Permutation& p) const;

  // Sorted index vector of <subset ∪ {extra}> closed under multiplication.
  std::vector<int> closure(const std::vector<int>& subset, std::optional<int> extra) const;
  std::vector<int> cyclic_subgroup(int a) const;
  std::vector<int> conjugate_subgroup(const std::vector<int>& sub, int g) const;

  std::vector<int> indices_of(const Group& subgroup) const;
  Group to_group(const std::vector<int>& sub, const std::string& name = "") const;

 private:
  const Group* group_;
  int n_;
  int id_;
  std::vector<int> inv_;
  std::vector<long> orders_;
  std::vector<int> table_;  // n*n when n <= kTableLimit, else empty
  std::unordered_map<Permutation, int, PermHash> index_;
};

// A conjugacy class of subgroups under a stated ambient group.  The
// representative is the lexicographically least member (by canonical element
// list), members are sorted the same way.
struct SubgroupClass {
  Group representative;
  std::vector<Group> members;
  long order = 1;
  bool cyclic = true;
  std::string ambient_name;
  std::string label;  // "o<order>_<k>", assigned after sorting
};

// All subgroups of G, one class per G-conjugacy orbit, sorted by
// (order, representative).  Throws CapExceeded past caps.subgroups.
std::vector<SubgroupClass> enumerate_subgroup_classes(const Group& g,
                                                      const Caps& caps = Caps::defaults());

// Classes of subgroups of H fused under G-conjugacy.  Each class lists the
// subgroups of H only, even though the conjugation runs through all of G.
std::vector<SubgroupClass> classes_under_ambient(const Group& g, const Group& h,
                                                 const Caps& caps = Caps::defaults());

// |P\G/Q|: orbits of P x Q acting on G by (p,q).g = p g q^-1.
long double_coset_count(const Group& g, const Group& p, const Group& q);

bool is_cyclic(const Group& p);

// N_G(P)
Group normalizer(const Group& g, const Group& p);

// A Sylow p-subgroup, grown through normalizers.  Deterministic.
Group sylow_subgroup(const Group& g, long p, const Caps& caps = Caps::defaults());

Group conjugate_subgroup(const Group& h, const Permutation& g);

// True when some g in G conjugates P onto (into) Q.
bool is_conjugate_in(const Group& g, const Group& p, const Group& q);
bool is_subconjugate_in(const Group& g, const Group& p, const Group& q);

// Assigns "o<order>_<k>" labels in order; k counts classes of equal order.
void assign_class_labels(std::vector<SubgroupClass>& classes);

// Index of the class containing the given subgroup, by exact member lookup.
int class_index_of(const std::vector<SubgroupClass>& classes, const Group& subgroup);

}  // namespace conjrank
