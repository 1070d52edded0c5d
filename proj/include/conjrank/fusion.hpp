#pragma once

#include <string>
#include <vector>

#include "conjrank/burnside.hpp"

namespace conjrank {

// One fusion class: a union of S-conjugacy classes of subgroups of S that
// are conjugate in the ambient group.
struct FClass {
  std::vector<int> s_class_indices;  // into FusionSystem::s_classes
  Group representative;              // least member across the union
  long order = 1;
  bool cyclic = true;
  std::string label;
};

// The fusion system of an ambient group G on a p-subgroup S: subgroups of S
// up to S-conjugacy together with their fusion under G-conjugacy.
// Immutable after realize().
struct FusionSystem {
  Group ambient;
  Group s;
  long p = 2;
  RingPtr s_ring;                       // Burnside ring of S
  std::vector<SubgroupClass> s_classes;  // == s_ring->classes()
  std::vector<FClass> f_classes;
  std::vector<int> f_class_of;  // s_class index -> f_class index

  int f_class_count() const { return static_cast<int>(f_classes.size()); }
  int cyclic_f_class_count() const;
  std::string name() const;
};

// Builds the fusion data for S <= G with |S| a power of p.
FusionSystem realize(const Group& g, const Group& s, long p,
                     const Caps& caps = Caps::defaults());

// e_P summed over the S-classes in one fusion class; marks are the indicator
// of the class, so these are orthogonal idempotents summing to [S/S].
BurnsideElt f_idempotent(const FusionSystem& f, int f_class_index);
std::vector<BurnsideElt> f_idempotents(const FusionSystem& f);

// Marks constant on every fusion class.
bool is_f_stable(const FusionSystem& f, const BurnsideElt& x);

// A stable-basis element together with the fusion class its echelon pivot
// lands in.
struct StableElt {
  BurnsideElt elt;
  int f_class_index;
};

// Integral basis of the stable lattice {x in B(S) : marks constant on
// fusion classes}, in Hermite echelon form over coordinates sorted by
// decreasing subgroup order.  One element per fusion class, each with a
// nonzero mark at its own class.
std::vector<StableElt> stable_basis(const FusionSystem& f);

// rank of (rho_P(b_Q)) over fusion-class representatives P and a basis
// {b_Q} of the stable subalgebra; the rank does not depend on the basis.
struct FusionRankReport {
  RationalMatrix matrix;
  int rank = 0;
  int cyclic_f_classes = 0;
  bool holds = false;
};

FusionRankReport theorem4_rank(const FusionSystem& f);

// Same report computed from an explicit basis (used for the
// basis-independence checks).
FusionRankReport orbit_rank_for_basis(const FusionSystem& f,
                                      const std::vector<BurnsideElt>& basis,
                                      const std::vector<std::string>& labels);

// rank of the double-coset matrix (|P\G/Q|) over fusion classes.
RankReport verify_theorem_fusion_group(const FusionSystem& f,
                                       const Caps& caps = Caps::defaults());

}  // namespace conjrank
