#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conjrank/fusion.hpp"

namespace conjrank {

// A twisted diagonal stabilizer: { (u, phi(u)) : u in P } for an injective
// homomorphism phi from P into S, stored by aligned element lists.
struct TwistedDiagonal {
  Group p;                        // subgroup of S
  std::vector<Permutation> from;  // elements of P (sorted)
  std::vector<Permutation> to;    // phi of each, aligned with `from`
};

// One orbit type of the S x S action: a stabilizer up to conjugacy and how
// many orbits share it.
struct OrbitType {
  Group stabilizer;  // subgroup of the product group S x S
  long multiplicity = 1;
  long orbit_size = 1;
  std::optional<TwistedDiagonal> twisted;
};

// A finite (S,S)-biset stored as a concrete point set with two commuting
// actions, plus the induced left S x S action (s,t).w = s.w.t^-1.
class Biset {
 public:
  // Actions are given per generator of S, in generator order; the full
  // action tables are closed over words and validated.
  Biset(Group s, int points, const std::vector<Permutation>& left_gen_action,
        const std::vector<Permutation>& right_gen_action, std::string name = "");

  const Group& s() const { return s_; }
  int size() const { return points_; }
  const std::string& name() const { return name_; }
  const Group& product_group() const { return ss_; }  // S x S

  int left_apply(int elt_index, int point) const { return left_[elt_index][point]; }
  int right_apply(int elt_index, int point) const { return right_[elt_index][point]; }

  // orbit partition of the S x S action; deterministic order
  std::vector<std::vector<int>> product_orbits() const;
  // stabilizer in S x S of one point
  Group point_stabilizer(int point) const;

 private:
  Group s_;
  int points_;
  std::string name_;
  std::vector<std::vector<int>> left_;   // per element index of S
  std::vector<std::vector<int>> right_;
  Group ss_;
};

// G with S acting by left/right multiplication.
Biset group_as_biset(const Group& g, const Group& s);

// Complete multiset of orbit stabilizers up to S x S conjugacy, with
// twisted-diagonal identification where the stabilizer meets both factors
// trivially.  Sorted by (order descending, stabilizer representative).
std::vector<OrbitType> orbit_types(const Biset& omega);

// Every stabilizer is a twisted diagonal whose phi is induced by
// conjugation in the ambient group of F.
bool is_f_generated(const Biset& omega, const FusionSystem& f);

enum class StabilityMode { full, partial };

struct StabilityReport {
  bool stable = false;
  StabilityMode mode = StabilityMode::full;
};

// Marks of the product-group action constant on the fusion classes of
// S x S under G x G.  Falls back to the twisted-diagonal-only necessary
// condition when |S| exceeds caps.stability_order.
StabilityReport f_stability(const Biset& omega, const FusionSystem& f,
                            const Caps& caps = Caps::defaults());
bool is_f_stable(const Biset& omega, const FusionSystem& f,
                 const Caps& caps = Caps::defaults());

struct CharacteristicReport {
  bool f_stable = false;
  bool f_generated = false;
  bool index_coprime = false;
  StabilityMode stability_mode = StabilityMode::full;
  bool holds = false;
};

// F-stable, F-generated, and |Omega|/|S| prime to p.
CharacteristicReport is_characteristic(const Biset& omega, const FusionSystem& f,
                                       const Caps& caps = Caps::defaults());

struct ContainsSReport {
  bool orbit_route = false;  // some orbit type is the regular biset S
  bool mark_route = false;   // chi_P([Omega/P]) != 0 for every class P
  bool agree = false;
};

// Some orbit stabilizer is a full twisted diagonal Delta(S, phi) with phi an
// F-automorphism of S; cross-checked against the quotient-mark condition.
ContainsSReport contains_s_report(const Biset& omega, const FusionSystem& f);
bool contains_s(const Biset& omega, const FusionSystem& f);

// The left S-set of right P-orbits, as an element of B(S) over `ring`.
BurnsideElt right_quotient(const Biset& omega, const Group& p, const RingPtr& ring);
BurnsideElt right_quotient(const Biset& omega, const Group& p);

// (|P\Omega/Q|) over fusion-class representatives.
RationalMatrix orbit_matrix(const Biset& omega, const FusionSystem& f);

struct BisetRankReport {
  CharacteristicReport hypotheses;
  ContainsSReport contains_s;
  bool quotient_pattern_ok = false;    // chi_Q([Omega/P]) != 0 => Q <=_F P
  bool quotient_norm_bound_ok = false; // chi_P([Omega/P]) >= |N_S(P)/P|
  bool quotient_basis_ok = false;      // {[Omega/P]} spans the stable algebra
  RationalMatrix matrix;
  int rank = 0;
  int cyclic_f_classes = 0;
  bool holds = false;
};

// Checks the hypotheses (throwing HypothesisFailed naming the first violated
// one), the quotient facts above, and the rank identity.
BisetRankReport verify_general_biset(const Biset& omega, const FusionSystem& f,
                                     const Caps& caps = Caps::defaults());

}  // namespace conjrank
