#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "conjrank/caps.hpp"
#include "conjrank/group.hpp"
#include "conjrank/matrix.hpp"
#include "conjrank/subgroup.hpp"

namespace conjrank {

class BurnsideRing;
using RingPtr = std::shared_ptr<const BurnsideRing>;

// An element of QB(G) over the canonical basis {[G/P]}, with its mark
// vector cached.  Immutable.
class BurnsideElt {
 public:
  BurnsideElt(RingPtr ring, std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const std::vector<Rational>& marks() const { return marks_; }
  const RingPtr& ring() const { return ring_; }

  // chi_P(x) for the class with the given index / representative subgroup.
  const Rational& mark(int class_index) const;
  const Rational& mark(const Group& p) const;

  BurnsideElt operator+(const BurnsideElt& other) const;
  BurnsideElt operator-(const BurnsideElt& other) const;
  BurnsideElt operator*(const BurnsideElt& other) const;  // mark-wise product
  BurnsideElt scaled(const Rational& f) const;
  bool is_zero() const;
  bool operator==(const BurnsideElt& other) const;

  std::string to_string() const;  // e.g. "[G/o2_1] - 1/2 [G/o1_1]"

 private:
  RingPtr ring_;
  std::vector<Rational> coeffs_;
  std::vector<Rational> marks_;
};

// The marks table and class list of one group: M[P][Q] = chi_P([G/Q]),
// the number of P-fixed cosets in G/Q.  Rows and columns run over the
// conjugacy classes of subgroups sorted by (order, representative); the
// nonvanishing pattern is chi_P([G/Q]) != 0  =>  P subconjugate to Q.
class BurnsideRing : public std::enable_shared_from_this<BurnsideRing> {
 public:
  static RingPtr create(const Group& g, const Caps& caps = Caps::defaults());

  const Group& group() const { return group_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const RationalMatrix& marks_table() const { return marks_; }
  int class_count() const { return static_cast<int>(classes_.size()); }

  int class_index(const Group& subgroup) const;  // exact member lookup
  long fixed_points(const Group& p, const Group& q) const;  // |(G/Q)^P|

  BurnsideElt canonical_basis_element(int class_index) const;  // [G/P]
  BurnsideElt element_from_coeffs(std::vector<Rational> coeffs) const;
  BurnsideElt element_from_marks(const std::vector<Rational>& marks) const;
  BurnsideElt zero() const;
  BurnsideElt one() const;  // [G/G]

  // The orthogonal idempotents e_P, one per class: mark vector = indicator.
  std::vector<BurnsideElt> idempotents() const;

  // rho_P(x) = (1/|P|) sum_{u in P} chi_<u>(x), the P-orbit count functional.
  Rational orbit_count(const Group& p, const BurnsideElt& x) const;

 private:
  explicit BurnsideRing(const Group& g, const Caps& caps);

  Group group_;
  std::vector<SubgroupClass> classes_;
  RationalMatrix marks_;
  std::map<std::vector<Permutation>, int> member_index_;  // element list -> class
  std::vector<int> cyclic_class_of_;  // class of <u> per element of G
};

// Free-function spellings used by the verifiers.
inline RingPtr marks_table(const Group& g, const Caps& caps = Caps::defaults()) {
  return BurnsideRing::create(g, caps);
}
inline Rational rho(const Group& p, const BurnsideElt& x) {
  return x.ring()->orbit_count(p, x);
}

// The double-coset matrix (|P\G/Q|) over classes_under_ambient(G, H).
RationalMatrix coset_matrix(const Group& g, const Group& h,
                            const Caps& caps = Caps::defaults());

struct RankReport {
  RationalMatrix matrix;
  int rank = 0;
  int cyclic_classes = 0;
  bool holds = false;
  bool all_cyclic = false;  // every class cyclic (matrix must be nonsingular)
};

// rank(coset_matrix(G,H)) == number of cyclic G-classes of subgroups of H.
RankReport verify_theorem_group(const Group& g, const Group& h,
                                const Caps& caps = Caps::defaults());

}  // namespace conjrank
