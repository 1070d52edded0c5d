#include "conjrank/fusion.hpp"

#include <algorithm>
#include <numeric>

#include "conjrank/errors.hpp"

namespace conjrank {

int FusionSystem::cyclic_f_class_count() const {
  return static_cast<int>(std::count_if(f_classes.begin(), f_classes.end(),
                                        [](const FClass& c) { return c.cyclic; }));
}

std::string FusionSystem::name() const {
  std::string sn = s.name.empty() ? "S" : s.name;
  std::string gn = ambient.name.empty() ? "G" : ambient.name;
  return "F_" + sn + "(" + gn + ")";
}

FusionSystem realize(const Group& g, const Group& s, long p, const Caps& caps) {
  if (!s.is_subgroup_of(g)) throw NotASubgroup("S is not a subgroup of G");
  if (p < 2) throw NotAPGroup("p must be a prime");
  long n = s.order();
  while (n % p == 0) n /= p;
  if (n != 1) throw NotAPGroup("|S| is not a power of p");

  FusionSystem f;
  f.ambient = g;
  f.s = s;
  f.p = p;
  f.s_ring = BurnsideRing::create(s, caps);
  f.s_classes = f.s_ring->classes();

  // fuse S-classes whose representatives are conjugate in G
  int sc = static_cast<int>(f.s_classes.size());
  std::vector<int> bucket(sc);
  std::iota(bucket.begin(), bucket.end(), 0);
  for (int i = 0; i < sc; ++i) {
    if (bucket[i] != i) continue;
    for (int j = i + 1; j < sc; ++j) {
      if (bucket[j] != j) continue;
      if (f.s_classes[i].order != f.s_classes[j].order) continue;
      if (is_conjugate_in(g, f.s_classes[i].representative, f.s_classes[j].representative))
        bucket[j] = i;
    }
  }

  std::vector<FClass> classes;
  std::vector<int> class_of(sc, -1);
  for (int i = 0; i < sc; ++i) {
    if (bucket[i] != i) continue;
    FClass c;
    for (int j = 0; j < sc; ++j)
      if (bucket[j] == i) c.s_class_indices.push_back(j);
    c.order = f.s_classes[i].order;
    c.cyclic = f.s_classes[i].cyclic;
    c.representative = f.s_classes[c.s_class_indices.front()].representative;
    for (int j : c.s_class_indices)
      if (f.s_classes[j].representative.elements < c.representative.elements)
        c.representative = f.s_classes[j].representative;
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const FClass& a, const FClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.representative.elements < b.representative.elements;
  });
  long prev_order = -1;
  int k = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    k = (classes[i].order == prev_order) ? k + 1 : 1;
    prev_order = classes[i].order;
    classes[i].label = "o" + std::to_string(classes[i].order) + "_" + std::to_string(k);
  }
  f.f_class_of.assign(sc, -1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int j : classes[i].s_class_indices) f.f_class_of[j] = static_cast<int>(i);
  f.f_classes = std::move(classes);

  // all members of one fusion class share cyclicity by construction; the
  // flag is per S-class and conjugation preserves it
  return f;
}

BurnsideElt f_idempotent(const FusionSystem& f, int f_class_index) {
  if (f_class_index < 0 || f_class_index >= f.f_class_count())
    throw ClassMismatch("fusion class index out of range");
  std::vector<Rational> indicator(f.s_classes.size(), Rational(0));
  for (int j : f.f_classes[f_class_index].s_class_indices) indicator[j] = 1;
  return f.s_ring->element_from_marks(indicator);
}

std::vector<BurnsideElt> f_idempotents(const FusionSystem& f) {
  std::vector<BurnsideElt> out;
  out.reserve(f.f_classes.size());
  for (int i = 0; i < f.f_class_count(); ++i) out.push_back(f_idempotent(f, i));
  return out;
}

bool is_f_stable(const FusionSystem& f, const BurnsideElt& x) {
  for (const FClass& c : f.f_classes) {
    const Rational& first = x.mark(c.s_class_indices.front());
    for (int j : c.s_class_indices)
      if (x.mark(j) != first) return false;
  }
  return true;
}

std::vector<StableElt> stable_basis(const FusionSystem& f) {
  int sc = static_cast<int>(f.s_classes.size());
  const RationalMatrix& marks = f.s_ring->marks_table();

  // mark-difference constraints, as integer rows over the coefficients
  IntMatrix constraints;
  for (const FClass& c : f.f_classes) {
    int first = c.s_class_indices.front();
    for (std::size_t k = 1; k < c.s_class_indices.size(); ++k) {
      int other = c.s_class_indices[k];
      IntVector row(sc);
      for (int q = 0; q < sc; ++q)
        row[q] = numerator(marks.at(first, q)) - numerator(marks.at(other, q));
      constraints.push_back(std::move(row));
    }
  }

  // coordinates sorted by decreasing subgroup order (classes are stored
  // ascending, so simply reverse)
  std::vector<int> coord(sc);
  for (int i = 0; i < sc; ++i) coord[i] = sc - 1 - i;
  IntMatrix permuted(constraints.size(), IntVector(sc));
  for (std::size_t r = 0; r < constraints.size(); ++r)
    for (int c = 0; c < sc; ++c) permuted[r][c] = constraints[r][coord[c]];

  auto kernel = integer_kernel_basis(permuted, sc);
  if (static_cast<int>(kernel.size()) != f.f_class_count())
    throw InternalError("stable lattice rank does not match fusion class count");

  std::vector<StableElt> basis;
  for (const IntVector& vec : kernel) {
    int pivot = -1;
    for (int c = 0; c < sc; ++c)
      if (vec[c] != 0) {
        pivot = c;
        break;
      }
    if (pivot < 0) throw InternalError("zero vector in stable basis");
    std::vector<Rational> coeffs(sc, Rational(0));
    for (int c = 0; c < sc; ++c) coeffs[coord[c]] = Rational(vec[c]);
    StableElt se{f.s_ring->element_from_coeffs(std::move(coeffs)), f.f_class_of[coord[pivot]]};
    basis.push_back(std::move(se));
  }

  // exactly one element per fusion class, each with a nonzero mark there
  std::vector<bool> hit(f.f_classes.size(), false);
  for (const StableElt& se : basis) {
    if (hit[se.f_class_index]) throw InternalError("two stable basis pivots in one fusion class");
    hit[se.f_class_index] = true;
    int s_idx = f.f_classes[se.f_class_index].s_class_indices.front();
    if (se.elt.mark(s_idx) == 0)
      throw InternalError("stable basis element with zero mark at its own class");
  }
  return basis;
}

FusionRankReport orbit_rank_for_basis(const FusionSystem& f,
                                      const std::vector<BurnsideElt>& basis,
                                      const std::vector<std::string>& labels) {
  int fc = f.f_class_count();
  if (static_cast<int>(basis.size()) != fc)
    throw ClassMismatch("basis size does not match fusion class count");
  RationalMatrix m(fc, fc);
  for (int i = 0; i < fc; ++i) {
    m.row_labels[i] = f.f_classes[i].label;
    m.col_labels[i] = labels.empty() ? f.f_classes[i].label : labels[i];
  }
  for (int i = 0; i < fc; ++i) {
    const Group& rep = f.f_classes[i].representative;
    for (int j = 0; j < fc; ++j) m.at(i, j) = f.s_ring->orbit_count(rep, basis[j]);
  }
  FusionRankReport report;
  report.matrix = std::move(m);
  report.rank = rank(report.matrix);
  report.cyclic_f_classes = f.cyclic_f_class_count();
  report.holds = report.rank == report.cyclic_f_classes;
  return report;
}

FusionRankReport theorem4_rank(const FusionSystem& f) {
  auto basis = stable_basis(f);
  std::vector<BurnsideElt> elts;
  std::vector<std::string> labels;
  for (const StableElt& se : basis) {
    elts.push_back(se.elt);
    labels.push_back("b_" + f.f_classes[se.f_class_index].label);
  }
  return orbit_rank_for_basis(f, elts, labels);
}

RankReport verify_theorem_fusion_group(const FusionSystem& f, const Caps& caps) {
  return verify_theorem_group(f.ambient, f.s, caps);
}

}  // namespace conjrank
