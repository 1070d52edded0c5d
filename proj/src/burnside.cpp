#include "conjrank/burnside.hpp"

#include <algorithm>
#include <sstream>

#include "conjrank/errors.hpp"

namespace conjrank {

BurnsideElt::BurnsideElt(RingPtr ring, std::vector<Rational> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != ring_->class_count())
    throw ClassMismatch("coefficient count does not match class count");
  const RationalMatrix& m = ring_->marks_table();
  marks_.assign(coeffs_.size(), Rational(0));
  for (int p = 0; p < m.rows; ++p)
    for (int q = 0; q < m.cols; ++q)
      if (coeffs_[q] != 0) marks_[p] += m.at(p, q) * coeffs_[q];
}

const Rational& BurnsideElt::mark(int class_index) const {
  if (class_index < 0 || class_index >= static_cast<int>(marks_.size()))
    throw ClassMismatch("class index out of range");
  return marks_[class_index];
}

const Rational& BurnsideElt::mark(const Group& p) const {
  return marks_[ring_->class_index(p)];
}

namespace {
void require_same_ring(const BurnsideElt& a, const BurnsideElt& b) {
  if (a.ring() == b.ring()) return;
  if (!a.ring()->group().same_group(b.ring()->group()))
    throw ClassMismatch("Burnside elements live over different groups");
}
}  // namespace

BurnsideElt BurnsideElt::operator+(const BurnsideElt& other) const {
  require_same_ring(*this, other);
  std::vector<Rational> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs_[i];
  return BurnsideElt(ring_, std::move(c));
}

BurnsideElt BurnsideElt::operator-(const BurnsideElt& other) const {
  require_same_ring(*this, other);
  std::vector<Rational> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coeffs_[i];
  return BurnsideElt(ring_, std::move(c));
}

BurnsideElt BurnsideElt::operator*(const BurnsideElt& other) const {
  require_same_ring(*this, other);
  std::vector<Rational> m(marks_);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] *= other.marks_[i];
  return ring_->element_from_marks(m);
}

BurnsideElt BurnsideElt::scaled(const Rational& f) const {
  std::vector<Rational> c(coeffs_);
  for (auto& v : c) v *= f;
  return BurnsideElt(ring_, std::move(c));
}

bool BurnsideElt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& v) { return v == 0; });
}

bool BurnsideElt::operator==(const BurnsideElt& other) const {
  require_same_ring(*this, other);
  return coeffs_ == other.coeffs_;
}

std::string BurnsideElt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag << " ";
    out << "[G/" << ring_->classes()[i].label << "]";
    first = false;
  }
  if (first) return "0";
  return out.str();
}

namespace {

long fixed_coset_count(const IndexedGroup& ig, const Group& p, const Group& q) {
  // |(G/Q)^P|: cosets gQ with g^-1 s g in Q for every generator s of P
  std::vector<int> q_idx;
  for (const auto& h : q.elements) q_idx.push_back(ig.index_of(h));
  std::vector<int> coset_of(ig.size(), -1);
  std::vector<int> reps;
  for (int x = 0; x < ig.size(); ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : q_idx) coset_of[ig.mul(x, h)] = c;
  }
  std::vector<int> p_gens;
  for (const auto& s : p.generators) p_gens.push_back(ig.index_of(s));
  long fixed = 0;
  for (int rep : reps) {
    bool ok = std::all_of(p_gens.begin(), p_gens.end(),
                          [&](int s) { return coset_of[ig.mul(s, rep)] == coset_of[rep]; });
    if (ok) ++fixed;
  }
  return fixed;
}

}  // namespace

BurnsideRing::BurnsideRing(const Group& g, const Caps& caps) : group_(g) {
  classes_ = enumerate_subgroup_classes(g, caps);
  int n = static_cast<int>(classes_.size());
  for (int i = 0; i < n; ++i)
    for (const auto& m : classes_[i].members) member_index_.emplace(m.elements, i);

  IndexedGroup ig(group_);
  marks_ = RationalMatrix(n, n);
  for (int p = 0; p < n; ++p) {
    marks_.row_labels[p] = classes_[p].label;
    marks_.col_labels[p] = classes_[p].label;
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      marks_.at(p, q) =
          fixed_coset_count(ig, classes_[p].representative, classes_[q].representative);

  // class of <u> for every element, for the orbit-count functional
  cyclic_class_of_.resize(group_.elements.size());
  for (std::size_t i = 0; i < group_.elements.size(); ++i) {
    Group cyc = ig.to_group(ig.cyclic_subgroup(static_cast<int>(i)));
    cyclic_class_of_[i] = member_index_.at(cyc.elements);
  }
}

RingPtr BurnsideRing::create(const Group& g, const Caps& caps) {
  return RingPtr(new BurnsideRing(g, caps));
}

int BurnsideRing::class_index(const Group& subgroup) const {
  auto it = member_index_.find(subgroup.elements);
  if (it == member_index_.end())
    throw ClassMismatch("subgroup does not belong to any class of the ring's group");
  return it->second;
}

long BurnsideRing::fixed_points(const Group& p, const Group& q) const {
  IndexedGroup ig(group_);
  return fixed_coset_count(ig, p, q);
}

BurnsideElt BurnsideRing::canonical_basis_element(int class_index) const {
  std::vector<Rational> c(classes_.size(), Rational(0));
  c[class_index] = 1;
  return BurnsideElt(shared_from_this(), std::move(c));
}

BurnsideElt BurnsideRing::element_from_coeffs(std::vector<Rational> coeffs) const {
  return BurnsideElt(shared_from_this(), std::move(coeffs));
}

BurnsideElt BurnsideRing::element_from_marks(const std::vector<Rational>& marks) const {
  return BurnsideElt(shared_from_this(), solve(marks_, marks));
}

BurnsideElt BurnsideRing::zero() const {
  return BurnsideElt(shared_from_this(), std::vector<Rational>(classes_.size(), Rational(0)));
}

BurnsideElt BurnsideRing::one() const {
  return canonical_basis_element(static_cast<int>(classes_.size()) - 1);
}

std::vector<BurnsideElt> BurnsideRing::idempotents() const {
  std::vector<BurnsideElt> out;
  out.reserve(classes_.size());
  for (std::size_t p = 0; p < classes_.size(); ++p) {
    std::vector<Rational> indicator(classes_.size(), Rational(0));
    indicator[p] = 1;
    out.push_back(element_from_marks(indicator));
  }
  return out;
}

Rational BurnsideRing::orbit_count(const Group& p, const BurnsideElt& x) const {
  if (!p.is_subgroup_of(group_)) throw NotASubgroup("orbit functional requires P <= G");
  Rational sum = 0;
  for (const auto& u : p.elements) {
    auto it = std::lower_bound(group_.elements.begin(), group_.elements.end(), u);
    auto pos = static_cast<std::size_t>(it - group_.elements.begin());
    sum += x.mark(cyclic_class_of_[pos]);
  }
  return sum / Rational(p.order());
}

RationalMatrix coset_matrix(const Group& g, const Group& h, const Caps& caps) {
  auto classes = classes_under_ambient(g, h, caps);
  int n = static_cast<int>(classes.size());
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.row_labels[i] = classes[i].label;
    m.col_labels[i] = classes[i].label;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) =
          double_coset_count(g, classes[i].representative, classes[j].representative);
  return m;
}

RankReport verify_theorem_group(const Group& g, const Group& h, const Caps& caps) {
  auto classes = classes_under_ambient(g, h, caps);
  RankReport report;
  report.matrix = coset_matrix(g, h, caps);
  report.rank = rank(report.matrix);
  report.cyclic_classes = static_cast<int>(std::count_if(
      classes.begin(), classes.end(), [](const SubgroupClass& c) { return c.cyclic; }));
  report.all_cyclic = report.cyclic_classes == static_cast<int>(classes.size());
  report.holds = report.rank == report.cyclic_classes;
  return report;
}

}  // namespace conjrank
