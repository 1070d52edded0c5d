#pragma once

#include <string>
#include <vector>

#include "conjrank/rational.hpp"

namespace conjrank {

// Dense rational matrix with row/column labels naming subgroup classes.
struct RationalMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> entries;  // row-major
  std::vector<std::string> row_labels, col_labels;

  RationalMatrix() = default;
  RationalMatrix(int r, int c)
      : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c),
        row_labels(r), col_labels(c) {}

  Rational& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }

  RationalMatrix transposed() const;
  bool operator==(const RationalMatrix& other) const {
    return rows == other.rows && cols == other.cols && entries == other.entries;
  }
};

// Exact rank over Q: rows are scaled integral, then reduced by fraction-free
// Bareiss elimination with full pivoting (smallest nonzero pivot).
int rank(const RationalMatrix& m);

// Exact solution of M x = target for square invertible M; throws
// SingularMatrix otherwise.
std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& target);

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // rows

int rank(const IntMatrix& a);

// Basis of the integer lattice {x : A x = 0} in Hermite echelon form:
// pivots strictly increasing, leading entries positive, entries above each
// pivot reduced into [0, pivot).  Deterministic for a fixed column order.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& a, int cols);

}  // namespace conjrank
