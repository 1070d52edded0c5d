#include "conjrank/matrix.hpp"

#include <algorithm>

#include "conjrank/errors.hpp"

namespace conjrank {

std::string fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("bad rational: " + text);
  }
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols, rows);
  t.row_labels = col_labels;
  t.col_labels = row_labels;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

namespace {

IntMatrix scale_rows_integral(const RationalMatrix& m) {
  IntMatrix a(m.rows, IntVector(m.cols));
  for (int r = 0; r < m.rows; ++r) {
    Integer lcm = 1;
    for (int c = 0; c < m.cols; ++c)
      lcm = boost::multiprecision::lcm(lcm, denominator(m.at(r, c)));
    for (int c = 0; c < m.cols; ++c) {
      const Rational& v = m.at(r, c);
      a[r][c] = numerator(v) * (lcm / denominator(v));
    }
  }
  return a;
}

}  // namespace

int rank(const IntMatrix& a_in) {
  IntMatrix a = a_in;
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  Integer prev = 1;
  int r = 0;
  for (int step = 0; r < rows && step < cols; ++step) {
    // full pivot search: smallest nonzero magnitude keeps entries small
    int pr = -1, pc = -1;
    Integer best = 0;
    for (int i = r; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        Integer mag = abs(a[i][j]);
        if (pr < 0 || mag < best) {
          best = mag;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    std::swap(a[r], a[pr]);
    Integer pivot = a[r][pc];
    for (int i = r + 1; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        if (j == pc) continue;
        a[i][j] = (a[i][j] * pivot - a[i][pc] * a[r][j]) / prev;
      }
      a[i][pc] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

int rank(const RationalMatrix& m) { return rank(scale_rows_integral(m)); }

std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& target) {
  if (m.rows != m.cols) throw SingularMatrix("solve requires a square matrix");
  if (static_cast<int>(target.size()) != m.rows)
    throw SingularMatrix("target length does not match matrix");
  int n = m.rows;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = m.at(r, c);
    a[r][n] = target[r];
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularMatrix("matrix is singular");
    std::swap(a[c], a[pivot]);
    Rational inv = a[c][c];
    for (int j = c; j <= n; ++j) a[c][j] /= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (int r = 0; r < n; ++r) x[r] = a[r][n];
  return x;
}

namespace {

// Clears column `col` among rows [from, rows) by Euclidean elimination,
// leaving at most one nonzero entry, which is moved to row `from`.
// Returns true when a pivot remains.
bool gcd_eliminate(IntMatrix& a, int from, int col) {
  int rows = static_cast<int>(a.size());
  for (;;) {
    int best = -1;
    for (int r = from; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      if (best < 0 || abs(a[r][col]) < abs(a[best][col])) best = r;
    }
    if (best < 0) return false;
    bool lone = true;
    for (int r = from; r < rows; ++r) {
      if (r == best || a[r][col] == 0) continue;
      Integer q = a[r][col] / a[best][col];  // truncated division
      if (q != 0)
        for (std::size_t j = 0; j < a[r].size(); ++j) a[r][j] -= q * a[best][j];
      if (a[r][col] != 0) lone = false;
    }
    if (lone) {
      std::swap(a[from], a[best]);
      if (a[from][col] < 0)
        for (auto& v : a[from]) v = -v;
      return true;
    }
  }
}

}  // namespace

std::vector<IntVector> integer_kernel_basis(const IntMatrix& a, int cols) {
  int m = static_cast<int>(a.size());
  // rows of work = [A^T | I]: reduce the A^T part, kernel shows up in I part
  IntMatrix work(cols, IntVector(m + cols));
  for (int i = 0; i < cols; ++i) {
    for (int r = 0; r < m; ++r) work[i][r] = a[r][i];
    work[i][m + i] = 1;
  }
  int top = 0;
  for (int c = 0; c < m && top < cols; ++c)
    if (gcd_eliminate(work, top, c)) ++top;

  IntMatrix kernel;
  for (int r = top; r < cols; ++r)
    kernel.emplace_back(work[r].begin() + m, work[r].end());

  // Hermite echelon normalization of the kernel rows.
  int row = 0;
  int krows = static_cast<int>(kernel.size());
  for (int c = 0; c < cols && row < krows; ++c) {
    if (!gcd_eliminate(kernel, row, c)) continue;
    for (int r = 0; r < row; ++r) {
      Integer q = kernel[r][c] / kernel[row][c];
      if (kernel[r][c] - q * kernel[row][c] < 0) q -= 1;  // floor
      if (q != 0)
        for (int j = 0; j < cols; ++j) kernel[r][j] -= q * kernel[row][j];
    }
    ++row;
  }
  return kernel;
}

}  // namespace conjrank
