#include "einet/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace einet {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

IntMat::IntMat(int n_, std::vector<int> entries) : n(n_), a(std::move(entries)) {
  if (a.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("IntMat: entry count does not match dimension");
}

IntMat IntMat::identity(int n) {
  IntMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

long IntMat::entry_sum() const {
  long s = 0;
  for (int x : a) s += x;
  return s;
}

bool IntMat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

int IntMat::row_sum(int i) const {
  int s = 0;
  for (int j = 0; j < n; ++j) s += at(i, j);
  return s;
}

int IntMat::col_sum(int j) const {
  int s = 0;
  for (int i = 0; i < n; ++i) s += at(i, j);
  return s;
}

IntMat IntMat::conjugate(const std::vector<int> &perm) const {
  IntMat out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(perm[i], perm[j]) = at(i, j);
  return out;
}

bool IntMat::operator<(const IntMat &o) const {
  if (n != o.n) return n < o.n;
  return a < o.a;
}

bool RationalMatrixSpace::operator==(const RationalMatrixSpace &o) const {
  if (ambient_dim != o.ambient_dim || basis.size() != o.basis.size()) return false;
  for (size_t r = 0; r < basis.size(); ++r)
    for (int c = 0; c < ambient_dim; ++c)
      if (cmp(basis[r][c], o.basis[r][c]) != 0) return false;
  return true;
}

bool RationalMatrixSpace::operator<(const RationalMatrixSpace &o) const {
  if (ambient_dim != o.ambient_dim) return ambient_dim < o.ambient_dim;
  if (basis.size() != o.basis.size()) return basis.size() < o.basis.size();
  for (size_t r = 0; r < basis.size(); ++r)
    for (int c = 0; c < ambient_dim; ++c) {
      int s = cmp(basis[r][c], o.basis[r][c]);
      if (s != 0) return s < 0;
    }
  return false;
}

namespace {

// In-place reduction to strict reduced row echelon form; zero rows dropped,
// rows ordered by pivot column. This is the unique canonical basis.
void rref(std::vector<std::vector<Rational>> &rows, int width) {
  size_t pivot_row = 0;
  for (int col = 0; col < width && pivot_row < rows.size(); ++col) {
    size_t sel = pivot_row;
    while (sel < rows.size() && sgn(rows[sel][col]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    Rational inv = 1 / rows[pivot_row][col];
    for (int c = col; c < width; ++c) rows[pivot_row][c] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || sgn(rows[r][col]) == 0) continue;
      Rational f = rows[r][col];
      for (int c = col; c < width; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
}

}  // namespace

RationalMatrixSpace span_of_rows(std::vector<std::vector<Rational>> rows, int ambient_dim) {
  for (const auto &r : rows)
    if (static_cast<int>(r.size()) != ambient_dim)
      throw std::invalid_argument("span_of_rows: row length mismatch");
  rref(rows, ambient_dim);
  RationalMatrixSpace s;
  s.ambient_dim = ambient_dim;
  s.basis = std::move(rows);
  return s;
}

RationalMatrixSpace span_of(const std::vector<IntMat> &mats) {
  if (mats.empty()) throw std::invalid_argument("span_of: empty matrix family");
  int n = mats.front().n;
  int width = n * n;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(mats.size());
  for (const auto &m : mats) {
    if (m.n != n) throw std::invalid_argument("span_of: matrix dimension mismatch");
    std::vector<Rational> row(width);
    for (int i = 0; i < width; ++i) row[i] = m.a[i];
    rows.push_back(std::move(row));
  }
  return span_of_rows(std::move(rows), width);
}

bool contains(const RationalMatrixSpace &space, const std::vector<Rational> &v) {
  if (static_cast<int>(v.size()) != space.ambient_dim)
    throw std::invalid_argument("contains: vector dimension mismatch");
  std::vector<Rational> residual = v;
  for (const auto &row : space.basis) {
    int pivot = 0;
    while (pivot < space.ambient_dim && sgn(row[pivot]) == 0) ++pivot;
    if (pivot == space.ambient_dim) continue;
    if (sgn(residual[pivot]) == 0) continue;
    Rational f = residual[pivot];  // pivot entry of the basis row is 1
    for (int c = 0; c < space.ambient_dim; ++c) residual[c] -= f * row[c];
  }
  return std::all_of(residual.begin(), residual.end(),
                     [](const Rational &x) { return sgn(x) == 0; });
}

bool contains(const RationalMatrixSpace &space, const IntMat &m) {
  std::vector<Rational> v(m.a.size());
  for (size_t i = 0; i < m.a.size(); ++i) v[i] = m.a[i];
  return contains(space, v);
}

bool spaces_equal(const RationalMatrixSpace &a, const RationalMatrixSpace &b) {
  return a == b;
}

std::string to_string(const Rational &r) { return r.get_str(); }

}  // namespace einet
