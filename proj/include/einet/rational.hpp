#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace einet {

// Exact rational scalar. Arithmetic results are always canonical
// (positive denominator, gcd(num, den) = 1).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Square integer matrix of arrow multiplicities, row-major.
//
// Orientation convention used throughout the project:
//   entry (i, j) counts arrows from node j to node i.
// Many graph libraries use the transpose; all I/O documents this.
struct IntMat {
  int n = 0;
  std::vector<int> a;  // n*n entries, row-major

  IntMat() = default;
  explicit IntMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}
  IntMat(int n_, std::vector<int> entries);

  int &at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  int at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static IntMat identity(int n);
  static IntMat zero(int n) { return IntMat(n); }

  // Total entry sum l(M): the number of arrows the matrix encodes.
  long entry_sum() const;
  bool is_zero() const;
  int row_sum(int i) const;
  int col_sum(int j) const;

  IntMat conjugate(const std::vector<int> &perm) const;  // entry (i,j) -> (perm i, perm j)

  bool operator==(const IntMat &o) const { return n == o.n && a == o.a; }
  bool operator!=(const IntMat &o) const { return !(*this == o); }
  bool operator<(const IntMat &o) const;
};

// A linear subspace of n x n real matrices with exact rational coordinates,
// stored as the unique reduced-row-echelon basis of the span (matrices
// flattened row-major). Two spaces are equal iff their bases are identical.
struct RationalMatrixSpace {
  int ambient_dim = 0;  // flattened length, n*n
  std::vector<std::vector<Rational>> basis;

  int dimension() const { return static_cast<int>(basis.size()); }

  bool operator==(const RationalMatrixSpace &o) const;
  bool operator!=(const RationalMatrixSpace &o) const { return !(*this == o); }
  bool operator<(const RationalMatrixSpace &o) const;  // deterministic total order
};

// Canonical span of a family of integer matrices (all of equal dimensions).
// Throws std::invalid_argument on dimension mismatch or empty input.
RationalMatrixSpace span_of(const std::vector<IntMat> &mats);

// Span of already-flattened rational rows.
RationalMatrixSpace span_of_rows(std::vector<std::vector<Rational>> rows, int ambient_dim);

bool contains(const RationalMatrixSpace &space, const IntMat &m);
bool contains(const RationalMatrixSpace &space, const std::vector<Rational> &v);
bool spaces_equal(const RationalMatrixSpace &a, const RationalMatrixSpace &b);

std::string to_string(const Rational &r);

}  // namespace einet
