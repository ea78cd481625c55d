#pragma once

#include <optional>
#include <vector>

#include "hopfpi/matrix.hpp"

namespace hopfpi {

/// Reduced row echelon form. `mat` has the same shape as the input with
/// zero rows moved to the bottom; `pivots[k]` is the pivot column of row k.
struct Rref {
  Matrix mat;
  std::vector<int> pivots;
};

Rref rref(const Matrix& m);

int rank(const Matrix& m);

/// A linear subspace of column vectors in canonical form: the unique RREF
/// basis, stored as rows. Two Subspace values are equal as subspaces iff
/// their stored representations are entrywise equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(FieldSpec field, int ambient);
  static Subspace full(FieldSpec field, int ambient);
  static Subspace span_of_columns(const Matrix& cols);
  static Subspace span_of_rows(const Matrix& rows);

  FieldSpec field() const { return field_; }
  int ambient() const { return ambient_; }
  int dim() const { return rows_.rows(); }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Canonical basis vectors as the rows of a dim x ambient RREF matrix.
  const Matrix& rref_rows() const { return rows_; }
  /// Same basis as columns of an ambient x dim matrix.
  Matrix basis_columns() const { return rows_.transpose(); }

  /// Residual of each column after reduction modulo the subspace.
  Matrix reduce_columns(const Matrix& cols) const;
  bool contains(const Matrix& cols) const { return reduce_columns(cols).is_zero(); }
  bool contains(const Subspace& other) const { return contains(other.basis_columns()); }

  /// Coordinates Y with basis_columns() * Y == cols. Throws std::domain_error
  /// if some column is not in the subspace.
  Matrix coordinates(const Matrix& cols) const;

  /// The dim x ambient pivot-row selector P with P * basis_columns() == I.
  /// P * v gives coordinates only for v inside the subspace.
  Matrix coordinate_map() const;

  /// The coordinate subspace spanned by standard basis vectors at the
  /// non-pivot positions; a direct complement of this subspace.
  Subspace complement() const;

  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  FieldSpec field_{};
  int ambient_ = 0;
  Matrix rows_;  // dim x ambient, RREF, no zero rows
  std::vector<int> pivots_;
};

/// Kernel {x : m x = 0} with canonical basis.
Subspace kernel_basis(const Matrix& m);

/// One solution X of A X = B, or nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

struct AffineSolution {
  Matrix particular;  // one solution of A x = b
  Subspace kernel;    // solution set = particular + kernel
};

std::optional<AffineSolution> solve_affine(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Incremental RREF accumulator for saturation-style closures: vectors are
/// inserted one at a time and the span stays in canonical form throughout.
class SpanBuilder {
 public:
  SpanBuilder(FieldSpec field, int ambient);

  /// Insert a column vector; returns true when the span grew.
  bool insert(const Matrix& col);
  int dim() const { return static_cast<int>(rows_.size()); }
  Subspace snapshot() const;

 private:
  FieldSpec field_;
  int ambient_;
  // Rows kept sorted by pivot column and fully reduced against each other.
  std::vector<Matrix> rows_;
  std::vector<int> pivots_;
};

}  // namespace hopfpi
