#include "hopfpi/linalg.hpp"

#include <stdexcept>

namespace hopfpi {

Rref rref(const Matrix& m) {
  Rref r{m, {}};
  r.pivots = rref_in_place(r.mat);
  return r;
}

int rank(const Matrix& m) {
  Matrix work = m;
  return static_cast<int>(rref_in_place(work).size());
}

Subspace Subspace::zero(FieldSpec field, int ambient) {
  Subspace s;
  s.field_ = field;
  s.ambient_ = ambient;
  s.rows_ = Matrix(field, 0, ambient);
  return s;
}

Subspace Subspace::full(FieldSpec field, int ambient) {
  return span_of_rows(Matrix::identity(field, ambient));
}

Subspace Subspace::span_of_rows(const Matrix& rows) {
  Rref r = rref(rows);
  Subspace s;
  s.field_ = rows.field();
  s.ambient_ = rows.cols();
  s.pivots_ = r.pivots;
  s.rows_ = r.mat.row_slice(0, static_cast<int>(r.pivots.size()));
  return s;
}

Subspace Subspace::span_of_columns(const Matrix& cols) { return span_of_rows(cols.transpose()); }

Matrix Subspace::reduce_columns(const Matrix& cols) const {
  if (cols.rows() != ambient_) throw std::invalid_argument("ambient mismatch in reduce_columns");
  if (dim() == 0) return cols;
  // RREF rows have unit pivots and zeros above/below, so the reduction
  // coefficients of a column are just its entries at the pivot positions.
  return cols - basis_columns() * cols.select_rows(pivots_);
}

Matrix Subspace::coordinates(const Matrix& cols) const {
  Matrix y = cols.select_rows(pivots_);
  if (!(basis_columns() * y == cols)) {
    throw std::domain_error("vector not contained in subspace");
  }
  return y;
}

Matrix Subspace::coordinate_map() const {
  Matrix p = Matrix::zero(field_, static_cast<int>(pivots_.size()), ambient_);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    p.set_int(static_cast<int>(r), pivots_[r], 1);
  }
  return p;
}

Subspace Subspace::complement() const {
  std::vector<int> free_cols;
  std::size_t k = 0;
  for (int j = 0; j < ambient_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
    } else {
      free_cols.push_back(j);
    }
  }
  Subspace s;
  s.field_ = field_;
  s.ambient_ = ambient_;
  s.pivots_ = free_cols;
  s.rows_ = Matrix::identity(field_, ambient_).select_rows(free_cols);
  return s;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch in sum");
  return span_of_rows(rows_.vstack(other.rows_));
}

Subspace kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  const int n = m.cols();
  std::vector<int> free_cols;
  {
    std::size_t k = 0;
    for (int j = 0; j < n; ++j) {
      if (k < r.pivots.size() && r.pivots[k] == j) {
        ++k;
      } else {
        free_cols.push_back(j);
      }
    }
  }
  Matrix basis(m.field(), n, static_cast<int>(free_cols.size()));
  for (int c = 0; c < static_cast<int>(free_cols.size()); ++c) {
    const int f = free_cols[c];
    basis.set_int(f, c, 1);
    for (int k = 0; k < static_cast<int>(r.pivots.size()); ++k) {
      Scalar v = r.mat.at(k, f);
      if (!v.is_zero()) basis.set(r.pivots[k], c, v.negated());
    }
  }
  return Subspace::span_of_columns(basis);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("row mismatch in solve");
  Rref r = rref(a.hstack(b));
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    if (r.pivots[k] >= a.cols()) return std::nullopt;  // pivot in the augmented block
    for (int j = 0; j < b.cols(); ++j) {
      x.set(r.pivots[k], j, r.mat.at(static_cast<int>(k), a.cols() + j));
    }
  }
  return x;
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const Matrix& b) {
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  return AffineSolution{*x, kernel_basis(a)};
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x) return std::nullopt;
  if (!((*x) * m).is_identity()) return std::nullopt;
  return x;
}

SpanBuilder::SpanBuilder(FieldSpec field, int ambient) : field_(field), ambient_(ambient) {}

bool SpanBuilder::insert(const Matrix& col) {
  if (col.rows() != ambient_ || col.cols() != 1) {
    throw std::invalid_argument("bad vector shape in SpanBuilder::insert");
  }
  // Reduce against current rows (unit pivots), then normalize and insert
  // keeping rows ordered by pivot column.
  Matrix v = col.transpose();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = v.at(0, pivots_[k]);
    if (!c.is_zero()) v = v - rows_[k].scaled(c);
  }
  int lead = -1;
  for (int j = 0; j < ambient_; ++j) {
    if (!v.at(0, j).is_zero()) {
      lead = j;
      break;
    }
  }
  if (lead < 0) return false;
  Scalar pivot = v.at(0, lead);
  Matrix unit = field_.is_prime()
                    ? v.scaled(Scalar(field_, mod_inverse(pivot.residue(), field_.p)))
                    : v.scaled(Scalar(field_, Rat(1 / pivot.rat())));
  // Clear the new pivot column in the existing rows.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = rows_[k].at(0, lead);
    if (!c.is_zero()) rows_[k] = rows_[k] - unit.scaled(c);
  }
  auto pos = rows_.begin();
  auto piv = pivots_.begin();
  while (piv != pivots_.end() && *piv < lead) {
    ++piv;
    ++pos;
  }
  rows_.insert(pos, unit);
  pivots_.insert(piv, lead);
  return true;
}

Subspace SpanBuilder::snapshot() const {
  Matrix rows(field_, dim(), ambient_);
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < ambient_; ++j) rows.set(i, j, rows_[i].at(0, j));
  }
  return Subspace::span_of_rows(rows);
}

}  // namespace hopfpi
