#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hopfpi/field.hpp"

namespace hopfpi {

/// Dense matrix over Q or GF(p). Storage is row-major; exactly one of the
/// two backing vectors is populated, selected by the field kind. All
/// arithmetic is exact; mixing fields in one operation throws.
///
/// Tensor legs are flattened left-associated with the rightmost factor
/// fastest: the basis vector e_i (x) f_j of U (x) V has flat index
/// i*dim(V) + j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, int rows, int cols);  // zero-filled

  static Matrix identity(FieldSpec field, int n);
  static Matrix zero(FieldSpec field, int rows, int cols) { return Matrix(field, rows, cols); }
  /// Row-major integer literal, e.g. from_rows(f, {{1,2},{3,4}}).
  static Matrix from_rows(FieldSpec field,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix column(FieldSpec field, const std::vector<std::int64_t>& entries);

  FieldSpec field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(int i, int j) const;
  void set(int i, int j, const Scalar& v);
  void set_int(int i, int j, std::int64_t v);
  /// entry += v (used by accumulation-style constructions).
  void add_int(int i, int j, std::int64_t v);
  void add_scaled_entry(int i, int j, const Scalar& v);

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix scaled(const Scalar& c) const;

  bool operator==(const Matrix& rhs) const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;
  Matrix col_slice(int first, int count) const;
  Matrix row_slice(int first, int count) const;
  Matrix column_at(int j) const;
  /// Rows picked out by index list (duplicates allowed).
  Matrix select_rows(const std::vector<int>& idx) const;

  std::string str() const;  // compact [[..],[..]] form

 private:
  friend class MatrixKernels;
  FieldSpec field_{};
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> q_;
  std::vector<std::int64_t> m_;
};

/// Kronecker product: kron(A,B)[(i,k),(j,l)] = A[i,j] * B[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

/// kron(A, I_n) * X without materializing the Kronecker factor.
Matrix mul_kron_right_id(const Matrix& a, int n, const Matrix& x);
/// kron(I_m, K) * X without materializing the Kronecker factor.
Matrix mul_kron_left_id(int m, const Matrix& k, const Matrix& x);
/// kron(A, B) * X without materializing kron(A, B).
Matrix mul_kron(const Matrix& a, const Matrix& b, const Matrix& x);

/// The flip U (x) V -> V (x) U as a permutation matrix of size mn x mn,
/// where m = dim U and n = dim V.
Matrix swap_map(FieldSpec field, int m, int n);

/// Gauss-Jordan elimination on the rows of m, in place. Afterwards m is in
/// reduced row echelon form with zero rows at the bottom; the return value
/// lists the pivot column of each nonzero row.
std::vector<int> rref_in_place(Matrix& m);

}  // namespace hopfpi
