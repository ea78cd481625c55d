#include "hopfpi/matrix.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace hopfpi {

namespace {

struct RatOps {
  using T = Rat;
  T zero() const { return T(0); }
  T one() const { return T(1); }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const { return T(a + b); }
  T sub(const T& a, const T& b) const { return T(a - b); }
  T mul(const T& a, const T& b) const { return T(a * b); }
  T neg(const T& a) const { return T(-a); }
  T div(const T& a, const T& b) const { return T(a / b); }
};

struct ModOps {
  std::int64_t p;
  using T = std::int64_t;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const {
    T s = a - b;
    return s < 0 ? s + p : s;
  }
  T mul(T a, T b) const { return (a * b) % p; }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T div(T a, T b) const { return mul(a, mod_inverse(b, p)); }
};

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
  if (!(a.field() == b.field())) {
    throw std::invalid_argument(std::string("field mismatch in ") + what);
  }
}

}  // namespace

/// All typed kernels live here; public Matrix methods dispatch on field kind.
class MatrixKernels {
 public:
  template <class T>
  static std::vector<T>& store(Matrix& m);
  template <class T>
  static const std::vector<T>& store(const Matrix& m);

  template <class Ops>
  static Matrix binary(const Ops& ops, const Matrix& a, const Matrix& b, bool add) {
    Matrix r(a.field_, a.rows_, a.cols_);
    const auto& A = store<typename Ops::T>(a);
    const auto& B = store<typename Ops::T>(b);
    auto& R = store<typename Ops::T>(r);
    for (std::size_t i = 0; i < A.size(); ++i) {
      R[i] = add ? ops.add(A[i], B[i]) : ops.sub(A[i], B[i]);
    }
    return r;
  }

  template <class Ops>
  static Matrix negate(const Ops& ops, const Matrix& a) {
    Matrix r(a.field_, a.rows_, a.cols_);
    const auto& A = store<typename Ops::T>(a);
    auto& R = store<typename Ops::T>(r);
    for (std::size_t i = 0; i < A.size(); ++i) R[i] = ops.neg(A[i]);
    return r;
  }

  template <class Ops>
  static Matrix mul(const Ops& ops, const Matrix& a, const Matrix& b) {
    Matrix r(a.field_, a.rows_, b.cols_);
    const auto& A = store<typename Ops::T>(a);
    const auto& B = store<typename Ops::T>(b);
    auto& R = store<typename Ops::T>(r);
    const int n = a.rows_, k = a.cols_, m = b.cols_;
    if constexpr (std::is_same_v<Ops, ModOps>) {
      // Delay reduction across the inner loop when the sum cannot overflow.
      const std::int64_t pm1 = ops.p - 1;
      if (k > 0 && pm1 > 0 && pm1 <= std::numeric_limits<std::int64_t>::max() / pm1 / k) {
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < m; ++j) {
            std::int64_t acc = 0;
            for (int l = 0; l < k; ++l) acc += A[i * k + l] * B[l * m + j];
            R[i * m + j] = acc % ops.p;
          }
        }
        return r;
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < k; ++l) {
        const auto& av = A[i * k + l];
        if (ops.is_zero(av)) continue;
        for (int j = 0; j < m; ++j) {
          R[i * m + j] = ops.add(R[i * m + j], ops.mul(av, B[l * m + j]));
        }
      }
    }
    return r;
  }

  template <class Ops>
  static Matrix kron(const Ops& ops, const Matrix& a, const Matrix& b) {
    Matrix r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    const auto& A = store<typename Ops::T>(a);
    const auto& B = store<typename Ops::T>(b);
    auto& R = store<typename Ops::T>(r);
    const int bc = b.cols_, rc = r.cols_;
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) {
        const auto& av = A[i * a.cols_ + j];
        if (ops.is_zero(av)) continue;
        for (int k = 0; k < b.rows_; ++k) {
          for (int l = 0; l < bc; ++l) {
            R[(i * b.rows_ + k) * rc + (j * bc + l)] = ops.mul(av, B[k * bc + l]);
          }
        }
      }
    }
    return r;
  }

  // kron(A, I_n) * X: result[(i,k), c] = sum_j A[i,j] X[(j,k), c].
  template <class Ops>
  static Matrix mul_kron_right_id(const Ops& ops, const Matrix& a, int n, const Matrix& x) {
    Matrix r(a.field_, a.rows_ * n, x.cols_);
    const auto& A = store<typename Ops::T>(a);
    const auto& X = store<typename Ops::T>(x);
    auto& R = store<typename Ops::T>(r);
    const int c = x.cols_;
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) {
        const auto& av = A[i * a.cols_ + j];
        if (ops.is_zero(av)) continue;
        for (int k = 0; k < n; ++k) {
          const std::size_t rrow = static_cast<std::size_t>(i * n + k) * c;
          const std::size_t xrow = static_cast<std::size_t>(j * n + k) * c;
          for (int cc = 0; cc < c; ++cc) {
            R[rrow + cc] = ops.add(R[rrow + cc], ops.mul(av, X[xrow + cc]));
          }
        }
      }
    }
    return r;
  }

  // kron(I_m, K) * X: result[(b,i), c] = sum_j K[i,j] X[(b,j), c].
  template <class Ops>
  static Matrix mul_kron_left_id(const Ops& ops, int m, const Matrix& k, const Matrix& x) {
    Matrix r(k.field_, m * k.rows_, x.cols_);
    const auto& K = store<typename Ops::T>(k);
    const auto& X = store<typename Ops::T>(x);
    auto& R = store<typename Ops::T>(r);
    const int c = x.cols_;
    for (int b = 0; b < m; ++b) {
      for (int i = 0; i < k.rows_; ++i) {
        for (int j = 0; j < k.cols_; ++j) {
          const auto& kv = K[i * k.cols_ + j];
          if (ops.is_zero(kv)) continue;
          const std::size_t rrow = static_cast<std::size_t>(b * k.rows_ + i) * c;
          const std::size_t xrow = static_cast<std::size_t>(b * k.cols_ + j) * c;
          for (int cc = 0; cc < c; ++cc) {
            R[rrow + cc] = ops.add(R[rrow + cc], ops.mul(kv, X[xrow + cc]));
          }
        }
      }
    }
    return r;
  }

  template <class Ops>
  static Matrix scaled(const Ops& ops, const Matrix& a, const typename Ops::T& c) {
    Matrix r(a.field_, a.rows_, a.cols_);
    const auto& A = store<typename Ops::T>(a);
    auto& R = store<typename Ops::T>(r);
    for (std::size_t i = 0; i < A.size(); ++i) R[i] = ops.mul(A[i], c);
    return r;
  }

  template <class Ops>
  static std::vector<int> rref(const Ops& ops, Matrix& m) {
    auto& A = store<typename Ops::T>(m);
    const int rows = m.rows_, cols = m.cols_;
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
      int sel = -1;
      for (int i = lead; i < rows; ++i) {
        if (!ops.is_zero(A[static_cast<std::size_t>(i) * cols + col])) {
          sel = i;
          break;
        }
      }
      if (sel < 0) continue;
      if (sel != lead) {
        for (int j = 0; j < cols; ++j) {
          std::swap(A[static_cast<std::size_t>(sel) * cols + j],
                    A[static_cast<std::size_t>(lead) * cols + j]);
        }
      }
      const std::size_t lr = static_cast<std::size_t>(lead) * cols;
      const auto inv_pivot = ops.div(ops.one(), A[lr + col]);
      for (int j = col; j < cols; ++j) A[lr + j] = ops.mul(A[lr + j], inv_pivot);
      for (int i = 0; i < rows; ++i) {
        if (i == lead) continue;
        const std::size_t ir = static_cast<std::size_t>(i) * cols;
        const auto factor = A[ir + col];
        if (ops.is_zero(factor)) continue;
        for (int j = col; j < cols; ++j) {
          A[ir + j] = ops.sub(A[ir + j], ops.mul(factor, A[lr + j]));
        }
      }
      pivots.push_back(col);
      ++lead;
    }
    return pivots;
  }
};

template <>
std::vector<Rat>& MatrixKernels::store<Rat>(Matrix& m) {
  return m.q_;
}
template <>
const std::vector<Rat>& MatrixKernels::store<Rat>(const Matrix& m) {
  return m.q_;
}
template <>
std::vector<std::int64_t>& MatrixKernels::store<std::int64_t>(Matrix& m) {
  return m.m_;
}
template <>
const std::vector<std::int64_t>& MatrixKernels::store<std::int64_t>(const Matrix& m) {
  return m.m_;
}

Matrix::Matrix(FieldSpec field, int rows, int cols) : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  const std::size_t n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (field_.is_prime()) {
    m_.assign(n, 0);
  } else {
    q_.assign(n, Rat(0));
  }
}

Matrix Matrix::identity(FieldSpec field, int n) {
  Matrix r(field, n, n);
  for (int i = 0; i < n; ++i) r.set_int(i, i, 1);
  return r;
}

Matrix Matrix::from_rows(FieldSpec field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Matrix m(field, r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged matrix literal");
    int j = 0;
    for (std::int64_t v : row) m.set_int(i, j++, v);
    ++i;
  }
  return m;
}

Matrix Matrix::column(FieldSpec field, const std::vector<std::int64_t>& entries) {
  Matrix m(field, static_cast<int>(entries.size()), 1);
  for (int i = 0; i < m.rows_; ++i) m.set_int(i, 0, entries[i]);
  return m;
}

Scalar Matrix::at(int i, int j) const {
  const std::size_t idx = static_cast<std::size_t>(i) * cols_ + j;
  return field_.is_prime() ? Scalar(field_, m_[idx]) : Scalar(field_, q_[idx]);
}

void Matrix::set(int i, int j, const Scalar& v) {
  const std::size_t idx = static_cast<std::size_t>(i) * cols_ + j;
  if (field_.is_prime()) {
    m_[idx] = v.residue();
  } else {
    q_[idx] = v.rat();
  }
}

void Matrix::set_int(int i, int j, std::int64_t v) {
  const std::size_t idx = static_cast<std::size_t>(i) * cols_ + j;
  if (field_.is_prime()) {
    m_[idx] = mod_reduce(v, field_.p);
  } else {
    q_[idx] = Rat(static_cast<long>(v));
  }
}

void Matrix::add_int(int i, int j, std::int64_t v) {
  const std::size_t idx = static_cast<std::size_t>(i) * cols_ + j;
  if (field_.is_prime()) {
    m_[idx] = mod_reduce(m_[idx] + v, field_.p);
  } else {
    q_[idx] = Rat(q_[idx] + Rat(static_cast<long>(v)));
  }
}

void Matrix::add_scaled_entry(int i, int j, const Scalar& v) {
  const std::size_t idx = static_cast<std::size_t>(i) * cols_ + j;
  if (field_.is_prime()) {
    m_[idx] = mod_reduce(m_[idx] + v.residue(), field_.p);
  } else {
    q_[idx] = Rat(q_[idx] + v.rat());
  }
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(*this, rhs, "matrix addition");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch in +");
  return field_.is_prime() ? MatrixKernels::binary(ModOps{field_.p}, *this, rhs, true)
                           : MatrixKernels::binary(RatOps{}, *this, rhs, true);
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_field(*this, rhs, "matrix subtraction");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch in -");
  return field_.is_prime() ? MatrixKernels::binary(ModOps{field_.p}, *this, rhs, false)
                           : MatrixKernels::binary(RatOps{}, *this, rhs, false);
}

Matrix Matrix::operator-() const {
  return field_.is_prime() ? MatrixKernels::negate(ModOps{field_.p}, *this)
                           : MatrixKernels::negate(RatOps{}, *this);
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(*this, rhs, "matrix product");
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("shape mismatch in *: " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " times " + std::to_string(rhs.rows_) +
                                "x" + std::to_string(rhs.cols_));
  }
  return field_.is_prime() ? MatrixKernels::mul(ModOps{field_.p}, *this, rhs)
                           : MatrixKernels::mul(RatOps{}, *this, rhs);
}

Matrix Matrix::scaled(const Scalar& c) const {
  return field_.is_prime() ? MatrixKernels::scaled(ModOps{field_.p}, *this, c.residue())
                           : MatrixKernels::scaled(RatOps{}, *this, c.rat());
}

bool Matrix::operator==(const Matrix& rhs) const {
  if (!(field_ == rhs.field_) || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  return field_.is_prime() ? m_ == rhs.m_ : q_ == rhs.q_;
}

bool Matrix::is_zero() const {
  if (field_.is_prime()) {
    for (auto v : m_) {
      if (v != 0) return false;
    }
    return true;
  }
  for (const auto& v : q_) {
    if (v != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  }
  return r;
}

Matrix Matrix::hstack(const Matrix& right) const {
  require_same_field(*this, right, "hstack");
  if (rows_ != right.rows_) throw std::invalid_argument("row mismatch in hstack");
  Matrix r(field_, rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (int j = 0; j < right.cols_; ++j) r.set(i, cols_ + j, right.at(i, j));
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
  require_same_field(*this, below, "vstack");
  if (cols_ != below.cols_) throw std::invalid_argument("column mismatch in vstack");
  Matrix r(field_, rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  }
  for (int i = 0; i < below.rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(rows_ + i, j, below.at(i, j));
  }
  return r;
}

Matrix Matrix::col_slice(int first, int count) const {
  Matrix r(field_, rows_, count);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < count; ++j) r.set(i, j, at(i, first + j));
  }
  return r;
}

Matrix Matrix::row_slice(int first, int count) const {
  Matrix r(field_, count, cols_);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(first + i, j));
  }
  return r;
}

Matrix Matrix::column_at(int j) const { return col_slice(j, 1); }

Matrix Matrix::select_rows(const std::vector<int>& idx) const {
  Matrix r(field_, static_cast<int>(idx.size()), cols_);
  for (int i = 0; i < r.rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(idx[i], j));
  }
  return r;
}

std::string Matrix::str() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < rows_; ++i) {
    out << (i ? "," : "") << "[";
    for (int j = 0; j < cols_; ++j) out << (j ? "," : "") << at(i, j).str();
    out << "]";
  }
  out << "]";
  return out.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "kron");
  return a.field().is_prime() ? MatrixKernels::kron(ModOps{a.field().p}, a, b)
                              : MatrixKernels::kron(RatOps{}, a, b);
}

Matrix mul_kron_right_id(const Matrix& a, int n, const Matrix& x) {
  require_same_field(a, x, "mul_kron_right_id");
  if (a.cols() * n != x.rows()) throw std::invalid_argument("shape mismatch in mul_kron_right_id");
  return a.field().is_prime() ? MatrixKernels::mul_kron_right_id(ModOps{a.field().p}, a, n, x)
                              : MatrixKernels::mul_kron_right_id(RatOps{}, a, n, x);
}

Matrix mul_kron_left_id(int m, const Matrix& k, const Matrix& x) {
  require_same_field(k, x, "mul_kron_left_id");
  if (m * k.cols() != x.rows()) throw std::invalid_argument("shape mismatch in mul_kron_left_id");
  return k.field().is_prime() ? MatrixKernels::mul_kron_left_id(ModOps{k.field().p}, m, k, x)
                              : MatrixKernels::mul_kron_left_id(RatOps{}, m, k, x);
}

Matrix mul_kron(const Matrix& a, const Matrix& b, const Matrix& x) {
  // kron(A,B)*X column by column: reshape, then A * Xc * B^T.
  require_same_field(a, x, "mul_kron");
  require_same_field(b, x, "mul_kron");
  if (a.cols() * b.cols() != x.rows()) throw std::invalid_argument("shape mismatch in mul_kron");
  const Matrix bt = b.transpose();
  Matrix r(a.field(), a.rows() * b.rows(), x.cols());
  for (int c = 0; c < x.cols(); ++c) {
    Matrix xc(a.field(), a.cols(), b.cols());
    for (int j = 0; j < a.cols(); ++j) {
      for (int l = 0; l < b.cols(); ++l) xc.set(j, l, x.at(j * b.cols() + l, c));
    }
    Matrix y = a * xc * bt;
    for (int i = 0; i < a.rows(); ++i) {
      for (int k = 0; k < b.rows(); ++k) r.set(i * b.rows() + k, c, y.at(i, k));
    }
  }
  return r;
}

Matrix swap_map(FieldSpec field, int m, int n) {
  Matrix r(field, m * n, m * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) r.set_int(j * m + i, i * n + j, 1);
  }
  return r;
}

std::vector<int> rref_in_place(Matrix& m) {
  return m.field().is_prime() ? MatrixKernels::rref(ModOps{m.field().p}, m)
                              : MatrixKernels::rref(RatOps{}, m);
}

}  // namespace hopfpi
