#include "hopfpi/tensor.hpp"

#include <stdexcept>

namespace hopfpi {

PairwiseBilinear::PairwiseBilinear(const Matrix& map_a, int x_a, int y_a, const Matrix& map_b,
                                   int x_b, int y_b)
    : map_b_(map_b), x_a_(x_a), y_a_(y_a), x_b_(x_b), y_b_(y_b), z_a_(map_a.rows()),
      z_b_(map_b.rows()) {
  if (map_a.cols() != x_a * y_a || map_b.cols() != x_b * y_b) {
    throw std::invalid_argument("bilinear map shape mismatch");
  }
  a_resh_ = Matrix(map_a.field(), z_a_ * y_a_, x_a_);
  for (int p = 0; p < z_a_; ++p) {
    for (int i = 0; i < x_a_; ++i) {
      for (int j = 0; j < y_a_; ++j) a_resh_.set(p * y_a_ + j, i, map_a.at(p, i * y_a_ + j));
    }
  }
}

Matrix PairwiseBilinear::apply(const Matrix& u, const Matrix& v) const {
  if (u.rows() != x_a_ * x_b_ || v.rows() != y_a_ * y_b_ || u.cols() != 1 || v.cols() != 1) {
    throw std::invalid_argument("tensor vector shape mismatch");
  }
  const FieldSpec f = map_b_.field();

  // w[(p,q)] = sum over i,j,k,l of A[p,(i,j)] B[q,(k,l)] u[(i,k)] v[(j,l)],
  // contracted as
  //   t1[(p,j), k] = sum_i A[p,(i,j)] U[i,k]          (one matrix product)
  //   t2_p[k, l]   = sum_j t1_p[j,k]^T V[j,l]         (per p)
  //   w[(p,q)]     = (B * vec(t2_p))[q]
  Matrix big_u(f, x_a_, x_b_);
  for (int i = 0; i < x_a_; ++i) {
    for (int k = 0; k < x_b_; ++k) big_u.set(i, k, u.at(i * x_b_ + k, 0));
  }
  Matrix big_v(f, y_a_, y_b_);
  for (int j = 0; j < y_a_; ++j) {
    for (int l = 0; l < y_b_; ++l) big_v.set(j, l, v.at(j * y_b_ + l, 0));
  }
  const Matrix t1 = a_resh_ * big_u;  // (z_a*y_a) x x_b
  Matrix w(f, z_a_ * z_b_, 1);
  for (int p = 0; p < z_a_; ++p) {
    const Matrix t1_p = t1.row_slice(p * y_a_, y_a_);       // y_a x x_b
    const Matrix t2_p = t1_p.transpose() * big_v;           // x_b x y_b
    Matrix vec(f, x_b_ * y_b_, 1);
    for (int k = 0; k < x_b_; ++k) {
      for (int l = 0; l < y_b_; ++l) vec.set(k * y_b_ + l, 0, t2_p.at(k, l));
    }
    const Matrix wp = map_b_ * vec;  // z_b x 1
    for (int q = 0; q < z_b_; ++q) w.set(p * z_b_ + q, 0, wp.at(q, 0));
  }
  return w;
}

}  // namespace hopfpi
