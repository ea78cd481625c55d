#pragma once

#include "hopfpi/matrix.hpp"

namespace hopfpi {

/// Componentwise product on a two-leg tensor space. Given bilinear maps
/// presented as matrices
///   mapA : X_A (x) Y_A -> Z_A   (z_A rows, x_A*y_A columns)
///   mapB : X_B (x) Y_B -> Z_B   (z_B rows, x_B*y_B columns)
/// apply(u, v) computes, for u in X_A (x) X_B and v in Y_A (x) Y_B,
///   (mapA (x) mapB)(I (x) flip (x) I)(u (x) v)  in  Z_A (x) Z_B.
///
/// The contraction runs factor by factor, so the four-leg intermediate
/// tensor is never materialized. Construct once, apply per vector pair.
class PairwiseBilinear {
 public:
  PairwiseBilinear(const Matrix& map_a, int x_a, int y_a, const Matrix& map_b, int x_b, int y_b);

  Matrix apply(const Matrix& u, const Matrix& v) const;

 private:
  Matrix a_resh_;  // (z_a*y_a) x x_a, entry [(p,j), i] = mapA[p, (i,j)]
  Matrix map_b_;
  int x_a_, y_a_, x_b_, y_b_, z_a_, z_b_;
};

inline Matrix pairwise_bilinear(const Matrix& map_a, int x_a, int y_a, const Matrix& map_b,
                                int x_b, int y_b, const Matrix& u, const Matrix& v) {
  return PairwiseBilinear(map_a, x_a, y_a, map_b, x_b, y_b).apply(u, v);
}

/// Product of u and v in the tensor-product algebra A (x) B, where mul_a
/// and mul_b are the multiplication matrices of A and B.
inline Matrix tensor_algebra_mul(const Matrix& mul_a, const Matrix& mul_b, const Matrix& u,
                                 const Matrix& v) {
  return pairwise_bilinear(mul_a, mul_a.rows(), mul_a.rows(), mul_b, mul_b.rows(), mul_b.rows(), u,
                           v);
}

}  // namespace hopfpi
