#include "hopfpi/builtins.hpp"

#include <stdexcept>

#include "hopfpi/tensor.hpp"

namespace hopfpi {

HopfPiCoalgebra trivial_pi(FieldSpec field) {
  ClassicalHopfAlgebra k;
  k.field = field;
  k.dim = 1;
  k.mul = Matrix::from_rows(field, {{1}});
  k.unit = Matrix::from_rows(field, {{1}});
  k.delta = Matrix::from_rows(field, {{1}});
  k.counit = Matrix::from_rows(field, {{1}});
  k.antipode = Matrix::from_rows(field, {{1}});
  GroupAction act{std::make_shared<GroupTable>(GroupTable::trivial()),
                  {Matrix::identity(field, 1)}};
  return mirror_construction(k, act);
}

ClassicalHopfAlgebra group_algebra(const GroupTable& g, FieldSpec field) {
  const int n = g.order();
  ClassicalHopfAlgebra a;
  a.field = field;
  a.dim = n;
  a.mul = Matrix(field, n, n * n);
  for (int h = 0; h < n; ++h) {
    for (int k = 0; k < n; ++k) a.mul.set_int(g.mul(h, k), h * n + k, 1);
  }
  a.unit = Matrix(field, n, 1);
  a.unit.set_int(0, 0, 1);
  a.delta = Matrix(field, n * n, n);
  for (int h = 0; h < n; ++h) a.delta.set_int(h * n + h, h, 1);
  a.counit = Matrix(field, 1, n);
  for (int h = 0; h < n; ++h) a.counit.set_int(0, h, 1);
  a.antipode = Matrix(field, n, n);
  for (int h = 0; h < n; ++h) a.antipode.set_int(g.inv(h), h, 1);
  return a;
}

ClassicalHopfAlgebra taft_algebra(int n, std::int64_t p, std::int64_t q) {
  if (n < 2) throw std::invalid_argument("taft order parameter must be at least 2");
  const FieldSpec field = FieldSpec::prime_field(p);
  q = mod_reduce(q, p);
  // q must have exact multiplicative order n.
  std::int64_t pow = 1;
  for (int k = 1; k < n; ++k) {
    pow = (pow * q) % p;
    if (pow == 1) {
      throw std::invalid_argument("q = " + std::to_string(q) + " has order dividing " +
                                  std::to_string(k) + ", need exact order " + std::to_string(n));
    }
  }
  if ((pow * q) % p != 1) {
    throw std::invalid_argument("q = " + std::to_string(q) + " is not an n-th root of unity mod " +
                                std::to_string(p));
  }

  const int d = n * n;
  auto idx = [n](int a, int b) { return a * n + b; };  // basis g^a x^b

  ClassicalHopfAlgebra t;
  t.field = field;
  t.dim = d;

  // (g^a x^b)(g^c x^e) = q^{bc} g^{a+c} x^{b+e}, zero once the g-degree
  // reaches n.
  t.mul = Matrix(field, d, d * d);
  std::vector<std::int64_t> qpow(static_cast<std::size_t>(n) * n);
  {
    std::int64_t v = 1;
    for (int k = 0; k < n * n; ++k) {
      qpow[k] = v;
      v = (v * q) % p;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int e = 0; e < n; ++e) {
          if (a + c >= n) continue;
          t.mul.set_int(idx(a + c, (b + e) % n), idx(a, b) * d + idx(c, e), qpow[b * c]);
        }
      }
    }
  }

  t.unit = Matrix(field, d, 1);
  t.unit.set_int(idx(0, 0), 0, 1);

  t.counit = Matrix(field, 1, d);
  for (int b = 0; b < n; ++b) t.counit.set_int(0, idx(0, b), 1);

  // Delta on the generators; powers by repeated multiplication in the
  // tensor square, so no closed form for the q-binomials is needed.
  Matrix dx(field, d * d, 1);
  dx.set_int(idx(0, 1) * d + idx(0, 1), 0, 1);  // x (x) x
  Matrix dg(field, d * d, 1);
  dg.set_int(idx(1, 0) * d + idx(0, 1), 0, 1);  // g (x) x
  dg.set_int(idx(0, 0) * d + idx(1, 0), 0, 1);  // 1 (x) g

  t.delta = Matrix(field, d * d, d);
  Matrix acc_g(field, d * d, 1);
  acc_g.set_int(idx(0, 0) * d + idx(0, 0), 0, 1);  // Delta(1) = 1 (x) 1
  for (int a = 0; a < n; ++a) {
    Matrix acc = acc_g;
    for (int b = 0; b < n; ++b) {
      for (int r = 0; r < d * d; ++r) t.delta.set(r, idx(a, b), acc.at(r, 0));
      if (b + 1 < n) acc = tensor_algebra_mul(t.mul, t.mul, acc, dx);
    }
    if (a + 1 < n) acc_g = tensor_algebra_mul(t.mul, t.mul, acc_g, dg);
  }

  // S(g^a x^b) = S(x)^b S(g)^a with S(x) = x^{n-1}, S(g) = -g x^{n-1}.
  Matrix sx(field, d, 1);
  sx.set_int(idx(0, n - 1), 0, 1);
  Matrix sg(field, d, 1);
  sg.set_int(idx(1, n - 1), 0, p - 1);

  t.antipode = Matrix(field, d, d);
  Matrix acc_sx(field, d, 1);
  acc_sx.set_int(idx(0, 0), 0, 1);  // S(x^0)
  for (int b = 0; b < n; ++b) {
    Matrix acc = acc_sx;
    for (int a = 0; a < n; ++a) {
      for (int r = 0; r < d; ++r) t.antipode.set(r, idx(a, b), acc.at(r, 0));
      if (a + 1 < n) acc = apply_mul(t.mul, acc, sg);
    }
    if (b + 1 < n) acc_sx = apply_mul(t.mul, acc_sx, sx);
  }
  return t;
}

MirrorBundle group_algebra_family(int n, FieldSpec field) {
  MirrorBundle m;
  m.base = group_algebra(GroupTable::cyclic(n, "u"), field);
  auto pi = std::make_shared<GroupTable>(GroupTable::cyclic(2, "t"));
  Matrix invert(field, n, n);
  for (int j = 0; j < n; ++j) invert.set_int((n - j) % n, j, 1);
  m.action = GroupAction{pi, {Matrix::identity(field, n), invert}};
  m.hopf = mirror_construction(m.base, m.action);
  return m;
}

MirrorBundle taft_mirror(int n, std::int64_t p, std::int64_t q) {
  MirrorBundle m;
  m.base = taft_algebra(n, p, q);
  const FieldSpec field = m.base.field;
  auto pi = std::make_shared<GroupTable>(GroupTable::cyclic(n, "c"));
  std::vector<Matrix> lambda;
  lambda.reserve(n);
  q = mod_reduce(q, p);
  for (int k = 0; k < n; ++k) {
    std::int64_t qk = 1;
    for (int t = 0; t < k; ++t) qk = (qk * q) % p;
    Matrix l(field, n * n, n * n);
    std::int64_t scale = 1;  // q^{ka} for the g^a x^b rows
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) l.set_int(a * n + b, a * n + b, scale);
      scale = (scale * qk) % p;
    }
    lambda.push_back(l);
  }
  m.action = GroupAction{pi, std::move(lambda)};
  m.hopf = mirror_construction(m.base, m.action);
  return m;
}

MatrixFamily mirror_cosection(const MirrorBundle& m) {
  MatrixFamily eta;
  const GroupTable& pi = *m.action.group;
  eta.reserve(pi.order());
  for (int a = 0; a < pi.order(); ++a) eta.push_back(m.action.lambda[pi.inv(a)]);
  return eta;
}

MatrixFamily copy_cosection(const MirrorBundle& m) {
  return MatrixFamily(m.action.group->order(), Matrix::identity(m.base.field, m.base.dim));
}

}  // namespace hopfpi
