#include "hopfpi/pi_coalgebra.hpp"

#include <stdexcept>

#include "hopfpi/tensor.hpp"

namespace hopfpi {

namespace {

std::string nm(const PiCoalgebra& c, int a) { return c.group->name(a); }

bool same_shape(const Matrix& m, int rows, int cols) {
  return m.rows() == rows && m.cols() == cols;
}

std::string shape_str(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

std::string expect_str(int r, int c) {
  return "expected " + std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

bool PiCoalgebra::operator==(const PiCoalgebra& other) const {
  return group && other.group && *group == *other.group && field == other.field &&
         dims == other.dims && delta == other.delta && counit == other.counit;
}

bool HopfPiCoalgebra::operator==(const HopfPiCoalgebra& other) const {
  return coalg == other.coalg && mul == other.mul && unit == other.unit &&
         antipode == other.antipode;
}

Report shape_report(const PiCoalgebra& c) {
  Report r("coalgebra shapes");
  const int n = c.order();
  if (static_cast<int>(c.dims.size()) != n || static_cast<int>(c.delta.size()) != n * n) {
    r.add("shape_family", false, "family size does not match group order");
    return r;
  }
  for (int a = 0; a < n; ++a) {
    if (c.dims[a] < 0) r.add("shape_dim(" + nm(c, a) + ")", false, "negative dimension");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Matrix& d = c.Delta(a, b);
      const int rows = c.dims[a] * c.dims[b], cols = c.dims[c.group->mul(a, b)];
      r.add(check_label("shape_delta", {nm(c, a), nm(c, b)}), same_shape(d, rows, cols),
            shape_str(d) + ", " + expect_str(rows, cols));
    }
  }
  r.add("shape_counit", same_shape(c.counit, 1, c.dims[0]),
        shape_str(c.counit) + ", " + expect_str(1, c.dims[0]));
  return r;
}

Report shape_report(const HopfPiCoalgebra& h) {
  Report r = shape_report(h.coalg);
  const PiCoalgebra& c = h.coalg;
  const int n = h.order();
  if (static_cast<int>(h.mul.size()) != n || static_cast<int>(h.unit.size()) != n ||
      static_cast<int>(h.antipode.size()) != n) {
    r.add("shape_family", false, "algebra family size does not match group order");
    return r;
  }
  for (int a = 0; a < n; ++a) {
    const int d = c.dims[a];
    r.add("shape_mul(" + nm(c, a) + ")", same_shape(h.mul[a], d, d * d),
          shape_str(h.mul[a]) + ", " + expect_str(d, d * d));
    r.add("shape_unit(" + nm(c, a) + ")", same_shape(h.unit[a], d, 1),
          shape_str(h.unit[a]) + ", " + expect_str(d, 1));
    const int di = c.dims[c.group->inv(a)];
    r.add("shape_antipode(" + nm(c, a) + ")", same_shape(h.antipode[a], di, d),
          shape_str(h.antipode[a]) + ", " + expect_str(di, d));
  }
  return r;
}

Report verify_pi_coalgebra(const PiCoalgebra& c) {
  Report shapes = shape_report(c);
  if (!shapes.ok()) return shapes;

  Report r("coalgebra axioms");
  const int n = c.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int g = 0; g < n; ++g) {
        // (Delta_{a,b} (x) I_g) Delta_{ab,g} = (I_a (x) Delta_{b,g}) Delta_{a,bg}
        const Matrix lhs = mul_kron_right_id(c.Delta(a, b), c.dims[g],
                                             c.Delta(c.group->mul(a, b), g));
        const Matrix rhs =
            mul_kron_left_id(c.dims[a], c.Delta(b, g), c.Delta(a, c.group->mul(b, g)));
        r.add(check_label("coassoc", {nm(c, a), nm(c, b), nm(c, g)}), lhs == rhs);
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    const Matrix left = mul_kron_right_id(c.counit, c.dims[a], c.Delta(0, a));
    r.add("counit_left(" + nm(c, a) + ")", left.is_identity());
    const Matrix right = mul_kron_left_id(c.dims[a], c.counit, c.Delta(a, 0));
    r.add("counit_right(" + nm(c, a) + ")", right.is_identity());
  }
  return r;
}

Report verify_hopf(const HopfPiCoalgebra& h) {
  Report shapes = shape_report(h);
  if (!shapes.ok()) return shapes;

  Report r("hopf axioms");
  const PiCoalgebra& c = h.coalg;
  const int n = h.order();
  const FieldSpec f = c.field;

  for (int a = 0; a < n; ++a) {
    const int d = c.dims[a];
    const Matrix id = Matrix::identity(f, d);
    const Matrix lhs = h.mul[a] * kron(h.mul[a], id);
    const Matrix rhs = h.mul[a] * kron(id, h.mul[a]);
    r.add("assoc(" + nm(c, a) + ")", lhs == rhs);
    r.add("unit_left(" + nm(c, a) + ")", (h.mul[a] * kron(h.unit[a], id)).is_identity());
    r.add("unit_right(" + nm(c, a) + ")", (h.mul[a] * kron(id, h.unit[a])).is_identity());
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = c.group->mul(a, b);
      // Delta_{a,b} is multiplicative: checked on all basis pairs of H_{ab}
      // against the componentwise product in H_a (x) H_b.
      const Matrix lhs = c.Delta(a, b) * h.mul[ab];
      const PairwiseBilinear prod(h.mul[a], c.dims[a], c.dims[a], h.mul[b], c.dims[b], c.dims[b]);
      bool pass = true;
      std::string where;
      for (int i = 0; i < c.dims[ab] && pass; ++i) {
        const Matrix di = c.Delta(a, b).column_at(i);
        for (int j = 0; j < c.dims[ab]; ++j) {
          const Matrix rhs = prod.apply(di, c.Delta(a, b).column_at(j));
          if (!(lhs.column_at(i * c.dims[ab] + j) == rhs)) {
            pass = false;
            where = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            break;
          }
        }
      }
      r.add(check_label("delta_mult", {nm(c, a), nm(c, b)}), pass, where);
      r.add(check_label("delta_unit", {nm(c, a), nm(c, b)}),
            c.Delta(a, b) * h.unit[ab] == kron(h.unit[a], h.unit[b]));
    }
  }

  r.add("eps_mult", c.counit * h.mul[0] == kron(c.counit, c.counit));
  r.add("eps_unit", (c.counit * h.unit[0]).is_identity());

  for (int a = 0; a < n; ++a) {
    const int ai = c.group->inv(a);
    const Matrix unit_eps = h.unit[a] * c.counit;  // rank-one map H_1 -> H_a
    const Matrix left = h.mul[a] * mul_kron_right_id(h.antipode[ai], c.dims[a], c.Delta(ai, a));
    r.add("antipode_left(" + nm(c, a) + ")", left == unit_eps);
    const Matrix right = h.mul[a] * mul_kron_left_id(c.dims[a], h.antipode[ai], c.Delta(a, ai));
    r.add("antipode_right(" + nm(c, a) + ")", right == unit_eps);
  }
  return r;
}

Report verify_lemma34(const HopfPiCoalgebra& h) {
  Report shapes = shape_report(h);
  if (!shapes.ok()) return shapes;

  Report r("derived coproduct identities");
  const PiCoalgebra& c = h.coalg;
  const int n1 = c.dims[0];
  for (int a = 0; a < h.order(); ++a) {
    const int ai = c.group->inv(a);
    {
      const Matrix lhs = mul_kron(c.Delta(0, a), c.Delta(ai, 0), c.Delta(a, ai));
      Matrix rhs = mul_kron_right_id(c.Delta(0, 0), n1, c.Delta(0, 0));
      rhs = mul_kron_left_id(n1, kron(c.Delta(a, ai), Matrix::identity(c.field, n1)), rhs);
      r.add("coproduct_identity_1(" + nm(c, a) + ")", lhs == rhs);
    }
    {
      const Matrix lhs = mul_kron(c.Delta(ai, 0), c.Delta(0, a), c.Delta(ai, a));
      Matrix rhs = mul_kron_right_id(c.Delta(ai, 0), c.dims[a], c.Delta(ai, a));
      rhs = mul_kron_left_id(c.dims[ai], kron(c.Delta(0, 0), Matrix::identity(c.field, c.dims[a])),
                             rhs);
      r.add("coproduct_identity_2(" + nm(c, a) + ")", lhs == rhs);
    }
  }
  return r;
}

Report verify_classical_hopf(const ClassicalHopfAlgebra& a) {
  Report r("classical hopf axioms");
  const int d = a.dim;
  const Matrix id = Matrix::identity(a.field, d);
  if (!same_shape(a.mul, d, d * d) || !same_shape(a.unit, d, 1) || !same_shape(a.delta, d * d, d) ||
      !same_shape(a.counit, 1, d) || !same_shape(a.antipode, d, d)) {
    r.add("shape", false, "structure map shapes inconsistent with dim " + std::to_string(d));
    return r;
  }
  r.add("assoc", a.mul * kron(a.mul, id) == a.mul * kron(id, a.mul));
  r.add("unit_left", (a.mul * kron(a.unit, id)).is_identity());
  r.add("unit_right", (a.mul * kron(id, a.unit)).is_identity());
  r.add("coassoc", mul_kron_right_id(a.delta, d, a.delta) == mul_kron_left_id(d, a.delta, a.delta));
  r.add("counit_left", mul_kron_right_id(a.counit, d, a.delta).is_identity());
  r.add("counit_right", mul_kron_left_id(d, a.counit, a.delta).is_identity());
  {
    const Matrix lhs = a.delta * a.mul;
    const PairwiseBilinear prod(a.mul, d, d, a.mul, d, d);
    bool pass = true;
    for (int i = 0; i < d && pass; ++i) {
      for (int j = 0; j < d; ++j) {
        if (!(lhs.column_at(i * d + j) == prod.apply(a.delta.column_at(i), a.delta.column_at(j)))) {
          pass = false;
          break;
        }
      }
    }
    r.add("delta_mult", pass);
  }
  r.add("delta_unit", a.delta * a.unit == kron(a.unit, a.unit));
  r.add("eps_mult", a.counit * a.mul == kron(a.counit, a.counit));
  r.add("eps_unit", (a.counit * a.unit).is_identity());
  const Matrix unit_eps = a.unit * a.counit;
  r.add("antipode_left", a.mul * mul_kron_right_id(a.antipode, d, a.delta) == unit_eps);
  r.add("antipode_right", a.mul * mul_kron_left_id(d, a.antipode, a.delta) == unit_eps);
  return r;
}

Report verify_action(const ClassicalHopfAlgebra& a, const GroupAction& act) {
  Report r("group action");
  const int n = act.group->order();
  if (static_cast<int>(act.lambda.size()) != n) {
    r.add("shape_family", false, "lambda family size does not match group order");
    return r;
  }
  for (int g = 0; g < n; ++g) {
    if (!same_shape(act.lambda[g], a.dim, a.dim)) {
      r.add("shape_lambda(" + act.group->name(g) + ")", false, shape_str(act.lambda[g]));
      return r;
    }
  }
  r.add("identity_acts_trivially", act.lambda[0].is_identity());
  for (int g = 0; g < n; ++g) {
    for (int k = 0; k < n; ++k) {
      r.add(check_label("homomorphism", {act.group->name(g), act.group->name(k)}),
            act.lambda[g] * act.lambda[k] == act.lambda[act.group->mul(g, k)]);
    }
  }
  for (int g = 0; g < n; ++g) {
    const std::string& gn = act.group->name(g);
    const Matrix& L = act.lambda[g];
    r.add("algebra_map(" + gn + ")", L * a.mul == a.mul * kron(L, L));
    r.add("unit_map(" + gn + ")", L * a.unit == a.unit);
    r.add("coalgebra_map(" + gn + ")", a.delta * L == kron(L, L) * a.delta);
    r.add("counit_map(" + gn + ")", a.counit * L == a.counit);
    r.add("antipode_map(" + gn + ")", L * a.antipode == a.antipode * L);
  }
  return r;
}

HopfPiCoalgebra mirror_construction(const ClassicalHopfAlgebra& a, const GroupAction& act) {
  Report ar = verify_action(a, act);
  if (!ar.ok()) {
    throw std::invalid_argument("mirror input is not an action by Hopf automorphisms: " +
                                ar.failures().front().name);
  }
  const int n = act.group->order();
  HopfPiCoalgebra h;
  h.coalg.group = act.group;
  h.coalg.field = a.field;
  h.coalg.dims.assign(n, a.dim);
  h.coalg.delta.reserve(n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      (void)x;
      h.coalg.delta.push_back(mul_kron_right_id(act.lambda[y], a.dim, a.delta));
    }
  }
  h.coalg.counit = a.counit;
  h.mul.assign(n, a.mul);
  h.unit.assign(n, a.unit);
  h.antipode.reserve(n);
  for (int x = 0; x < n; ++x) h.antipode.push_back(act.lambda[x] * a.antipode);
  return h;
}

Matrix apply_mul(const Matrix& mul, const Matrix& u, const Matrix& v) {
  return mul * kron(u, v);
}

}  // namespace hopfpi
