#include "hopfpi/induction.hpp"

#include <stdexcept>
#include <utility>

#include "hopfpi/tensor.hpp"

namespace hopfpi {

namespace {

std::string nm(const HopfPiCoalgebra& h, int a) { return h.coalg.group->name(a); }

Matrix l_of(const HopfPiCoalgebra& h, const MatrixFamily& sigma, int a, int b) {
  return mul_kron_right_id(sigma[a], h.coalg.dims[b], h.coalg.Delta(a, b));
}

/// Kernel family of L_{1,a} - sigma_1(1) (x) I_a, one subspace per component.
std::vector<Subspace> coinvariant_kernels(const HopfPiCoalgebra& h, const MatrixFamily& sigma) {
  const int ord = h.order();
  const Matrix e = sigma[0] * h.unit[0];
  std::vector<Subspace> out;
  out.reserve(ord);
  for (int a = 0; a < ord; ++a) {
    const Matrix eq = l_of(h, sigma, 0, a) - kron(e, Matrix::identity(h.field(), h.coalg.dims[a]));
    out.push_back(kernel_basis(eq));
  }
  return out;
}

Report coinvariant_report(const HopfPiCoalgebra& h, const std::vector<Subspace>& spaces,
                          const std::string& title) {
  Report r(title);
  const int ord = h.order();
  for (int a = 0; a < ord; ++a) {
    r.add(check_label("unit_in_space", {nm(h, a)}), spaces[a].contains(h.unit[a]));
    const Matrix prods = h.mul[a] * kron(spaces[a].basis_columns(), spaces[a].basis_columns());
    bool closed = true;
    for (int j = 0; j < prods.cols() && closed; ++j) {
      closed = spaces[a].contains(prods.column_at(j));
    }
    r.add(check_label("closed_under_mul", {nm(h, a)}), closed);
  }
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      const int ab = h.coalg.group->mul(a, b);
      const Matrix image = h.coalg.Delta(a, b) * spaces[ab].basis_columns();
      const Subspace side = Subspace::span_of_columns(
          kron(spaces[a].basis_columns(), Matrix::identity(h.field(), h.coalg.dims[b])));
      bool inside = true;
      for (int j = 0; j < image.cols() && inside; ++j) {
        inside = side.contains(image.column_at(j));
      }
      r.add(check_label("right_coideal", {nm(h, a), nm(h, b)}), inside);
    }
  }
  return r;
}

bool columns_inside(const Subspace& s, const Matrix& m) {
  for (int j = 0; j < m.cols(); ++j) {
    if (!s.contains(m.column_at(j))) return false;
  }
  return true;
}

/// Shared body of the two factorization witnesses; the flavor only names
/// the coinvariant family in the report title.
CosetWitness coset_witness(const HopfPiCoalgebra& h, const PiCoalgebra& c,
                           const MatrixFamily& sigma, const SectionFamily& section,
                           SpaceFlavor flavor) {
  const int ord = h.order();
  CosetWitness w;
  w.space.flavor = flavor;
  w.space.spaces = coinvariant_kernels(h, sigma);
  const char* letter = flavor == SpaceFlavor::B ? "B" : "G";
  w.space.checks = coinvariant_report(h, w.space.spaces, std::string("coinvariants ") + letter);
  w.checks = Report(std::string("factorization through ") + letter);
  w.checks.merge(w.space.checks);

  for (int a = 0; a < ord; ++a) {
    const int ai = h.coalg.group->inv(a);
    const int na = h.coalg.dims[a];
    const Matrix emb = w.space.spaces[a].basis_columns();
    w.a.push_back(h.mul[a] * kron(section.g[a], emb));

    // (sigma_a (x) mu(ginv_a sigma_ai (x) I)) (Delta_{a,ai} (x) I) Delta_{1,a}
    const Matrix t =
        mul_kron_right_id(h.coalg.Delta(a, ai), na, h.coalg.Delta(0, a));
    const Matrix map23 =
        h.mul[a] * kron(section.ginv[a] * sigma[ai], Matrix::identity(h.field(), na));
    const Matrix m = mul_kron(sigma[a], map23, t);

    const Subspace side = Subspace::span_of_columns(
        kron(Matrix::identity(h.field(), c.dims[a]), emb));
    w.checks.add(check_label("factors_through", {nm(h, a)}), columns_inside(side, m));

    const Matrix ainv = mul_kron_left_id(c.dims[a], w.space.spaces[a].coordinate_map(), m);
    w.checks.add(check_label("left_composite", {nm(h, a)}), (ainv * w.a[a]).is_identity());
    w.checks.add(check_label("right_composite", {nm(h, a)}), (w.a[a] * ainv).is_identity());
    w.ainv.push_back(ainv);
  }
  return w;
}

}  // namespace

Matrix l_map(const HopfPiCoalgebra& h, const SubgroupPair& pair, int a, int b) {
  return l_of(h, pair.sigma, a, b);
}

MatrixFamily l_family(const HopfPiCoalgebra& h, const SubgroupPair& pair) {
  const int ord = h.order();
  MatrixFamily out;
  out.reserve(ord * ord);
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) out.push_back(l_of(h, pair.sigma, a, b));
  }
  return out;
}

Report verify_L_identities(const HopfPiCoalgebra& h, const SubgroupPair& pair) {
  Report r("L identities");
  const int ord = h.order();
  if (static_cast<int>(pair.sigma.size()) != ord) {
    r.add("shape_family", false, "sigma family size does not match group order");
    return r;
  }
  const MatrixFamily l = l_family(h, pair);
  const auto& grp = *h.coalg.group;
  const auto L = [&](int a, int b) -> const Matrix& { return l[a * ord + b]; };

  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      for (int g = 0; g < ord; ++g) {
        const Matrix lhs =
            mul_kron_left_id(pair.c.dims[a], h.coalg.Delta(b, g), L(a, grp.mul(b, g)));
        const Matrix rhs =
            mul_kron_right_id(L(a, b), h.coalg.dims[g], h.coalg.Delta(grp.mul(a, b), g));
        r.add(check_label("mixed_coassoc", {nm(h, a), nm(h, b), nm(h, g)}), lhs == rhs);
      }
    }
  }

  if (pair.omega) {
    for (int a = 0; a < ord; ++a) {
      for (int b = 0; b < ord; ++b) {
        const int ab = grp.mul(a, b);
        const int nab = h.coalg.dims[ab];
        const Matrix lhs = L(a, b) * h.mul[ab];
        const PairwiseBilinear prod((*pair.omega)[a], h.coalg.dims[a], pair.c.dims[a], h.mul[b],
                                    h.coalg.dims[b], h.coalg.dims[b]);
        bool match = true;
        std::string where;
        for (int i = 0; i < nab && match; ++i) {
          const Matrix di = h.coalg.Delta(a, b).column_at(i);
          for (int j = 0; j < nab && match; ++j) {
            const Matrix rhs = prod.apply(di, L(a, b).column_at(j));
            if (!(lhs.column_at(i * nab + j) == rhs)) {
              match = false;
              where = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
          }
        }
        r.add(check_label("product_rule", {nm(h, a), nm(h, b)}), match, where);
      }
    }
  }
  return r;
}

HomogeneousSpace homogeneous_space(const HopfPiCoalgebra& h, const SubgroupPair& pair,
                                   SpaceFlavor flavor) {
  HomogeneousSpace s;
  s.flavor = flavor;
  s.spaces = coinvariant_kernels(h, pair.sigma);
  s.checks = coinvariant_report(h, s.spaces,
                                flavor == SpaceFlavor::B ? "coinvariants B" : "coinvariants G");
  return s;
}

InducedComodule induce(const HopfPiCoalgebra& h, const SubgroupPair& pair, const Matrix& rho) {
  const int ord = h.order();
  const int dc1 = pair.c.dims[0];
  const int dv = rho.cols();
  if (rho.rows() != dv * dc1) {
    throw std::invalid_argument("induce: coaction must map V into V (x) C_1");
  }

  InducedComodule ind;
  ind.rho = rho;
  ind.base_dim = dv;
  ind.checks = Report("induced comodule");

  const Matrix idv = Matrix::identity(h.field(), dv);
  for (int a = 0; a < ord; ++a) {
    const int na = h.coalg.dims[a];
    const Matrix eq = kron(idv, l_of(h, pair.sigma, 0, a)) -
                      kron(rho, Matrix::identity(h.field(), na));
    ind.spaces.push_back(kernel_basis(eq));
  }

  ind.comodule.over = std::make_shared<const PiCoalgebra>(h.coalg);
  ind.comodule.dims.resize(ord);
  for (int a = 0; a < ord; ++a) ind.comodule.dims[a] = ind.spaces[a].dim();
  ind.comodule.theta.reserve(ord * ord);
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      const int ab = h.coalg.group->mul(a, b);
      const int nb = h.coalg.dims[b];
      const Matrix raw =
          mul_kron_left_id(dv, h.coalg.Delta(a, b), ind.spaces[ab].basis_columns());
      const Subspace side = Subspace::span_of_columns(
          kron(ind.spaces[a].basis_columns(), Matrix::identity(h.field(), nb)));
      if (!columns_inside(side, raw)) {
        throw std::invalid_argument("induce: coaction leaves the equalizer family at (" +
                                    nm(h, a) + "," + nm(h, b) + ")");
      }
      ind.checks.add(check_label("coaction_contained", {nm(h, a), nm(h, b)}), true);
      ind.comodule.theta.push_back(
          mul_kron_right_id(ind.spaces[a].coordinate_map(), nb, raw));
    }
  }
  ind.checks.merge(verify_comodule(ind.comodule));
  return ind;
}

CoinvariantAction b_action(const HopfPiCoalgebra& h, const InducedComodule& ind,
                           const HomogeneousSpace& space) {
  CoinvariantAction out;
  out.checks = Report("coinvariant action");
  const int ord = h.order();
  const int dv = ind.base_dim;

  bool all_closed = true;
  std::vector<Matrix> raws;
  for (int a = 0; a < ord; ++a) {
    const Matrix raw = mul_kron_left_id(
        dv, h.mul[a], kron(ind.spaces[a].basis_columns(), space.spaces[a].basis_columns()));
    const bool closed = columns_inside(ind.spaces[a], raw);
    out.checks.add(check_label("action_closes", {nm(h, a)}), closed);
    all_closed = all_closed && closed;
    raws.push_back(raw);
  }
  if (!all_closed) return out;

  for (int a = 0; a < ord; ++a) {
    out.act.push_back(ind.spaces[a].coordinate_map() * raws[a]);
  }
  for (int a = 0; a < ord; ++a) {
    const int di = ind.spaces[a].dim();
    const int db = space.spaces[a].dim();
    const Matrix embb = space.spaces[a].basis_columns();
    const Matrix mulb = space.spaces[a].coordinate_map() * h.mul[a] * kron(embb, embb);
    const Matrix idi = Matrix::identity(h.field(), di);
    const Matrix lhs = out.act[a] * kron(out.act[a], Matrix::identity(h.field(), db));
    const Matrix rhs = out.act[a] * kron(idi, mulb);
    out.checks.add(check_label("action_assoc", {nm(h, a)}), lhs == rhs);
    const Matrix unitb = space.spaces[a].coordinate_map() * h.unit[a];
    out.checks.add(check_label("action_unit", {nm(h, a)}),
                   (out.act[a] * kron(idi, unitb)).is_identity());
  }
  return out;
}

Report verify_section_identities(const HopfPiCoalgebra& h, const HopfPiCoalgebra& c,
                                 const MatrixFamily& sigma, const SectionFamily& section) {
  Report r("section identities");
  const int ord = h.order();
  if (static_cast<int>(sigma.size()) != ord || static_cast<int>(section.g.size()) != ord ||
      static_cast<int>(section.ginv.size()) != ord) {
    r.add("shape_family", false, "family sizes do not match group order");
    return r;
  }
  const auto& grp = *h.coalg.group;
  const std::vector<Subspace> b = coinvariant_kernels(h, sigma);

  for (int a = 0; a < ord; ++a) {
    const int ai = grp.inv(a);
    const int na = h.coalg.dims[a];
    const int nai = h.coalg.dims[ai];
    const int dca = c.coalg.dims[a];
    const int dcai = c.coalg.dims[ai];
    const Matrix ina = Matrix::identity(h.field(), na);

    // L_{1,a} ginv_a agrees with (S_1 (x) ginv_a) tau Delta_{ai,1} on C_{ai}.
    {
      const Matrix lhs = l_of(h, sigma, 0, a) * section.ginv[a];
      const Matrix rhs = kron(c.antipode[0], section.ginv[a]) *
                         swap_map(h.field(), dcai, c.coalg.dims[0]) * c.coalg.Delta(ai, 0);
      r.add(check_label("inverse_coaction", {nm(h, a)}), lhs == rhs);
    }

    const Matrix f = section.g[a] * sigma[a];
    const Matrix g = section.ginv[a] * sigma[ai];

    // h = g sigma(h_1) ginv sigma(h_21) h_22 resolves the identity of H_a.
    {
      const Matrix x1 = mul_kron_left_id(na, h.coalg.Delta(ai, a), h.coalg.Delta(a, 0));
      const Matrix step = mul_kron(f, kron(g, ina), x1);
      const Matrix resolved = h.mul[a] * mul_kron_right_id(h.mul[a], na, step);
      r.add(check_label("resolution_of_identity", {nm(h, a)}), resolved.is_identity());
    }

    // mu(ginv sigma (x) I) Delta_{ai,a} sends H_1 into the coinvariants.
    {
      const Matrix p = h.mul[a] * kron(g, ina) * h.coalg.Delta(ai, a);
      r.add(check_label("projection_into_coinvariants", {nm(h, a)}), columns_inside(b[a], p));
    }

    const Matrix t = mul_kron_right_id(h.coalg.Delta(a, ai), na, h.coalg.Delta(0, a));
    const Matrix twoleg = kron(kron(sigma[a], sigma[ai]), ina) * t;

    // The double coproduct of a section value splits through C's coproducts.
    {
      const Matrix lhs = twoleg * section.g[a];
      const Matrix rhs = mul_kron_left_id(
          dca * dcai, section.g[a],
          mul_kron_left_id(dca, c.coalg.Delta(ai, a), c.coalg.Delta(a, 0)));
      r.add(check_label("section_coproduct", {nm(h, a)}), lhs == rhs);
    }

    // On coinvariants both sigma legs of the double coproduct are units.
    {
      const Matrix emb = b[a].basis_columns();
      const Matrix lhs = twoleg * emb;
      const Matrix rhs = kron(kron(c.unit[a], c.unit[ai]), emb);
      r.add(check_label("coinvariant_legs_trivial", {nm(h, a)}), lhs == rhs);
    }
  }
  return r;
}

CosetWitness iso_CB(const HopfPiCoalgebra& h, const HopfPiCoalgebra& c,
                    const MatrixFamily& sigma, const SectionFamily& section) {
  return coset_witness(h, c.coalg, sigma, section, SpaceFlavor::B);
}

CosetWitness iso_CG(const HopfPiCoalgebra& h, const SubgroupPair& pair,
                    const SectionFamily& section) {
  CosetWitness w = coset_witness(h, pair.c, pair.sigma, section, SpaceFlavor::G);
  const int ord = h.order();
  for (int a = 0; a < ord; ++a) {
    const int ai = h.coalg.group->inv(a);
    const Matrix p = h.mul[a] *
                     kron(section.ginv[a] * pair.sigma[ai],
                          Matrix::identity(h.field(), h.coalg.dims[a])) *
                     h.coalg.Delta(ai, a);
    w.checks.add(check_label("projection_lands", {nm(h, a)}),
                 columns_inside(w.space.spaces[a], p));
  }
  return w;
}

Report check_cosection(const HopfPiCoalgebra& h, const MatrixFamily& eta) {
  Report r("cosection");
  const int ord = h.order();
  const int n1 = h.coalg.dims[0];
  if (static_cast<int>(eta.size()) != ord) {
    r.add("shape_family", false, "family size does not match group order");
    return r;
  }
  for (int a = 0; a < ord; ++a) {
    if (eta[a].rows() != h.coalg.dims[a] || eta[a].cols() != n1) {
      r.add(check_label("shape", {nm(h, a)}), false,
            std::to_string(eta[a].rows()) + "x" + std::to_string(eta[a].cols()));
      return r;
    }
  }
  for (int a = 0; a < ord; ++a) {
    r.add(check_label("algebra_unit", {nm(h, a)}), eta[a] * h.unit[0] == h.unit[a]);
    r.add(check_label("algebra_mul", {nm(h, a)}),
          eta[a] * h.mul[0] == h.mul[a] * kron(eta[a], eta[a]));
    const Matrix lhs = h.coalg.Delta(0, a) * eta[a];
    const Matrix rhs = mul_kron_left_id(n1, eta[a], h.coalg.Delta(0, 0));
    r.add(check_label("coaction_square", {nm(h, a)}), lhs == rhs);
  }
  return r;
}

VBWitness iso_VB(const HopfPiCoalgebra& h, const SubgroupPair& pair,
                 const SectionFamily& section, const MatrixFamily& eta,
                 const InducedComodule& ind) {
  VBWitness w;
  w.space = homogeneous_space(h, pair, SpaceFlavor::B);
  w.checks = Report("factorization of the induced comodule");
  w.checks.merge(w.space.checks);

  const int ord = h.order();
  const int dv = ind.base_dim;
  const Matrix idv = Matrix::identity(h.field(), dv);
  const CoinvariantAction act = b_action(h, ind, w.space);
  w.checks.merge(act.checks);

  for (int a = 0; a < ord; ++a) {
    const int na = h.coalg.dims[a];
    const int db = w.space.spaces[a].dim();
    const Matrix embb = w.space.spaces[a].basis_columns();
    const Matrix coordsb = w.space.spaces[a].coordinate_map();

    // q(v (x) b) = v_1 (x) eta(g(v_2)) b, then induced-space coordinates.
    const Matrix k = h.mul[a] * kron(eta[a] * section.g[0], embb);
    const Matrix qraw = mul_kron_left_id(dv, k, kron(ind.rho, Matrix::identity(h.field(), db)));
    const bool qin = columns_inside(ind.spaces[a], qraw);
    w.checks.add(check_label("q_lands_in_induced", {nm(h, a)}), qin);
    const Matrix q = ind.spaces[a].coordinate_map() * qraw;

    // Inverse route: v_1 (x) eta(ginv(v_2)) h lands back in V (x) B.
    const Matrix kp = h.mul[a] * kron(eta[a] * section.ginv[0], Matrix::identity(h.field(), na));
    const Matrix minv = mul_kron_left_id(dv, kp, kron(ind.rho, Matrix::identity(h.field(), na))) *
                        ind.spaces[a].basis_columns();
    const Subspace side = Subspace::span_of_columns(kron(idv, embb));
    w.checks.add(check_label("qinv_lands_in_vb", {nm(h, a)}), columns_inside(side, minv));
    const Matrix qinv = mul_kron_left_id(dv, coordsb, minv);

    w.checks.add(check_label("left_composite", {nm(h, a)}), (qinv * q).is_identity());
    w.checks.add(check_label("right_composite", {nm(h, a)}), (q * qinv).is_identity());

    if (static_cast<int>(act.act.size()) == ord) {
      const Matrix mulb = coordsb * h.mul[a] * kron(embb, embb);
      const Matrix lhs = q * kron(idv, mulb);
      const Matrix rhs = act.act[a] * kron(q, Matrix::identity(h.field(), db));
      w.checks.add(check_label("module_map", {nm(h, a)}), lhs == rhs);
    } else {
      w.checks.add(check_label("module_map", {nm(h, a)}), false, "coinvariant action unavailable");
    }

    w.q.push_back(q);
    w.qinv.push_back(qinv);
  }
  return w;
}

EquivalenceWitness induced_equivalence(const Matrix& f1, const InducedComodule& v,
                                       const InducedComodule& w) {
  EquivalenceWitness out;
  out.checks = Report("induced equivalence");
  if (!(*v.comodule.over == *w.comodule.over)) {
    out.checks.add("base", false, "different base families");
    return out;
  }
  const PiCoalgebra& hc = *v.comodule.over;
  const int dc1 = v.rho.rows() / (v.base_dim > 0 ? v.base_dim : 1);
  if (f1.rows() != w.base_dim || f1.cols() != v.base_dim) {
    out.checks.add("f1_shape", false,
                   std::to_string(f1.rows()) + "x" + std::to_string(f1.cols()));
    return out;
  }

  out.residual = w.rho * f1 - mul_kron_right_id(f1, dc1, v.rho);
  const bool compatible = out.residual.is_zero();
  out.checks.add("base_intertwines", compatible,
                 compatible ? "" : "base coaction square has a nonzero residual");
  const bool invertible = f1.rows() == f1.cols() && inverse(f1).has_value();
  out.checks.add("f1_invertible", invertible);
  if (!compatible || !invertible) return out;

  const int ord = hc.order();
  for (int a = 0; a < ord; ++a) {
    const Matrix raw = mul_kron_right_id(f1, hc.dims[a], v.spaces[a].basis_columns());
    out.checks.add(check_label("maps_into", {hc.group->name(a)}),
                   columns_inside(w.spaces[a], raw));
    out.maps.push_back(w.spaces[a].coordinate_map() * raw);
  }
  out.checks.merge(check_equivalence_witness(v.comodule, w.comodule, out.maps));
  out.ok = out.checks.ok();
  return out;
}

DirectSumWitness induce_direct_sum_iso(const InducedComodule& v, const InducedComodule& w,
                                       const InducedComodule& vw) {
  DirectSumWitness out;
  out.checks = Report("induction of a direct sum");
  if (!(*v.comodule.over == *w.comodule.over) || !(*v.comodule.over == *vw.comodule.over)) {
    out.checks.add("base", false, "different base families");
    return out;
  }
  const PiCoalgebra& hc = *v.comodule.over;
  const FieldSpec f = hc.field;
  const int dv = v.base_dim, dw = w.base_dim;
  if (vw.base_dim != dv + dw) {
    out.checks.add("base_split", false, "summand base dimensions do not add up");
    return out;
  }
  const int dc1 = dv + dw > 0 ? vw.rho.rows() / (dv + dw) : 0;

  Matrix pv(f, dv, dv + dw), pw(f, dw, dv + dw);
  Matrix iv(f, dv + dw, dv), iw(f, dv + dw, dw);
  for (int i = 0; i < dv; ++i) {
    pv.set_int(i, i, 1);
    iv.set_int(i, i, 1);
  }
  for (int i = 0; i < dw; ++i) {
    pw.set_int(i, dv + i, 1);
    iw.set_int(dv + i, i, 1);
  }
  out.checks.add("base_blocks",
                 vw.rho == mul_kron_right_id(iv, dc1, v.rho) * pv +
                               mul_kron_right_id(iw, dc1, w.rho) * pw,
                 "base coaction must be block diagonal, first summand first");

  out.sum = direct_sum(v.comodule, w.comodule, &out.blocks);
  const int ord = hc.order();
  for (int a = 0; a < ord; ++a) {
    const int na = hc.dims[a];
    const Matrix emb = vw.spaces[a].basis_columns();
    const Matrix raw_l = mul_kron_right_id(pv, na, emb);
    const Matrix raw_r = mul_kron_right_id(pw, na, emb);
    out.checks.add(check_label("left_block_lands", {hc.group->name(a)}),
                   columns_inside(v.spaces[a], raw_l));
    out.checks.add(check_label("right_block_lands", {hc.group->name(a)}),
                   columns_inside(w.spaces[a], raw_r));
    out.checks.add(check_label("dims_add", {hc.group->name(a)}),
                   v.dim(a) + w.dim(a) == vw.dim(a));
    const Matrix theta = out.blocks.into_left[a] * (v.spaces[a].coordinate_map() * raw_l) +
                         out.blocks.into_right[a] * (w.spaces[a].coordinate_map() * raw_r);
    out.theta.push_back(theta);
  }
  out.checks.merge(check_equivalence_witness(vw.comodule, out.sum, out.theta));
  return out;
}

}  // namespace hopfpi
