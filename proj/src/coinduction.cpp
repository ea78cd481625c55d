#include "hopfpi/coinduction.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace hopfpi {
namespace {

std::string nm(const HopfPiCoalgebra& h, int a) { return h.coalg.group->name(a); }

bool columns_inside(const Subspace& s, const Matrix& m) {
  for (int j = 0; j < m.cols(); ++j) {
    if (!s.contains(m.column_at(j))) return false;
  }
  return true;
}

/// Swap of the two leg indices of a base coaction V -> V (x) C_1, so that
/// precomposition by rho acts on column-major Hom vectors as
/// kron(flip, identity).
Matrix leg_flip(const Matrix& rho, int dv, int dc1) {
  Matrix p(rho.field(), dv * dc1, dv);
  for (int i = 0; i < dv; ++i) {
    for (int j = 0; j < dv; ++j) {
      for (int c = 0; c < dc1; ++c) {
        p.set(j * dc1 + c, i, rho.at(i * dc1 + c, j));
      }
    }
  }
  return p;
}

/// Uniform entries, retried until invertible. Entries come straight from
/// the raw generator so the stream is identical on every platform.
Matrix random_invertible(FieldSpec f, int n, std::mt19937_64& gen) {
  for (;;) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const std::int64_t v = f.is_prime() ? static_cast<std::int64_t>(gen() % f.p)
                                            : static_cast<std::int64_t>(gen() % 7) - 3;
        m.set_int(i, j, v);
      }
    }
    if (inverse(m)) return m;
  }
}

}  // namespace

std::vector<DualBasisPair> standard_dual_bases(const HopfPiCoalgebra& h) {
  std::vector<DualBasisPair> out;
  out.reserve(h.order());
  for (int a = 0; a < h.order(); ++a) {
    const Matrix id = Matrix::identity(h.field(), h.coalg.dims[a]);
    out.push_back({id, id});
  }
  return out;
}

MatrixFamily coind_coaction(const HopfPiCoalgebra& h, const CoinducedComodule& w,
                            const std::vector<DualBasisPair>& duals, Report* report) {
  const int ord = h.order();
  const int dv = w.base_dim;
  if (static_cast<int>(duals.size()) != ord) {
    throw std::invalid_argument("coind_coaction: one dual-basis pair per component");
  }
  Report local("coinduced coaction");
  for (int b = 0; b < ord; ++b) {
    const int nb = h.coalg.dims[b];
    if (duals[b].basis.rows() != nb || duals[b].basis.cols() != nb ||
        duals[b].dual.rows() != nb || duals[b].dual.cols() != nb) {
      throw std::invalid_argument("coind_coaction: dual-basis shapes must match the component");
    }
    const bool paired = (duals[b].dual * duals[b].basis).is_identity();
    local.add(check_label("dual_pairing", {nm(h, b)}), paired,
              paired ? "" : "functionals are not dual to the basis");
  }

  MatrixFamily omega;
  omega.reserve(ord * ord);
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      const int ab = h.coalg.group->mul(a, b);
      const int na = h.coalg.dims[a];
      const int nb = h.coalg.dims[b];
      const Matrix emb = w.spaces[ab].basis_columns();
      // Postcomposition by Delta on every basis element at once.
      const Matrix expanded = mul_kron_left_id(dv, h.coalg.Delta(a, b), emb);
      Matrix out(h.field(), w.spaces[a].dim() * nb, w.spaces[ab].dim());
      bool inside = true;
      for (int i = 0; i < nb; ++i) {
        const Matrix contracted =
            mul_kron_left_id(dv * na, duals[b].dual.row_slice(i, 1), expanded);
        inside = inside && columns_inside(w.spaces[a], contracted);
        if (!inside) break;
        out = out + kron(w.spaces[a].coordinate_map() * contracted,
                         duals[b].basis.column_at(i));
      }
      if (!inside) {
        throw std::invalid_argument("coind_coaction: image leaves the family at (" +
                                    nm(h, a) + "," + nm(h, b) + ")");
      }
      local.add(check_label("coaction_contained", {nm(h, a), nm(h, b)}), true);
      omega.push_back(std::move(out));
    }
  }
  if (report) report->merge(local);
  return omega;
}

CoinducedComodule coinduce(const HopfPiCoalgebra& h, const SubgroupPair& pair,
                           const Matrix& rho) {
  const int ord = h.order();
  const int dc1 = pair.c.dims[0];
  const int dv = rho.cols();
  if (rho.rows() != dv * dc1) {
    throw std::invalid_argument("coinduce: coaction must map V into V (x) C_1");
  }

  CoinducedComodule w;
  w.rho = rho;
  w.base_dim = dv;
  w.duals = standard_dual_bases(h);
  w.checks = Report("coinduced comodule");

  const Matrix flip = leg_flip(rho, dv, dc1);
  for (int a = 0; a < ord; ++a) {
    const int na = h.coalg.dims[a];
    const Matrix eq = kron(Matrix::identity(h.field(), dv), l_map(h, pair, 0, a)) -
                      kron(flip, Matrix::identity(h.field(), na));
    w.spaces.push_back(kernel_basis(eq));
  }

  w.comodule.over = std::make_shared<const PiCoalgebra>(h.coalg);
  w.comodule.dims.resize(ord);
  for (int a = 0; a < ord; ++a) w.comodule.dims[a] = w.spaces[a].dim();
  w.comodule.theta = coind_coaction(h, w, w.duals, &w.checks);
  w.checks.merge(verify_comodule(w.comodule));
  return w;
}

Report verify_basis_independence(const HopfPiCoalgebra& h, const CoinducedComodule& w,
                                 int rounds, std::uint64_t seed) {
  Report r("dual-basis independence");
  const int ord = h.order();
  const int dv = w.base_dim;
  std::mt19937_64 gen(seed);

  for (int round = 1; round <= rounds; ++round) {
    std::vector<DualBasisPair> picked;
    picked.reserve(ord);
    for (int b = 0; b < ord; ++b) {
      Matrix basis = random_invertible(h.field(), h.coalg.dims[b], gen);
      Matrix dual = *inverse(basis);
      picked.push_back({std::move(basis), std::move(dual)});
    }

    const MatrixFamily again = coind_coaction(h, w, picked, nullptr);
    bool same = true;
    std::string where;
    for (int a = 0; a < ord && same; ++a) {
      for (int b = 0; b < ord && same; ++b) {
        if (!(again[a * ord + b] == w.comodule.Theta(a, b))) {
          same = false;
          where = "component pair (" + nm(h, a) + "," + nm(h, b) + ")";
        }
      }
    }
    r.add(check_label("coaction_invariant", {std::to_string(round)}), same, where);

    // One-step vs two-step expansion of (I (x) Delta) Delta against the
    // picked pairing, on every basis element of every component.
    bool agree = true;
    std::string at;
    for (int a = 0; a < ord && agree; ++a) {
      for (int b = 0; b < ord && agree; ++b) {
        for (int c = 0; c < ord && agree; ++c) {
          const int bc = h.coalg.group->mul(b, c);
          const int abc = h.coalg.group->mul(a, bc);
          const int na = h.coalg.dims[a];
          const int nbc = h.coalg.dims[bc];
          const Matrix emb = w.spaces[abc].basis_columns();
          const Matrix expanded = mul_kron_left_id(dv, h.coalg.Delta(a, bc), emb);

          Matrix one(h.field(), dv * na * h.coalg.dims[b] * h.coalg.dims[c], emb.cols());
          for (int i = 0; i < nbc; ++i) {
            const Matrix leg =
                mul_kron_left_id(dv * na, picked[bc].dual.row_slice(i, 1), expanded);
            one = one + kron(leg, h.coalg.Delta(b, c) * picked[bc].basis.column_at(i));
          }

          Matrix two(h.field(), dv * na * h.coalg.dims[b] * h.coalg.dims[c], emb.cols());
          for (int t = 0; t < h.coalg.dims[b]; ++t) {
            for (int u = 0; u < h.coalg.dims[c]; ++u) {
              const Matrix functional =
                  kron(picked[b].dual.row_slice(t, 1), picked[c].dual.row_slice(u, 1)) *
                  h.coalg.Delta(b, c);
              const Matrix leg = mul_kron_left_id(dv * na, functional, expanded);
              two = two + kron(leg, kron(picked[b].basis.column_at(t),
                                         picked[c].basis.column_at(u)));
            }
          }

          if (!(one == two)) {
            agree = false;
            at = "component triple (" + nm(h, a) + "," + nm(h, b) + "," + nm(h, c) + ")";
          }
        }
      }
    }
    r.add(check_label("expansions_agree", {std::to_string(round)}), agree, at);
  }
  return r;
}

EquivalenceWitness coind_equivalence(const Matrix& f1, const CoinducedComodule& v,
                                     const CoinducedComodule& w) {
  EquivalenceWitness out;
  out.checks = Report("coinduced equivalence");
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
  const Matrix f1t = f1.transpose();
  for (int a = 0; a < ord; ++a) {
    // Precomposition by f1 on column-major Hom vectors.
    const Matrix raw = mul_kron_right_id(f1t, hc.dims[a], w.spaces[a].basis_columns());
    out.checks.add(check_label("maps_into", {hc.group->name(a)}),
                   columns_inside(v.spaces[a], raw));
    out.maps.push_back(v.spaces[a].coordinate_map() * raw);
  }
  out.checks.merge(check_equivalence_witness(w.comodule, v.comodule, out.maps));
  out.ok = out.checks.ok();
  return out;
}

DirectSumWitness coind_direct_sum_iso(const CoinducedComodule& v, const CoinducedComodule& w,
                                      const CoinducedComodule& vw) {
  DirectSumWitness out;
  out.checks = Report("coinduction of a direct sum");
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
    // Precomposition with an immersion transposes to the matching block
    // projection on column-major Hom vectors.
    const Matrix raw_l = mul_kron_right_id(iv.transpose(), na, emb);
    const Matrix raw_r = mul_kron_right_id(iw.transpose(), na, emb);
    out.checks.add(check_label("left_block_lands", {hc.group->name(a)}),
                   columns_inside(v.spaces[a], raw_l));
    out.checks.add(check_label("right_block_lands", {hc.group->name(a)}),
                   columns_inside(w.spaces[a], raw_r));
    out.checks.add(check_label("dims_add", {hc.group->name(a)}),
                   v.dim(a) + w.dim(a) == vw.dim(a));
    const Matrix chi = out.blocks.into_left[a] * (v.spaces[a].coordinate_map() * raw_l) +
                       out.blocks.into_right[a] * (w.spaces[a].coordinate_map() * raw_r);
    out.theta.push_back(chi);
  }
  out.checks.merge(check_equivalence_witness(vw.comodule, out.sum, out.theta));
  return out;
}

IsolatedPipeline pipeline_from_isolated(const HopfPiCoalgebra& h, const SubspaceFamily& a,
                                        const SubspaceFamily& ideal, const Matrix& rho) {
  IsolatedPipeline out;
  out.checks = Report("isolated pipeline");
  out.pair = isolated_to_coisotropic(h, a, ideal, &out.sub);
  out.checks.merge(check_coisotropic(h, out.pair));
  out.induced = induce(h, out.pair, rho);
  out.checks.merge(out.induced.checks);
  out.coinduced = coinduce(h, out.pair, rho);
  out.checks.merge(out.coinduced.checks);
  return out;
}

}  // namespace hopfpi
