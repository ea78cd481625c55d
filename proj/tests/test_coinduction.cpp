#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hopfpi/builtins.hpp"
#include "hopfpi/coinduction.hpp"

using namespace hopfpi;

namespace {

const FieldSpec Q = FieldSpec::rationals();

SubgroupPair identity_pair(const HopfPiCoalgebra& h) {
  MatrixFamily id;
  for (int a = 0; a < h.order(); ++a) id.push_back(Matrix::identity(h.field(), h.coalg.dims[a]));
  return coisotropic_from_subcoalgebra(h, h, id);
}

// span{u^0, u^2, u^4} inside the order-six group algebra component.
Subspace even_span(FieldSpec f) {
  Matrix cols(f, 6, 3);
  for (int k = 0; k < 3; ++k) cols.set_int(2 * k, k, 1);
  return Subspace::span_of_columns(cols);
}

Subspace odd_span(FieldSpec f) {
  Matrix cols(f, 6, 3);
  for (int k = 0; k < 3; ++k) cols.set_int(2 * k + 1, k, 1);
  return Subspace::span_of_columns(cols);
}

// The one-dimensional coaction w -> w (x) v^j over k[Z_2].
Matrix line_rho(FieldSpec f, int j) {
  Matrix e(f, 2, 1);
  e.set_int(j, 0, 1);
  return e;
}

// Base coaction of trivial (+) sign on a two-dimensional space.
Matrix split_rho(FieldSpec f) {
  Matrix rho(f, 4, 2);
  rho.set_int(0, 0, 1);
  rho.set_int(3, 1, 1);
  return rho;
}

}  // namespace

TEST_CASE("coinduced spaces of the identity presentation are the coinvariants") {
  HopfPiCoalgebra h = group_algebra_family(3, Q).hopf;
  SubgroupPair pair = identity_pair(h);
  CoinducedComodule w = coinduce(h, pair, h.unit[0]);
  INFO(w.checks.to_text());
  CHECK(w.checks.ok());

  HomogeneousSpace space = homogeneous_space(h, pair);
  for (int a = 0; a < 2; ++a) {
    CHECK(w.dim(a) == 1);
    CHECK(w.spaces[a] == space.spaces[a]);
  }
}

TEST_CASE("coinduction through the coset pair matches induction") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  CoinducedComodule w = coinduce(b.hopf, b.pair, line_rho(Q, 0));
  INFO(w.checks.to_text());
  CHECK(w.checks.ok());
  for (int a = 0; a < 2; ++a) {
    CHECK(w.dim(a) == 3);
    CHECK(w.spaces[a] == even_span(Q));
  }

  // On a one-dimensional base Hom(V, H_a) is H_a itself, so the coinduced
  // comodule coincides with the induced one on the nose.
  InducedComodule ind = induce(b.hopf, b.pair, line_rho(Q, 0));
  CHECK(w.comodule == ind.comodule);

  CoinducedComodule sign = coinduce(b.hopf, b.pair, line_rho(Q, 1));
  CHECK(sign.checks.ok());
  for (int a = 0; a < 2; ++a) CHECK(sign.spaces[a] == odd_span(Q));
}

TEST_CASE("coinduction over the truncated mirror pipeline") {
  TaftQuotientBundle tq = taft_quotient_bundle(3, 7, 2);
  const Matrix rho = tq.quotient.onto[0] * tq.hopf.unit[0];
  CoinducedComodule w = coinduce(tq.hopf, tq.pair, rho);
  INFO(w.checks.to_text());
  CHECK(w.checks.ok());

  InducedComodule ind = induce(tq.hopf, tq.pair, rho);
  for (int a = 0; a < 3; ++a) {
    CHECK(w.dim(a) == ind.dim(a));
    CHECK(w.spaces[a] == ind.spaces[a]);
  }
  CHECK(w.comodule == ind.comodule);
}

TEST_CASE("any genuine pairing reproduces the stored coaction") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  CoinducedComodule w = coinduce(b.hopf, b.pair, line_rho(Q, 0));

  // Cyclic relabeling of each component basis, inverted on the dual side.
  std::vector<DualBasisPair> shifted;
  for (int a = 0; a < 2; ++a) {
    Matrix p(Q, 6, 6);
    for (int j = 0; j < 6; ++j) p.set_int((j + 1) % 6, j, 1);
    shifted.push_back({p, p.transpose()});
  }
  Report rep("pairing");
  MatrixFamily again = coind_coaction(b.hopf, w, shifted, &rep);
  CHECK(rep.ok());
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) CHECK(again[a * 2 + c] == w.comodule.Theta(a, c));
  }

  // Functionals that are not dual to the basis are flagged and move Omega.
  std::vector<DualBasisPair> broken;
  for (int a = 0; a < 2; ++a) {
    Matrix p(Q, 6, 6);
    for (int j = 0; j < 6; ++j) p.set_int((j + 1) % 6, j, 1);
    broken.push_back({Matrix::identity(Q, 6), p});
  }
  Report misuse("pairing");
  MatrixFamily off = coind_coaction(b.hopf, w, broken, &misuse);
  CHECK(misuse.fails_at("dual_pairing"));
  CHECK_FALSE(off[0] == w.comodule.Theta(0, 0));
}

TEST_CASE("the coaction is independent of the dual basis") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  CoinducedComodule w = coinduce(b.hopf, b.pair, line_rho(Q, 0));
  Report r = verify_basis_independence(b.hopf, w, 3, 1);
  INFO(r.to_text());
  CHECK(r.ok());

  TaftQuotientBundle tq = taft_quotient_bundle(3, 7, 2);
  const Matrix rho = tq.quotient.onto[0] * tq.hopf.unit[0];
  CoinducedComodule w7 = coinduce(tq.hopf, tq.pair, rho);
  Report first = verify_basis_independence(tq.hopf, w7, 3, 5);
  INFO(first.to_text());
  CHECK(first.ok());

  // Same seed, same transcript.
  Report second = verify_basis_independence(tq.hopf, w7, 3, 5);
  CHECK(first.to_text() == second.to_text());
}

TEST_CASE("coinduced equivalence precomposes a compatible base map") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  CoinducedComodule v = coinduce(b.hopf, b.pair, line_rho(Q, 0));
  CoinducedComodule w = coinduce(b.hopf, b.pair, line_rho(Q, 1));

  EquivalenceWitness cross = coind_equivalence(Matrix::identity(Q, 1), v, w);
  CHECK_FALSE(cross.ok);
  CHECK(cross.checks.fails_at("base_intertwines"));
  CHECK_FALSE(cross.residual.is_zero());
  CHECK(cross.maps.empty());

  EquivalenceWitness scaled =
      coind_equivalence(Matrix::identity(Q, 1).scaled(Scalar(Q, 2)), v, v);
  INFO(scaled.checks.to_text());
  CHECK(scaled.ok);
  for (int a = 0; a < 2; ++a) {
    CHECK(scaled.maps[a] == Matrix::identity(Q, 3).scaled(Scalar(Q, 2)));
  }

  EquivalenceWitness flat = coind_equivalence(Matrix(Q, 1, 1), v, v);
  CHECK_FALSE(flat.ok);
  CHECK(flat.checks.fails_at("f1_invertible"));
}

TEST_CASE("coinduced equivalence transports a conjugated base") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  const Matrix rho = split_rho(Q);
  const Matrix p = Matrix::from_rows(Q, {{1, 1}, {0, 1}});
  const Matrix psi = mul_kron_right_id(p, 2, rho) * *inverse(p);

  CoinducedComodule wv = coinduce(b.hopf, b.pair, rho);
  CoinducedComodule ww = coinduce(b.hopf, b.pair, psi);
  for (int a = 0; a < 2; ++a) CHECK(wv.dim(a) == 6);

  EquivalenceWitness wit = coind_equivalence(p, wv, ww);
  INFO(wit.checks.to_text());
  CHECK(wit.ok);
}

TEST_CASE("coinduction splits over direct sums") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  CoinducedComodule wv = coinduce(b.hopf, b.pair, line_rho(Q, 0));
  CoinducedComodule ww = coinduce(b.hopf, b.pair, line_rho(Q, 1));
  CoinducedComodule wvw = coinduce(b.hopf, b.pair, split_rho(Q));
  for (int a = 0; a < 2; ++a) CHECK(wvw.dim(a) == 6);

  DirectSumWitness wit = coind_direct_sum_iso(wv, ww, wvw);
  INFO(wit.checks.to_text());
  CHECK(wit.checks.ok());
  for (int a = 0; a < 2; ++a) {
    CHECK(wit.theta[a].rows() == 6);
    CHECK(wit.theta[a].cols() == 6);
  }

  // The sum must present the first summand first.
  DirectSumWitness flipped = coind_direct_sum_iso(ww, wv, wvw);
  CHECK(flipped.checks.fails_at("base_blocks"));
}

TEST_CASE("coinduction rejects malformed input") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  CHECK_THROWS_AS(coinduce(b.hopf, b.pair, Matrix(Q, 3, 1)), std::invalid_argument);

  // A family that is not closed under the contractions is refused.
  CoinducedComodule w = coinduce(b.hopf, b.pair, line_rho(Q, 0));
  Matrix diag(Q, 6, 1);
  for (int k = 0; k < 3; ++k) diag.set_int(2 * k, 0, 1);
  w.spaces[0] = Subspace::span_of_columns(diag);
  CHECK_THROWS_AS(coind_coaction(b.hopf, w, w.duals), std::invalid_argument);
}

TEST_CASE("the isolated pipeline produces both representations") {
  TaftIsolatedBundle ti = taft_isolated_bundle(3, 7, 2);
  const FieldSpec f = ti.hopf.field();
  IsolatedPipeline pipe =
      pipeline_from_isolated(ti.hopf, ti.sub, ti.ideal, ti.subhopf.unit[0]);
  INFO(pipe.checks.to_text());
  CHECK(pipe.checks.ok());

  // The coinvariants of the split are the powers of the nilpotent generator.
  Matrix gs(f, 9, 3);
  for (int k = 0; k < 3; ++k) gs.set_int(3 * k, k, 1);
  const Subspace gspan = Subspace::span_of_columns(gs);
  for (int a = 0; a < 3; ++a) {
    CHECK(pipe.induced.dim(a) == 3);
    CHECK(pipe.induced.spaces[a] == gspan);
    CHECK(pipe.coinduced.spaces[a] == pipe.induced.spaces[a]);
  }
  CHECK(pipe.coinduced.comodule == pipe.induced.comodule);

  // Whole-space decomposition gives the unit line.
  HopfPiCoalgebra h = group_algebra_family(3, Q).hopf;
  SubspaceFamily full, zero;
  for (int a = 0; a < 2; ++a) {
    full.push_back(Subspace::span_of_columns(Matrix::identity(Q, 3)));
    zero.push_back(Subspace::span_of_columns(Matrix(Q, 3, 0)));
  }
  IsolatedPipeline plain = pipeline_from_isolated(h, full, zero, h.unit[0]);
  CHECK(plain.checks.ok());
  for (int a = 0; a < 2; ++a) CHECK(plain.coinduced.dim(a) == 1);

  CHECK_THROWS_AS(pipeline_from_isolated(ti.hopf, ti.sub, ti.sub, ti.subhopf.unit[0]),
                  std::invalid_argument);
}
