#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hopfpi/builtins.hpp"
#include "hopfpi/induction.hpp"

using namespace hopfpi;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Matrix basis_vec(FieldSpec f, int dim, int i) {
  Matrix e(f, dim, 1);
  e.set_int(i, 0, 1);
  return e;
}

SubgroupPair identity_pair(const HopfPiCoalgebra& h) {
  MatrixFamily id;
  for (int a = 0; a < h.order(); ++a) id.push_back(Matrix::identity(h.field(), h.coalg.dims[a]));
  return coisotropic_from_subcoalgebra(h, h, id);
}

SectionFamily antipode_section(const HopfPiCoalgebra& h) {
  SectionFamily s;
  for (int a = 0; a < h.order(); ++a) {
    s.g.push_back(Matrix::identity(h.field(), h.coalg.dims[a]));
    s.ginv.push_back(h.antipode[h.coalg.group->inv(a)]);
  }
  return s;
}

// span{u^0, u^2, u^4} inside the order-six group algebra component.
Subspace even_span(FieldSpec f) {
  Matrix cols(f, 6, 3);
  for (int k = 0; k < 3; ++k) cols.set_int(2 * k, k, 1);
  return Subspace::span_of_columns(cols);
}

// The one-dimensional coaction w -> w (x) v^j over k[Z_2].
Matrix line_rho(FieldSpec f, int j) { return basis_vec(f, 2, j); }

}  // namespace

TEST_CASE("L of the identity presentation is the comultiplication") {
  HopfPiCoalgebra h = group_algebra_family(3, Q).hopf;
  SubgroupPair pair = identity_pair(h);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) CHECK(l_map(h, pair, a, b) == h.coalg.Delta(a, b));
  }
  CHECK(l_family(h, pair).size() == 4);
}

TEST_CASE("L identities with and without an action") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  Report r = verify_L_identities(b.hopf, b.pair);
  INFO(r.to_text());
  CHECK(r.ok());

  TaftQuotientBundle tq = taft_quotient_bundle(3, 7, 2);
  CHECK(verify_L_identities(tq.hopf, tq.pair).ok());

  MatrixFamily omega = *b.pair.omega;
  omega[1].add_int(0, 0, 1);
  SubgroupPair bad{b.pair.c, b.pair.sigma, omega};
  Report broken = verify_L_identities(b.hopf, bad);
  CHECK_FALSE(broken.ok());
  CHECK(broken.fails_at("product_rule"));
  CHECK_FALSE(broken.fails_at("mixed_coassoc"));
}

TEST_CASE("coinvariants of the coset pair are the even powers") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  HomogeneousSpace space = homogeneous_space(b.hopf, b.pair);
  INFO(space.checks.to_text());
  CHECK(space.checks.ok());
  for (int a = 0; a < 2; ++a) {
    CHECK(space.dim(a) == 3);
    CHECK(space.spaces[a] == even_span(Q));
  }

  HomogeneousSpace g = homogeneous_space(b.hopf, b.pair, SpaceFlavor::G);
  CHECK(g.flavor == SpaceFlavor::G);
  for (int a = 0; a < 2; ++a) CHECK(g.spaces[a] == space.spaces[a]);

  // With sigma the identity the coinvariants collapse to the unit line.
  HopfPiCoalgebra h = group_algebra_family(3, Q).hopf;
  HomogeneousSpace unit_line = homogeneous_space(h, identity_pair(h));
  CHECK(unit_line.checks.ok());
  for (int a = 0; a < 2; ++a) {
    CHECK(unit_line.dim(a) == 1);
    CHECK(unit_line.spaces[a].contains(h.unit[a]));
  }
}

TEST_CASE("inducing the trivial coaction recovers the coinvariants") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  InducedComodule ind = induce(b.hopf, b.pair, line_rho(Q, 0));
  INFO(ind.checks.to_text());
  CHECK(ind.checks.ok());
  CHECK(ind.comodule.dims == std::vector<int>{3, 3});
  for (int a = 0; a < 2; ++a) CHECK(ind.spaces[a] == even_span(Q));

  // u^2 -> u^-2 (x) u^2 under the inverted-leg comultiplication.
  CHECK(ind.comodule.Theta(1, 1).column_at(1) == basis_vec(Q, 18, 2 * 6 + 2));

  CHECK_THROWS_AS(induce(b.hopf, b.pair, Matrix(Q, 3, 1)), std::invalid_argument);
}

TEST_CASE("induced spaces over the truncated mirror are the x powers") {
  TaftQuotientBundle tq = taft_quotient_bundle(3, 7, 2);
  const FieldSpec f = tq.hopf.field();
  const Matrix rho = tq.quotient.onto[0] * tq.hopf.unit[0];
  InducedComodule ind = induce(tq.hopf, tq.pair, rho);
  INFO(ind.checks.to_text());
  CHECK(ind.checks.ok());

  Matrix xs(f, 9, 3);
  for (int bpow = 0; bpow < 3; ++bpow) xs.set_int(bpow, bpow, 1);
  const Subspace xspan = Subspace::span_of_columns(xs);
  for (int a = 0; a < 3; ++a) {
    CHECK(ind.dim(a) == 3);
    CHECK(ind.spaces[a] == xspan);
  }

  // Every x power is group like, so each one spans a subcomodule line.
  for (int bpow = 0; bpow < 3; ++bpow) {
    SubcomoduleFamily line = subcomodule_closure(ind.comodule, 0, basis_vec(f, 3, bpow));
    CHECK(family_dims(line) == std::vector<int>{1, 1, 1});
  }
  SimplicityVerdict verdict = is_simple(ind.comodule);
  CHECK_FALSE(verdict.simple);
  CHECK(verdict.exact);
  CHECK(family_dims(verdict.witness) == std::vector<int>{1, 1, 1});
}

TEST_CASE("coinvariant action closes and is unital") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  HomogeneousSpace space = homogeneous_space(b.hopf, b.pair);
  InducedComodule ind = induce(b.hopf, b.pair, line_rho(Q, 0));
  CoinvariantAction act = b_action(b.hopf, ind, space);
  INFO(act.checks.to_text());
  CHECK(act.checks.ok());
  REQUIRE(act.act.size() == 2);
  // u^2 . u^2 = u^4, the third basis vector.
  CHECK(act.act[0].column_at(1 * 3 + 1) == basis_vec(Q, 3, 2));

  TaftQuotientBundle tq = taft_quotient_bundle(3, 7, 2);
  InducedComodule tind = induce(tq.hopf, tq.pair, tq.quotient.onto[0] * tq.hopf.unit[0]);
  CoinvariantAction tact = b_action(tq.hopf, tind, homogeneous_space(tq.hopf, tq.pair));
  CHECK(tact.checks.ok());
}

TEST_CASE("section identities hold for the antipode section") {
  HopfPiCoalgebra h = group_algebra_family(3, Q).hopf;
  MatrixFamily id(2, Matrix::identity(Q, 3));
  SectionFamily s = antipode_section(h);
  Report r = verify_section_identities(h, h, id, s);
  INFO(r.to_text());
  CHECK(r.ok());

  // Scaling ginv keeps the inverse-coaction identity (it is linear in
  // ginv) but breaks the mixed ones; an off-diagonal bump breaks both.
  SectionFamily scaled = s;
  scaled.ginv[1] = scaled.ginv[1].scaled(Scalar(Q, 2));
  Report sr = verify_section_identities(h, h, id, scaled);
  CHECK_FALSE(sr.fails_at("inverse_coaction"));
  CHECK(sr.fails_at("resolution_of_identity"));

  SectionFamily bumped = s;
  bumped.ginv[1].add_int(0, 1, 1);
  CHECK(verify_section_identities(h, h, id, bumped).fails_at("inverse_coaction"));
}

TEST_CASE("section identities hold for the coset section") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  Report r = verify_section_identities(b.hopf, b.sub, b.sigma, b.section);
  INFO(r.to_text());
  CHECK(r.ok());
}

TEST_CASE("factorization through the coinvariants") {
  HopfPiCoalgebra h = group_algebra_family(3, Q).hopf;
  MatrixFamily id(2, Matrix::identity(Q, 3));
  CosetWitness trivial = iso_CB(h, h, id, antipode_section(h));
  INFO(trivial.checks.to_text());
  CHECK(trivial.checks.ok());
  for (int a = 0; a < 2; ++a) CHECK(trivial.space.dim(a) == 1);

  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  CosetWitness w = iso_CB(b.hopf, b.sub, b.sigma, b.section);
  INFO(w.checks.to_text());
  CHECK(w.checks.ok());
  for (int a = 0; a < 2; ++a) CHECK(w.space.dim(a) == 3);
  // A(v^1 (x) u^4) = u * u^4 = u^5.
  CHECK(w.a[1].column_at(1 * 3 + 2) == basis_vec(Q, 6, 5));

  CosetWitness g = iso_CG(b.hopf, b.pair, b.section);
  INFO(g.checks.to_text());
  CHECK(g.checks.ok());
  CHECK(g.space.flavor == SpaceFlavor::G);

  SectionFamily wrong = b.section;
  wrong.ginv[1] = wrong.ginv[1].scaled(Scalar(Q, 3));
  CHECK_FALSE(iso_CB(b.hopf, b.sub, b.sigma, wrong).checks.ok());
}

TEST_CASE("cosection checks tell the mirror maps apart") {
  MirrorBundle m = taft_mirror(3, 7, 2);
  Report good = check_cosection(m.hopf, mirror_cosection(m));
  INFO(good.to_text());
  CHECK(good.ok());

  Report copy = check_cosection(m.hopf, copy_cosection(m));
  CHECK_FALSE(copy.ok());
  CHECK(copy.fails_at("coaction_square"));
  CHECK_FALSE(copy.fails_at("algebra"));

  MirrorBundle gm = group_algebra_family(6, Q);
  CHECK(check_cosection(gm.hopf, mirror_cosection(gm)).ok());
}

TEST_CASE("induced comodules factor as V tensor coinvariants") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  MatrixFamily eta = mirror_cosection(group_algebra_family(6, Q));

  InducedComodule trivial = induce(b.hopf, b.pair, line_rho(Q, 0));
  VBWitness w = iso_VB(b.hopf, b.pair, b.section, eta, trivial);
  INFO(w.checks.to_text());
  CHECK(w.checks.ok());
  // With the trivial base the factorization is the identity in coordinates.
  for (int a = 0; a < 2; ++a) CHECK(w.q[a].is_identity());

  InducedComodule sign = induce(b.hopf, b.pair, line_rho(Q, 1));
  Matrix odd(Q, 6, 3);
  for (int k = 0; k < 3; ++k) odd.set_int(2 * k + 1, k, 1);
  for (int a = 0; a < 2; ++a) CHECK(sign.spaces[a] == Subspace::span_of_columns(odd));
  VBWitness ws = iso_VB(b.hopf, b.pair, b.section, eta, sign);
  INFO(ws.checks.to_text());
  CHECK(ws.checks.ok());

  SectionFamily wrong = b.section;
  wrong.ginv[0] = wrong.ginv[0].scaled(Scalar(Q, 2));
  CHECK_FALSE(iso_VB(b.hopf, b.pair, wrong, eta, trivial).checks.ok());
}

TEST_CASE("induced equivalence demands a compatible base map") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  InducedComodule v = induce(b.hopf, b.pair, line_rho(Q, 0));
  InducedComodule w = induce(b.hopf, b.pair, line_rho(Q, 1));

  EquivalenceWitness cross = induced_equivalence(Matrix::identity(Q, 1), v, w);
  CHECK_FALSE(cross.ok);
  CHECK(cross.checks.fails_at("base_intertwines"));
  CHECK_FALSE(cross.residual.is_zero());
  CHECK(cross.maps.empty());

  EquivalenceWitness scaled =
      induced_equivalence(Matrix::identity(Q, 1).scaled(Scalar(Q, 2)), v, v);
  INFO(scaled.checks.to_text());
  CHECK(scaled.ok);
  for (int a = 0; a < 2; ++a) {
    CHECK(scaled.maps[a] == Matrix::identity(Q, 3).scaled(Scalar(Q, 2)));
  }

  EquivalenceWitness singular = induced_equivalence(Matrix(Q, 1, 1), v, v);
  CHECK_FALSE(singular.ok);
  CHECK(singular.checks.fails_at("f1_invertible"));
}

TEST_CASE("induced equivalence transports a conjugated base") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  Matrix rho2(Q, 4, 2);
  rho2.set_int(0, 0, 1);  // first line coacts by v^0
  rho2.set_int(3, 1, 1);  // second line coacts by v^1
  Matrix p(Q, 2, 2);
  p.set_int(0, 0, 1);
  p.set_int(0, 1, 1);
  p.set_int(1, 1, 1);
  const Matrix pinv = *inverse(p);
  const Matrix psi2 = mul_kron_right_id(p, 2, rho2) * pinv;

  InducedComodule v = induce(b.hopf, b.pair, rho2);
  InducedComodule w = induce(b.hopf, b.pair, psi2);
  CHECK(v.comodule.dims == std::vector<int>{6, 6});
  EquivalenceWitness wit = induced_equivalence(p, v, w);
  INFO(wit.checks.to_text());
  CHECK(wit.ok);
}

TEST_CASE("induction splits over direct sums") {
  GroupQuotientBundle b = group_algebra_pair(6, 2, Q);
  InducedComodule v = induce(b.hopf, b.pair, line_rho(Q, 0));
  InducedComodule w = induce(b.hopf, b.pair, line_rho(Q, 1));

  Matrix rho_sum(Q, 4, 2);
  rho_sum.set_int(0, 0, 1);
  rho_sum.set_int(3, 1, 1);
  InducedComodule vw = induce(b.hopf, b.pair, rho_sum);
  CHECK(vw.comodule.dims == std::vector<int>{6, 6});

  DirectSumWitness wit = induce_direct_sum_iso(v, w, vw);
  INFO(wit.checks.to_text());
  CHECK(wit.checks.ok());
  for (int a = 0; a < 2; ++a) {
    CHECK(wit.theta[a].rows() == 6);
    CHECK(wit.theta[a].cols() == 6);
  }

  // Mismatched block order is refused at the base comparison.
  Matrix flipped(Q, 4, 2);
  flipped.set_int(3, 0, 1);
  flipped.set_int(0, 1, 1);
  InducedComodule vw_flipped = induce(b.hopf, b.pair, flipped);
  CHECK(induce_direct_sum_iso(v, w, vw_flipped).checks.fails_at("base_blocks"));
}
