#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hopfpi/builtins.hpp"
#include "hopfpi/tensor.hpp"

using namespace hopfpi;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime_field(7);

void check_all_pass(const HopfPiCoalgebra& h) {
  Report rc = verify_pi_coalgebra(h.coalg);
  INFO(rc.to_text());
  CHECK(rc.ok());
  Report rh = verify_hopf(h);
  INFO(rh.to_text());
  CHECK(rh.ok());
  Report rl = verify_lemma34(h);
  INFO(rl.to_text());
  CHECK(rl.ok());
}

Matrix basis_vec(FieldSpec f, int dim, int i) {
  Matrix e(f, dim, 1);
  e.set_int(i, 0, 1);
  return e;
}

}  // namespace

TEST_CASE("one-dimensional family over the trivial group") {
  for (FieldSpec f : {Q, F7}) {
    CAPTURE(f.describe());
    HopfPiCoalgebra h = trivial_pi(f);
    CHECK(h.order() == 1);
    CHECK(h.dim(0) == 1);
    check_all_pass(h);
  }
}

TEST_CASE("group algebra of a cyclic group is a hopf algebra") {
  ClassicalHopfAlgebra a = group_algebra(GroupTable::cyclic(4, "u"), Q);
  Report r = verify_classical_hopf(a);
  INFO(r.to_text());
  CHECK(r.ok());
  // Every basis element is group-like and the antipode inverts.
  for (int j = 0; j < 4; ++j) {
    Matrix e = basis_vec(Q, 4, j);
    CHECK(a.delta * e == kron(e, e));
    CHECK(a.antipode * e == basis_vec(Q, 4, (4 - j) % 4));
  }
}

TEST_CASE("cyclic group algebra mirrored along inversion") {
  for (FieldSpec f : {Q, F7}) {
    CAPTURE(f.describe());
    MirrorBundle m = group_algebra_family(3, f);
    CHECK(m.hopf.order() == 2);
    CHECK(m.hopf.coalg.dims == std::vector<int>{3, 3});
    Report ra = verify_action(m.base, m.action);
    INFO(ra.to_text());
    CHECK(ra.ok());
    check_all_pass(m.hopf);

    // Delta_{a,t} twists the left leg by inversion: u maps to u^2 (x) u.
    Matrix du = m.hopf.coalg.Delta(0, 1).column_at(1);
    CHECK(du == kron(basis_vec(f, 3, 2), basis_vec(f, 3, 1)));
    // Delta_{a,1} is the untwisted coproduct.
    CHECK(m.hopf.coalg.Delta(1, 0).column_at(1) ==
          kron(basis_vec(f, 3, 1), basis_vec(f, 3, 1)));
    // S_t = lambda(t) S = inversion twice = identity.
    CHECK(m.hopf.antipode[1].is_identity());
  }
}

TEST_CASE("taft algebra structure constants") {
  ClassicalHopfAlgebra t = taft_algebra(3, 7, 2);
  const int d = 9;
  Report r = verify_classical_hopf(t);
  INFO(r.to_text());
  CHECK(r.ok());

  // Basis g^a x^b at a*3+b; x = 1, x^2 = 2, g = 3, gx = 4, gx^2 = 5, g^2 = 6.
  Matrix x = basis_vec(F7, d, 1);
  Matrix g = basis_vec(F7, d, 3);
  // x g = q g x with q = 2.
  CHECK(apply_mul(t.mul, x, g) == basis_vec(F7, d, 4).scaled(Scalar(F7, 2)));
  CHECK(apply_mul(t.mul, g, x) == basis_vec(F7, d, 4));
  // x^3 = 1, g^3 = 0.
  CHECK(apply_mul(t.mul, basis_vec(F7, d, 2), x) == basis_vec(F7, d, 0));
  CHECK(apply_mul(t.mul, basis_vec(F7, d, 6), g).is_zero());

  // Delta x = x (x) x; Delta g = g (x) x + 1 (x) g.
  CHECK(t.delta.column_at(1) == kron(x, x));
  Matrix dg = kron(g, x) + kron(basis_vec(F7, d, 0), g);
  CHECK(t.delta.column_at(3) == dg);
  // Delta g^2 = g^2 (x) x^2 + (1+q) g (x) gx + 1 (x) g^2, with 1+q = 3.
  Matrix dgg = kron(basis_vec(F7, d, 6), basis_vec(F7, d, 2)) +
               kron(g, basis_vec(F7, d, 4)).scaled(Scalar(F7, 3)) +
               kron(basis_vec(F7, d, 0), basis_vec(F7, d, 6));
  CHECK(t.delta.column_at(6) == dgg);
  // The cubed coproduct vanishes because 1 + q + q^2 = 7 = 0 in GF(7);
  // this is exactly what lets g^3 = 0 coexist with Delta being an
  // algebra map.
  Matrix dg3 = tensor_algebra_mul(t.mul, t.mul, tensor_algebra_mul(t.mul, t.mul, dg, dg), dg);
  CHECK(dg3.is_zero());

  // Counit kills g, keeps x.
  CHECK(t.counit.at(0, 1).residue() == 1);
  CHECK(t.counit.at(0, 3).residue() == 0);
  // S x = x^2, S g = -g x^2.
  CHECK(t.antipode.column_at(1) == basis_vec(F7, d, 2));
  CHECK(t.antipode.column_at(3) == basis_vec(F7, d, 5).scaled(Scalar(F7, -1)));
}

TEST_CASE("taft parameter validation") {
  CHECK_THROWS_AS(taft_algebra(3, 7, 6), std::invalid_argument);  // order 2, not 3
  CHECK_THROWS_AS(taft_algebra(3, 5, 2), std::invalid_argument);  // order 4, not 3
  CHECK_THROWS_AS(taft_algebra(3, 9, 2), std::invalid_argument);  // not prime
  CHECK_THROWS_AS(taft_algebra(1, 7, 1), std::invalid_argument);
  CHECK_NOTHROW(taft_algebra(2, 5, 4));  // q = -1 mod 5
}

TEST_CASE("taft mirror passes the full axiom suite") {
  MirrorBundle m = taft_mirror(3, 7, 2);
  CHECK(m.hopf.order() == 3);
  CHECK(m.hopf.coalg.dims == std::vector<int>{9, 9, 9});
  Report ra = verify_action(m.base, m.action);
  INFO(ra.to_text());
  CHECK(ra.ok());
  check_all_pass(m.hopf);

  // S_c = lambda(c) S: on g it picks up one factor of q, so
  // S_c(g) = -q g x^2 = 5 g x^2 over GF(7).
  CHECK(m.hopf.antipode[1].column_at(3) == basis_vec(F7, 9, 5).scaled(Scalar(F7, 5)));
  // Delta_{c,c}(g) = lambda(c)g (x) x + 1 (x) g = 2 g (x) x + 1 (x) g.
  Matrix expect = kron(basis_vec(F7, 9, 3), basis_vec(F7, 9, 1)).scaled(Scalar(F7, 2)) +
                  kron(basis_vec(F7, 9, 0), basis_vec(F7, 9, 3));
  CHECK(m.hopf.coalg.Delta(1, 1).column_at(3) == expect);
}

TEST_CASE("mirror construction rejects a broken action") {
  MirrorBundle m = group_algebra_family(3, Q);
  GroupAction bad = m.action;
  // Cyclic shift u^j -> u^{j+1} is left multiplication by u, which is not
  // an algebra map (it moves the unit).
  bad.lambda[1] = Matrix::from_rows(Q, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  Report r = verify_action(m.base, bad);
  CHECK_FALSE(r.ok());
  CHECK(r.fails_at("algebra_map(t)"));
  CHECK_THROWS_AS(mirror_construction(m.base, bad), std::invalid_argument);

  GroupAction not_hom = m.action;
  not_hom.lambda[0] = not_hom.lambda[1];  // identity must act as identity
  CHECK(verify_action(m.base, not_hom).fails_at("identity_acts_trivially"));
}

TEST_CASE("cosection families of a mirror") {
  MirrorBundle m = group_algebra_family(3, Q);
  MatrixFamily eta = mirror_cosection(m);
  REQUIRE(eta.size() == 2);
  CHECK(eta[0].is_identity());
  CHECK(eta[1] == m.action.lambda[1]);  // t is its own inverse
  MatrixFamily copy = copy_cosection(m);
  CHECK(copy[1].is_identity());
}

TEST_CASE("scaled identity coproduct breaks exactly the counit diagrams") {
  HopfPiCoalgebra h = trivial_pi(Q);
  h.coalg.Delta(0, 0).set_int(0, 0, 2);
  Report r = verify_pi_coalgebra(h.coalg);
  CHECK_FALSE(r.ok());
  CHECK(r.fails_at("counit_left(1)"));
  CHECK(r.fails_at("counit_right(1)"));
  CHECK_FALSE(r.fails_at("coassoc"));  // [2] still coassociates

  Report rh = verify_hopf(h);
  CHECK(rh.fails_at("delta_mult(1,1)"));
  CHECK(rh.fails_at("delta_unit(1,1)"));
  CHECK(rh.fails_at("antipode_left(1)"));
  CHECK_FALSE(rh.fails_at("eps_mult"));
}

TEST_CASE("perturbed identity-component antipode is localized") {
  MirrorBundle m = taft_mirror(3, 7, 2);
  HopfPiCoalgebra h = m.hopf;
  h.antipode[0].add_int(0, 0, 1);
  Report r = verify_hopf(h);
  CHECK_FALSE(r.ok());
  // S_1 only enters the antipode law at the identity component.
  CHECK(r.fails_at("antipode_left(1)"));
  CHECK(r.fails_at("antipode_right(1)"));
  CHECK_FALSE(r.fails_at("antipode_left(c)"));
  CHECK_FALSE(r.fails_at("antipode_right(c^2)"));
  CHECK_FALSE(r.fails_at("assoc"));
  CHECK_FALSE(r.fails_at("delta_mult"));
}

TEST_CASE("shape defects short-circuit to the shape report") {
  MirrorBundle m = group_algebra_family(3, Q);
  HopfPiCoalgebra h = m.hopf;
  h.coalg.Delta(0, 1) = Matrix(Q, 2, 2);
  Report r = verify_pi_coalgebra(h.coalg);
  CHECK_FALSE(r.ok());
  CHECK(r.fails_at("shape_delta(1,t)"));
  CHECK_FALSE(r.fails_at("coassoc"));
  CHECK(r.title() == "coalgebra shapes");

  HopfPiCoalgebra h2 = m.hopf;
  h2.unit[1] = Matrix(Q, 4, 1);
  CHECK(verify_hopf(h2).fails_at("shape_unit(t)"));
}

TEST_CASE("structure equality is componentwise") {
  MirrorBundle a = group_algebra_family(3, Q);
  MirrorBundle b = group_algebra_family(3, Q);
  CHECK(a.hopf == b.hopf);
  b.hopf.mul[0].add_int(0, 0, 1);
  CHECK_FALSE(a.hopf == b.hopf);
  CHECK_FALSE(a.hopf == group_algebra_family(3, F7).hopf);
}
