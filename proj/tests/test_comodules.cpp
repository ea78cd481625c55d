#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <stdexcept>

#include "hopfpi/builtins.hpp"
#include "hopfpi/comodule.hpp"

using namespace hopfpi;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime_field(7);

CoalgebraPtr coalg_of(const HopfPiCoalgebra& h) {
  return std::make_shared<PiCoalgebra>(h.coalg);
}

Matrix basis_vec(FieldSpec f, int dim, int i) {
  Matrix e(f, dim, 1);
  e.set_int(i, 0, 1);
  return e;
}

PiComodule zero_comodule(CoalgebraPtr c) {
  PiComodule z;
  z.over = c;
  const int n = c->order();
  z.dims.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) z.theta.push_back(Matrix(c->field, 0, 0));
  return z;
}

}  // namespace

TEST_CASE("regular coaction satisfies the comodule axioms") {
  for (FieldSpec f : {Q, F7}) {
    CAPTURE(f.describe());
    PiComodule m = regular_comodule(coalg_of(group_algebra_family(3, f).hopf));
    Report r = verify_comodule(m);
    INFO(r.to_text());
    CHECK(r.ok());
  }
  PiComodule t = regular_comodule(coalg_of(taft_mirror(3, 7, 2).hopf));
  CHECK(verify_comodule(t).ok());
  CHECK(t.total_dim() == 27);
}

TEST_CASE("regular hopf comodule: coaction Delta, action multiplication") {
  auto h = std::make_shared<const HopfPiCoalgebra>(taft_mirror(3, 7, 2).hopf);
  HopfPiComodule hm = regular_hopf_comodule(h);
  Report r = verify_hopf_comodule(hm);
  INFO(r.to_text());
  CHECK(r.ok());

  HopfPiComodule bad = hm;
  bad.actions[0].add_int(0, 0, 1);
  Report rb = verify_hopf_comodule(bad);
  CHECK_FALSE(rb.ok());
  CHECK(rb.fails_at("module_unit(1)"));
}

TEST_CASE("perturbed coaction fails a named diagram") {
  PiComodule m = regular_comodule(coalg_of(group_algebra_family(3, Q).hopf));
  m.Theta(1, 1).add_int(0, 0, 1);
  Report r = verify_comodule(m);
  CHECK_FALSE(r.ok());
  CHECK(r.fails_at("comodule_coassoc"));
  // The counit triangle only sees Theta(a, 1), which is untouched.
  CHECK_FALSE(r.fails_at("comodule_counit"));

  PiComodule s = regular_comodule(coalg_of(group_algebra_family(3, Q).hopf));
  s.Theta(0, 0) = Matrix(Q, 2, 2);
  CHECK(verify_comodule(s).fails_at("shape_theta(1,1)"));
}

TEST_CASE("line comodules over the identity slice") {
  CoalgebraPtr slice = identity_slice(group_algebra_family(3, F7).hopf.coalg);
  CHECK(slice->order() == 1);
  CHECK(slice->dims == std::vector<int>{3});

  // u is group-like, so the line over it is a comodule.
  PiComodule rho = line_comodule(slice, basis_vec(F7, 3, 1));
  Report r = verify_comodule(rho);
  INFO(r.to_text());
  CHECK(r.ok());

  // 1 + u is not group-like: coassociativity and the counit both break.
  Matrix ng = basis_vec(F7, 3, 0) + basis_vec(F7, 3, 1);
  Report rb = verify_comodule(line_comodule(slice, ng));
  CHECK_FALSE(rb.ok());
  CHECK(rb.fails_at("comodule_coassoc(1,1,1)"));
  CHECK(rb.fails_at("comodule_counit(1)"));

  CHECK_THROWS_AS(line_comodule(slice, basis_vec(F7, 2, 0)), std::invalid_argument);
}

TEST_CASE("direct sums add dimensions and keep the axioms") {
  CoalgebraPtr c = coalg_of(group_algebra_family(3, Q).hopf);
  PiComodule m = regular_comodule(c);
  SumBlocks bl;
  PiComodule s = direct_sum(m, m, &bl);
  CHECK(s.dims == std::vector<int>{6, 6});
  CHECK(verify_comodule(s).ok());

  // Immersions and projections are comodule maps; immersions are not
  // invertible, which is exactly what the equivalence check adds.
  CHECK(check_intertwining(m, s, bl.into_left).ok());
  CHECK(check_intertwining(m, s, bl.into_right).ok());
  CHECK(check_intertwining(s, m, bl.onto_left).ok());
  Report req = check_equivalence_witness(m, s, bl.into_left);
  CHECK_FALSE(req.ok());
  CHECK(req.fails_at("invertible(1)"));

  // Summing with the zero comodule reproduces the structure maps.
  PiComodule z = zero_comodule(c);
  PiComodule mz = direct_sum(m, z);
  CHECK(mz.dims == m.dims);
  CHECK(mz.theta == m.theta);

  PiComodule other = regular_comodule(coalg_of(group_algebra_family(4, Q).hopf));
  CHECK_THROWS_AS(direct_sum(m, other), std::invalid_argument);
}

TEST_CASE("equivalence witnesses: identity and scalars pass, singular fails") {
  PiComodule m = regular_comodule(coalg_of(group_algebra_family(3, Q).hopf));
  MatrixFamily id{Matrix::identity(Q, 3), Matrix::identity(Q, 3)};
  CHECK(check_equivalence_witness(m, m, id).ok());

  MatrixFamily twice{Matrix::identity(Q, 3).scaled(Scalar(Q, 2)),
                     Matrix::identity(Q, 3).scaled(Scalar(Q, 2))};
  CHECK(check_equivalence_witness(m, m, twice).ok());

  // diag(0,1,1) in both components intertwines (it respects the grading
  // and the inversion twist) but is singular.
  Matrix d011 = Matrix::from_rows(Q, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  MatrixFamily sing{d011, d011};
  CHECK(check_intertwining(m, m, sing).ok());
  Report r = check_equivalence_witness(m, m, sing);
  CHECK_FALSE(r.ok());
  CHECK(r.fails_at("invertible(1)"));
  CHECK(r.fails_at("invertible(t)"));

  // A non-intertwining family is rejected before invertibility.
  MatrixFamily shear = id;
  shear[0].add_int(0, 1, 1);
  CHECK(check_intertwining(m, m, shear).fails_at("intertwines"));
}

TEST_CASE("intertwiner space of the cyclic mirror regular comodule") {
  PiComodule m = regular_comodule(coalg_of(group_algebra_family(3, Q).hopf));
  IntertwinerSpace sp = find_intertwiner_space(m, m);
  CHECK(sp.total == 18);
  // Intertwiners are the diagonal families with the t-component weights
  // inverted: F_1 = diag(a0,a1,a2), F_t = diag(a0,a2,a1). Three parameters.
  CHECK(sp.space.dim() == 3);
  MatrixFamily id{Matrix::identity(Q, 3), Matrix::identity(Q, 3)};
  CHECK(sp.space.contains(sp.flatten(id)));
  CHECK(sp.component(sp.flatten(id), 1).is_identity());
  MatrixFamily twisted{Matrix::from_rows(Q, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}),
                       Matrix::from_rows(Q, {{1, 0, 0}, {0, 3, 0}, {0, 0, 2}})};
  CHECK(sp.space.contains(sp.flatten(twisted)));
  MatrixFamily untwisted{twisted[0], twisted[0]};
  CHECK_FALSE(sp.space.contains(sp.flatten(untwisted)));

  // Hom into the zero comodule is the zero space.
  PiComodule z = zero_comodule(m.over);
  CHECK(find_intertwiner_space(m, z).space.dim() == 0);

  // Two line comodules with different group-likes admit no intertwiner.
  CoalgebraPtr slice = identity_slice(*m.over);
  PiComodule l0 = line_comodule(slice, basis_vec(Q, 3, 0));
  PiComodule l1 = line_comodule(slice, basis_vec(Q, 3, 1));
  CHECK(find_intertwiner_space(l0, l1).space.dim() == 0);
  CHECK(find_intertwiner_space(l1, l1).space.dim() == 1);
}

TEST_CASE("coaction operators dualize the coaction") {
  PiComodule m = regular_comodule(coalg_of(group_algebra_family(3, F7).hopf));
  auto ops = coaction_operators(m);
  CHECK(ops.size() == 12);  // 4 pairs x dim 3
  // Regular coaction of a group-like basis: T^{a,b}_j picks the
  // lambda(b)-twisted coefficient, so T e_k is e_{twist(k)} when j = k.
  for (const auto& op : ops) {
    CHECK(op.op.rows() == 3);
    CHECK(op.op.cols() == 3);
  }
  // At (a,b) = (1,t): theta(u^j) = u^{-j} (x) u^j, so functional j=1
  // applied to u gives u^2.
  const CoactionOperator& t01 = ops[1 * 3 + 1];  // a=0, b=1, j=1
  CHECK(t01.a == 0);
  CHECK(t01.b == 1);
  CHECK(t01.j == 1);
  CHECK(t01.op * basis_vec(F7, 3, 1) == basis_vec(F7, 3, 2));
}

TEST_CASE("closures in the taft mirror regular comodule") {
  PiComodule m = regular_comodule(coalg_of(taft_mirror(3, 7, 2).hopf));
  // Seed x: every coproduct sends x-powers to x-powers, so the closure is
  // the line of x in every component.
  SubcomoduleFamily cx = subcomodule_closure(m, 0, basis_vec(F7, 9, 1));
  CHECK(family_dims(cx) == std::vector<int>{1, 1, 1});
  for (int a = 0; a < 3; ++a) CHECK(cx[a].contains(basis_vec(F7, 9, 1)));
  CHECK(check_subcomodule(m, cx).ok());

  // Seed g: Delta g = (lambda g) (x) x + 1 (x) g, so the closure picks up
  // the unit and stabilizes at span{1, g} in every component.
  SubcomoduleFamily cg = subcomodule_closure(m, 0, basis_vec(F7, 9, 3));
  CHECK(family_dims(cg) == std::vector<int>{2, 2, 2});
  for (int a = 0; a < 3; ++a) {
    CHECK(cg[a].contains(basis_vec(F7, 9, 0)));
    CHECK(cg[a].contains(basis_vec(F7, 9, 3)));
  }
  CHECK(check_subcomodule(m, cg).ok());

  // Monotone: growing the seed grows the closure; idempotent on a closed
  // family member.
  SubcomoduleFamily c1 = subcomodule_closure(m, 0, basis_vec(F7, 9, 0));
  CHECK(family_dims(c1) == std::vector<int>{1, 1, 1});
  for (int a = 0; a < 3; ++a) CHECK(cg[a].contains(c1[a]));

  // A family that misses a required image fails with a located functional.
  SubcomoduleFamily broken = cg;
  broken[2] = c1[2];
  Report r = check_subcomodule(m, broken);
  CHECK_FALSE(r.ok());
  CHECK(r.fails_at("closed"));

  CHECK_THROWS_AS(subcomodule_closure(m, 0, basis_vec(F7, 4, 0)), std::invalid_argument);
  CHECK_THROWS_AS(subcomodule_closure(m, 9, basis_vec(F7, 9, 0)), std::invalid_argument);
}

TEST_CASE("simplicity: exhaustive regime over a prime field") {
  PiComodule m = regular_comodule(coalg_of(group_algebra_family(3, F7).hopf));
  SimplicityVerdict v = is_simple(m);
  CHECK_FALSE(v.simple);
  CHECK(v.exact);
  CHECK(v.method == "exhaustive");
  CHECK(v.seeds_tested == 114);  // 2 components x (7^3-1)/6
  // First projective seed is the unit, whose closure is the line of 1.
  CHECK(v.witness_component == 0);
  CHECK(v.witness_seed == basis_vec(F7, 3, 0));
  CHECK(family_dims(v.witness) == std::vector<int>{1, 1});
  CHECK(check_subcomodule(m, v.witness).ok());
  CHECK_FALSE(family_is_zero(v.witness));
  CHECK_FALSE(family_is_full(m, v.witness));
}

TEST_CASE("simplicity: line comodules are exactly simple over any field") {
  CoalgebraPtr slice = identity_slice(group_algebra_family(3, Q).hopf.coalg);
  PiComodule l = line_comodule(slice, basis_vec(Q, 3, 1));
  SimplicityVerdict v = is_simple(l);
  CHECK(v.simple);
  CHECK(v.exact);
  CHECK(v.seeds_tested == 1);

  // Sum of two lines: not simple, first block is the witness.
  PiComodule s = direct_sum(l, line_comodule(slice, basis_vec(Q, 3, 0)));
  SimplicityVerdict vs = is_simple(s);
  CHECK_FALSE(vs.simple);
  CHECK(vs.exact);
  CHECK(family_dims(vs.witness) == std::vector<int>{1});
  CHECK(vs.witness[0].contains(basis_vec(Q, 2, 0)));

  CHECK_THROWS_AS(is_simple(zero_comodule(slice)), std::invalid_argument);
}

TEST_CASE("simplicity: heuristic regime above the seed cap") {
  // 7^9-sized components push the projective count far past the cap.
  PiComodule m = regular_comodule(coalg_of(taft_mirror(3, 7, 2).hopf));
  SimplicityVerdict v = is_simple(m);
  CHECK_FALSE(v.simple);
  CHECK(v.exact);  // a concrete witness is exact evidence either way
  CHECK(v.method == "heuristic");
  CHECK(v.witness_seed == basis_vec(F7, 9, 0));
  CHECK(family_dims(v.witness) == std::vector<int>{1, 1, 1});

  // Forcing a tiny cap on the group family also selects the heuristic.
  PiComodule g = regular_comodule(coalg_of(group_algebra_family(3, F7).hopf));
  SimplicityOptions opt;
  opt.seed_cap = 10;
  SimplicityVerdict vg = is_simple(g, opt);
  CHECK(vg.method == "heuristic");
  CHECK_FALSE(vg.simple);
}

TEST_CASE("simplicity verdicts are schedule independent") {
  PiComodule m = regular_comodule(coalg_of(group_algebra_family(3, F7).hopf));
  SimplicityVerdict v1 = is_simple(m);
  for (int threads : {2, 4, 8}) {
    SimplicityOptions opt;
    opt.threads = threads;
    SimplicityVerdict vt = is_simple(m, opt);
    CHECK(vt.simple == v1.simple);
    CHECK(vt.witness_component == v1.witness_component);
    CHECK(vt.witness_seed == v1.witness_seed);
    CHECK(vt.witness == v1.witness);
    CHECK(vt.describe(*m.over->group) == v1.describe(*m.over->group));
  }
}
