#pragma once

#include <memory>
#include <vector>

#include "hopfpi/group.hpp"
#include "hopfpi/linalg.hpp"
#include "hopfpi/matrix.hpp"
#include "hopfpi/report.hpp"

namespace hopfpi {

/// A family of linear maps indexed by group elements. The domain and
/// codomain of each member depend on the index and on what the family is
/// (comultiplications, antipodes, projections, sections, ...).
using MatrixFamily = std::vector<Matrix>;

/// Coalgebra graded by a finite group pi: components H_a with
/// comultiplications Delta_{a,b} : H_{ab} -> H_a (x) H_b and a counit on
/// the identity component.
struct PiCoalgebra {
  GroupPtr group;
  FieldSpec field;
  std::vector<int> dims;      // dims[a] = dim H_a
  std::vector<Matrix> delta;  // index a*order+b; shape (dims[a]*dims[b]) x dims[ab]
  Matrix counit;              // 1 x dims[identity]

  int order() const { return group->order(); }
  int dim(int a) const { return dims[a]; }
  const Matrix& Delta(int a, int b) const { return delta[a * order() + b]; }
  Matrix& Delta(int a, int b) { return delta[a * order() + b]; }

  bool operator==(const PiCoalgebra& other) const;
};

/// Hopf structure on top of a PiCoalgebra: each component is a unital
/// algebra, comultiplications are algebra maps, and an antipode family
/// S_a : H_a -> H_{a^{-1}} satisfies the antipode law.
struct HopfPiCoalgebra {
  PiCoalgebra coalg;
  std::vector<Matrix> mul;       // mul[a]: dims[a] x dims[a]^2
  std::vector<Matrix> unit;      // unit[a]: dims[a] x 1
  std::vector<Matrix> antipode;  // antipode[a]: dims[a^{-1}] x dims[a]

  int order() const { return coalg.order(); }
  int dim(int a) const { return coalg.dims[a]; }
  const GroupTable& pi() const { return *coalg.group; }
  FieldSpec field() const { return coalg.field; }

  bool operator==(const HopfPiCoalgebra& other) const;
};

/// Ordinary Hopf algebra over the coefficient field, used as mirror input.
struct ClassicalHopfAlgebra {
  FieldSpec field;
  int dim = 0;
  Matrix mul;       // dim x dim^2
  Matrix unit;      // dim x 1
  Matrix delta;     // dim^2 x dim
  Matrix counit;    // 1 x dim
  Matrix antipode;  // dim x dim

  bool operator==(const ClassicalHopfAlgebra& other) const = default;
};

/// An action of pi on a classical Hopf algebra by Hopf automorphisms.
struct GroupAction {
  GroupPtr group;
  std::vector<Matrix> lambda;  // lambda[a]: dim x dim
};

/// Structural (shape) validation; the axiom verifiers run it first and
/// return its failures alone when the shapes are off.
Report shape_report(const PiCoalgebra& c);
Report shape_report(const HopfPiCoalgebra& h);

/// Coassociativity and counit diagrams, one check per index tuple.
Report verify_pi_coalgebra(const PiCoalgebra& c);

/// Componentwise algebra axioms, algebra-map property of Delta and the
/// counit, and the antipode law. Does not repeat the coalgebra diagrams.
Report verify_hopf(const HopfPiCoalgebra& h);

/// The two derived coproduct identities relating Delta_{1,a}, Delta_{a^-1,1}
/// and Delta at the identity; they follow from coassociativity and serve as
/// an independent cross-check of a verified structure.
Report verify_lemma34(const HopfPiCoalgebra& h);

Report verify_classical_hopf(const ClassicalHopfAlgebra& a);

/// lambda(1) = id, lambda is a homomorphism, and every lambda(a) is a Hopf
/// algebra automorphism.
Report verify_action(const ClassicalHopfAlgebra& a, const GroupAction& act);

/// The mirror of A along the action: components are copies of A,
/// Delta_{a,b} = (lambda(b) (x) id) Delta_A, S_a = lambda(a) S_A.
/// Throws std::invalid_argument when the action fails verification.
HopfPiCoalgebra mirror_construction(const ClassicalHopfAlgebra& a, const GroupAction& act);

/// Product in component a: mul_a(u (x) v) for column vectors u, v.
Matrix apply_mul(const Matrix& mul, const Matrix& u, const Matrix& v);

}  // namespace hopfpi
