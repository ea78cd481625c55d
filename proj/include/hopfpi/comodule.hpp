#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hopfpi/pi_coalgebra.hpp"

namespace hopfpi {

using CoalgebraPtr = std::shared_ptr<const PiCoalgebra>;
using HopfPtr = std::shared_ptr<const HopfPiCoalgebra>;

/// Right comodule over a graded coalgebra C: spaces M_a with coactions
/// theta_{a,b} : M_{ab} -> M_a (x) C_b satisfying the coassociativity
/// square against Delta and the counit triangle.
struct PiComodule {
  CoalgebraPtr over;
  std::vector<int> dims;
  std::vector<Matrix> theta;  // index a*order+b; shape (dims[a]*C.dims[b]) x dims[ab]

  int order() const { return over->order(); }
  const Matrix& Theta(int a, int b) const { return theta[a * order() + b]; }
  Matrix& Theta(int a, int b) { return theta[a * order() + b]; }
  FieldSpec field() const { return over->field; }
  int total_dim() const;

  bool operator==(const PiComodule& other) const;
};

/// Comodule over a Hopf family whose components are also modules over the
/// matching component algebras, compatibly with the coaction.
struct HopfPiComodule {
  HopfPtr hopf;
  PiComodule comodule;   // over hopf->coalg
  MatrixFamily actions;  // actions[a]: dims[a] x (dims[a]*H.dims[a])
};

Report shape_report(const PiComodule& m);
Report verify_comodule(const PiComodule& m);
/// Module axioms per component plus the action/coaction compatibility
/// square, on top of verify_comodule.
Report verify_hopf_comodule(const HopfPiComodule& m);

/// C coacting on itself by its comultiplications.
PiComodule regular_comodule(CoalgebraPtr c);
/// H over itself: coaction Delta, action multiplication.
HopfPiComodule regular_hopf_comodule(HopfPtr h);

/// The identity component of c, repackaged over the trivial group.
/// Classical comodules over C_1 are comodules over this slice.
CoalgebraPtr identity_slice(const PiCoalgebra& c);

/// One-dimensional comodule w -> w (x) g over a trivial-group slice;
/// passes verify_comodule exactly when g is group-like with counit 1.
PiComodule line_comodule(CoalgebraPtr slice, const Matrix& g);

/// Immersion/projection matrices of a two-term direct sum, per component.
struct SumBlocks {
  MatrixFamily into_left, into_right;  // (m+n) x m, (m+n) x n
  MatrixFamily onto_left, onto_right;  // m x (m+n), n x (m+n)
};

/// Componentwise direct sum; fills *blocks with the block maps if given.
PiComodule direct_sum(const PiComodule& m, const PiComodule& n, SumBlocks* blocks = nullptr);

/// The squares theta^N F_{ab} = (F_a (x) I) theta^M, one check per pair;
/// no invertibility demanded (covers immersions and projections).
Report check_intertwining(const PiComodule& m, const PiComodule& n, const MatrixFamily& f);
/// Intertwining plus invertibility of every component.
Report check_equivalence_witness(const PiComodule& m, const PiComodule& n,
                                 const MatrixFamily& f);

/// All families F_a : M_a -> N_a solving every intertwining square, as a
/// canonical subspace of the flattened family space.
struct IntertwinerSpace {
  std::vector<int> rows, cols;  // F_a is rows[a] x cols[a]
  std::vector<int> offset;      // offset of vec(F_a) (row-major) in a flat vector
  int total = 0;
  Subspace space;

  Matrix component(const Matrix& flat, int a) const;
  Matrix flatten(const MatrixFamily& f) const;
};

IntertwinerSpace find_intertwiner_space(const PiComodule& m, const PiComodule& n);

/// Dualized coaction: T^{a,b}_j = (I (x) g_j) theta_{a,b} : M_{ab} -> M_a
/// for the coordinate functionals g_j of C_b. A family of subspaces is a
/// subcomodule exactly when it is closed under every one of these.
struct CoactionOperator {
  int a = 0, b = 0, j = 0;
  Matrix op;  // dims[a] x dims[ab]
};

std::vector<CoactionOperator> coaction_operators(const PiComodule& m);

using SubcomoduleFamily = std::vector<Subspace>;

bool family_is_zero(const SubcomoduleFamily& f);
bool family_is_full(const PiComodule& m, const SubcomoduleFamily& f);
std::vector<int> family_dims(const SubcomoduleFamily& f);

/// Least subcomodule family containing the seed vector (in component
/// `comp`); deterministic worklist saturation.
SubcomoduleFamily subcomodule_closure(const PiComodule& m, int comp, const Matrix& seed);

/// Closure of an explicit family under every coaction operator.
Report check_subcomodule(const PiComodule& m, const SubcomoduleFamily& f);

struct SimplicityOptions {
  std::int64_t seed_cap = 1'000'000;
  int threads = 1;
};

/// Outcome of the subcomodule search. `exact` means the seed set provably
/// covered every candidate line (prime field under the cap, or all
/// component dimensions <= 1); a found witness is always exact.
struct SimplicityVerdict {
  bool simple = false;
  bool exact = false;
  std::string method;  // "exhaustive" or "heuristic"
  std::int64_t seeds_tested = 0;
  int witness_component = -1;
  Matrix witness_seed;
  SubcomoduleFamily witness;

  std::string describe(const GroupTable& pi) const;
};

/// Searches for a proper nonzero subcomodule by saturating seed closures.
/// Throws std::invalid_argument on the zero comodule.
SimplicityVerdict is_simple(const PiComodule& m, const SimplicityOptions& opt = {});

}  // namespace hopfpi
