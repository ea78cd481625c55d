#pragma once

#include <optional>
#include <vector>

#include "hopfpi/comodule.hpp"
#include "hopfpi/subquotients.hpp"

namespace hopfpi {

/// The composite L_{a,b} = (sigma_a (x) I) Delta_{a,b} : H_{ab} -> C_a (x) H_b.
Matrix l_map(const HopfPiCoalgebra& h, const SubgroupPair& pair, int a, int b);

/// Every L_{a,b} up front, indexed a*order+b.
MatrixFamily l_family(const HopfPiCoalgebra& h, const SubgroupPair& pair);

/// L satisfies a mixed coassociativity square for every index triple, and,
/// when the pair carries an action, is multiplicative for the twisted
/// product (m (x) n)(u (x) v) = omega_a(m (x) u) (x) nv on C_a (x) H_b.
Report verify_L_identities(const HopfPiCoalgebra& h, const SubgroupPair& pair);

/// Which constant-leg theorem a coinvariant family instantiates. The
/// defining equation L_{1,a}(h) = sigma_1(1) (x) h is the same either way;
/// the flavor records the hypotheses the pair was checked under.
enum class SpaceFlavor { B, G };

/// Coinvariants of the quotient coaction: per component the solution space
/// of L_{1,a}(h) = sigma_1(1) (x) h inside H_a. The checks record that the
/// family is a unital subalgebra per component and a right pi-coideal.
struct HomogeneousSpace {
  SpaceFlavor flavor = SpaceFlavor::B;
  std::vector<Subspace> spaces;
  Report checks;

  int dim(int a) const { return spaces[a].dim(); }
};

HomogeneousSpace homogeneous_space(const HopfPiCoalgebra& h, const SubgroupPair& pair,
                                   SpaceFlavor flavor = SpaceFlavor::B);

/// The induced comodule of an identity-component coaction rho: V -> V (x) C_1.
/// Component a is the joint-coaction equalizer inside V (x) H_a; the coaction
/// is I (x) Delta_{a,b} rewritten in the canonical subspace bases.
struct InducedComodule {
  Matrix rho;                   // (dV * dC_1) x dV
  int base_dim = 0;             // dV
  std::vector<Subspace> spaces; // component a inside V (x) H_a
  PiComodule comodule;          // coaction over H in subspace coordinates
  Report checks;

  int dim(int a) const { return spaces[a].dim(); }
};

/// Builds the equalizer family and its coaction. Throws std::invalid_argument
/// when some I (x) Delta fails to map a component into (component (x) H_b);
/// that cannot happen for a pair whose sigma intertwines comultiplication.
InducedComodule induce(const HopfPiCoalgebra& h, const SubgroupPair& pair, const Matrix& rho);

/// Right action of a coinvariant family on an induced comodule by
/// multiplication in the last tensor leg, in subspace coordinates.
/// When closure fails the action matrices are left empty and the checks say
/// where.
struct CoinvariantAction {
  MatrixFamily act;  // act[a]: dim_a x (dim_a * space.dim(a))
  Report checks;
};

CoinvariantAction b_action(const HopfPiCoalgebra& h, const InducedComodule& ind,
                           const HomogeneousSpace& space);

/// The five identities tying a section g and its convolution inverse to the
/// projection onto coinvariants, stated for a Hopf-family presentation
/// (C carries its own antipode, used in the inverse coaction identity).
Report verify_section_identities(const HopfPiCoalgebra& h, const HopfPiCoalgebra& c,
                                 const MatrixFamily& sigma, const SectionFamily& section);

/// Vector-space factorization H_a = C_a (x) X_a through a coinvariant
/// family X, witnessed by mutually inverse matrices per component.
struct CosetWitness {
  HomogeneousSpace space;
  MatrixFamily a;     // a[al]: n_al x (dC_al * space.dim(al))
  MatrixFamily ainv;
  Report checks;
};

/// Witness through the coinvariants of a Hopf-family presentation.
CosetWitness iso_CB(const HopfPiCoalgebra& h, const HopfPiCoalgebra& c,
                    const MatrixFamily& sigma, const SectionFamily& section);

/// Witness through the coinvariants of a pair, with the extra membership
/// check that the canonical projection of H_1 lands inside the family.
CosetWitness iso_CG(const HopfPiCoalgebra& h, const SubgroupPair& pair,
                    const SectionFamily& section);

/// eta[a]: H_1 -> H_a an algebra map splitting the identity-component
/// comultiplication: Delta_{1,a} eta_a = (I (x) eta_a) Delta_{1,1}.
Report check_cosection(const HopfPiCoalgebra& h, const MatrixFamily& eta);

/// Factorization Ind(rho)_a = V (x) B_a through the coinvariants, using a
/// cosection to transport the identity-component section along the family.
struct VBWitness {
  HomogeneousSpace space;
  MatrixFamily q;     // q[a]: ind.dim(a) x (dV * space.dim(a))
  MatrixFamily qinv;
  Report checks;
};

VBWitness iso_VB(const HopfPiCoalgebra& h, const SubgroupPair& pair,
                 const SectionFamily& section, const MatrixFamily& eta,
                 const InducedComodule& ind);

/// Induction of an intertwiner: f1 : V -> W compatible with the base
/// coactions extends to f1 (x) I on every component. Refused (ok false,
/// maps empty) when f1 is singular or the base square fails; the residual
/// of the base square is returned either way.
struct EquivalenceWitness {
  bool ok = false;
  Matrix residual;    // w.rho * f1 - (f1 (x) I) * v.rho
  MatrixFamily maps;  // w.dim(a) x v.dim(a), subspace coordinates
  Report checks;
};

EquivalenceWitness induced_equivalence(const Matrix& f1, const InducedComodule& v,
                                       const InducedComodule& w);

/// Induction commutes with direct sums: the two base projections, tensored
/// with identity, assemble an isomorphism from a comodule induced from a
/// block-diagonal coaction onto the direct sum of the summand inductions.
struct DirectSumWitness {
  PiComodule sum;      // direct sum of the two induced comodules
  SumBlocks blocks;
  MatrixFamily theta;  // (v.dim(a) + w.dim(a)) x vw.dim(a)
  Report checks;
};

DirectSumWitness induce_direct_sum_iso(const InducedComodule& v, const InducedComodule& w,
                                       const InducedComodule& vw);

}  // namespace hopfpi
