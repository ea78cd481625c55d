#pragma once

#include <cstdint>
#include <vector>

#include "hopfpi/induction.hpp"

namespace hopfpi {

/// Basis columns of a component paired with the functional rows contracted
/// against them. The pairing is genuine when dual * basis is the identity;
/// anything else is flagged where the pair is consumed.
struct DualBasisPair {
  Matrix basis;
  Matrix dual;
};

/// Standard basis and coordinate functionals for every component.
std::vector<DualBasisPair> standard_dual_bases(const HopfPiCoalgebra& h);

/// The coinduced comodule of an identity-component coaction
/// rho: V -> V (x) C_1. Component a collects the maps F: V -> H_a with
/// L_{1,a} F = (I (x) F) flip(rho), flattened column major so that
/// Hom(V, H_a) shares the flat indexing of V (x) H_a.
struct CoinducedComodule {
  Matrix rho;                        // (dV * dC_1) x dV
  int base_dim = 0;                  // dV
  std::vector<Subspace> spaces;      // component a inside Hom(V, H_a)
  std::vector<DualBasisPair> duals;  // pairing behind the stored coaction
  PiComodule comodule;               // Omega over H in subspace coordinates
  Report checks;

  int dim(int a) const { return spaces[a].dim(); }
};

/// Builds the equalizer family and its coaction with the standard dual
/// bases. Throws std::invalid_argument on a shape mismatch.
CoinducedComodule coinduce(const HopfPiCoalgebra& h, const SubgroupPair& pair,
                           const Matrix& rho);

/// Omega_{a,b}(F) = sum_i ((I (x) g_i) Delta_{a,b} F) (x) e_i contracted
/// against the given pairing, in subspace coordinates. A pairing whose
/// functionals are not dual to its basis is flagged in the report and
/// generally moves the result; a genuine pairing never does. Throws when
/// some contraction escapes the family, which cannot happen for
/// kernel-built components.
MatrixFamily coind_coaction(const HopfPiCoalgebra& h, const CoinducedComodule& w,
                            const std::vector<DualBasisPair>& duals,
                            Report* report = nullptr);

/// Recomputes the coaction under `rounds` random invertible changes of
/// dual basis (deterministic in `seed`) and demands exact agreement with
/// the stored matrices. Also compares, for every component triple, the
/// one-step and two-step dual-basis expansions of the iterated
/// comultiplication composed with every basis element of the family.
Report verify_basis_independence(const HopfPiCoalgebra& h, const CoinducedComodule& w,
                                 int rounds = 3, std::uint64_t seed = 1);

/// Precomposition with f1 : V -> W restricts to maps Coind(W side) ->
/// Coind(V side); note the returned maps run opposite to f1. Refused
/// (ok false, maps empty) when f1 is singular or the base square fails;
/// the residual of the base square is returned either way.
EquivalenceWitness coind_equivalence(const Matrix& f1, const CoinducedComodule& v,
                                     const CoinducedComodule& w);

/// Coinduction commutes with direct sums: precomposition with the two
/// base immersions assembles an isomorphism from a comodule coinduced
/// from a block-diagonal coaction onto the direct sum of the summand
/// coinductions. The witness family sits in the theta field.
DirectSumWitness coind_direct_sum_iso(const CoinducedComodule& v, const CoinducedComodule& w,
                                      const CoinducedComodule& vw);

/// Everything an isolated sub Hopf family yields at once: the coisotropic
/// pair carried by the decomposition, then the induction and coinduction
/// of rho through it. Stage errors propagate as exceptions; stage reports
/// are merged into checks.
struct IsolatedPipeline {
  SubgroupPair pair;
  HopfPiCoalgebra sub;
  InducedComodule induced;
  CoinducedComodule coinduced;
  Report checks;
};

IsolatedPipeline pipeline_from_isolated(const HopfPiCoalgebra& h, const SubspaceFamily& a,
                                        const SubspaceFamily& ideal, const Matrix& rho);

}  // namespace hopfpi
