#pragma once

#include <optional>
#include <vector>

#include "hopfpi/builtins.hpp"
#include "hopfpi/linalg.hpp"
#include "hopfpi/pi_coalgebra.hpp"
#include "hopfpi/report.hpp"

namespace hopfpi {

/// One subspace of each component, indexed like the components themselves.
using SubspaceFamily = std::vector<Subspace>;

/// V is a pi-coideal: Delta_{a,b}(V_{ab}) lies in V_a (x) C_b + C_a (x) V_b
/// and the counit kills V at the identity component.
Report check_pi_coideal(const PiCoalgebra& c, const SubspaceFamily& v);

/// Pi-coideal that is also a two-sided ideal in every component and is
/// stable under the antipode. Quotients by such families inherit the full
/// Hopf structure, not just the coalgebra one.
Report check_hopf_pi_coideal(const HopfPiCoalgebra& h, const SubspaceFamily& v);

/// A is a sub Hopf family: unital subalgebra of each component, closed
/// under all comultiplications and under the antipode.
Report check_subhopf(const HopfPiCoalgebra& h, const SubspaceFamily& a);

/// A a sub Hopf family, ideal a Hopf pi-coideal, and H_a = A_a (+) ideal_a
/// in every component.
Report check_isolated(const HopfPiCoalgebra& h, const SubspaceFamily& a,
                      const SubspaceFamily& ideal);

/// Quotient coalgebra E_a = C_a / V_a together with the projections onto[a]
/// and a section embed[a] picking the canonical complement representatives.
struct QuotientResult {
  PiCoalgebra quotient;
  MatrixFamily onto;
  MatrixFamily embed;
  Report checks;
};

/// Divides out a pi-coideal. Throws std::invalid_argument naming the first
/// violated coideal condition when V is not one. The returned checks record
/// that the induced comultiplications factor and satisfy the axioms.
QuotientResult quotient_coalgebra(const PiCoalgebra& c, const SubspaceFamily& v);

struct HopfQuotientResult {
  HopfPiCoalgebra quotient;
  MatrixFamily onto;
  MatrixFamily embed;
  Report checks;
};

/// Quotient by a Hopf pi-coideal, carrying the induced products, units and
/// antipodes along. Throws std::invalid_argument when V fails the Hopf
/// coideal conditions.
HopfQuotientResult quotient_hopf(const HopfPiCoalgebra& h, const SubspaceFamily& v);

/// Quotient datum (C, sigma): a pi-coalgebra with surjections
/// sigma_a : H_a -> C_a, optionally carrying left H-actions omega_a on C_a
/// (omega[a]: dims_C[a] x (dims_H[a] * dims_C[a])). Pairs coming from
/// one-sided ideals have no compatible action and leave omega empty.
struct SubgroupPair {
  PiCoalgebra c;
  MatrixFamily sigma;
  std::optional<MatrixFamily> omega;
};

/// sigma is a family of surjective algebra maps from H onto the Hopf family
/// C intertwining comultiplication, counit and antipode.
Report check_subcoalgebra_pair(const HopfPiCoalgebra& h, const HopfPiCoalgebra& c,
                               const MatrixFamily& sigma);

/// Wraps (C, sigma) as a pair with the action omega_a = mul^C_a (sigma_a (x) id).
/// Throws std::invalid_argument when check_subcoalgebra_pair fails.
SubgroupPair coisotropic_from_subcoalgebra(const HopfPiCoalgebra& h,
                                           const HopfPiCoalgebra& c,
                                           const MatrixFamily& sigma);

/// The pair axioms: C is a pi-coalgebra, each omega_a is a left module
/// structure, sigma is surjective and a module map, and sigma intertwines
/// comultiplication and counit. No antipode condition is imposed on C.
Report check_coisotropic(const HopfPiCoalgebra& h, const SubgroupPair& pair);

/// Pair obtained by dividing out a pi-coideal: sigma only, no action.
SubgroupPair quotient_pair(const HopfPiCoalgebra& h, const SubspaceFamily& v);

/// Pair obtained from a Hopf pi-coideal: the quotient keeps its products,
/// and left multiplication descends to the action. Optionally hands back the
/// full quotient Hopf family.
SubgroupPair coisotropic_from_quotient(const HopfPiCoalgebra& h, const SubspaceFamily& v,
                                       HopfPiCoalgebra* quotient_out = nullptr);

/// Pair carried by an isolated sub Hopf family A with complementary Hopf
/// coideal: sigma projects onto A along the coideal and C is A with its
/// inherited structure. Optionally hands back that structure.
SubgroupPair isolated_to_coisotropic(const HopfPiCoalgebra& h, const SubspaceFamily& a,
                                     const SubspaceFamily& ideal,
                                     HopfPiCoalgebra* sub_out = nullptr);

/// Convolution inverse of a family g_a : C_a -> H_a, i.e. the family
/// x_a : C_{a^{-1}} -> H_a with
///   mul_a (g_a (x) x_a) Delta^C_{a,a^{-1}} = unit_a counit^C
///   mul_a (x_a (x) g_a) Delta^C_{a^{-1},a} = unit_a counit^C.
/// Solved one component at a time from the first identity, then verified
/// against the second; returns nothing if either step fails. A two-sided
/// inverse is unique, so the particular solution is the inverse whenever
/// one exists.
std::optional<MatrixFamily> convolution_inverse(const HopfPiCoalgebra& h,
                                                const PiCoalgebra& c,
                                                const MatrixFamily& g);

/// A section candidate with its convolution inverse.
struct SectionFamily {
  MatrixFamily g;
  MatrixFamily ginv;
};

/// Packages g with its convolution inverse, or nothing if g is not
/// convolution invertible.
std::optional<SectionFamily> section_with_inverse(const HopfPiCoalgebra& h,
                                                  const PiCoalgebra& c, MatrixFamily g);

/// Section conditions for a presentation by a Hopf family C: g_a preserves
/// the unit, is convolution invertible, and splits the mixed
/// comultiplication, L_{1,a} g_a = (id (x) g_a) Delta^C_{1,a} where
/// L_{1,a} = (sigma_1 (x) id) Delta_{1,a}.
Report check_section_subcoalgebra(const HopfPiCoalgebra& h, const HopfPiCoalgebra& c,
                                  const MatrixFamily& sigma, const MatrixFamily& g);

/// Section conditions for a general pair: g_a(sigma_a(1)) = 1, convolution
/// invertibility, and the two lifted compatibility conditions. Those are
/// stated on H but must only depend on sigma-images, so each is split into
/// an equality over a transversal of sigma_a and an explicit vanishing
/// check on ker sigma_a (x) H_1.
Report check_section_coisotropic(const HopfPiCoalgebra& h, const SubgroupPair& pair,
                                 const MatrixFamily& g);

/// Deterministic search for a section of the pair. Solves the affine
/// conditions that are linear in g_a componentwise, then scans a bounded
/// candidate list for one whose convolution inverse exists and passes the
/// remaining conditions. Failure to find one is not a proof of
/// nonexistence over the rationals.
std::optional<SectionFamily> find_section(const HopfPiCoalgebra& h,
                                          const SubgroupPair& pair);

/// Group algebra mirror of Z_n with its quotient onto the mirror of Z_d
/// (d dividing n), the coset section g_a(v^j) = u^j, and the action pair.
struct GroupQuotientBundle {
  HopfPiCoalgebra hopf;
  HopfPiCoalgebra sub;
  MatrixFamily sigma;
  SubgroupPair pair;
  SectionFamily section;
};

GroupQuotientBundle group_algebra_pair(int n, int d, const FieldSpec& field);

/// Truncated mirror together with the right ideal coideal family generated
/// by x - 1 and the quotient pair it induces. The family is not a left
/// ideal, so the pair carries no action.
struct TaftQuotientBundle {
  HopfPiCoalgebra hopf;
  SubspaceFamily coideal;
  QuotientResult quotient;
  SubgroupPair pair;
};

TaftQuotientBundle taft_quotient_bundle(int n, int p, int q);

/// Truncated mirror split as the x-power subalgebra plus the ideal
/// generated by g, with the pair carried by that isolated decomposition.
struct TaftIsolatedBundle {
  HopfPiCoalgebra hopf;
  SubspaceFamily sub;
  SubspaceFamily ideal;
  HopfPiCoalgebra subhopf;
  SubgroupPair pair;
};

TaftIsolatedBundle taft_isolated_bundle(int n, int p, int q);

}  // namespace hopfpi
