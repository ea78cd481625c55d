#pragma once

#include "hopfpi/pi_coalgebra.hpp"

namespace hopfpi {

/// Ground field as a one-dimensional Hopf family over the trivial group.
HopfPiCoalgebra trivial_pi(FieldSpec field);

/// Group algebra of a finite group: basis indexed by group elements, all of
/// them group-like.
ClassicalHopfAlgebra group_algebra(const GroupTable& g, FieldSpec field);

/// The Taft algebra of order n^2 over GF(p): generators x (group-like,
/// x^n = 1) and g (g^n = 0, xg = q g x, Delta g = g (x) x + 1 (x) g),
/// where q must be a primitive n-th root of unity mod p.
/// Basis: g^a x^b at index a*n + b.
ClassicalHopfAlgebra taft_algebra(int n, std::int64_t p, std::int64_t q);

/// A mirror input together with the resulting Hopf family; the action is
/// kept because cosections and tests want the lambda maps.
struct MirrorBundle {
  ClassicalHopfAlgebra base;
  GroupAction action;
  HopfPiCoalgebra hopf;
};

/// Mirror of k[Z_n] along the inversion action of Z_2 = {1, t}.
MirrorBundle group_algebra_family(int n, FieldSpec field);

/// Mirror of the Taft algebra along conjugation by the group-like x, an
/// action of Z_n = {1, c, ..., c^{n-1}} with lambda(c^k)(g^a x^b) = q^{ka} g^a x^b.
MirrorBundle taft_mirror(int n, std::int64_t p, std::int64_t q);

/// eta_a = lambda(a^{-1}), an algebra-map family H_1 -> H_a satisfying the
/// coaction square for every mirror.
MatrixFamily mirror_cosection(const MirrorBundle& m);

/// The identity-copy family eta_a = id; satisfies the coaction square only
/// when the action is trivial on the left tensor legs of Delta.
MatrixFamily copy_cosection(const MirrorBundle& m);

}  // namespace hopfpi
