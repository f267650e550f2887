// The sign-twist functor between compact triads and noncompact pairs, in
// both directions, together with the associated/dual constructions and
// their compatibility checks.
//
// The twist never materializes complex scalars: passing from a real form
// k + p to k + i p only changes brackets of two minus-block elements by a
// sign ([iX, iY] = -[X, Y], while [iX, Y] = i[X, Y] keeps its
// coefficient). Everything therefore stays in rational arithmetic.
#pragma once

#include "liedual/invol.hpp"

namespace liedual {

// Result of twisting along an involution tau: the twisted algebra on a
// tau-adapted basis (+1 block first, then the -1 block), every requested
// involution re-expressed in that basis, and the basis change itself
// (rows of the adapted basis in the input coordinates).
struct TwistResult {
  LieAlgebra algebra;
  std::vector<Matrix> carried;
  Matrix basis_record;
  size_t split = 0;  // dimension of the +1 block
};
TwistResult cartan_twist(const LieAlgebra& g, const Matrix& tau,
                         const std::vector<Matrix>& carried);

// Normalized presentation: the distinguished involution (first slot for
// triads, the Cartan slot for pairs) becomes diag(+I, -I).
struct TriadNF {
  CompactTriad triad;
  Matrix basis_record;
  size_t split = 0;
};
struct PairNF {
  NoncompactPair pair;
  Matrix basis_record;
  size_t split = 0;
};
TriadNF normal_form(const CompactTriad& t);
PairNF normal_form(const NoncompactPair& p);

// Finer normalization adapting the basis to BOTH involutions, ordered by
// the four joint eigenspaces (distinguished sign first). The double dual
// of a pair reproduces exactly this presentation, so on jointly
// normalized input the double dual is the identity bit for bit.
TriadNF joint_normal_form(const CompactTriad& t);
PairNF joint_normal_form(const NoncompactPair& p);

bool triads_equal(const CompactTriad& a, const CompactTriad& b);
bool pairs_equal(const NoncompactPair& a, const NoncompactPair& b);

// Triad -> pair: twist along theta1; the output pair is
// (g twisted, sigma = theta2 image; theta = theta1 image = diag(+I,-I))
// and is verified to be a valid noncompact pair.
struct PhiResult {
  NoncompactPair pair;
  Matrix basis_record;
};
PhiResult phi(const CompactTriad& t);

// Pair -> triad: twist along theta; the output triad is
// (g twisted, theta1 = theta image = diag(+I,-I), theta2 = sigma image)
// and is verified compact.
struct PsiResult {
  CompactTriad triad;
  Matrix basis_record;
};
PsiResult psi(const NoncompactPair& p);

// Slot recombinations. associated_pair composes the involutions; for a
// Riemannian pair (sigma = theta) this yields the identity in the sigma
// slot, which is reported rather than rejected.
struct AssociatedPair {
  NoncompactPair pair;
  bool degenerate_identity = false;
};
AssociatedPair associated_pair(const NoncompactPair& p);
CompactTriad associated_triad(const CompactTriad& t);
CompactTriad dual_triad(const CompactTriad& t);

// Dual pair, realized through the triad side (pair -> triad, swap the
// involutions, triad -> pair); on normal forms this squares to the
// identity bit-exactly.
NoncompactPair dual_pair(const NoncompactPair& p);

// Both compatibility identities, checked bit-exactly on the normal form:
// the triad-side associated/dual construction commutes with the twist.
struct CompatReport {
  bool associated_identity = false;
  bool dual_identity = false;
};
CompatReport check_compatibility(const CompactTriad& t);

// The fixed subalgebra of sigma, transported through the pair -> triad
// twist, must coincide with the fixed set of the second involution on the
// triad side; the report carries the subspace match and both views.
struct SubalgebraDualReport {
  bool match = false;
  int dim = 0;
  ViewProfile pair_view, triad_view;
};
SubalgebraDualReport fixed_subalgebra_dual(const NoncompactPair& p);

}  // namespace liedual
