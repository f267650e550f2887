#pragma once
// Maximal abelian subspaces of the minus part of a compact involution,
// restricted-root data with exact eigenvalue arithmetic over the Gaussian
// rationals, root-space maps f_lambda with their S/T bases, the dual
// lattice of vectors pairing integrally with every root, and the parity
// operators those vectors induce.

#include <vector>

#include "liedual/invol.hpp"
#include "liedual/lie.hpp"
#include "liedual/matrix.hpp"

namespace liedual {

// Greedy deterministic maximal abelian subspace of the -1 eigenspace of a
// compact involution: seeded with the first reduced basis row of that
// eigenspace, extended at every step by the first reduced row of
// (centralizer of the current span) ∩ (minus part) that leaves the span.
// Termination certifies maximality. Returns canonical rows.
Matrix maximal_abelian(const LieAlgebra& g, const Matrix& theta1);

// One positive-representative restricted root. `lam` holds the coordinates
// in the a1 row basis of the element representing the root through the
// inner product <x,y> = -B(x,y); the representative is normalized so its
// first nonzero coordinate is positive, and -lam is implicitly also a
// root with the same spaces.
struct RestrictedRoot {
  Vec lam;
  int mult = 0;   // d = dim k1(lam) = dim p1(lam)
  Matrix v_rows;  // V(lam) = V(-lam), 2*mult canonical rows
  Matrix k_rows;  // V(lam) ∩ (+1 eigenspace of theta1)
  Matrix p_rows;  // V(lam) ∩ (-1 eigenspace of theta1)
};

struct RootDatum {
  LieAlgebra g;
  Matrix theta1;
  Matrix a1;                    // maximal abelian rows
  Matrix gram;                  // gram[a][b] = -B(a1_a, a1_b), positive definite
  Matrix zk;                    // centralizer of a1 inside the +1 eigenspace
  Matrix zero_space;            // joint kernel of the squared actions = zk ⊕ a1
  std::vector<Matrix> ads;      // ad of each a1 row
  std::vector<RestrictedRoot> roots;  // sorted by lam, lexicographic ascending
};

// Simultaneous eigenspace decomposition of g under {ad A : A in a1}. All
// squared and mixed products of the ad operators must split rationally
// (ROOT_NOT_GAUSSIAN otherwise: the eigenvalues would leave sqrt(-1)·Q).
// The decomposition identity dim g = dim zk + dim a1 + sum 2*mult is
// verified exactly.
RootDatum restricted_roots(const LieAlgebra& g, const Matrix& theta1, const Matrix& a1);

// <lam, w> for two coordinate vectors in the a1 row basis.
Rat root_pairing(const RootDatum& rd, const Vec& lam, const Vec& w);

// f_lam(x) = <lam,lam>^{-1} [lift(lam), x] on V(lam); swaps the k1 and p1
// halves, preserves <,>, and f_{-lam} inverts it. `lam` may be a stored
// representative or its negative; x must lie in V(lam) (NOT_IN_V).
Vec f_lambda(const RootDatum& rd, const Vec& lam, const Vec& x);

// Orthogonal (not normalized) basis S of k1(lam) via Gram-Schmidt for
// <,> = -B, with T_i = f_lambda(S_i); the exchange identities
// (ad A) S_i = <lam,A> T_i and (ad A) T_i = -<lam,A> S_i are verified for
// every a1 basis row.
struct STBasis {
  std::vector<Vec> S, T;
};
STBasis st_basis(const RootDatum& rd, const Vec& lam);

// Basis of the dual lattice {v : <lam,v> ∈ Z for every root lam}, as
// coordinate vectors in the a1 row basis, computed through the Hermite
// normal form of the integral pairing matrix. Every returned vector is
// re-verified against all roots.
std::vector<Vec> gamma_lattice(const RootDatum& rd);

// Whether v pairs integrally with every root.
bool gamma_contains(const RootDatum& rd, const Vec& v);

// The exact action of the rotation attached to a dual-lattice vector v:
// identity on zk ⊕ a1 and (-1)^{<lam,v>} on each V(lam). Requires v in the
// dual lattice (NOT_IN_GAMMA).
Matrix parity_operator(const RootDatum& rd, const Vec& v);

}  // namespace liedual
