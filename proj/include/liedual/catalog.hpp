// Constructors for the standard matrix families (rotation, indefinite
// rotation, special unitary, special linear), their classical involutions,
// explicit isomorphism witnesses between the models, and the bundled
// fixture suite used by the tests and the command-line tool.
//
// Every algebra built here carries its ambient matrix realization, so the
// sign-twist construction can hand back complex matrix models and the
// witness maps can be verified at the matrix level.
#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "liedual/invol.hpp"

namespace liedual {

// ---------------------------------------------------------------------------
// Ambient bases. Entries are Gaussian rationals; the real span of each list
// is the algebra in question.
// ---------------------------------------------------------------------------

// Skew-symmetric matrices: f_jk = E_jk - E_kj for j < k, lexicographic.
std::vector<Matrix> so_ambient_basis(int n);

// Matrices skew-adjoint for diag(+1^p, -1^q): f_jk = E_jk - E_kj when the
// metric signs at j and k agree, g_jk = E_jk + E_kj when they differ;
// lexicographic over j < k.
std::vector<Matrix> sopq_ambient_basis(int p, int q);

// Traceless anti-Hermitian matrices: h_k = i(E_kk - E_{k+1,k+1}) for
// k < n-1, then a_jk = E_jk - E_kj (j < k, lex), then b_jk = i(E_jk + E_kj)
// (j < k, lex).
std::vector<Matrix> su_ambient_basis(int n);

// Traceless real matrices: h_k = E_kk - E_{k+1,k+1} for k < n-1, then E_jk
// for j != k in row-major order.
std::vector<Matrix> sl_ambient_basis(int n);

// All elementary matrices E_jk in row-major order.
std::vector<Matrix> gl_ambient_basis(int n);

// Concatenated bases of the block-diagonally embedded factors.
std::vector<Matrix> dsum_ambient_basis(const std::vector<std::vector<Matrix>>& blocks);

// ---------------------------------------------------------------------------
// Standard matrices.
// ---------------------------------------------------------------------------

// [[0, -I_m], [I_m, 0]], size 2m.
Matrix rot_J(int m);
// diag(+1^m, -1^n).
Matrix ipq_matrix(int m, int n);
// diag(rot_J(p), rot_J(q)), size 2p + 2q.
Matrix jpq_matrix(int p, int q);
// [[0, I_m], [I_m, 0]], size 2m.
Matrix jprime_matrix(int m);
// diag(I_2p, -i I_2q), size 2p + 2q; conjugation by it carries the
// complex model k + i p of the twisted algebra onto the indefinite
// rotation algebra.
Matrix iprime_matrix(int p, int q);
// Block permutation: block t lands on slot perm[t].
Matrix block_perm_matrix(const std::vector<int>& block_sizes, const std::vector<int>& perm);

// ---------------------------------------------------------------------------
// Ambient-level maps and coordinate extraction.
// ---------------------------------------------------------------------------

using AmbientMap = std::function<Matrix(const Matrix&)>;

// Structure constants of the real span of the given matrices; the ambient
// realization is attached. Throws MALFORMED when a bracket leaves the span
// or the matrices are dependent over the reals.
LieAlgebra algebra_from_ambient(const std::vector<Matrix>& basis);

// Coordinate matrix (columns = images) of the map induced on the span.
Matrix operator_from_ambient(const std::vector<Matrix>& basis, const AmbientMap& f);

// Coordinate matrix of an ambient-level map from the span of src into the
// span of dst (columns = dst-coordinates of the images of the src basis).
Matrix map_between_ambients(const std::vector<Matrix>& src, const std::vector<Matrix>& dst,
                            const AmbientMap& f);

// ---------------------------------------------------------------------------
// Fixture catalog.
// ---------------------------------------------------------------------------

struct Fixture {
  std::string name;
  std::string kind;  // "triad" or "pair"
  std::string description;
  LieAlgebra g;  // ambient realization attached
  // Slot name -> coordinate matrix; triads use ("theta1", "theta2") and
  // pairs use ("sigma", "theta"), in that order.
  std::vector<std::pair<std::string, Matrix>> involutions;
  int ambient_n = 0;
};

CompactTriad as_triad(const Fixture& f);
NoncompactPair as_pair(const Fixture& f);

// Catalog names in their canonical order.
std::vector<std::string> fixture_names();

// Build one fixture; throws BAD_PARAMS for an unknown name. The returned
// object has every involution validated (involutive automorphisms,
// commuting, and the kind-specific compactness/Cartan requirement).
Fixture build_fixture(const std::string& name);

// All fixtures in catalog order.
std::vector<Fixture> fixture_suite();

// Named explicit isomorphism witnesses:
//  - "phi_nu": on u + u over su(2), conjugation on the first summand;
//    exhibits the swap-family self-dualities.
//  - "rho_13", "rho_34": block exchanges (13) and (34) on the fourfold sum
//    of su(2); exhibit the fourfold family's self-dual and self-associated
//    structure.
//  - "so4_twist_to_so22": coordinate map of conjugation by iprime(1, 1)
//    from the twisted algebra of the so(4) triad (Ad I_{2,2}, Ad J_{1,1})
//    onto the ambient indefinite so(2,2) model.
//  - "gl_fix_to_gl2": the block-sum map [[A,B],[B,A]] -> A + B from the
//    fixed set of Ad(jprime(2)) inside so(2,2) onto gl(2).
// Throws UNKNOWN_WITNESS for other names.
Matrix witness(const std::string& name);

}  // namespace liedual
