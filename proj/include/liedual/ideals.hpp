#pragma once
// Minimal-ideal decompositions of semisimple algebras, lattices of ideals
// invariant under involutions, splitting of triads and pairs into their
// invariant components, structural classification of irreducible objects,
// and the exact lattice correspondence across the compact/non-compact
// construction.

#include <optional>
#include <string>
#include <vector>

#include "liedual/duality.hpp"
#include "liedual/invol.hpp"
#include "liedual/lie.hpp"
#include "liedual/matrix.hpp"

namespace liedual {

// Decomposition into minimal ideals: canonical row bases, pairwise
// Killing-orthogonal, direct sum the whole algebra, ordered by their
// sequences of pivot columns.
struct IdealDecomposition {
  std::vector<Matrix> minimal_ideals;
};
IdealDecomposition minimal_ideals(const LieAlgebra& g);

// Permutation induced on a list of ideals by an automorphism: entry t is
// the index of the ideal carrying the image of ideals[t].
std::vector<size_t> ideal_permutation(const std::vector<Matrix>& ideals, const Matrix& m);

// Minimal nonzero invariant ideals: unions of orbits of the minimal ideals
// under the permutations induced by the involutions, in canonical order.
std::vector<Matrix> invariant_atoms(const std::vector<Matrix>& ideals,
                                    const std::vector<Matrix>& invs);

// The full lattice of invariant ideals: the sum of every subset of the
// atoms (2^k members, including 0 and the whole algebra), ordered by
// dimension and then by pivot columns.
std::vector<Matrix> invariant_ideal_lattice(const LieAlgebra& g,
                                            const std::vector<Matrix>& invs);

// Restriction of the object to each invariant atom. Every atom is checked
// to be stable under both involutions (THETA_NOT_STABLE otherwise), each
// component is re-validated on construction, and the atoms are checked to
// reconstruct the whole algebra as a direct sum.
std::vector<CompactTriad> irreducible_components(const CompactTriad& t);
std::vector<NoncompactPair> irreducible_components(const NoncompactPair& p);

enum class IrreducibleTag { SIMPLE, T_a, T_b, T_c, T_d, P_a, P_b, P_c, P_d };
std::string to_string(IrreducibleTag tag);

// Structural class of an irreducible object together with the evidence the
// classifier used to reach it.
struct IrreducibleType {
  IrreducibleTag tag = IrreducibleTag::SIMPLE;
  size_t ideal_count = 0;
  std::vector<size_t> first_permutation;   // action of the first slot on ideals
  std::vector<size_t> second_permutation;  // action of the second slot
  // Commuting-operator dimensions, when the rules consult them.
  std::optional<size_t> centroid_dimension;         // whole algebra
  std::optional<size_t> factor_centroid_dimension;  // one swapped factor
  // For a single-ideal pair with a two-dimensional centroid: whether the
  // first involution anticommutes with the traceless centroid generator.
  std::optional<bool> sigma_antilinear;
};

IrreducibleType classify_irreducible(const CompactTriad& t);
IrreducibleType classify_irreducible(const NoncompactPair& p);

// Exact member-by-member correspondence between the invariant-ideal lattice
// of a pair and that of the triad the construction produces from it. Each
// pair-side ideal is transported through the construction's basis record;
// the report verifies the transport lands bijectively on the triad-side
// lattice, preserves dimensions, and round-trips back to the identity.
struct CorrespondenceReport {
  bool verified = false;
  bool theta_stable = false;  // every pair-side ideal is stable under theta
  std::vector<int> pair_lattice_dims;
  std::vector<int> triad_lattice_dims;
  std::vector<size_t> forward;  // triad-lattice index per pair-lattice member
};
CorrespondenceReport ideal_correspondence(const NoncompactPair& p);

// Self-duality and self-association report. Profile agreement between the
// object and its dual (resp. associated) object is a necessary condition
// computed always; when an explicit intertwining witness is supplied, it is
// verified outright and the result recorded.
struct SelfPropertyReport {
  bool profile_self_dual = false;
  bool profile_self_associated = false;
  std::optional<bool> dual_witness_ok;
  std::optional<bool> associated_witness_ok;
};
SelfPropertyReport self_properties(const CompactTriad& t,
                                   const std::optional<Matrix>& dual_witness = std::nullopt,
                                   const std::optional<Matrix>& assoc_witness = std::nullopt);
SelfPropertyReport self_properties(const NoncompactPair& p,
                                   const std::optional<Matrix>& dual_witness = std::nullopt,
                                   const std::optional<Matrix>& assoc_witness = std::nullopt);

}  // namespace liedual
