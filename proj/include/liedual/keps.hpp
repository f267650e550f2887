// Integer gradings of a semisimple algebra, their parity involutions, and
// the construction of graded noncompact pairs from lattice data on the
// compact side: a lattice vector twists the distinguished involution into a
// commuting second one, and the twisted pair carries an integer grading
// whose parity involution recovers the twist.
#pragma once

#include <optional>
#include <vector>

#include "liedual/duality.hpp"
#include "liedual/roots.hpp"

namespace liedual {

// A semisimple algebra graded by the integer eigenvalues of ad Z. The
// components are kept in ascending eigenvalue order; kind is the largest
// occurring |k|. kind 0 (Z central, hence zero) is not a genuine grading
// and is reported through the degenerate flag rather than rejected.
struct GradingDatum {
  LieAlgebra g0;
  Vec z;
  std::vector<std::pair<int, Matrix>> components;  // k ascending, nonzero
  int kind = 0;
  bool degenerate = false;  // kind == 0
};

// Decompose g0 into the eigenspaces of ad z. Validates semisimplicity
// (NOT_SEMISIMPLE), diagonalizability with integer spectrum
// (NON_INTEGER_GRADING), the bracket law [g0(k), g0(l)] in g0(k+l) on all
// component bases, and that z is recovered uniquely from its components.
GradingDatum grading_from_Z(const LieAlgebra& g0, const Vec& z);

// The parity involution: (-1)^k on g0(k).
Matrix sigma_Z(const GradingDatum& gd);

// Whether theta sends z to -z, equivalently swaps g0(k) with g0(-k); both
// formulations are evaluated and must agree. theta must be an involutive
// automorphism.
bool is_grade_reversing(const GradingDatum& gd, const Matrix& theta);

// The graded pair (g0, sigma_Z theta; theta) attached to a grade-reversing
// Cartan involution; NOT_GRADE_REVERSING when theta does not reverse.
NoncompactPair keps_pair(const GradingDatum& gd, const Matrix& theta);

// Result of the lattice construction: the compact triad (g, theta1,
// parity-twist of theta1), its twisted noncompact pair, and the grading of
// that pair by the lifted lattice vector.
struct KepsConstruction {
  CompactTriad triad;
  PhiResult dual;
  GradingDatum grading;
  Vec z_pair;  // characteristic element in the pair's coordinates
  bool degenerate = false;
};

// Build the triad and graded pair from a lattice vector v (NOT_IN_GAMMA
// when v pairs non-integrally with a root). The pair's involution pair
// satisfies sigma = sigma_Z theta exactly.
KepsConstruction keps_from_gamma(const RootDatum& rd, const Vec& v);

// Whether the second involution of t is exactly the parity twist of the
// first by v. The root datum must belong to (t.g, t.theta1).
bool theta_sim_witness_check(const CompactTriad& t, const RootDatum& rd, const Vec& v);

// Search the lattice box with coefficients bounded by `bound` (in the
// gamma_lattice basis) for a parity-twist witness, scanning shells of
// increasing coefficient size; returns the first hit or nullopt.
std::optional<Vec> find_sim_witness(const CompactTriad& t, const RootDatum& rd, int bound);

}  // namespace liedual
