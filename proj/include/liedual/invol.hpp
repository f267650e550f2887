// Involutive automorphisms of Lie algebras and the two central object
// kinds built from them: a compact triple (compact semisimple algebra with
// two commuting involutions) and a noncompact pair (semisimple algebra
// with a distinguished Cartan involution and a commuting second
// involution). Also: joint eigenspace splits, equivalence witnesses, and
// the invariant profiles used to tell objects apart.
#pragma once

#include <array>

#include "liedual/lie.hpp"

namespace liedual {

// Canonical bases of the +1 and -1 eigenspaces.
struct EigenSplit {
  Matrix plus, minus;
};
EigenSplit eigensplit(const Matrix& m);

bool is_automorphism(const LieAlgebra& g, const Matrix& m);

// Square of the right size, equal to its own inverse (NOT_INVOLUTION) and
// an automorphism of the bracket (NOT_AUTOMORPHISM).
void check_involution(const LieAlgebra& g, const Matrix& m);

// Positive definiteness of the bilinear form -B(X, theta Y), the defining
// property of a Cartan involution of a semisimple algebra.
bool is_cartan_involution(const LieAlgebra& g, const Matrix& theta);

// Compact semisimple algebra with an ordered pair of commuting
// involutions; the first involution is the distinguished one.
struct CompactTriad {
  LieAlgebra g;
  Matrix theta1, theta2;
};
CompactTriad make_triad(LieAlgebra g, Matrix theta1, Matrix theta2);

// Semisimple algebra with commuting involutions (sigma, theta), theta a
// Cartan involution; theta is the distinguished one.
struct NoncompactPair {
  LieAlgebra g;
  Matrix sigma, theta;
};
NoncompactPair make_pair(LieAlgebra g, Matrix sigma, Matrix theta);

// Joint eigenspace rows of two commuting involutions in the fixed order
// (+,+), (+,-), (-,+), (-,-); the first sign belongs to `dist`.
struct JointSplit {
  Matrix pp, pm, mp, mm;
};
JointSplit joint_split(const Matrix& dist, const Matrix& other);
std::array<int, 4> joint_dims(const JointSplit& s);

// A witness is an explicit invertible linear map; verification checks it
// preserves brackets (and, for structured objects, intertwines the
// involutions slot by slot). These return false rather than throwing so
// callers can report the outcome.
bool verify_algebra_witness(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& map);
bool verify_triad_witness(const CompactTriad& src, const CompactTriad& dst, const Matrix& map);
bool verify_pair_witness(const NoncompactPair& src, const NoncompactPair& dst, const Matrix& map);

// Statistics of the fixed subalgebra of one involution: its dimension,
// center (total and split against the other involution), derived algebra,
// own Killing signature, and the signature of the ambient Killing form
// restricted to it. All entries are basis independent.
struct ViewProfile {
  int dim = 0;
  int center_dim = 0;
  int center_plus_dim = 0;
  int center_minus_dim = 0;
  int derived_dim = 0;
  Signature own_sig, restricted_sig;
  friend bool operator==(const ViewProfile&, const ViewProfile&) = default;
};
ViewProfile fixed_point_view(const LieAlgebra& g, const Matrix& fix_of, const Matrix& other);

// Invariant profile of a triad or pair: the ambient Killing signature plus
// the views of both involutions (for a pair: the non-distinguished
// involution's view first, matching the object's slot order).
struct Profile {
  Signature g_sig;
  ViewProfile first_view, second_view;
  friend bool operator==(const Profile&, const Profile&) = default;
};
Profile triad_profile(const CompactTriad& t);
Profile pair_profile(const NoncompactPair& p);

}  // namespace liedual
