// Finite-dimensional real Lie algebras with exact rational structure
// constants, plus the linear-algebraic operations built on them.
//
// Conventions shared across the library:
//  - A subspace is always represented by the unique reduced-row-echelon
//    basis of its span ("rows"); equal subspaces have equal row matrices.
//  - Operator matrices act on coordinate columns; the matrix of a basis
//    change lists the new basis vectors as rows in old coordinates.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liedual/error.hpp"
#include "liedual/matrix.hpp"

namespace liedual {

// Sparse structure constants: the key (i, j) with i < j maps to the list
// of nonzero coordinates of [e_i, e_j], sorted by coordinate index.
using SCEntry = std::vector<std::pair<int, Rat>>;
using SCTable = std::map<std::pair<int, int>, SCEntry>;

// Optional realization of the basis by square matrices (possibly complex);
// used to carry a matrix model alongside the abstract coordinates.
struct Ambient {
  int n = 0;
  std::vector<Matrix> basis;  // one n x n matrix per basis vector
};

class LieAlgebra {
 public:
  // Validates the table (index ranges, sortedness, nonzero coefficients),
  // checks the Jacobi identity, verifies the ambient realization when one
  // is given, and precomputes the adjoint matrices and the Killing form.
  static LieAlgebra from_sc(int dim, SCTable table,
                            std::optional<Ambient> ambient = std::nullopt);

  int dim() const { return dim_; }
  const SCTable& table() const { return table_; }
  const std::optional<Ambient>& ambient() const { return ambient_; }
  const Matrix& killing() const { return killing_; }
  const Matrix& ad_basis(int i) const { return ads_[static_cast<size_t>(i)]; }

  bool is_semisimple() const;          // Killing form nondegenerate
  bool is_compact_semisimple() const;  // Killing form negative definite

  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix ad(const Vec& x) const;

 private:
  int dim_ = 0;
  SCTable table_;
  std::optional<Ambient> ambient_;
  std::vector<Matrix> ads_;
  Matrix killing_;
};

// Smallest subalgebra / ideal containing the span of the seed rows.
Matrix subalgebra_closure(const LieAlgebra& g, const Matrix& seed_rows);
Matrix ideal_closure(const LieAlgebra& g, const Matrix& seed_rows);

Matrix center(const LieAlgebra& g);
Matrix derived_subalgebra(const LieAlgebra& g);
// Elements of g commuting with every vector in the span of rows.
Matrix centralizer(const LieAlgebra& g, const Matrix& rows);

bool is_bracket_closed(const LieAlgebra& g, const Matrix& rows);

// The algebra induced on a bracket-closed subspace, in the basis given by
// the rows; throws NOT_IN_SPAN when the subspace is not closed. The
// ambient realization, when present, is carried along.
LieAlgebra induced_on(const LieAlgebra& g, const Matrix& rows);

// Greedy generating set: e_0, then repeatedly the first basis vector
// outside the generated subalgebra. Deterministic.
Matrix generating_rows(const LieAlgebra& g);

// Basis of {T : T ad(x) = ad(x) T for all x}; commutation is imposed on a
// generating set only, which suffices because the constraint propagates
// through brackets. Each element is returned as a dim x dim matrix.
std::vector<Matrix> commutant_basis(const LieAlgebra& g);
int centroid_dim(const LieAlgebra& g);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// Rewrites g in the basis whose vectors are the given rows (expressed in
// the old coordinates); rows must be square and invertible.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& new_rows);

// Operator matrix rewritten in the new basis: C^{-1} M C with C the
// column matrix of the new basis vectors.
Matrix operator_in_basis(const Matrix& op, const Matrix& new_rows);

// Matrix of op restricted to an op-stable subspace, in the row basis;
// throws NOT_INVARIANT when the image leaves the span.
Matrix restrict_operator(const Matrix& op, const Matrix& rows);

}  // namespace liedual
