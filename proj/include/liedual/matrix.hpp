// Dense exact matrices over the Gaussian rationals, with the deterministic
// reductions everything else is built on: reduced row echelon form, kernels,
// eigenspace extraction, Sylvester signatures, and minimal polynomials.
//
// Convention used throughout the library: a subspace is stored as a matrix
// whose ROWS form the unique reduced-row-echelon basis (leading entry 1,
// pivot columns cleared, rows ordered by pivot column). Because the reduced
// echelon basis of a subspace is unique, subspace equality is bit-equality
// of these matrices, independent of how the subspace was constructed.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liedual/scalar.hpp"

namespace liedual {

using Vec = std::vector<GaussRat>;

class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}

  static Matrix identity(size_t n);
  static Matrix zero(size_t rows, size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);
  static Matrix diag_signs(const std::vector<int>& signs);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  GaussRat& at(size_t i, size_t j) { return e_[i * c_ + j]; }
  const GaussRat& at(size_t i, size_t j) const { return e_[i * c_ + j]; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;
  void set_row(size_t i, const Vec& v);

  Matrix transpose() const;
  Matrix conj() const;
  bool is_zero() const;
  bool is_real() const;
  bool is_identity() const;
  bool is_symmetric() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator*(const GaussRat& s) const;
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Stack b below this matrix (same column count).
  Matrix vstack(const Matrix& b) const;

 private:
  size_t r_, c_;
  std::vector<GaussRat> e_;
};

Vec operator*(const Matrix& m, const Vec& v);  // matrix . column vector
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const GaussRat& s, const Vec& a);
bool vec_is_zero(const Vec& v);
Vec vec_real_part(const Vec& v);
Vec vec_imag_part(const Vec& v);

// In-place reduced row echelon form; returns the pivot columns. Zero rows
// are dropped, so the result has exactly rank(m) rows.
std::vector<size_t> rref_in_place(Matrix& m);
Matrix rref(Matrix m);
size_t rank(Matrix m);

// Canonical basis of the right kernel {v : m v = 0}, returned as the
// reduced-echelon rows of the kernel (deterministic, construction
// independent).
Matrix kernel(const Matrix& m);

// Canonical basis of the span of the given rows.
Matrix row_space(const Matrix& m);

// Intersection of two row spaces, as canonical rows.
Matrix intersect_rows(const Matrix& a, const Matrix& b);

// True iff every row of sub lies in the row space of ambient.
bool rows_contained(const Matrix& sub, const Matrix& ambient);

// Inverse of a square matrix; throws SINGULAR.
Matrix inverse(const Matrix& m);

// Solve m x = v; returns std::nullopt when inconsistent. When the system is
// underdetermined the solution with zero free coordinates is returned.
std::optional<Vec> solve(const Matrix& m, const Vec& v);

// Repeated coordinate extraction against a fixed basis (rows of `basis`):
// expresses targets as linear combinations of the basis rows.
class CoordSolver {
 public:
  explicit CoordSolver(const Matrix& basis_rows);
  // Coordinates c with sum_i c_i basis_i = v; nullopt if v is outside the span.
  std::optional<Vec> coords(const Vec& v) const;
  bool contains(const Vec& v) const { return coords(v).has_value(); }
  size_t basis_size() const { return n_basis_; }

 private:
  size_t n_basis_, dim_;
  Matrix red_;                  // rref of [basis^T | I]
  std::vector<size_t> pivots_;  // pivot columns of basis^T part
};

// Sylvester signature (n_plus, n_minus, n_zero) of a real symmetric matrix,
// computed by exact symmetric congruence reduction. Throws NON_SYMMETRIC on
// non-symmetric or non-real input.
struct Signature {
  size_t n_plus = 0, n_minus = 0, n_zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
Signature symmetric_signature(Matrix m);

// Minimal polynomial of a square matrix over the rationals (monic).
// Requires real entries (all spectral work in the library is arranged to
// happen on real matrices).
Poly minimal_polynomial(const Matrix& m);

// Kernel of p(m) for a polynomial p.
Matrix poly_kernel(const Matrix& m, const Poly& p);

// Eigenspace report for a real matrix and a set of candidate rational
// eigenvalues: canonical kernel bases of (m - c I) and whether the
// eigenspaces span the full space (i.e. m is diagonalizable over the
// rationals with spectrum inside the candidate set).
struct EigenReport {
  std::vector<std::pair<Rat, Matrix>> spaces;  // nonzero eigenspaces only
  bool spans = false;
};
EigenReport eigenspaces(const Matrix& m, const std::vector<Rat>& candidates);

// Change of basis for an operator: new_matrix = C^-1 m C, where the columns
// of C are the new basis vectors in old coordinates.
Matrix conjugate(const Matrix& m, const Matrix& c, const Matrix& c_inv);

// Hermite normal form of an integer matrix (row-style, canonical), used for
// exact lattice arithmetic. Input rows generate the lattice; the result has
// full row rank with positive pivots and reduced entries above pivots.
struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Int> e;
  Int& at(size_t i, size_t j) { return e[i * cols + j]; }
  const Int& at(size_t i, size_t j) const { return e[i * cols + j]; }
};
IntMatrix hermite_normal_form(IntMatrix m);

}  // namespace liedual
