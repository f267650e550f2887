#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liedual/lie.hpp"

using namespace liedual;

namespace {

Rat q(long n, long d = 1) { return rat_of(n, d); }

// Rotation algebra in dimension three, basis f_12, f_13, f_23 with
// f_jk = E_jk - E_kj:  [f12,f13] = -f23, [f12,f23] = f13, [f13,f23] = -f12.
SCTable so3_table() {
  SCTable t;
  t[{0, 1}] = {{2, q(-1)}};
  t[{0, 2}] = {{1, q(1)}};
  t[{1, 2}] = {{0, q(-1)}};
  return t;
}

LieAlgebra so3() { return LieAlgebra::from_sc(3, so3_table()); }

// Split rank-one algebra, basis H, E, F: [H,E]=2E, [H,F]=-2F, [E,F]=H.
LieAlgebra sl2r() {
  SCTable t;
  t[{0, 1}] = {{1, q(2)}};
  t[{0, 2}] = {{2, q(-2)}};
  t[{1, 2}] = {{0, q(1)}};
  return LieAlgebra::from_sc(3, t);
}

// The complex rank-one algebra viewed as a real algebra, basis
// H, E, F, iH, iE, iF.
LieAlgebra sl2c_real() {
  SCTable t;
  t[{0, 1}] = {{1, q(2)}};
  t[{0, 2}] = {{2, q(-2)}};
  t[{0, 4}] = {{4, q(2)}};
  t[{0, 5}] = {{5, q(-2)}};
  t[{1, 2}] = {{0, q(1)}};
  t[{1, 3}] = {{4, q(-2)}};
  t[{1, 5}] = {{3, q(1)}};
  t[{2, 3}] = {{5, q(2)}};
  t[{2, 4}] = {{3, q(-1)}};
  t[{3, 4}] = {{1, q(-2)}};
  t[{3, 5}] = {{2, q(2)}};
  t[{4, 5}] = {{0, q(-1)}};
  return LieAlgebra::from_sc(6, t);
}

Matrix unit_rows(const std::vector<int>& idx, size_t dim) {
  std::vector<Vec> rows;
  for (int i : idx) {
    Vec v(dim);
    v[static_cast<size_t>(i)] = GaussRat(1);
    rows.push_back(v);
  }
  return Matrix::from_rows(rows, dim);
}

Matrix elem3(int i, int j, int sign_j, int k, int l, int sign_l) {
  Matrix m(3, 3);
  m.at(static_cast<size_t>(i), static_cast<size_t>(j)) = GaussRat(q(sign_j));
  m.at(static_cast<size_t>(k), static_cast<size_t>(l)) = GaussRat(q(sign_l));
  return m;
}

}  // namespace

TEST_CASE("rotation algebra: bracket, ad, Killing form") {
  LieAlgebra g = so3();
  CHECK(g.dim() == 3);
  // [f12, f13] = -f23.
  Vec v = g.bracket_basis(0, 1);
  CHECK(v[0].is_zero());
  CHECK(v[1].is_zero());
  CHECK(v[2] == GaussRat(q(-1)));
  // Antisymmetry through the swapped lookup.
  Vec w = g.bracket_basis(1, 0);
  CHECK(w[2] == GaussRat(q(1)));
  // ad x applied to y equals [x, y] for dense vectors.
  Vec x(3), y(3);
  x[0] = GaussRat(q(2));
  x[2] = GaussRat(q(-1));
  y[1] = GaussRat(q(3));
  y[2] = GaussRat(q(5));
  CHECK(g.ad(x) * y == g.bracket(x, y));
  // Killing form is -2 I: negative definite, so compact semisimple.
  CHECK(g.killing() == Matrix::identity(3) * GaussRat(q(-2)));
  CHECK(g.is_semisimple());
  CHECK(g.is_compact_semisimple());
  CHECK(center(g).rows() == 0);
  CHECK(derived_subalgebra(g) == rref(Matrix::identity(3)));
}

TEST_CASE("split rank-one algebra: Killing signature (2,1,0)") {
  LieAlgebra g = sl2r();
  Matrix b(3, 3);
  b.at(0, 0) = GaussRat(q(8));
  b.at(1, 2) = GaussRat(q(4));
  b.at(2, 1) = GaussRat(q(4));
  CHECK(g.killing() == b);
  Signature s = symmetric_signature(g.killing());
  CHECK(s.n_plus == 2);
  CHECK(s.n_minus == 1);
  CHECK(s.n_zero == 0);
  CHECK(g.is_semisimple());
  CHECK_FALSE(g.is_compact_semisimple());
}

TEST_CASE("nilpotent three-dimensional algebra: degenerate Killing form") {
  SCTable t;
  t[{0, 1}] = {{2, q(1)}};
  LieAlgebra g = LieAlgebra::from_sc(3, t);
  CHECK(g.killing() == Matrix::zero(3, 3));
  CHECK_FALSE(g.is_semisimple());
  CHECK(center(g) == unit_rows({2}, 3));
  CHECK(derived_subalgebra(g) == unit_rows({2}, 3));
}

TEST_CASE("Jacobi identity is enforced at construction") {
  SCTable bad;
  bad[{0, 1}] = {{1, q(1)}};
  bad[{0, 2}] = {{2, q(1)}};
  bad[{1, 2}] = {{0, q(1)}};
  CHECK_THROWS_AS(LieAlgebra::from_sc(3, bad), LieError);
}

TEST_CASE("structure constant table validation") {
  SCTable bad;
  bad[{1, 0}] = {{0, q(1)}};  // key not ordered
  CHECK_THROWS_AS(LieAlgebra::from_sc(2, bad), LieError);
  SCTable bad2;
  bad2[{0, 1}] = {{1, q(0)}};  // zero coefficient stored
  CHECK_THROWS_AS(LieAlgebra::from_sc(2, bad2), LieError);
}

TEST_CASE("ambient matrices are validated against the table") {
  Ambient amb;
  amb.n = 3;
  amb.basis = {elem3(0, 1, 1, 1, 0, -1),   // f12
               elem3(0, 2, 1, 2, 0, -1),   // f13
               elem3(1, 2, 1, 2, 1, -1)};  // f23
  LieAlgebra g = LieAlgebra::from_sc(3, so3_table(), amb);
  CHECK(g.ambient().has_value());
  // Corrupting one matrix breaks the realization check.
  amb.basis[2].at(0, 0) = GaussRat(q(1));
  CHECK_THROWS_AS(LieAlgebra::from_sc(3, so3_table(), amb), LieError);
}

TEST_CASE("closures, centralizer and induced algebra on a direct sum") {
  LieAlgebra g = direct_sum(so3(), so3());
  CHECK(g.dim() == 6);
  CHECK(center(g).rows() == 0);
  CHECK(derived_subalgebra(g).rows() == 6);

  // A single generator spans an abelian line; its ideal closure is the
  // whole first summand.
  Matrix seed = unit_rows({0}, 6);
  CHECK(subalgebra_closure(g, seed) == row_space(seed));
  Matrix first = ideal_closure(g, seed);
  CHECK(first == unit_rows({0, 1, 2}, 6));

  CHECK(centralizer(g, first) == unit_rows({3, 4, 5}, 6));
  CHECK(is_bracket_closed(g, first));

  LieAlgebra sub = induced_on(g, first);
  CHECK(sub.dim() == 3);
  CHECK(sub.table() == so3_table());
  CHECK_THROWS_AS(induced_on(g, unit_rows({0, 1}, 6)), LieError);

  // Greedy generation picks two basis vectors per summand; the projections
  // onto the summands span the commutant.
  CHECK(generating_rows(g).rows() == 4);
  CHECK(generating_rows(so3()).rows() == 2);
  CHECK(centroid_dim(g) == 2);
  auto com = commutant_basis(g);
  REQUIRE(com.size() == 2);
  Matrix p1(6, 6), p2(6, 6);
  for (size_t i = 0; i < 3; ++i) p1.at(i, i) = GaussRat(q(1));
  for (size_t i = 3; i < 6; ++i) p2.at(i, i) = GaussRat(q(1));
  CHECK(com[0] == p1);
  CHECK(com[1] == p2);
}

TEST_CASE("centroid distinguishes a real form from a complex algebra") {
  CHECK(centroid_dim(so3()) == 1);
  auto com = commutant_basis(so3());
  REQUIRE(com.size() == 1);
  CHECK(com[0] == Matrix::identity(3));
  // The complex algebra viewed over the reals carries the multiplication
  // by i in its centroid.
  LieAlgebra gc = sl2c_real();
  CHECK(gc.is_semisimple());
  CHECK(centroid_dim(gc) == 2);
}

TEST_CASE("change of basis round-trips and transforms operators") {
  LieAlgebra g = so3();
  Matrix p(3, 3);
  p.at(0, 0) = GaussRat(q(1));
  p.at(0, 1) = GaussRat(q(1));
  p.at(1, 1) = GaussRat(q(1));
  p.at(2, 2) = GaussRat(q(2));
  LieAlgebra h = change_basis(g, p);
  CHECK(h.dim() == 3);
  CHECK(h.table() != g.table());
  LieAlgebra back = change_basis(h, inverse(p));
  CHECK(back.table() == g.table());
  CHECK(back.killing() == g.killing());

  // The span of f13, f23 is stable under ad f12, with matrix
  // [[0,1],[-1,0]] in that basis.
  Matrix sub = unit_rows({1, 2}, 3);
  Matrix r = restrict_operator(g.ad_basis(0), sub);
  Matrix want(2, 2);
  want.at(0, 1) = GaussRat(q(1));
  want.at(1, 0) = GaussRat(q(-1));
  CHECK(r == want);
  CHECK_THROWS_AS(restrict_operator(g.ad_basis(0), unit_rows({1}, 3)), LieError);

  // Conjugating ad f12 into the new basis agrees with the ad matrix of
  // the transformed algebra.
  Vec e0_new = p.row(0);
  Matrix lhs = operator_in_basis(g.ad(e0_new), p);
  CHECK(lhs == h.ad_basis(0));
}
