#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liedual/matrix.hpp"

using namespace liedual;

namespace {

Matrix mat2(long a, long b, long c, long d) {
  Matrix m(2, 2);
  m.at(0, 0) = GaussRat(rat_of(a));
  m.at(0, 1) = GaussRat(rat_of(b));
  m.at(1, 0) = GaussRat(rat_of(c));
  m.at(1, 1) = GaussRat(rat_of(d));
  return m;
}

Matrix mat3(std::vector<std::vector<long>> rows) {
  Matrix m(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m.at(i, j) = GaussRat(rat_of(rows[i][j]));
  return m;
}

}  // namespace

TEST_CASE("kernel of the rank-one all-ones matrix is span{(1,-1)}") {
  Matrix m = mat2(1, 1, 1, 1);
  Matrix k = kernel(m);
  REQUIRE(k.rows() == 1);
  CHECK(k.at(0, 0) == GaussRat(rat_of(1)));
  CHECK(k.at(0, 1) == GaussRat(rat_of(-1)));
}

TEST_CASE("rref is canonical and deterministic") {
  Matrix m(3, 3);
  // Rows: (2,4,6), (1,2,3), (0,1,1): rank 2.
  long rows[3][3] = {{2, 4, 6}, {1, 2, 3}, {0, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = GaussRat(rat_of(rows[i][j]));
  Matrix r = rref(m);
  REQUIRE(r.rows() == 2);
  CHECK(r.at(0, 0) == GaussRat(rat_of(1)));
  CHECK(r.at(0, 1) == GaussRat(rat_of(0)));
  CHECK(r.at(0, 2) == GaussRat(rat_of(1)));
  CHECK(r.at(1, 0) == GaussRat(rat_of(0)));
  CHECK(r.at(1, 1) == GaussRat(rat_of(1)));
  CHECK(r.at(1, 2) == GaussRat(rat_of(1)));
  // Permuting input rows yields the identical reduced basis.
  Matrix p(3, 3);
  int perm[3] = {2, 0, 1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p.at(i, j) = GaussRat(rat_of(rows[perm[i]][j]));
  CHECK(rref(p) == r);
}

TEST_CASE("inverse and solve") {
  Matrix m = mat2(1, 2, 3, 5);
  Matrix inv = inverse(m);
  CHECK((m * inv).is_identity());
  CHECK((inv * m).is_identity());
  CHECK_THROWS_AS(inverse(mat2(1, 2, 2, 4)), LieError);

  Vec v{GaussRat(rat_of(1)), GaussRat(rat_of(0))};
  auto x = solve(m, v);
  REQUIRE(x.has_value());
  Vec mx = m * *x;
  CHECK(mx == v);
  // Inconsistent system.
  auto none = solve(mat2(1, 1, 1, 1), Vec{GaussRat(rat_of(0)), GaussRat(rat_of(1))});
  CHECK_FALSE(none.has_value());
}

TEST_CASE("coordinate solver extracts and rejects") {
  // Basis rows (1,0,1) and (0,1,1) in dimension 3.
  Matrix b(2, 3);
  b.at(0, 0) = GaussRat(rat_of(1));
  b.at(0, 2) = GaussRat(rat_of(1));
  b.at(1, 1) = GaussRat(rat_of(1));
  b.at(1, 2) = GaussRat(rat_of(1));
  CoordSolver cs(b);
  Vec target{GaussRat(rat_of(2)), GaussRat(rat_of(-1)), GaussRat(rat_of(1))};
  auto c = cs.coords(target);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == GaussRat(rat_of(2)));
  CHECK((*c)[1] == GaussRat(rat_of(-1)));
  Vec outside{GaussRat(rat_of(1)), GaussRat(rat_of(0)), GaussRat(rat_of(0))};
  CHECK_FALSE(cs.coords(outside).has_value());
}

TEST_CASE("row space intersection") {
  // span{(1,0,0),(0,1,0)} intersect span{(0,1,1),(1,0,1)}:
  Matrix a(2, 3), b(2, 3);
  a.at(0, 0) = GaussRat(rat_of(1));
  a.at(1, 1) = GaussRat(rat_of(1));
  b.at(0, 1) = GaussRat(rat_of(1));
  b.at(0, 2) = GaussRat(rat_of(1));
  b.at(1, 0) = GaussRat(rat_of(1));
  b.at(1, 2) = GaussRat(rat_of(1));
  Matrix inter = intersect_rows(a, b);
  REQUIRE(inter.rows() == 1);
  // (1,-1,0) spans the intersection.
  CHECK(inter.at(0, 0) == GaussRat(rat_of(1)));
  CHECK(inter.at(0, 1) == GaussRat(rat_of(-1)));
  CHECK(inter.at(0, 2) == GaussRat(rat_of(0)));
  CHECK(rows_contained(inter, a));
  CHECK(rows_contained(inter, b));
  CHECK_FALSE(rows_contained(a, b));
}

TEST_CASE("sylvester signature by exact congruence") {
  // diag(2, -3, 0)
  Matrix d(3, 3);
  d.at(0, 0) = GaussRat(rat_of(2));
  d.at(1, 1) = GaussRat(rat_of(-3));
  Signature s = symmetric_signature(d);
  CHECK(s == Signature{1, 1, 1});
  // Hyperbolic plane [[0,1],[1,0]] has signature (1,1,0).
  Matrix h = mat2(0, 1, 1, 0);
  CHECK(symmetric_signature(h) == Signature{1, 1, 0});
  // Indefinite 3x3 with congruence steps.
  Matrix m = mat3({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
  CHECK(symmetric_signature(m) == Signature{3, 0, 0});
  CHECK_THROWS_AS(symmetric_signature(mat2(0, 1, 2, 0)), LieError);
}

TEST_CASE("minimal polynomial and eigenspaces") {
  // Diagonalizable: [[2,0],[0,3]] -> (x-2)(x-3).
  Matrix d = mat2(2, 0, 0, 3);
  Poly mp = minimal_polynomial(d);
  CHECK(mp == Poly{rat_of(6), rat_of(-5), rat_of(1)});
  auto roots = rational_roots(mp);
  auto rep = eigenspaces(d, roots);
  CHECK(rep.spans);
  REQUIRE(rep.spaces.size() == 2);
  CHECK(rep.spaces[0].first == rat_of(2));
  CHECK(rep.spaces[1].first == rat_of(3));

  // Nilpotent Jordan block: minpoly x^2, eigenspace of 0 is 1-dimensional.
  Matrix n = mat2(0, 1, 0, 0);
  CHECK(minimal_polynomial(n) == Poly{rat_of(0), rat_of(0), rat_of(1)});
  auto rep2 = eigenspaces(n, {rat_of(0)});
  CHECK_FALSE(rep2.spans);
  REQUIRE(rep2.spaces.size() == 1);
  CHECK(rep2.spaces[0].second.rows() == 1);

  // Rotation generator [[0,-1],[1,0]]: x^2 + 1, no rational eigenvalues.
  Matrix rot = mat2(0, -1, 1, 0);
  CHECK(minimal_polynomial(rot) == Poly{rat_of(1), rat_of(0), rat_of(1)});
  CHECK(rational_roots(minimal_polynomial(rot)).empty());
}

TEST_CASE("polynomial kernels split invariant subspaces") {
  // Block diag(rotation, 2): ker(x^2+1) is the rotation plane.
  Matrix m(3, 3);
  m.at(0, 1) = GaussRat(rat_of(-1));
  m.at(1, 0) = GaussRat(rat_of(1));
  m.at(2, 2) = GaussRat(rat_of(2));
  Matrix plane = poly_kernel(m, Poly{rat_of(1), rat_of(0), rat_of(1)});
  REQUIRE(plane.rows() == 2);
  Matrix line = poly_kernel(m, Poly{rat_of(-2), rat_of(1)});
  REQUIRE(line.rows() == 1);
  CHECK(line.at(0, 2) == GaussRat(rat_of(1)));
}

TEST_CASE("hermite normal form is canonical") {
  IntMatrix m;
  m.rows = 3;
  m.cols = 2;
  // Generators (2,2), (0,6), (2,8): lattice {(2a, 2b): a+... } with
  // canonical basis (2,2), (0,6).
  m.e = {Int(2), Int(2), Int(0), Int(6), Int(2), Int(8)};
  IntMatrix h = hermite_normal_form(m);
  REQUIRE(h.rows == 2);
  CHECK(h.at(0, 0) == 2);
  CHECK(h.at(0, 1) == 2);
  CHECK(h.at(1, 0) == 0);
  CHECK(h.at(1, 1) == 6);
  // Generators spanning the whole integer lattice reduce to the identity.
  IntMatrix full;
  full.rows = 3;
  full.cols = 2;
  full.e = {Int(2), Int(0), Int(0), Int(3), Int(1), Int(1)};
  IntMatrix hf = hermite_normal_form(full);
  REQUIRE(hf.rows == 2);
  CHECK(hf.at(0, 0) == 1);
  CHECK(hf.at(0, 1) == 0);
  CHECK(hf.at(1, 0) == 0);
  CHECK(hf.at(1, 1) == 1);
}

TEST_CASE("complex entries flow through arithmetic") {
  Matrix j(2, 2);
  j.at(0, 1) = GaussRat(rat_of(0), rat_of(-1));
  j.at(1, 0) = GaussRat(rat_of(0), rat_of(1));
  // j is Hermitian-like: j^2 = I.
  CHECK((j * j).is_identity());
  CHECK_FALSE(j.is_real());
  CHECK(j.conj().transpose() == j);
}
