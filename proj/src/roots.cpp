#include "liedual/roots.hpp"

#include <algorithm>
#include <utility>

namespace liedual {

namespace {

// Scalar by which m acts on the span containing w (checked on every
// coordinate); the action must be real.
Rat action_scalar(const Matrix& m, const Vec& w) {
  Vec u = m * w;
  size_t t = 0;
  while (t < w.size() && w[t].is_zero()) ++t;
  require(t < w.size(), Err::INTERNAL, "zero vector in eigenpiece");
  GaussRat c = u[t] / w[t];
  require(c.is_real(), Err::INTERNAL, "piece action not real");
  for (size_t s = 0; s < w.size(); ++s)
    require(u[s] == c * w[s], Err::INTERNAL, "piece action not scalar");
  return c.re;
}

// Eigenspaces over the rationals; the operator must split completely.
std::vector<std::pair<Rat, Matrix>> rational_split(const Matrix& m) {
  EigenReport er = eigenspaces(m, rational_roots(minimal_polynomial(m)));
  require(er.spans, Err::ROOT_NOT_GAUSSIAN,
          "an a1 action does not diagonalize over the Gaussian rationals");
  return er.spaces;
}

void refine(std::vector<Matrix>& pieces, const std::vector<std::pair<Rat, Matrix>>& spaces) {
  std::vector<Matrix> out;
  size_t before = 0, after = 0;
  for (const Matrix& p : pieces) {
    before += p.rows();
    for (const auto& [ev, sp] : spaces) {
      Matrix it = intersect_rows(p, sp);
      if (it.rows() > 0) {
        after += it.rows();
        out.push_back(std::move(it));
      }
    }
  }
  require(after == before, Err::INTERNAL, "eigenpiece refinement lost dimensions");
  pieces = std::move(out);
}

GaussRat dot(const Vec& a, const Vec& b) {
  GaussRat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// <x,y> = -B(x,y) on ambient coordinate vectors.
Rat killing_ip(const Matrix& B, const Vec& x, const Vec& y) {
  GaussRat s = -dot(x, B * y);
  require(s.is_real(), Err::INTERNAL, "inner product not real");
  return s.re;
}

const RestrictedRoot& find_root(const RootDatum& rd, const Vec& lam) {
  require(lam.size() == rd.a1.rows(), Err::DIM_MISMATCH, "root coordinate length");
  for (const RestrictedRoot& rt : rd.roots) {
    bool plus = true, minus = true;
    for (size_t t = 0; t < lam.size(); ++t) {
      if (lam[t] != rt.lam[t]) plus = false;
      if (lam[t] != -rt.lam[t]) minus = false;
    }
    if (plus || minus) return rt;
  }
  fail(Err::BAD_PARAMS, "not a restricted root of this datum");
}

Vec lift_to_ambient(const RootDatum& rd, const Vec& coords) {
  Vec out(static_cast<size_t>(rd.g.dim()));
  for (size_t t = 0; t < coords.size(); ++t)
    out = vec_add(out, vec_scale(coords[t], rd.a1.row(t)));
  return out;
}

bool odd_integer(const Rat& val) { return val.get_num() % 2 != 0; }

}  // namespace

Matrix maximal_abelian(const LieAlgebra& g, const Matrix& theta1) {
  check_involution(g, theta1);
  require(g.is_compact_semisimple(), Err::NOT_COMPACT, "algebra is not compact semisimple");
  Matrix p_rows = eigensplit(theta1).minus;
  require(p_rows.rows() > 0, Err::BAD_PARAMS, "minus part is zero");
  size_t d = static_cast<size_t>(g.dim());
  Matrix cur = Matrix::from_rows({p_rows.row(0)}, d);
  while (true) {
    Matrix cent = centralizer(g, cur);
    Matrix zp = intersect_rows(cent, p_rows);
    Matrix span = row_space(cur);
    bool extended = false;
    for (size_t r = 0; r < zp.rows(); ++r) {
      if (!rows_contained(Matrix::from_rows({zp.row(r)}, d), span)) {
        cur = cur.vstack(Matrix::from_rows({zp.row(r)}, d));
        extended = true;
        break;
      }
    }
    if (!extended) return span;
  }
}

RootDatum restricted_roots(const LieAlgebra& g, const Matrix& theta1, const Matrix& a1) {
  check_involution(g, theta1);
  require(g.is_compact_semisimple(), Err::NOT_COMPACT, "algebra is not compact semisimple");
  size_t d = static_cast<size_t>(g.dim());
  EigenSplit es = eigensplit(theta1);
  require(a1.rows() > 0 && a1.cols() == d, Err::BAD_PARAMS, "empty abelian subspace");
  Matrix a1c = row_space(a1);
  require(a1c.rows() == a1.rows(), Err::BAD_PARAMS, "dependent rows in the subspace");
  require(rows_contained(a1c, es.minus), Err::BAD_PARAMS,
          "subspace not inside the minus part of the involution");
  size_t ra = a1c.rows();
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = i + 1; j < ra; ++j)
      require(vec_is_zero(g.bracket(a1c.row(i), a1c.row(j))), Err::BAD_PARAMS,
              "subspace is not abelian");
  require(intersect_rows(centralizer(g, a1c), es.minus) == a1c, Err::BAD_PARAMS,
          "subspace is not maximal abelian in the minus part");

  const Matrix& B = g.killing();
  Matrix gram(ra, ra);
  for (size_t a = 0; a < ra; ++a)
    for (size_t b = 0; b < ra; ++b)
      gram.at(a, b) = GaussRat(killing_ip(B, a1c.row(a), a1c.row(b)));
  require(symmetric_signature(gram) == Signature{ra, 0, 0}, Err::INTERNAL,
          "restricted inner product not positive definite");

  std::vector<Matrix> ads, squares;
  for (size_t t = 0; t < ra; ++t) {
    ads.push_back(g.ad(a1c.row(t)));
    squares.push_back(ads[t] * ads[t]);
  }

  // Joint refinement: first by each squared action, then by the mixed
  // products (distinct weight pairs can share every squared eigenvalue;
  // the mixed products separate them).
  std::vector<Matrix> pieces = {rref(Matrix::identity(d))};
  for (size_t t = 0; t < ra; ++t) refine(pieces, rational_split(squares[t]));
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = i + 1; j < ra; ++j) refine(pieces, rational_split(ads[i] * ads[j]));

  size_t zero_total = 0;
  std::vector<RestrictedRoot> roots;
  for (const Matrix& rows : pieces) {
    Vec w = rows.row(0);
    std::vector<Rat> vals;
    for (size_t t = 0; t < ra; ++t) vals.push_back(action_scalar(squares[t], w));
    bool all_zero = true;
    for (const Rat& v : vals)
      if (v != 0) all_zero = false;
    if (all_zero) {
      zero_total += rows.rows();
      continue;
    }
    std::vector<Rat> qs(ra);
    for (size_t t = 0; t < ra; ++t)
      require(rat_sqrt(Rat(-vals[t]), qs[t]), Err::ROOT_NOT_GAUSSIAN,
              "squared eigenvalue is not minus a rational square");
    size_t anchor = 0;
    while (anchor < ra && qs[anchor] == 0) ++anchor;
    std::vector<Rat> r(ra, Rat(0));
    r[anchor] = qs[anchor];
    for (size_t t = 0; t < ra; ++t) {
      if (t == anchor || qs[t] == 0) continue;
      Rat c = action_scalar(ads[anchor] * ads[t], w);
      r[t] = Rat(-c) / r[anchor];
    }
    for (size_t t1 = 0; t1 < ra; ++t1)
      for (size_t t2 = 0; t2 < ra; ++t2) {
        Rat c = action_scalar(ads[t1] * ads[t2], w);
        require(c == -r[t1] * r[t2], Err::INTERNAL, "pairwise sign coherence failed");
      }
    Vec rv(ra);
    for (size_t t = 0; t < ra; ++t) rv[t] = GaussRat(r[t]);
    Vec lam = inverse(gram) * rv;
    size_t fz = 0;
    while (fz < ra && lam[fz].is_zero()) ++fz;
    require(fz < ra, Err::INTERNAL, "zero root vector");
    if (lam[fz].re < 0) lam = vec_scale(GaussRat(Rat(-1)), lam);
    require(rows.rows() % 2 == 0, Err::INTERNAL, "odd-dimensional root piece");
    RestrictedRoot rt;
    rt.lam = lam;
    rt.mult = static_cast<int>(rows.rows() / 2);
    rt.v_rows = rows;
    rt.k_rows = intersect_rows(rows, es.plus);
    rt.p_rows = intersect_rows(rows, es.minus);
    require(static_cast<int>(rt.k_rows.rows()) == rt.mult &&
                static_cast<int>(rt.p_rows.rows()) == rt.mult,
            Err::INTERNAL, "root space does not split evenly across the involution");
    roots.push_back(std::move(rt));
  }
  std::stable_sort(roots.begin(), roots.end(),
                   [](const RestrictedRoot& x, const RestrictedRoot& y) {
                     for (size_t t = 0; t < x.lam.size(); ++t) {
                       if (x.lam[t].re < y.lam[t].re) return true;
                       if (y.lam[t].re < x.lam[t].re) return false;
                     }
                     return false;
                   });
  size_t root_total = 0;
  for (const RestrictedRoot& rt : roots) root_total += 2 * static_cast<size_t>(rt.mult);
  require(d == zero_total + root_total, Err::INTERNAL, "decomposition identity failed");

  Matrix stacked(0, d);
  for (const Matrix& sq : squares) stacked = stacked.vstack(sq);
  Matrix zero_space = kernel(stacked);
  require(zero_space.rows() == zero_total, Err::INTERNAL, "joint kernel dimension mismatch");
  require(intersect_rows(zero_space, es.minus) == a1c, Err::INTERNAL,
          "joint kernel does not meet the minus part in the subspace");
  Matrix zk = intersect_rows(zero_space, es.plus);
  require(zk.rows() == zero_total - ra, Err::INTERNAL, "centralizer split mismatch");

  RootDatum rd;
  rd.g = g;
  rd.theta1 = theta1;
  rd.a1 = std::move(a1c);
  rd.gram = std::move(gram);
  rd.zk = std::move(zk);
  rd.zero_space = std::move(zero_space);
  rd.ads = std::move(ads);
  rd.roots = std::move(roots);
  return rd;
}

Rat root_pairing(const RootDatum& rd, const Vec& lam, const Vec& w) {
  require(lam.size() == rd.a1.rows() && w.size() == rd.a1.rows(), Err::DIM_MISMATCH,
          "pairing coordinate length");
  GaussRat s = dot(rd.gram * lam, w);
  require(s.is_real(), Err::INTERNAL, "pairing not real");
  return s.re;
}

Vec f_lambda(const RootDatum& rd, const Vec& lam, const Vec& x) {
  const RestrictedRoot& rt = find_root(rd, lam);
  CoordSolver vs(rt.v_rows);
  require(vs.contains(x), Err::NOT_IN_V, "vector outside the root space");
  Rat norm = root_pairing(rd, lam, lam);
  require(norm > 0, Err::INTERNAL, "root has nonpositive norm");
  Vec lift = lift_to_ambient(rd, lam);
  Vec out = vec_scale(GaussRat(Rat(1) / norm), rd.g.bracket(lift, x));
  require(vs.contains(out), Err::INTERNAL, "image left the root space");
  return out;
}

STBasis st_basis(const RootDatum& rd, const Vec& lam) {
  const RestrictedRoot& rt = find_root(rd, lam);
  const Matrix& B = rd.g.killing();
  STBasis out;
  for (size_t i = 0; i < rt.k_rows.rows(); ++i) {
    Vec s = rt.k_rows.row(i);
    for (const Vec& prev : out.S) {
      Rat num = killing_ip(B, s, prev);
      Rat den = killing_ip(B, prev, prev);
      require(den > 0, Err::INTERNAL, "degenerate Gram-Schmidt step");
      s = vec_sub(s, vec_scale(GaussRat(num / den), prev));
    }
    require(!vec_is_zero(s), Err::INTERNAL, "dependent rows in k1(lam)");
    out.S.push_back(std::move(s));
  }
  for (const Vec& s : out.S) out.T.push_back(f_lambda(rd, lam, s));
  // Exchange identities for every a1 basis element.
  for (size_t t = 0; t < rd.a1.rows(); ++t) {
    Vec unit(rd.a1.rows());
    unit[t] = GaussRat(1);
    GaussRat c(root_pairing(rd, lam, unit));
    for (size_t i = 0; i < out.S.size(); ++i) {
      require(rd.ads[t] * out.S[i] == vec_scale(c, out.T[i]), Err::INTERNAL,
              "exchange identity failed on S");
      require(rd.ads[t] * out.T[i] == vec_scale(-c, out.S[i]), Err::INTERNAL,
              "exchange identity failed on T");
    }
  }
  return out;
}

std::vector<Vec> gamma_lattice(const RootDatum& rd) {
  require(!rd.roots.empty(), Err::BAD_PARAMS, "no restricted roots");
  size_t ra = rd.a1.rows();
  std::vector<Vec> wrows;
  for (const RestrictedRoot& rt : rd.roots) wrows.push_back(rd.gram * rt.lam);
  Int den(1);
  for (const Vec& r : wrows)
    for (const GaussRat& x : r) {
      require(x.is_real(), Err::INTERNAL, "pairing matrix not real");
      Int d = x.re.get_den();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
  IntMatrix M;
  M.rows = wrows.size();
  M.cols = ra;
  M.e.resize(M.rows * M.cols);
  for (size_t i = 0; i < M.rows; ++i)
    for (size_t j = 0; j < ra; ++j) {
      Rat scaled = wrows[i][j].re * Rat(den);
      require(is_integer(scaled), Err::INTERNAL, "denominator clearing failed");
      M.at(i, j) = scaled.get_num();
    }
  IntMatrix H = hermite_normal_form(M);
  require(H.rows == ra, Err::INTERNAL, "pairing matrix not of full column rank");
  Matrix Hm(ra, ra);
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = 0; j < ra; ++j) Hm.at(i, j) = GaussRat(Rat(H.at(i, j)));
  Matrix Hinv = inverse(Hm);
  std::vector<Vec> cols;
  for (size_t j = 0; j < ra; ++j) {
    Vec v(ra);
    for (size_t i = 0; i < ra; ++i) v[i] = GaussRat(Rat(den) * Hinv.at(i, j).re);
    cols.push_back(std::move(v));
  }
  for (const Vec& v : cols)
    for (const RestrictedRoot& rt : rd.roots)
      require(is_integer(root_pairing(rd, rt.lam, v)), Err::INTERNAL,
              "lattice basis fails integrality");
  return cols;
}

bool gamma_contains(const RootDatum& rd, const Vec& v) {
  require(v.size() == rd.a1.rows(), Err::DIM_MISMATCH, "lattice vector length");
  for (const GaussRat& x : v)
    if (!x.is_real()) return false;
  for (const RestrictedRoot& rt : rd.roots)
    if (!is_integer(root_pairing(rd, rt.lam, v))) return false;
  return true;
}

Matrix parity_operator(const RootDatum& rd, const Vec& v) {
  size_t d = static_cast<size_t>(rd.g.dim());
  require(v.size() == rd.a1.rows(), Err::DIM_MISMATCH, "lattice vector length");
  for (const GaussRat& x : v)
    require(x.is_real(), Err::NOT_IN_GAMMA, "lattice vector must be real");
  std::vector<bool> odd;
  for (const RestrictedRoot& rt : rd.roots) {
    Rat val = root_pairing(rd, rt.lam, v);
    require(is_integer(val), Err::NOT_IN_GAMMA,
            "vector pairs non-integrally with a restricted root");
    odd.push_back(odd_integer(val));
  }
  Matrix C(d, d);
  Matrix D(d, d);
  size_t col = 0;
  for (size_t r = 0; r < rd.zero_space.rows(); ++r, ++col) {
    for (size_t i = 0; i < d; ++i) C.at(i, col) = rd.zero_space.at(r, i);
    D.at(col, col) = GaussRat(1);
  }
  for (size_t k = 0; k < rd.roots.size(); ++k) {
    const Matrix& rows = rd.roots[k].v_rows;
    GaussRat s(odd[k] ? Rat(-1) : Rat(1));
    for (size_t r = 0; r < rows.rows(); ++r, ++col) {
      for (size_t i = 0; i < d; ++i) C.at(i, col) = rows.at(r, i);
      D.at(col, col) = s;
    }
  }
  require(col == d, Err::INTERNAL, "parity basis incomplete");
  return C * D * inverse(C);
}

}  // namespace liedual
