#include "liedual/matrix.hpp"

#include <algorithm>

namespace liedual {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = GaussRat(Rat(1));
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, Err::DIM_MISMATCH, "row length");
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::diag_signs(const std::vector<int>& signs) {
  Matrix m(signs.size(), signs.size());
  for (size_t i = 0; i < signs.size(); ++i)
    m.at(i, i) = GaussRat(Rat(signs[i]));
  return m;
}

Vec Matrix::row(size_t i) const {
  Vec v(c_);
  for (size_t j = 0; j < c_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(size_t j) const {
  Vec v(r_);
  for (size_t i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(size_t i, const Vec& v) {
  require(v.size() == c_, Err::DIM_MISMATCH, "set_row");
  for (size_t j = 0; j < c_; ++j) at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
  Matrix m(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::conj() const {
  Matrix m(r_, c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m.at(i, j) = at(i, j).conj();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : e_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto& e : e_)
    if (!e.is_real()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (r_ != c_) return false;
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) {
      if (i == j && !(at(i, j) == GaussRat(Rat(1)))) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Matrix::is_symmetric() const {
  if (r_ != c_) return false;
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = i + 1; j < c_; ++j)
      if (!(at(i, j) == at(j, i))) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.r_ == b.r_ && a.c_ == b.c_, Err::DIM_MISMATCH, "matrix add");
  Matrix m(a.r_, a.c_);
  for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.r_ == b.r_ && a.c_ == b.c_, Err::DIM_MISMATCH, "matrix sub");
  Matrix m(a.r_, a.c_);
  for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.c_ == b.r_, Err::DIM_MISMATCH, "matrix mul");
  Matrix m(a.r_, b.c_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t k = 0; k < a.c_; ++k) {
      const GaussRat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.c_; ++j) {
        const GaussRat& bkj = b.at(k, j);
        if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
      }
    }
  return m;
}

Matrix Matrix::operator*(const GaussRat& s) const {
  Matrix m(r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

Matrix Matrix::vstack(const Matrix& b) const {
  require(c_ == b.c_ || r_ == 0 || b.r_ == 0, Err::DIM_MISMATCH, "vstack");
  size_t cols = r_ == 0 ? b.c_ : c_;
  Matrix m(r_ + b.r_, cols);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
  for (size_t i = 0; i < b.r_; ++i)
    for (size_t j = 0; j < b.c_; ++j) m.at(r_ + i, j) = b.at(i, j);
  return m;
}

Vec operator*(const Matrix& m, const Vec& v) {
  require(m.cols() == v.size(), Err::DIM_MISMATCH, "matrix-vector");
  Vec r(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) {
    GaussRat acc;
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) acc += m.at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Err::DIM_MISMATCH, "vec add");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Err::DIM_MISMATCH, "vec sub");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const GaussRat& s, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

Vec vec_real_part(const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = GaussRat(v[i].re);
  return r;
}

Vec vec_imag_part(const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = GaussRat(v[i].im);
  return r;
}

std::vector<size_t> rref_in_place(Matrix& m) {
  std::vector<size_t> pivots;
  size_t pr = 0;
  for (size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
    size_t sel = pr;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pr, j));
    GaussRat inv = GaussRat(Rat(1)) / m.at(pr, col);
    for (size_t j = col; j < m.cols(); ++j) m.at(pr, j) = m.at(pr, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == pr || m.at(i, col).is_zero()) continue;
      GaussRat f = m.at(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(pr, j);
    }
    pivots.push_back(col);
    ++pr;
  }
  // Drop zero rows.
  Matrix out(pivots.size(), m.cols());
  for (size_t i = 0; i < pivots.size(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  m = out;
  return pivots;
}

Matrix rref(Matrix m) {
  rref_in_place(m);
  return m;
}

size_t rank(Matrix m) { return rref_in_place(m).size(); }

Matrix kernel(const Matrix& m) {
  Matrix r = m;
  std::vector<size_t> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = GaussRat(Rat(1));
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  Matrix k = Matrix::from_rows(basis, m.cols());
  rref_in_place(k);
  return k;
}

Matrix row_space(const Matrix& m) { return rref(m); }

Matrix intersect_rows(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0 || b.rows() == 0) return Matrix(0, a.cols());
  require(a.cols() == b.cols(), Err::DIM_MISMATCH, "intersect");
  // Solve alpha^T a - beta^T b = 0: kernel of [a^T | -b^T].
  size_t n = a.cols();
  Matrix sys(n, a.rows() + b.rows());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < a.rows(); ++j) sys.at(i, j) = a.at(j, i);
    for (size_t j = 0; j < b.rows(); ++j)
      sys.at(i, a.rows() + j) = -b.at(j, i);
  }
  Matrix k = kernel(sys);
  std::vector<Vec> rows;
  for (size_t i = 0; i < k.rows(); ++i) {
    Vec v(n);
    for (size_t j = 0; j < a.rows(); ++j)
      if (!k.at(i, j).is_zero())
        v = vec_add(v, vec_scale(k.at(i, j), a.row(j)));
    rows.push_back(std::move(v));
  }
  Matrix res = Matrix::from_rows(rows, n);
  rref_in_place(res);
  return res;
}

bool rows_contained(const Matrix& sub, const Matrix& ambient) {
  Matrix r = rref(ambient);
  std::vector<size_t> pivots;
  {
    Matrix tmp = ambient;
    pivots = rref_in_place(tmp);
  }
  for (size_t i = 0; i < sub.rows(); ++i) {
    Vec v = sub.row(i);
    for (size_t p = 0; p < pivots.size(); ++p) {
      const GaussRat& c = v[pivots[p]];
      if (!c.is_zero()) v = vec_sub(v, vec_scale(c, r.row(p)));
    }
    if (!vec_is_zero(v)) return false;
  }
  return true;
}

Matrix inverse(const Matrix& m) {
  require(m.rows() == m.cols(), Err::DIM_MISMATCH, "inverse of non-square");
  size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = GaussRat(Rat(1));
  }
  std::vector<size_t> pivots = rref_in_place(aug);
  require(pivots.size() == n && pivots[n - 1] == n - 1, Err::SINGULAR,
          "matrix not invertible");
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& v) {
  require(m.rows() == v.size(), Err::DIM_MISMATCH, "solve");
  Matrix aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = v[i];
  }
  std::vector<size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

CoordSolver::CoordSolver(const Matrix& basis_rows)
    : n_basis_(basis_rows.rows()), dim_(basis_rows.cols()) {
  // rref of [basis^T | I_dim]; the right block records the row operations.
  Matrix aug(dim_, n_basis_ + dim_);
  for (size_t i = 0; i < dim_; ++i) {
    for (size_t j = 0; j < n_basis_; ++j) aug.at(i, j) = basis_rows.at(j, i);
    aug.at(i, n_basis_ + i) = GaussRat(Rat(1));
  }
  // Restrict pivoting to the basis^T block so the transform part stays intact.
  size_t pr = 0;
  for (size_t col = 0; col < n_basis_ && pr < dim_; ++col) {
    size_t sel = pr;
    while (sel < dim_ && aug.at(sel, col).is_zero()) ++sel;
    if (sel == dim_) continue;
    if (sel != pr)
      for (size_t j = 0; j < aug.cols(); ++j)
        std::swap(aug.at(sel, j), aug.at(pr, j));
    GaussRat inv = GaussRat(Rat(1)) / aug.at(pr, col);
    for (size_t j = 0; j < aug.cols(); ++j)
      aug.at(pr, j) = aug.at(pr, j) * inv;
    for (size_t i = 0; i < dim_; ++i) {
      if (i == pr || aug.at(i, col).is_zero()) continue;
      GaussRat f = aug.at(i, col);
      for (size_t j = 0; j < aug.cols(); ++j)
        aug.at(i, j) -= f * aug.at(pr, j);
    }
    pivots_.push_back(col);
    ++pr;
  }
  red_ = aug;
}

std::optional<Vec> CoordSolver::coords(const Vec& v) const {
  require(v.size() == dim_, Err::DIM_MISMATCH, "coords");
  // Apply the recorded transform T (right block) to v.
  Vec tv(dim_);
  for (size_t i = 0; i < dim_; ++i) {
    GaussRat acc;
    for (size_t j = 0; j < dim_; ++j) {
      const GaussRat& t = red_.at(i, n_basis_ + j);
      if (!t.is_zero() && !v[j].is_zero()) acc += t * v[j];
    }
    tv[i] = acc;
  }
  Vec c(n_basis_);
  for (size_t i = 0; i < pivots_.size(); ++i) c[pivots_[i]] = tv[i];
  for (size_t i = pivots_.size(); i < dim_; ++i)
    if (!tv[i].is_zero()) return std::nullopt;
  return c;
}

Signature symmetric_signature(Matrix m) {
  require(m.rows() == m.cols(), Err::NON_SYMMETRIC, "not square");
  require(m.is_real(), Err::NON_SYMMETRIC, "complex entries");
  require(m.is_symmetric(), Err::NON_SYMMETRIC, "matrix not symmetric");
  size_t n = m.rows();
  Signature sig;
  auto add_sym = [&](size_t dst, size_t src, const Rat& f) {
    // row_dst += f row_src; col_dst += f col_src
    for (size_t j = 0; j < n; ++j) m.at(dst, j) += GaussRat(f) * m.at(src, j);
    for (size_t i = 0; i < n; ++i) m.at(i, dst) += GaussRat(f) * m.at(i, src);
  };
  auto swap_sym = [&](size_t a, size_t b) {
    for (size_t j = 0; j < n; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (size_t i = 0; i < n; ++i) std::swap(m.at(i, a), m.at(i, b));
  };
  for (size_t i = 0; i < n; ++i) {
    if (m.at(i, i).is_zero()) {
      size_t j = i + 1;
      for (; j < n; ++j)
        if (!m.at(j, j).is_zero()) break;
      if (j < n) {
        swap_sym(i, j);
      } else {
        for (j = i + 1; j < n; ++j)
          if (!m.at(i, j).is_zero()) break;
        if (j == n) {
          ++sig.n_zero;
          continue;
        }
        add_sym(i, j, Rat(1));
      }
    }
    Rat d = m.at(i, i).re;
    if (d > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
    for (size_t j = i + 1; j < n; ++j) {
      if (m.at(j, i).is_zero()) continue;
      Rat f = -(m.at(j, i).re / d);
      add_sym(j, i, f);
    }
  }
  return sig;
}

namespace {

// Minimal polynomial of m relative to a single seed vector.
Poly krylov_minpoly(const Matrix& m, const Vec& seed, Matrix& accum_span) {
  // Build the chain v, Mv, ... until linear dependence.
  std::vector<Vec> chain;
  Matrix span(0, seed.size());
  Vec v = seed;
  while (true) {
    Matrix test = span.vstack(Matrix::from_rows({v}, v.size()));
    if (rank(test) == span.rows()) break;  // v dependent on chain
    chain.push_back(v);
    span = rref(test);
    v = m * v;
  }
  // Solve v = sum c_j chain_j.
  Matrix chain_m = Matrix::from_rows(chain, seed.size());
  CoordSolver cs(chain_m);
  auto c = cs.coords(v);
  require(c.has_value(), Err::INTERNAL, "krylov dependency");
  Poly p(chain.size() + 1, Rat(0));
  p[chain.size()] = Rat(1);
  for (size_t j = 0; j < chain.size(); ++j) {
    require((*c)[j].is_real(), Err::INTERNAL, "complex krylov");
    p[j] = -(*c)[j].re;
  }
  // Extend the accumulated span with the chain.
  accum_span = rref(accum_span.vstack(chain_m));
  return p;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (poly_deg(a) < 0) return poly_monic(b);
  if (poly_deg(b) < 0) return poly_monic(a);
  Poly g = poly_gcd(a, b);
  Poly q, r;
  poly_divmod(a, g, q, r);
  return poly_monic(poly_mul(q, b));
}

}  // namespace

Poly minimal_polynomial(const Matrix& m) {
  require(m.rows() == m.cols(), Err::DIM_MISMATCH, "minpoly of non-square");
  require(m.is_real(), Err::UNSUPPORTED, "minpoly needs real matrix");
  size_t n = m.rows();
  if (n == 0) return {Rat(1)};
  Matrix span(0, n);
  Poly mp;  // zero polynomial = identity for lcm
  for (size_t i = 0; i < n && span.rows() < n; ++i) {
    Vec seed(n);
    seed[i] = GaussRat(Rat(1));
    // Skip seeds already inside the accumulated Krylov span.
    if (span.rows() > 0 &&
        rank(span.vstack(Matrix::from_rows({seed}, n))) == span.rows())
      continue;
    Poly local = krylov_minpoly(m, seed, span);
    mp = poly_lcm(mp, local);
  }
  return poly_monic(mp);
}

Matrix poly_kernel(const Matrix& m, const Poly& p) {
  size_t n = m.rows();
  Matrix acc(n, n);
  int d = poly_deg(p);
  if (d < 0) return Matrix::identity(n);  // zero polynomial kills everything
  acc = Matrix::identity(n) * GaussRat(p[d]);
  for (int k = d - 1; k >= 0; --k) {
    acc = m * acc;
    if (p[k] != 0) acc = acc + Matrix::identity(n) * GaussRat(p[k]);
  }
  return kernel(acc);
}

EigenReport eigenspaces(const Matrix& m, const std::vector<Rat>& candidates) {
  EigenReport rep;
  size_t total = 0;
  std::vector<Rat> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Rat& c : sorted) {
    Matrix shifted = m - Matrix::identity(m.rows()) * GaussRat(c);
    Matrix k = kernel(shifted);
    if (k.rows() > 0) {
      total += k.rows();
      rep.spaces.emplace_back(c, std::move(k));
    }
  }
  rep.spans = (total == m.rows());
  return rep;
}

Matrix conjugate(const Matrix& m, const Matrix& c, const Matrix& c_inv) {
  return c_inv * m * c;
}

IntMatrix hermite_normal_form(IntMatrix m) {
  size_t pr = 0;
  for (size_t col = 0; col < m.cols && pr < m.rows; ++col) {
    // Gather rows >= pr with nonzero entry in this column.
    bool any = false;
    for (size_t i = pr; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        any = true;
        break;
      }
    if (!any) continue;
    // Euclidean reduction down the column.
    while (true) {
      size_t best = SIZE_MAX;
      for (size_t i = pr; i < m.rows; ++i) {
        if (m.at(i, col) == 0) continue;
        if (best == SIZE_MAX ||
            cmp(abs(m.at(i, col)), abs(m.at(best, col))) < 0)
          best = i;
      }
      if (best != pr)
        for (size_t j = 0; j < m.cols; ++j)
          std::swap(m.at(best, j), m.at(pr, j));
      bool done = true;
      for (size_t i = pr + 1; i < m.rows; ++i) {
        if (m.at(i, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(),
                   m.at(pr, col).get_mpz_t());
        for (size_t j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(pr, j);
        if (m.at(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m.at(pr, col) < 0)
      for (size_t j = 0; j < m.cols; ++j) m.at(pr, j) = -m.at(pr, j);
    // Reduce entries above the pivot into [0, pivot).
    for (size_t i = 0; i < pr; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(),
                 m.at(pr, col).get_mpz_t());
      if (q != 0)
        for (size_t j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(pr, j);
    }
    ++pr;
  }
  IntMatrix out;
  out.rows = pr;
  out.cols = m.cols;
  out.e.resize(pr * m.cols);
  for (size_t i = 0; i < pr; ++i)
    for (size_t j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

}  // namespace liedual
