#include "liedual/lie.hpp"

#include <algorithm>
#include <random>

namespace liedual {

namespace {

Vec unit_vec(int dim, int i) {
  Vec v(static_cast<size_t>(dim));
  v[static_cast<size_t>(i)] = GaussRat(1);
  return v;
}

// Adds coeff * [[e_a, e_b], e_c] to acc using only table lookups.
void add_triple_bracket(const SCTable& table, Vec& acc, int a, int b, int c) {
  auto pair_entry = [&table](int i, int j) -> std::pair<const SCEntry*, int> {
    if (i == j) return {nullptr, 0};
    if (i < j) {
      auto it = table.find({i, j});
      return {it == table.end() ? nullptr : &it->second, 1};
    }
    auto it = table.find({j, i});
    return {it == table.end() ? nullptr : &it->second, -1};
  };
  auto [ab, sign_ab] = pair_entry(a, b);
  if (ab == nullptr) return;
  for (const auto& [m, cm] : *ab) {
    auto [mc, sign_mc] = pair_entry(m, c);
    if (mc == nullptr) continue;
    Rat factor = cm * sign_ab * sign_mc;
    for (const auto& [t, ct] : *mc) {
      acc[static_cast<size_t>(t)] += GaussRat(factor * ct);
    }
  }
}

void check_jacobi_triple(const SCTable& table, int dim, int i, int j, int k) {
  Vec acc(static_cast<size_t>(dim));
  add_triple_bracket(table, acc, i, j, k);
  add_triple_bracket(table, acc, j, k, i);
  add_triple_bracket(table, acc, k, i, j);
  require(vec_is_zero(acc), Err::MALFORMED, "structure constants violate the Jacobi identity");
}

}  // namespace

LieAlgebra LieAlgebra::from_sc(int dim, SCTable table, std::optional<Ambient> ambient) {
  require(dim >= 0, Err::MALFORMED, "negative dimension");
  for (const auto& [key, entry] : table) {
    auto [i, j] = key;
    require(0 <= i && i < j && j < dim, Err::MALFORMED, "bad structure constant index pair");
    require(!entry.empty(), Err::MALFORMED, "empty structure constant entry");
    int prev = -1;
    for (const auto& [k, c] : entry) {
      require(k > prev && k < dim, Err::MALFORMED, "structure constant coordinates must be sorted and in range");
      require(c != 0, Err::MALFORMED, "zero structure constant stored");
      prev = k;
    }
  }

  // Jacobi identity: exhaustive on every basis triple in moderate dimension,
  // a fixed-seed random sample of triples beyond that.
  if (dim <= 30) {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) check_jacobi_triple(table, dim, i, j, k);
  } else {
    std::mt19937 rng(12345u);
    std::uniform_int_distribution<int> pick(0, dim - 1);
    for (int trial = 0; trial < 4000; ++trial) {
      int i = pick(rng), j = pick(rng), k = pick(rng);
      if (i == j || j == k || i == k) continue;
      check_jacobi_triple(table, dim, i, j, k);
    }
  }

  if (ambient.has_value()) {
    require(static_cast<int>(ambient->basis.size()) == dim, Err::MALFORMED,
            "ambient basis size differs from dimension");
    size_t n = static_cast<size_t>(ambient->n);
    for (const Matrix& m : ambient->basis)
      require(m.rows() == n && m.cols() == n, Err::MALFORMED, "ambient matrices must be square of the stated size");
    for (int i = 0; i < dim; ++i) {
      for (int j = i + 1; j < dim; ++j) {
        const Matrix& a = ambient->basis[static_cast<size_t>(i)];
        const Matrix& b = ambient->basis[static_cast<size_t>(j)];
        Matrix want = a * b - b * a;
        Matrix got(n, n);
        auto it = table.find({i, j});
        if (it != table.end())
          for (const auto& [k, c] : it->second)
            got = got + ambient->basis[static_cast<size_t>(k)] * GaussRat(c);
        require(want == got, Err::MALFORMED, "ambient matrices do not realize the structure constants");
      }
    }
  }

  LieAlgebra g;
  g.dim_ = dim;
  g.table_ = std::move(table);
  g.ambient_ = std::move(ambient);

  g.ads_.reserve(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    Matrix m(static_cast<size_t>(dim), static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      Vec col = g.bracket_basis(i, j);
      for (int r = 0; r < dim; ++r)
        m.at(static_cast<size_t>(r), static_cast<size_t>(j)) = col[static_cast<size_t>(r)];
    }
    g.ads_.push_back(std::move(m));
  }

  // Killing form via the sparsity of the adjoint matrices:
  // B(i, j) = tr(ad_i ad_j) = sum over nonzero (a, b) of ad_i of
  // ad_i[a, b] * ad_j[b, a].
  std::vector<std::vector<std::pair<std::pair<size_t, size_t>, GaussRat>>> nz(
      static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i)
    for (size_t a = 0; a < static_cast<size_t>(dim); ++a)
      for (size_t b = 0; b < static_cast<size_t>(dim); ++b) {
        const GaussRat& v = g.ads_[static_cast<size_t>(i)].at(a, b);
        if (!v.is_zero()) nz[static_cast<size_t>(i)].push_back({{a, b}, v});
      }
  Matrix killing(static_cast<size_t>(dim), static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      GaussRat s;
      for (const auto& [ab, v] : nz[static_cast<size_t>(i)])
        s += v * g.ads_[static_cast<size_t>(j)].at(ab.second, ab.first);
      killing.at(static_cast<size_t>(i), static_cast<size_t>(j)) = s;
      killing.at(static_cast<size_t>(j), static_cast<size_t>(i)) = s;
    }
  g.killing_ = std::move(killing);
  return g;
}

bool LieAlgebra::is_semisimple() const {
  return rank(killing_) == static_cast<size_t>(dim_);
}

bool LieAlgebra::is_compact_semisimple() const {
  if (!killing_.is_real()) return false;
  Signature s = symmetric_signature(killing_);
  return s.n_plus == 0 && s.n_zero == 0;
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  Vec v(static_cast<size_t>(dim_));
  if (i == j) return v;
  int sign = 1, a = i, b = j;
  if (a > b) {
    std::swap(a, b);
    sign = -1;
  }
  auto it = table_.find({a, b});
  if (it == table_.end()) return v;
  for (const auto& [k, c] : it->second)
    v[static_cast<size_t>(k)] = GaussRat(sign == 1 ? c : Rat(-c));
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  require(x.size() == static_cast<size_t>(dim_) && y.size() == static_cast<size_t>(dim_),
          Err::DIM_MISMATCH, "bracket operand size");
  Vec res(static_cast<size_t>(dim_));
  for (const auto& [key, entry] : table_) {
    size_t i = static_cast<size_t>(key.first), j = static_cast<size_t>(key.second);
    GaussRat cij = x[i] * y[j] - x[j] * y[i];
    if (cij.is_zero()) continue;
    for (const auto& [k, c] : entry) res[static_cast<size_t>(k)] += cij * GaussRat(c);
  }
  return res;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  require(x.size() == static_cast<size_t>(dim_), Err::DIM_MISMATCH, "ad operand size");
  Matrix m(static_cast<size_t>(dim_), static_cast<size_t>(dim_));
  for (int i = 0; i < dim_; ++i)
    if (!x[static_cast<size_t>(i)].is_zero()) m = m + ads_[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
  return m;
}

namespace {

// Fixpoint growth: keep appending the supplied products of current basis
// rows until the span stabilizes.
Matrix closure_fixpoint(const LieAlgebra& g, const Matrix& seed_rows, bool ideal) {
  Matrix cur = row_space(seed_rows);
  while (true) {
    std::vector<Vec> extra;
    CoordSolver cs(cur);
    if (ideal) {
      for (int i = 0; i < g.dim(); ++i)
        for (size_t r = 0; r < cur.rows(); ++r) {
          Vec v = g.ad_basis(i) * cur.row(r);
          if (!vec_is_zero(v) && !cs.contains(v)) extra.push_back(v);
        }
    } else {
      for (size_t a = 0; a < cur.rows(); ++a)
        for (size_t b = a + 1; b < cur.rows(); ++b) {
          Vec v = g.bracket(cur.row(a), cur.row(b));
          if (!vec_is_zero(v) && !cs.contains(v)) extra.push_back(v);
        }
    }
    if (extra.empty()) return cur;
    Matrix stacked = cur.vstack(Matrix::from_rows(extra, static_cast<size_t>(g.dim())));
    cur = row_space(stacked);
  }
}

}  // namespace

Matrix subalgebra_closure(const LieAlgebra& g, const Matrix& seed_rows) {
  return closure_fixpoint(g, seed_rows, false);
}

Matrix ideal_closure(const LieAlgebra& g, const Matrix& seed_rows) {
  return closure_fixpoint(g, seed_rows, true);
}

Matrix center(const LieAlgebra& g) {
  size_t d = static_cast<size_t>(g.dim());
  Matrix stacked(0, d);
  for (int i = 0; i < g.dim(); ++i) stacked = stacked.vstack(g.ad_basis(i));
  return kernel(stacked);
}

Matrix derived_subalgebra(const LieAlgebra& g) {
  std::vector<Vec> rows;
  for (const auto& [key, entry] : g.table()) {
    (void)entry;
    rows.push_back(g.bracket_basis(key.first, key.second));
  }
  if (rows.empty()) return Matrix(0, static_cast<size_t>(g.dim()));
  return row_space(Matrix::from_rows(rows, static_cast<size_t>(g.dim())));
}

Matrix centralizer(const LieAlgebra& g, const Matrix& rows) {
  size_t d = static_cast<size_t>(g.dim());
  require(rows.cols() == d, Err::DIM_MISMATCH, "centralizer row length");
  Matrix stacked(0, d);
  for (size_t r = 0; r < rows.rows(); ++r) stacked = stacked.vstack(g.ad(rows.row(r)));
  if (stacked.rows() == 0) return rref(Matrix::identity(d));
  return kernel(stacked);
}

bool is_bracket_closed(const LieAlgebra& g, const Matrix& rows) {
  CoordSolver cs(rows);
  for (size_t a = 0; a < rows.rows(); ++a)
    for (size_t b = a + 1; b < rows.rows(); ++b)
      if (!cs.contains(g.bracket(rows.row(a), rows.row(b)))) return false;
  return true;
}

LieAlgebra induced_on(const LieAlgebra& g, const Matrix& rows) {
  require(rows.cols() == static_cast<size_t>(g.dim()), Err::DIM_MISMATCH, "subspace row length");
  CoordSolver cs(rows);
  int k = static_cast<int>(rows.rows());
  SCTable table;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      Vec v = g.bracket(rows.row(static_cast<size_t>(a)), rows.row(static_cast<size_t>(b)));
      auto coords = cs.coords(v);
      require(coords.has_value(), Err::NOT_IN_SPAN, "subspace is not closed under the bracket");
      SCEntry entry;
      for (int t = 0; t < k; ++t) {
        const GaussRat& c = (*coords)[static_cast<size_t>(t)];
        if (c.is_zero()) continue;
        require(c.is_real(), Err::INTERNAL, "complex structure constants");
        entry.push_back({t, c.re});
      }
      if (!entry.empty()) table[{a, b}] = std::move(entry);
    }
  std::optional<Ambient> amb;
  if (g.ambient().has_value()) {
    Ambient sub;
    sub.n = g.ambient()->n;
    for (int a = 0; a < k; ++a) {
      Matrix m(static_cast<size_t>(sub.n), static_cast<size_t>(sub.n));
      for (int t = 0; t < g.dim(); ++t) {
        const GaussRat& c = rows.at(static_cast<size_t>(a), static_cast<size_t>(t));
        if (!c.is_zero()) m = m + g.ambient()->basis[static_cast<size_t>(t)] * c;
      }
      sub.basis.push_back(std::move(m));
    }
    amb = std::move(sub);
  }
  return LieAlgebra::from_sc(k, std::move(table), std::move(amb));
}

Matrix generating_rows(const LieAlgebra& g) {
  size_t d = static_cast<size_t>(g.dim());
  std::vector<Vec> gens;
  if (d == 0) return Matrix(0, 0);
  gens.push_back(unit_vec(g.dim(), 0));
  Matrix closed = subalgebra_closure(g, Matrix::from_rows(gens, d));
  while (closed.rows() < d) {
    CoordSolver cs(closed);
    for (int i = 0; i < g.dim(); ++i) {
      Vec u = unit_vec(g.dim(), i);
      if (!cs.contains(u)) {
        gens.push_back(u);
        break;
      }
    }
    closed = subalgebra_closure(g, Matrix::from_rows(gens, d));
  }
  return Matrix::from_rows(gens, d);
}

std::vector<Matrix> commutant_basis(const LieAlgebra& g) {
  size_t d = static_cast<size_t>(g.dim());
  if (d == 0) return {};
  Matrix gens = generating_rows(g);
  // Unknown T flattened row-major; equations (T A - A T)[a][b] = 0 for the
  // adjoint matrix A of every generator.
  std::vector<Vec> eq_rows;
  for (size_t r = 0; r < gens.rows(); ++r) {
    Matrix a = g.ad(gens.row(r));
    for (size_t p = 0; p < d; ++p)
      for (size_t q = 0; q < d; ++q) {
        Vec row(d * d);
        for (size_t c = 0; c < d; ++c) {
          row[p * d + c] += a.at(c, q);        // T[p][c] A[c][q]
          row[c * d + q] -= a.at(p, c);        // - A[p][c] T[c][q]
        }
        if (!vec_is_zero(row)) eq_rows.push_back(std::move(row));
      }
  }
  Matrix sys = eq_rows.empty() ? Matrix(0, d * d) : Matrix::from_rows(eq_rows, d * d);
  Matrix ker = kernel(sys);
  std::vector<Matrix> out;
  for (size_t r = 0; r < ker.rows(); ++r) {
    Matrix t(d, d);
    for (size_t p = 0; p < d; ++p)
      for (size_t q = 0; q < d; ++q) t.at(p, q) = ker.at(r, p * d + q);
    out.push_back(std::move(t));
  }
  return out;
}

int centroid_dim(const LieAlgebra& g) {
  return static_cast<int>(commutant_basis(g).size());
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  int da = a.dim(), db = b.dim();
  SCTable table = a.table();
  for (const auto& [key, entry] : b.table()) {
    SCEntry shifted;
    for (const auto& [k, c] : entry) shifted.push_back({k + da, c});
    table[{key.first + da, key.second + da}] = std::move(shifted);
  }
  std::optional<Ambient> amb;
  if (a.ambient().has_value() && b.ambient().has_value()) {
    Ambient s;
    s.n = a.ambient()->n + b.ambient()->n;
    size_t na = static_cast<size_t>(a.ambient()->n);
    size_t n = static_cast<size_t>(s.n);
    for (const Matrix& m : a.ambient()->basis) {
      Matrix e(n, n);
      for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j) e.at(i, j) = m.at(i, j);
      s.basis.push_back(std::move(e));
    }
    for (const Matrix& m : b.ambient()->basis) {
      Matrix e(n, n);
      for (size_t i = na; i < n; ++i)
        for (size_t j = na; j < n; ++j) e.at(i, j) = m.at(i - na, j - na);
      s.basis.push_back(std::move(e));
    }
    amb = std::move(s);
  }
  return LieAlgebra::from_sc(da + db, std::move(table), std::move(amb));
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& new_rows) {
  size_t d = static_cast<size_t>(g.dim());
  require(new_rows.rows() == d && new_rows.cols() == d, Err::DIM_MISMATCH, "basis change must be square");
  require(rank(new_rows) == d, Err::SINGULAR, "basis change must be invertible");
  CoordSolver cs(new_rows);
  SCTable table;
  for (size_t a = 0; a < d; ++a)
    for (size_t b = a + 1; b < d; ++b) {
      Vec v = g.bracket(new_rows.row(a), new_rows.row(b));
      auto coords = cs.coords(v);
      require(coords.has_value(), Err::INTERNAL, "full-space coordinates missing");
      SCEntry entry;
      for (size_t t = 0; t < d; ++t) {
        const GaussRat& c = (*coords)[t];
        if (c.is_zero()) continue;
        require(c.is_real(), Err::INTERNAL, "complex structure constants");
        entry.push_back({static_cast<int>(t), c.re});
      }
      if (!entry.empty()) table[{static_cast<int>(a), static_cast<int>(b)}] = std::move(entry);
    }
  std::optional<Ambient> amb;
  if (g.ambient().has_value()) {
    Ambient s;
    s.n = g.ambient()->n;
    for (size_t a = 0; a < d; ++a) {
      Matrix m(static_cast<size_t>(s.n), static_cast<size_t>(s.n));
      for (size_t t = 0; t < d; ++t) {
        const GaussRat& c = new_rows.at(a, t);
        if (!c.is_zero()) m = m + g.ambient()->basis[t] * c;
      }
      s.basis.push_back(std::move(m));
    }
    amb = std::move(s);
  }
  return LieAlgebra::from_sc(static_cast<int>(d), std::move(table), std::move(amb));
}

Matrix operator_in_basis(const Matrix& op, const Matrix& new_rows) {
  Matrix c = new_rows.transpose();
  return conjugate(op, c, inverse(c));
}

Matrix restrict_operator(const Matrix& op, const Matrix& rows) {
  require(op.cols() == rows.cols(), Err::DIM_MISMATCH, "operator and subspace sizes differ");
  CoordSolver cs(rows);
  size_t k = rows.rows();
  Matrix out(k, k);
  for (size_t j = 0; j < k; ++j) {
    Vec img = op * rows.row(j);
    auto coords = cs.coords(img);
    require(coords.has_value(), Err::NOT_INVARIANT, "subspace is not stable under the operator");
    for (size_t i = 0; i < k; ++i) out.at(i, j) = (*coords)[i];
  }
  return out;
}

}  // namespace liedual
