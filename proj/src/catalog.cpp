#include "liedual/catalog.hpp"

#include <utility>

#include "liedual/duality.hpp"

namespace liedual {

namespace {

Matrix elem(int n, int i, int j) {
  Matrix m(static_cast<size_t>(n), static_cast<size_t>(n));
  m.at(static_cast<size_t>(i), static_cast<size_t>(j)) = GaussRat(1);
  return m;
}

// Real flattening of a complex matrix: all real parts row-major, then all
// imaginary parts. Real-linear spans become rational row spaces.
Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(2 * m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v.push_back(GaussRat(m.at(i, j).re));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v.push_back(GaussRat(m.at(i, j).im));
  return v;
}

Matrix flat_rows(const std::vector<Matrix>& basis) {
  require(!basis.empty(), Err::BAD_PARAMS, "empty ambient basis");
  std::vector<Vec> rows;
  rows.reserve(basis.size());
  for (const Matrix& b : basis) rows.push_back(flatten(b));
  return Matrix::from_rows(rows, 2 * basis[0].rows() * basis[0].cols());
}

AmbientMap ad_by(Matrix m, Matrix minv) {
  return [m = std::move(m), minv = std::move(minv)](const Matrix& x) { return m * x * minv; };
}

AmbientMap conj_map() {
  return [](const Matrix& x) { return x.conj(); };
}

AmbientMap neg_transpose() {
  return [](const Matrix& x) { return -x.transpose(); };
}

AmbientMap neg_transpose_twisted(Matrix ipq) {
  return [ipq = std::move(ipq)](const Matrix& x) { return -(ipq * x.transpose() * ipq); };
}

AmbientMap compose_maps(AmbientMap f, AmbientMap g) {
  return [f = std::move(f), g = std::move(g)](const Matrix& x) { return f(g(x)); };
}

AmbientMap adI(const std::vector<int>& signs) {
  Matrix d = Matrix::diag_signs(signs);
  return ad_by(d, d);
}

AmbientMap adJm(int m) {
  Matrix j = rot_J(m);
  return ad_by(j, -j);
}

AmbientMap adJpq(int p, int q) {
  Matrix j = jpq_matrix(p, q);
  return ad_by(j, -j);
}

Fixture make_fixture(const std::string& name, const std::string& kind,
                     const std::string& description, const std::vector<Matrix>& basis,
                     const std::vector<std::pair<std::string, AmbientMap>>& invs,
                     int ambient_n) {
  Fixture f;
  f.name = name;
  f.kind = kind;
  f.description = description;
  f.g = algebra_from_ambient(basis);
  for (const auto& [slot, map] : invs)
    f.involutions.emplace_back(slot, operator_from_ambient(basis, map));
  f.ambient_n = ambient_n;
  // Full validation: involutive automorphisms, commuting, and the
  // kind-specific requirement (compactness / Cartan property).
  if (kind == "triad") {
    (void)as_triad(f);
  } else {
    (void)as_pair(f);
  }
  return f;
}

}  // namespace

std::vector<Matrix> so_ambient_basis(int n) {
  require(n >= 2, Err::BAD_PARAMS, "skew-symmetric family needs size >= 2");
  std::vector<Matrix> out;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) out.push_back(elem(n, j, k) - elem(n, k, j));
  return out;
}

std::vector<Matrix> sopq_ambient_basis(int p, int q) {
  require(p >= 1 && q >= 1, Err::BAD_PARAMS, "indefinite family needs positive block sizes");
  int n = p + q;
  std::vector<int> sgn(static_cast<size_t>(n), 1);
  for (int i = p; i < n; ++i) sgn[static_cast<size_t>(i)] = -1;
  std::vector<Matrix> out;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      if (sgn[static_cast<size_t>(j)] == sgn[static_cast<size_t>(k)])
        out.push_back(elem(n, j, k) - elem(n, k, j));
      else
        out.push_back(elem(n, j, k) + elem(n, k, j));
    }
  }
  return out;
}

std::vector<Matrix> su_ambient_basis(int n) {
  require(n >= 2, Err::BAD_PARAMS, "special unitary family needs size >= 2");
  std::vector<Matrix> out;
  for (int k = 0; k + 1 < n; ++k)
    out.push_back((elem(n, k, k) - elem(n, k + 1, k + 1)) * gauss_i());
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) out.push_back(elem(n, j, k) - elem(n, k, j));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) out.push_back((elem(n, j, k) + elem(n, k, j)) * gauss_i());
  return out;
}

std::vector<Matrix> sl_ambient_basis(int n) {
  require(n >= 2, Err::BAD_PARAMS, "special linear family needs size >= 2");
  std::vector<Matrix> out;
  for (int k = 0; k + 1 < n; ++k) out.push_back(elem(n, k, k) - elem(n, k + 1, k + 1));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (j != k) out.push_back(elem(n, j, k));
  return out;
}

std::vector<Matrix> gl_ambient_basis(int n) {
  require(n >= 1, Err::BAD_PARAMS, "general linear family needs size >= 1");
  std::vector<Matrix> out;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) out.push_back(elem(n, j, k));
  return out;
}

std::vector<Matrix> dsum_ambient_basis(const std::vector<std::vector<Matrix>>& blocks) {
  require(!blocks.empty(), Err::BAD_PARAMS, "empty block list");
  size_t n = 0;
  for (const auto& b : blocks) {
    require(!b.empty(), Err::BAD_PARAMS, "empty block basis");
    n += b[0].rows();
  }
  std::vector<Matrix> out;
  size_t off = 0;
  for (const auto& b : blocks) {
    size_t s = b[0].rows();
    for (const Matrix& m : b) {
      Matrix e(n, n);
      for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) e.at(off + i, off + j) = m.at(i, j);
      out.push_back(std::move(e));
    }
    off += s;
  }
  return out;
}

Matrix rot_J(int m) {
  require(m >= 1, Err::BAD_PARAMS, "rotation block needs positive size");
  size_t n = 2 * static_cast<size_t>(m);
  Matrix out(n, n);
  for (size_t i = 0; i < static_cast<size_t>(m); ++i) {
    out.at(i, static_cast<size_t>(m) + i) = GaussRat(-1);
    out.at(static_cast<size_t>(m) + i, i) = GaussRat(1);
  }
  return out;
}

Matrix ipq_matrix(int m, int n) {
  require(m >= 1 && n >= 1, Err::BAD_PARAMS, "signature blocks must be positive");
  std::vector<int> signs(static_cast<size_t>(m), 1);
  signs.insert(signs.end(), static_cast<size_t>(n), -1);
  return Matrix::diag_signs(signs);
}

Matrix jpq_matrix(int p, int q) {
  require(p >= 1 && q >= 1, Err::BAD_PARAMS, "rotation blocks must be positive");
  size_t n = 2 * static_cast<size_t>(p + q);
  Matrix out(n, n);
  Matrix jp = rot_J(p);
  for (size_t i = 0; i < jp.rows(); ++i)
    for (size_t j = 0; j < jp.cols(); ++j) out.at(i, j) = jp.at(i, j);
  Matrix jq = rot_J(q);
  size_t off = 2 * static_cast<size_t>(p);
  for (size_t i = 0; i < jq.rows(); ++i)
    for (size_t j = 0; j < jq.cols(); ++j) out.at(off + i, off + j) = jq.at(i, j);
  return out;
}

Matrix jprime_matrix(int m) {
  require(m >= 1, Err::BAD_PARAMS, "exchange block needs positive size");
  size_t n = 2 * static_cast<size_t>(m);
  Matrix out(n, n);
  for (size_t i = 0; i < static_cast<size_t>(m); ++i) {
    out.at(i, static_cast<size_t>(m) + i) = GaussRat(1);
    out.at(static_cast<size_t>(m) + i, i) = GaussRat(1);
  }
  return out;
}

Matrix iprime_matrix(int p, int q) {
  require(p >= 1 && q >= 1, Err::BAD_PARAMS, "blocks must be positive");
  size_t n = 2 * static_cast<size_t>(p + q);
  Matrix out(n, n);
  for (size_t i = 0; i < 2 * static_cast<size_t>(p); ++i) out.at(i, i) = GaussRat(1);
  for (size_t i = 2 * static_cast<size_t>(p); i < n; ++i) out.at(i, i) = -gauss_i();
  return out;
}

Matrix block_perm_matrix(const std::vector<int>& block_sizes, const std::vector<int>& perm) {
  require(block_sizes.size() == perm.size(), Err::BAD_PARAMS,
          "block count and permutation length differ");
  size_t n = 0;
  std::vector<size_t> offs;
  for (int s : block_sizes) {
    require(s >= 1, Err::BAD_PARAMS, "block sizes must be positive");
    offs.push_back(n);
    n += static_cast<size_t>(s);
  }
  Matrix m(n, n);
  for (size_t t = 0; t < perm.size(); ++t) {
    int pt = perm[t];
    require(pt >= 0 && static_cast<size_t>(pt) < perm.size(), Err::BAD_PARAMS,
            "permutation entry out of range");
    require(block_sizes[static_cast<size_t>(pt)] == block_sizes[t], Err::BAD_PARAMS,
            "permuted blocks must have equal sizes");
    for (size_t i = 0; i < static_cast<size_t>(block_sizes[t]); ++i)
      m.at(offs[static_cast<size_t>(pt)] + i, offs[t] + i) = GaussRat(1);
  }
  return m;
}

LieAlgebra algebra_from_ambient(const std::vector<Matrix>& basis) {
  Matrix fr = flat_rows(basis);
  require(rank(fr) == basis.size(), Err::MALFORMED, "ambient matrices are linearly dependent");
  CoordSolver solver(fr);
  int dim = static_cast<int>(basis.size());
  SCTable table;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const Matrix& a = basis[static_cast<size_t>(i)];
      const Matrix& b = basis[static_cast<size_t>(j)];
      Matrix br = a * b - b * a;
      std::optional<Vec> c = solver.coords(flatten(br));
      require(c.has_value(), Err::MALFORMED, "bracket leaves the span of the ambient basis");
      SCEntry entry;
      for (int k = 0; k < dim; ++k) {
        const GaussRat& x = (*c)[static_cast<size_t>(k)];
        if (x.is_zero()) continue;
        require(x.is_real(), Err::INTERNAL, "real coordinate system produced complex coordinates");
        entry.emplace_back(k, x.re);
      }
      if (!entry.empty()) table[{i, j}] = std::move(entry);
    }
  }
  Ambient amb;
  amb.n = static_cast<int>(basis[0].rows());
  amb.basis = basis;
  return LieAlgebra::from_sc(dim, std::move(table), std::move(amb));
}

Matrix operator_from_ambient(const std::vector<Matrix>& basis, const AmbientMap& f) {
  return map_between_ambients(basis, basis, f);
}

Matrix map_between_ambients(const std::vector<Matrix>& src, const std::vector<Matrix>& dst,
                            const AmbientMap& f) {
  CoordSolver solver(flat_rows(dst));
  Matrix m(dst.size(), src.size());
  for (size_t j = 0; j < src.size(); ++j) {
    std::optional<Vec> c = solver.coords(flatten(f(src[j])));
    require(c.has_value(), Err::NOT_IN_SPAN, "image leaves the span of the target basis");
    for (size_t i = 0; i < dst.size(); ++i) m.at(i, j) = (*c)[i];
  }
  return m;
}

CompactTriad as_triad(const Fixture& f) {
  require(f.kind == "triad" && f.involutions.size() == 2, Err::BAD_PARAMS,
          "fixture is not a triad");
  return make_triad(f.g, f.involutions[0].second, f.involutions[1].second);
}

NoncompactPair as_pair(const Fixture& f) {
  require(f.kind == "pair" && f.involutions.size() == 2, Err::BAD_PARAMS,
          "fixture is not a pair");
  return make_pair(f.g, f.involutions[0].second, f.involutions[1].second);
}

std::vector<std::string> fixture_names() {
  return {"so4_I22_J11", "so4_I22_J2",  "so6_I24_J12", "so8_I44_J22", "so8_I44_J4",
          "su3_conj_I21conj", "su4_conj_I22conj", "uu_su2_Ta", "uu_su2_Tb", "uu_su2_Td",
          "four_su2_Tc", "so4_riem", "so5_riem", "sum_mixed", "sl3_keps", "sl4_keps",
          "sl3_app12", "sl4_app22", "so21x2_riem"};
}

Fixture build_fixture(const std::string& name) {
  if (name == "so4_I22_J11")
    return make_fixture(name, "triad", "so(4) with Ad I_{2,2} and Ad J_{1,1}",
                        so_ambient_basis(4),
                        {{"theta1", adI({1, 1, -1, -1})}, {"theta2", adJpq(1, 1)}}, 4);
  if (name == "so4_I22_J2")
    return make_fixture(name, "triad", "so(4) with Ad I_{2,2} and Ad J_2", so_ambient_basis(4),
                        {{"theta1", adI({1, 1, -1, -1})}, {"theta2", adJm(2)}}, 4);
  if (name == "so6_I24_J12")
    return make_fixture(name, "triad", "so(6) with Ad I_{2,4} and Ad J_{1,2}",
                        so_ambient_basis(6),
                        {{"theta1", adI({1, 1, -1, -1, -1, -1})}, {"theta2", adJpq(1, 2)}}, 6);
  if (name == "so8_I44_J22")
    return make_fixture(name, "triad", "so(8) with Ad I_{4,4} and Ad J_{2,2}",
                        so_ambient_basis(8),
                        {{"theta1", adI({1, 1, 1, 1, -1, -1, -1, -1})}, {"theta2", adJpq(2, 2)}},
                        8);
  if (name == "so8_I44_J4")
    return make_fixture(name, "triad", "so(8) with Ad I_{4,4} and Ad J_4", so_ambient_basis(8),
                        {{"theta1", adI({1, 1, 1, 1, -1, -1, -1, -1})}, {"theta2", adJm(4)}}, 8);
  if (name == "su3_conj_I21conj")
    return make_fixture(name, "triad",
                        "su(3) with conjugation and Ad I_{2,1} composed with conjugation",
                        su_ambient_basis(3),
                        {{"theta1", conj_map()},
                         {"theta2", compose_maps(adI({1, 1, -1}), conj_map())}},
                        3);
  if (name == "su4_conj_I22conj")
    return make_fixture(name, "triad",
                        "su(4) with conjugation and Ad I_{2,2} composed with conjugation",
                        su_ambient_basis(4),
                        {{"theta1", conj_map()},
                         {"theta2", compose_maps(adI({1, 1, -1, -1}), conj_map())}},
                        4);

  std::vector<Matrix> su2 = su_ambient_basis(2);
  if (name == "uu_su2_Ta" || name == "uu_su2_Tb" || name == "uu_su2_Td") {
    std::vector<Matrix> uu = dsum_ambient_basis({su2, su2});
    Matrix pr = block_perm_matrix({2, 2}, {1, 0});
    AmbientMap rho = ad_by(pr, pr);
    if (name == "uu_su2_Ta")
      return make_fixture(name, "triad",
                          "two su(2) summands with the factor swap and the swap composed "
                          "with conjugation",
                          uu, {{"theta1", rho}, {"theta2", compose_maps(rho, conj_map())}}, 4);
    if (name == "uu_su2_Tb")
      return make_fixture(name, "triad",
                          "two su(2) summands with the factor swap and conjugation", uu,
                          {{"theta1", rho}, {"theta2", conj_map()}}, 4);
    return make_fixture(name, "triad",
                        "two su(2) summands with conjugation and the factor swap", uu,
                        {{"theta1", conj_map()}, {"theta2", rho}}, 4);
  }
  if (name == "four_su2_Tc") {
    std::vector<Matrix> four = dsum_ambient_basis({su2, su2, su2, su2});
    Matrix p1234 = block_perm_matrix({2, 2, 2, 2}, {1, 0, 3, 2});
    Matrix p1423 = block_perm_matrix({2, 2, 2, 2}, {3, 2, 1, 0});
    return make_fixture(name, "triad",
                        "four su(2) summands with the block exchanges (12)(34) and (14)(23)",
                        four,
                        {{"theta1", ad_by(p1234, p1234.transpose())},
                         {"theta2", ad_by(p1423, p1423.transpose())}},
                        8);
  }
  if (name == "so4_riem")
    return make_fixture(name, "triad", "so(4) with both involutions Ad I_{2,2}",
                        so_ambient_basis(4),
                        {{"theta1", adI({1, 1, -1, -1})}, {"theta2", adI({1, 1, -1, -1})}}, 4);
  if (name == "so5_riem")
    return make_fixture(name, "triad", "so(5) with both involutions Ad I_{2,3}",
                        so_ambient_basis(5),
                        {{"theta1", adI({1, 1, -1, -1, -1})}, {"theta2", adI({1, 1, -1, -1, -1})}},
                        5);
  if (name == "sum_mixed") {
    std::vector<Matrix> mixed = dsum_ambient_basis({su2, su2, so_ambient_basis(5)});
    Matrix pmix = block_perm_matrix({2, 2, 5}, {1, 0, 2});
    Matrix imix = Matrix::diag_signs({1, 1, 1, 1, 1, 1, -1, -1, -1});
    Matrix pim = pmix * imix;
    Matrix pim_inv = imix * pmix.transpose();
    AmbientMap th2 = [imix](const Matrix& x) { return imix * x.conj() * imix; };
    return make_fixture(name, "triad",
                        "two su(2) summands and so(5): factor swap with Ad I_{2,3}, and "
                        "conjugation with Ad I_{2,3}",
                        mixed, {{"theta1", ad_by(pim, pim_inv)}, {"theta2", th2}}, 9);
  }
  if (name == "sl3_keps")
    return make_fixture(name, "pair",
                        "sl(3,R) with the I_{2,1}-twisted negative transpose and the "
                        "negative transpose",
                        sl_ambient_basis(3),
                        {{"sigma", neg_transpose_twisted(ipq_matrix(2, 1))},
                         {"theta", neg_transpose()}},
                        3);
  if (name == "sl4_keps")
    return make_fixture(name, "pair",
                        "sl(4,R) with the I_{2,2}-twisted negative transpose and the "
                        "negative transpose",
                        sl_ambient_basis(4),
                        {{"sigma", neg_transpose_twisted(ipq_matrix(2, 2))},
                         {"theta", neg_transpose()}},
                        4);
  if (name == "sl3_app12")
    return make_fixture(name, "pair", "sl(3,R) with Ad I_{1,2} and the negative transpose",
                        sl_ambient_basis(3),
                        {{"sigma", adI({1, -1, -1})}, {"theta", neg_transpose()}}, 3);
  if (name == "sl4_app22")
    return make_fixture(name, "pair", "sl(4,R) with Ad I_{2,2} and the negative transpose",
                        sl_ambient_basis(4),
                        {{"sigma", adI({1, 1, -1, -1})}, {"theta", neg_transpose()}}, 4);
  if (name == "so21x2_riem") {
    std::vector<Matrix> so21x2 =
        dsum_ambient_basis({sopq_ambient_basis(2, 1), sopq_ambient_basis(2, 1)});
    AmbientMap inv = adI({1, 1, -1, 1, 1, -1});
    return make_fixture(name, "pair", "two so(2,1) summands, Riemannian (equal involutions)",
                        so21x2, {{"sigma", inv}, {"theta", inv}}, 6);
  }
  fail(Err::BAD_PARAMS, "unknown fixture name: " + name);
}

std::vector<Fixture> fixture_suite() {
  std::vector<Fixture> out;
  for (const std::string& n : fixture_names()) out.push_back(build_fixture(n));
  return out;
}

Matrix witness(const std::string& name) {
  if (name == "phi_nu") {
    std::vector<Matrix> su2 = su_ambient_basis(2);
    std::vector<Matrix> uu = dsum_ambient_basis({su2, su2});
    AmbientMap f = [](const Matrix& x) {
      Matrix out = x;
      for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) out.at(i, j) = out.at(i, j).conj();
      return out;
    };
    return operator_from_ambient(uu, f);
  }
  if (name == "rho_13" || name == "rho_34") {
    std::vector<Matrix> su2 = su_ambient_basis(2);
    std::vector<Matrix> four = dsum_ambient_basis({su2, su2, su2, su2});
    std::vector<int> perm =
        name == "rho_13" ? std::vector<int>{2, 1, 0, 3} : std::vector<int>{0, 1, 3, 2};
    Matrix p = block_perm_matrix({2, 2, 2, 2}, perm);
    return operator_from_ambient(four, ad_by(p, p.transpose()));
  }
  if (name == "so4_twist_to_so22") {
    Fixture f = build_fixture("so4_I22_J11");
    PhiResult d = phi(as_triad(f));
    require(d.pair.g.ambient().has_value(), Err::INTERNAL, "twisted algebra lost its ambient");
    Matrix ip = iprime_matrix(1, 1);
    Matrix ipinv(4, 4);
    ipinv.at(0, 0) = GaussRat(1);
    ipinv.at(1, 1) = GaussRat(1);
    ipinv.at(2, 2) = gauss_i();
    ipinv.at(3, 3) = gauss_i();
    return map_between_ambients(d.pair.g.ambient()->basis, sopq_ambient_basis(2, 2),
                                ad_by(ip, ipinv));
  }
  if (name == "gl_fix_to_gl2") {
    LieAlgebra so22 = algebra_from_ambient(sopq_ambient_basis(2, 2));
    Matrix jp = jprime_matrix(2);
    Matrix s = operator_from_ambient(so22.ambient()->basis, ad_by(jp, jp));
    Matrix fix = eigensplit(s).plus;
    LieAlgebra h = induced_on(so22, fix);
    require(h.ambient().has_value(), Err::INTERNAL, "induced algebra lost its ambient");
    AmbientMap iota = [](const Matrix& x) {
      Matrix out(2, 2);
      for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) out.at(i, j) = x.at(i, j) + x.at(i, 2 + j);
      return out;
    };
    return map_between_ambients(h.ambient()->basis, gl_ambient_basis(2), iota);
  }
  fail(Err::UNKNOWN_WITNESS, "unknown witness name: " + name);
}

}  // namespace liedual
