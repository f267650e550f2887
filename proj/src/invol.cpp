#include "liedual/invol.hpp"

namespace liedual {

EigenSplit eigensplit(const Matrix& m) {
  require(m.rows() == m.cols(), Err::DIM_MISMATCH, "eigensplit needs a square matrix");
  Matrix id = Matrix::identity(m.rows());
  return {kernel(m - id), kernel(m + id)};
}

bool is_automorphism(const LieAlgebra& g, const Matrix& m) {
  size_t d = static_cast<size_t>(g.dim());
  if (m.rows() != d || m.cols() != d) return false;
  if (rank(m) != d) return false;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      Vec lhs = g.bracket(m.col(static_cast<size_t>(i)), m.col(static_cast<size_t>(j)));
      Vec rhs = m * g.bracket_basis(i, j);
      if (lhs != rhs) return false;
    }
  return true;
}

void check_involution(const LieAlgebra& g, const Matrix& m) {
  size_t d = static_cast<size_t>(g.dim());
  require(m.rows() == d && m.cols() == d, Err::DIM_MISMATCH, "involution matrix size");
  require(m * m == Matrix::identity(d), Err::NOT_INVOLUTION, "matrix does not square to the identity");
  require(is_automorphism(g, m), Err::NOT_AUTOMORPHISM, "matrix does not preserve the bracket");
}

bool is_cartan_involution(const LieAlgebra& g, const Matrix& theta) {
  Matrix form = -(g.killing() * theta);
  if (!form.is_real() || !form.is_symmetric()) return false;
  Signature s = symmetric_signature(form);
  return s.n_plus == static_cast<size_t>(g.dim());
}

CompactTriad make_triad(LieAlgebra g, Matrix theta1, Matrix theta2) {
  require(g.is_semisimple(), Err::NOT_SEMISIMPLE, "Killing form is degenerate");
  require(g.is_compact_semisimple(), Err::NOT_COMPACT, "Killing form is not negative definite");
  check_involution(g, theta1);
  check_involution(g, theta2);
  require(theta1 * theta2 == theta2 * theta1, Err::NOT_COMMUTING, "involutions do not commute");
  return {std::move(g), std::move(theta1), std::move(theta2)};
}

NoncompactPair make_pair(LieAlgebra g, Matrix sigma, Matrix theta) {
  require(g.is_semisimple(), Err::NOT_SEMISIMPLE, "Killing form is degenerate");
  check_involution(g, sigma);
  check_involution(g, theta);
  require(sigma * theta == theta * sigma, Err::NOT_COMMUTING, "involutions do not commute");
  require(is_cartan_involution(g, theta), Err::NOT_CARTAN,
          "second involution is not a Cartan involution");
  return {std::move(g), std::move(sigma), std::move(theta)};
}

JointSplit joint_split(const Matrix& dist, const Matrix& other) {
  EigenSplit d = eigensplit(dist);
  EigenSplit o = eigensplit(other);
  return {intersect_rows(d.plus, o.plus), intersect_rows(d.plus, o.minus),
          intersect_rows(d.minus, o.plus), intersect_rows(d.minus, o.minus)};
}

std::array<int, 4> joint_dims(const JointSplit& s) {
  return {static_cast<int>(s.pp.rows()), static_cast<int>(s.pm.rows()),
          static_cast<int>(s.mp.rows()), static_cast<int>(s.mm.rows())};
}

bool verify_algebra_witness(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& map) {
  if (src.dim() != dst.dim()) return false;
  size_t d = static_cast<size_t>(src.dim());
  if (map.rows() != d || map.cols() != d) return false;
  if (rank(map) != d) return false;
  for (int i = 0; i < src.dim(); ++i)
    for (int j = i + 1; j < src.dim(); ++j) {
      Vec lhs = dst.bracket(map.col(static_cast<size_t>(i)), map.col(static_cast<size_t>(j)));
      Vec rhs = map * src.bracket_basis(i, j);
      if (lhs != rhs) return false;
    }
  return true;
}

bool verify_triad_witness(const CompactTriad& src, const CompactTriad& dst, const Matrix& map) {
  if (!verify_algebra_witness(src.g, dst.g, map)) return false;
  return map * src.theta1 == dst.theta1 * map && map * src.theta2 == dst.theta2 * map;
}

bool verify_pair_witness(const NoncompactPair& src, const NoncompactPair& dst, const Matrix& map) {
  if (!verify_algebra_witness(src.g, dst.g, map)) return false;
  return map * src.sigma == dst.sigma * map && map * src.theta == dst.theta * map;
}

ViewProfile fixed_point_view(const LieAlgebra& g, const Matrix& fix_of, const Matrix& other) {
  Matrix h = eigensplit(fix_of).plus;
  LieAlgebra sub = induced_on(g, h);
  Matrix cen = center(sub);
  Matrix der = derived_subalgebra(sub);

  // Ambient Killing form restricted to the fixed subalgebra: h B h^T.
  Matrix restr = h * g.killing() * h.transpose();

  ViewProfile v;
  v.dim = static_cast<int>(h.rows());
  v.center_dim = static_cast<int>(cen.rows());
  v.derived_dim = static_cast<int>(der.rows());
  v.own_sig = symmetric_signature(sub.killing());
  v.restricted_sig = symmetric_signature(restr);

  if (cen.rows() > 0) {
    Matrix cen_amb = row_space(cen * h);
    EigenSplit o = eigensplit(other);
    v.center_plus_dim = static_cast<int>(intersect_rows(cen_amb, o.plus).rows());
    v.center_minus_dim = static_cast<int>(intersect_rows(cen_amb, o.minus).rows());
  }
  return v;
}

Profile triad_profile(const CompactTriad& t) {
  return {symmetric_signature(t.g.killing()), fixed_point_view(t.g, t.theta1, t.theta2),
          fixed_point_view(t.g, t.theta2, t.theta1)};
}

Profile pair_profile(const NoncompactPair& p) {
  return {symmetric_signature(p.g.killing()), fixed_point_view(p.g, p.sigma, p.theta),
          fixed_point_view(p.g, p.theta, p.sigma)};
}

}  // namespace liedual
