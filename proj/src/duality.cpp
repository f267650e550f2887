#include "liedual/duality.hpp"

namespace liedual {

namespace {

// Adapted rows of an involution: the canonical +1 basis stacked over the
// canonical -1 basis. Fails if the matrix is not diagonalizable with
// eigenvalues +1/-1 (i.e. not an involution).
std::pair<Matrix, size_t> adapted_rows(const Matrix& m) {
  EigenSplit s = eigensplit(m);
  require(s.plus.rows() + s.minus.rows() == m.rows(), Err::NOT_INVOLUTION,
          "matrix is not diagonalizable with eigenvalues +1 and -1");
  return {s.plus.vstack(s.minus), s.plus.rows()};
}

Matrix diag_split(size_t dim, size_t split) {
  Matrix d = Matrix::identity(dim);
  for (size_t i = split; i < dim; ++i) d.at(i, i) = GaussRat(rat_of(-1));
  return d;
}

// Negate brackets of two minus-block basis vectors; the bracket of two
// such vectors lands in the plus block, so only coefficients change.
SCTable flip_minus_block(const SCTable& table, size_t split) {
  SCTable out;
  for (const auto& [key, entry] : table) {
    if (static_cast<size_t>(key.first) >= split && static_cast<size_t>(key.second) >= split) {
      SCEntry neg;
      for (const auto& [k, c] : entry) neg.push_back({k, Rat(-c)});
      out[key] = std::move(neg);
    } else {
      out[key] = entry;
    }
  }
  return out;
}

}  // namespace

TwistResult cartan_twist(const LieAlgebra& g, const Matrix& tau,
                         const std::vector<Matrix>& carried) {
  check_involution(g, tau);
  for (const Matrix& c : carried) {
    check_involution(g, c);
    require(tau * c == c * tau, Err::NOT_COMMUTING,
            "carried involution does not commute with the twisting involution");
  }
  auto [rows, split] = adapted_rows(tau);
  LieAlgebra adapted = change_basis(g, rows);
  require(operator_in_basis(tau, rows) == diag_split(static_cast<size_t>(g.dim()), split),
          Err::INTERNAL, "adapted basis failed to diagonalize the involution");

  SCTable twisted = flip_minus_block(adapted.table(), split);
  std::optional<Ambient> amb;
  if (adapted.ambient().has_value()) {
    // The minus-block realization picks up a factor i, which exactly
    // matches the sign flip on minus-minus brackets.
    Ambient a = *adapted.ambient();
    for (size_t k = split; k < a.basis.size(); ++k) a.basis[k] = a.basis[k] * gauss_i();
    amb = std::move(a);
  }
  LieAlgebra twisted_alg = LieAlgebra::from_sc(g.dim(), std::move(twisted), std::move(amb));

  std::vector<Matrix> new_carried;
  for (const Matrix& c : carried) new_carried.push_back(operator_in_basis(c, rows));
  return {std::move(twisted_alg), std::move(new_carried), std::move(rows), split};
}

TriadNF normal_form(const CompactTriad& t) {
  auto [rows, split] = adapted_rows(t.theta1);
  LieAlgebra adapted = change_basis(t.g, rows);
  Matrix t1 = operator_in_basis(t.theta1, rows);
  Matrix t2 = operator_in_basis(t.theta2, rows);
  require(t1 == diag_split(static_cast<size_t>(t.g.dim()), split), Err::INTERNAL,
          "normalization failed to diagonalize the distinguished involution");
  return {make_triad(std::move(adapted), std::move(t1), std::move(t2)), std::move(rows), split};
}

PairNF normal_form(const NoncompactPair& p) {
  auto [rows, split] = adapted_rows(p.theta);
  LieAlgebra adapted = change_basis(p.g, rows);
  Matrix s = operator_in_basis(p.sigma, rows);
  Matrix th = operator_in_basis(p.theta, rows);
  require(th == diag_split(static_cast<size_t>(p.g.dim()), split), Err::INTERNAL,
          "normalization failed to diagonalize the distinguished involution");
  return {make_pair(std::move(adapted), std::move(s), std::move(th)), std::move(rows), split};
}

namespace {

std::pair<Matrix, size_t> joint_adapted_rows(const Matrix& dist, const Matrix& other,
                                             size_t dim) {
  JointSplit js = joint_split(dist, other);
  Matrix rows = js.pp.vstack(js.pm).vstack(js.mp).vstack(js.mm);
  require(rows.rows() == dim, Err::INTERNAL,
          "joint eigenspaces failed to span the algebra");
  return {std::move(rows), js.pp.rows() + js.pm.rows()};
}

}  // namespace

TriadNF joint_normal_form(const CompactTriad& t) {
  auto [rows, split] = joint_adapted_rows(t.theta1, t.theta2,
                                          static_cast<size_t>(t.g.dim()));
  LieAlgebra adapted = change_basis(t.g, rows);
  Matrix t1 = operator_in_basis(t.theta1, rows);
  Matrix t2 = operator_in_basis(t.theta2, rows);
  require(t1 == diag_split(static_cast<size_t>(t.g.dim()), split), Err::INTERNAL,
          "normalization failed to diagonalize the distinguished involution");
  return {make_triad(std::move(adapted), std::move(t1), std::move(t2)), std::move(rows), split};
}

PairNF joint_normal_form(const NoncompactPair& p) {
  auto [rows, split] = joint_adapted_rows(p.theta, p.sigma,
                                          static_cast<size_t>(p.g.dim()));
  LieAlgebra adapted = change_basis(p.g, rows);
  Matrix s = operator_in_basis(p.sigma, rows);
  Matrix th = operator_in_basis(p.theta, rows);
  require(th == diag_split(static_cast<size_t>(p.g.dim()), split), Err::INTERNAL,
          "normalization failed to diagonalize the distinguished involution");
  return {make_pair(std::move(adapted), std::move(s), std::move(th)), std::move(rows), split};
}

bool triads_equal(const CompactTriad& a, const CompactTriad& b) {
  return a.g.dim() == b.g.dim() && a.g.table() == b.g.table() && a.theta1 == b.theta1 &&
         a.theta2 == b.theta2;
}

bool pairs_equal(const NoncompactPair& a, const NoncompactPair& b) {
  return a.g.dim() == b.g.dim() && a.g.table() == b.g.table() && a.sigma == b.sigma &&
         a.theta == b.theta;
}

PhiResult phi(const CompactTriad& t) {
  TwistResult tw = cartan_twist(t.g, t.theta1, {t.theta1, t.theta2});
  NoncompactPair p = make_pair(std::move(tw.algebra), std::move(tw.carried[1]),
                               std::move(tw.carried[0]));
  return {std::move(p), std::move(tw.basis_record)};
}

PsiResult psi(const NoncompactPair& p) {
  TwistResult tw = cartan_twist(p.g, p.theta, {p.theta, p.sigma});
  CompactTriad t = make_triad(std::move(tw.algebra), std::move(tw.carried[0]),
                              std::move(tw.carried[1]));
  return {std::move(t), std::move(tw.basis_record)};
}

AssociatedPair associated_pair(const NoncompactPair& p) {
  Matrix prod = p.theta * p.sigma;
  require(prod * prod == Matrix::identity(prod.rows()), Err::NOT_INVOLUTION,
          "product of the involutions is not an involution");
  bool degenerate = prod.is_identity();
  return {make_pair(p.g, std::move(prod), p.theta), degenerate};
}

CompactTriad associated_triad(const CompactTriad& t) {
  Matrix prod = t.theta1 * t.theta2;
  require(prod * prod == Matrix::identity(prod.rows()), Err::NOT_INVOLUTION,
          "product of the involutions is not an involution");
  return make_triad(t.g, t.theta1, std::move(prod));
}

CompactTriad dual_triad(const CompactTriad& t) { return make_triad(t.g, t.theta2, t.theta1); }

NoncompactPair dual_pair(const NoncompactPair& p) {
  return phi(dual_triad(psi(p).triad)).pair;
}

CompatReport check_compatibility(const CompactTriad& t) {
  CompactTriad tn = normal_form(t).triad;
  CompatReport r;
  {
    NoncompactPair lhs = phi(associated_triad(tn)).pair;
    NoncompactPair rhs = associated_pair(phi(tn).pair).pair;
    r.associated_identity = pairs_equal(lhs, rhs);
  }
  {
    NoncompactPair lhs = phi(dual_triad(tn)).pair;
    NoncompactPair rhs = dual_pair(phi(tn).pair);
    r.dual_identity = pairs_equal(lhs, rhs);
  }
  return r;
}

SubalgebraDualReport fixed_subalgebra_dual(const NoncompactPair& p) {
  PsiResult ps = psi(p);
  Matrix h_rows = eigensplit(p.sigma).plus;
  Matrix transported = row_space(h_rows * inverse(ps.basis_record));
  Matrix fix2 = eigensplit(ps.triad.theta2).plus;

  SubalgebraDualReport rep;
  rep.match = (transported == fix2);
  rep.dim = static_cast<int>(fix2.rows());
  rep.pair_view = fixed_point_view(p.g, p.sigma, p.theta);
  rep.triad_view = fixed_point_view(ps.triad.g, ps.triad.theta2, ps.triad.theta1);
  return rep;
}

}  // namespace liedual
