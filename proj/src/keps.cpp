#include "liedual/keps.hpp"

#include <algorithm>
#include <cstdlib>

namespace liedual {

namespace {

const Matrix* component_at(const GradingDatum& gd, int k) {
  for (const auto& [kk, rows] : gd.components)
    if (kk == k) return &rows;
  return nullptr;
}

}  // namespace

GradingDatum grading_from_Z(const LieAlgebra& g0, const Vec& z) {
  require(g0.is_semisimple(), Err::NOT_SEMISIMPLE, "graded algebra must be semisimple");
  size_t d = static_cast<size_t>(g0.dim());
  require(z.size() == d, Err::DIM_MISMATCH, "characteristic element length");

  Matrix adZ = g0.ad(z);
  EigenReport er = eigenspaces(adZ, rational_roots(minimal_polynomial(adZ)));
  require(er.spans, Err::NON_INTEGER_GRADING,
          "the action of the element is not diagonalizable over the rationals");

  GradingDatum gd;
  gd.g0 = g0;
  gd.z = z;
  for (const auto& [ev, sp] : er.spaces) {
    require(is_integer(ev), Err::NON_INTEGER_GRADING, "non-integer eigenvalue in the grading");
    int k = static_cast<int>(ev.get_num().get_si());
    gd.components.emplace_back(k, sp);
    gd.kind = std::max(gd.kind, std::abs(k));
  }
  gd.degenerate = gd.kind == 0;

  // Opposite components pair nondegenerately under the Killing form, so
  // they must occur with equal dimensions.
  for (const auto& [k, rows] : gd.components) {
    const Matrix* opp = component_at(gd, -k);
    require(opp != nullptr && opp->rows() == rows.rows(), Err::INTERNAL,
            "grading components are not dimension-symmetric");
  }

  // Bracket law on all component bases.
  for (const auto& [k, rowsK] : gd.components)
    for (const auto& [l, rowsL] : gd.components) {
      const Matrix* target = component_at(gd, k + l);
      std::optional<CoordSolver> solver;
      if (target != nullptr) solver.emplace(*target);
      for (size_t a = 0; a < rowsK.rows(); ++a)
        for (size_t b = 0; b < rowsL.rows(); ++b) {
          Vec br = g0.bracket(rowsK.row(a), rowsL.row(b));
          if (target == nullptr)
            require(vec_is_zero(br), Err::INTERNAL, "bracket law failed: missing component");
          else
            require(solver->contains(br), Err::INTERNAL, "bracket law failed");
        }
    }

  // The element is recovered uniquely from the components: it is the one
  // vector acting as k id on every g0(k).
  size_t eqns = 0;
  for (const auto& [k, rows] : gd.components) eqns += rows.rows() * d;
  Matrix M(eqns, d);
  Vec rhs(eqns);
  size_t e = 0;
  for (const auto& [k, rows] : gd.components)
    for (size_t r = 0; r < rows.rows(); ++r) {
      Vec row = rows.row(r);
      std::vector<Vec> images;
      for (size_t t = 0; t < d; ++t) images.push_back(g0.ad_basis(static_cast<int>(t)) * row);
      for (size_t c = 0; c < d; ++c, ++e) {
        for (size_t t = 0; t < d; ++t) M.at(e, t) = images[t][c];
        rhs[e] = GaussRat(rat_of(k)) * row[c];
      }
    }
  std::optional<Vec> zprime = solve(M, rhs);
  require(zprime.has_value() && *zprime == z, Err::INTERNAL,
          "characteristic element recomputation failed");

  return gd;
}

Matrix sigma_Z(const GradingDatum& gd) {
  size_t d = static_cast<size_t>(gd.g0.dim());
  Matrix C(d, d), D(d, d);
  size_t col = 0;
  for (const auto& [k, rows] : gd.components) {
    GaussRat s(rat_of(k % 2 != 0 ? -1 : 1));
    for (size_t r = 0; r < rows.rows(); ++r, ++col) {
      for (size_t i = 0; i < d; ++i) C.at(i, col) = rows.at(r, i);
      D.at(col, col) = s;
    }
  }
  require(col == d, Err::INTERNAL, "grading components do not fill the algebra");
  Matrix P = C * D * inverse(C);
  require(P * P == Matrix::identity(d), Err::INTERNAL, "parity map is not an involution");
  return P;
}

bool is_grade_reversing(const GradingDatum& gd, const Matrix& theta) {
  check_involution(gd.g0, theta);
  size_t d = static_cast<size_t>(gd.g0.dim());
  bool on_element = theta * gd.z == vec_scale(GaussRat(rat_of(-1)), gd.z);
  bool on_components = true;
  for (const auto& [k, rows] : gd.components) {
    const Matrix* opp = component_at(gd, -k);
    if (opp == nullptr) {
      on_components = false;
      break;
    }
    std::vector<Vec> img;
    for (size_t r = 0; r < rows.rows(); ++r) img.push_back(theta * rows.row(r));
    if (row_space(Matrix::from_rows(img, d)) != *opp) {
      on_components = false;
      break;
    }
  }
  require(on_element == on_components, Err::INTERNAL,
          "grade-reversal formulations disagree");
  return on_element;
}

NoncompactPair keps_pair(const GradingDatum& gd, const Matrix& theta) {
  require(is_grade_reversing(gd, theta), Err::NOT_GRADE_REVERSING,
          "involution does not reverse the grading");
  return make_pair(gd.g0, sigma_Z(gd) * theta, theta);
}

KepsConstruction keps_from_gamma(const RootDatum& rd, const Vec& v) {
  Matrix P = parity_operator(rd, v);
  Matrix th2 = P * rd.theta1;

  KepsConstruction out;
  out.triad = make_triad(rd.g, rd.theta1, th2);
  out.dual = phi(out.triad);

  // Lift v through the a1 basis, then express the lift in the pair's
  // coordinates.
  Vec lift(static_cast<size_t>(rd.g.dim()));
  for (size_t t = 0; t < rd.a1.rows(); ++t)
    lift = vec_add(lift, vec_scale(v[t], rd.a1.row(t)));
  std::optional<Vec> z = CoordSolver(out.dual.basis_record).coords(lift);
  require(z.has_value(), Err::INTERNAL, "basis record does not span");
  out.z_pair = *z;

  out.grading = grading_from_Z(out.dual.pair.g, out.z_pair);
  out.degenerate = out.grading.degenerate;
  require(is_grade_reversing(out.grading, out.dual.pair.theta), Err::INTERNAL,
          "pair involution does not reverse the constructed grading");
  require(out.dual.pair.sigma == sigma_Z(out.grading) * out.dual.pair.theta, Err::INTERNAL,
          "pair involution is not the parity twist of its Cartan involution");
  return out;
}

bool theta_sim_witness_check(const CompactTriad& t, const RootDatum& rd, const Vec& v) {
  require(rd.g.dim() == t.g.dim() && rd.g.table() == t.g.table() && rd.theta1 == t.theta1,
          Err::BAD_PARAMS, "root datum does not belong to the triad");
  return t.theta2 == parity_operator(rd, v) * t.theta1;
}

std::optional<Vec> find_sim_witness(const CompactTriad& t, const RootDatum& rd, int bound) {
  require(bound >= 0, Err::BAD_PARAMS, "negative search bound");
  std::vector<Vec> basis = gamma_lattice(rd);
  size_t ra = basis.size();
  std::vector<int> c(ra, 0);
  // Shells of increasing largest coefficient, lexicographic inside each
  // shell, so the first hit has minimal box size.
  for (int shell = 0; shell <= bound; ++shell) {
    std::fill(c.begin(), c.end(), -shell);
    while (true) {
      int maxabs = 0;
      for (int x : c) maxabs = std::max(maxabs, std::abs(x));
      if (maxabs == shell) {
        Vec v(ra);
        for (size_t j = 0; j < ra; ++j)
          for (size_t i = 0; i < ra; ++i)
            v[i] += GaussRat(rat_of(c[j])) * basis[j][i];
        if (theta_sim_witness_check(t, rd, v)) return v;
      }
      size_t pos = ra;
      while (pos > 0 && c[pos - 1] == shell) {
        c[pos - 1] = -shell;
        --pos;
      }
      if (pos == 0) break;
      ++c[pos - 1];
    }
  }
  return std::nullopt;
}

}  // namespace liedual
