#include "liedual/ideals.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "liedual/error.hpp"

namespace liedual {

namespace {

// Sequence of leading-column indices, the canonical sort key for lists of
// row-reduced subspace bases.
std::vector<size_t> pivot_tuple(const Matrix& rows) {
  std::vector<size_t> t;
  t.reserve(rows.rows());
  for (size_t i = 0; i < rows.rows(); ++i) {
    size_t j = 0;
    while (j < rows.cols() && rows.at(i, j).is_zero()) ++j;
    t.push_back(j);
  }
  return t;
}

bool pivot_less(const Matrix& a, const Matrix& b) {
  std::vector<size_t> pa = pivot_tuple(a), pb = pivot_tuple(b);
  return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
}

void sort_by_pivots(std::vector<Matrix>& pieces) {
  std::stable_sort(pieces.begin(), pieces.end(), pivot_less);
}

Matrix single_row(const Vec& v) { return Matrix::from_rows({v}, v.size()); }

// Killing-orthogonal complement of `sub` inside the span of `rows`.
Matrix killing_complement_within(const LieAlgebra& g, const Matrix& sub, const Matrix& rows) {
  return intersect_rows(kernel(sub * g.killing()), rows);
}

void split_piece_small(const LieAlgebra& g, const Matrix& rows, std::vector<Matrix>& out);

// Full decomposition for an algebra of modest dimension: closure splitting
// plus refinement along commuting operators.
std::vector<Matrix> minimal_pieces_small(const LieAlgebra& g) {
  std::vector<Matrix> out;
  split_piece_small(g, Matrix::identity(static_cast<size_t>(g.dim())), out);
  sort_by_pivots(out);
  return out;
}

void split_piece_small(const LieAlgebra& g, const Matrix& rows, std::vector<Matrix>& out) {
  // A single-generator closure that is proper splits the piece in two.
  for (size_t i = 0; i < rows.rows(); ++i) {
    Matrix cl = ideal_closure(g, single_row(rows.row(i)));
    if (cl.rows() < rows.rows()) {
      Matrix comp = killing_complement_within(g, cl, rows);
      split_piece_small(g, cl, out);
      split_piece_small(g, comp, out);
      return;
    }
  }
  // Otherwise refine along a commuting operator of the induced algebra
  // whose rational eigenspaces decompose the piece.
  LieAlgebra ind = induced_on(g, rows);
  for (const Matrix& t : commutant_basis(ind)) {
    if (!t.is_real()) continue;
    EigenReport er = eigenspaces(t, rational_roots(minimal_polynomial(t)));
    if (er.spaces.size() > 1 && er.spans) {
      for (const auto& [ev, sp] : er.spaces) {
        split_piece_small(g, row_space(sp * rows), out);
      }
      return;
    }
  }
  out.push_back(rows);
}

// Decomposition for larger algebras: closure splitting only; a piece that
// no single generator splits is handed to the small routine when it fits,
// and otherwise accepted as minimal (every closure saturates it and the
// Killing form restricts nondegenerately).
void split_piece_big(const LieAlgebra& g, const Matrix& rows, std::vector<Matrix>& out) {
  for (size_t i = 0; i < rows.rows(); ++i) {
    Matrix cl = ideal_closure(g, single_row(rows.row(i)));
    if (cl.rows() < rows.rows()) {
      Matrix comp = killing_complement_within(g, cl, rows);
      split_piece_big(g, cl, out);
      split_piece_big(g, comp, out);
      return;
    }
  }
  if (rows.rows() <= 12) {
    LieAlgebra ind = induced_on(g, rows);
    for (const Matrix& sp : minimal_pieces_small(ind)) {
      out.push_back(row_space(sp * rows));
    }
  } else {
    out.push_back(rows);
  }
}

bool is_identity_perm(const std::vector<size_t>& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

}  // namespace

IdealDecomposition minimal_ideals(const LieAlgebra& g) {
  require(g.is_semisimple(), Err::NOT_SEMISIMPLE,
          "minimal ideal decomposition requires a nondegenerate Killing form");
  std::vector<Matrix> pieces;
  if (g.dim() <= 12) {
    pieces = minimal_pieces_small(g);
  } else {
    split_piece_big(g, Matrix::identity(static_cast<size_t>(g.dim())), pieces);
    sort_by_pivots(pieces);
  }
  return {std::move(pieces)};
}

std::vector<size_t> ideal_permutation(const std::vector<Matrix>& ideals, const Matrix& m) {
  Matrix mt = m.transpose();
  std::vector<size_t> perm;
  perm.reserve(ideals.size());
  for (const Matrix& rows : ideals) {
    Matrix img = row_space(rows * mt);
    size_t found = ideals.size();
    for (size_t t = 0; t < ideals.size(); ++t) {
      if (img == ideals[t]) {
        found = t;
        break;
      }
    }
    require(found < ideals.size(), Err::INTERNAL,
            "automorphism does not permute the minimal ideals");
    perm.push_back(found);
  }
  return perm;
}

std::vector<Matrix> invariant_atoms(const std::vector<Matrix>& ideals,
                                    const std::vector<Matrix>& invs) {
  std::vector<std::vector<size_t>> perms;
  perms.reserve(invs.size());
  for (const Matrix& m : invs) perms.push_back(ideal_permutation(ideals, m));
  size_t n = ideals.size();
  std::vector<bool> seen(n, false);
  std::vector<Matrix> atoms;
  for (size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::set<size_t> orbit{s};
    std::vector<size_t> frontier{s};
    while (!frontier.empty()) {
      size_t t = frontier.back();
      frontier.pop_back();
      for (const auto& p : perms) {
        if (!orbit.count(p[t])) {
          orbit.insert(p[t]);
          frontier.push_back(p[t]);
        }
      }
    }
    Matrix rows(0, ideals[s].cols());
    for (size_t t : orbit) {
      seen[t] = true;
      rows = rows.vstack(ideals[t]);
    }
    atoms.push_back(row_space(rows));
  }
  sort_by_pivots(atoms);
  return atoms;
}

std::vector<Matrix> invariant_ideal_lattice(const LieAlgebra& g,
                                            const std::vector<Matrix>& invs) {
  std::vector<Matrix> atoms = invariant_atoms(minimal_ideals(g).minimal_ideals, invs);
  require(atoms.size() <= 16, Err::UNSUPPORTED, "invariant-ideal lattice too large to enumerate");
  std::vector<Matrix> lattice;
  lattice.reserve(size_t{1} << atoms.size());
  for (size_t mask = 0; mask < (size_t{1} << atoms.size()); ++mask) {
    Matrix rows(0, static_cast<size_t>(g.dim()));
    for (size_t t = 0; t < atoms.size(); ++t) {
      if (mask & (size_t{1} << t)) rows = rows.vstack(atoms[t]);
    }
    lattice.push_back(row_space(rows));
  }
  std::stable_sort(lattice.begin(), lattice.end(), [](const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    return pivot_less(a, b);
  });
  return lattice;
}

namespace {

// Shared component-splitting skeleton: check stability of every atom under
// both involutions, restrict, and verify the atoms tile the algebra.
std::vector<std::pair<LieAlgebra, std::pair<Matrix, Matrix>>> split_components(
    const LieAlgebra& g, const Matrix& first, const Matrix& second) {
  std::vector<Matrix> atoms =
      invariant_atoms(minimal_ideals(g).minimal_ideals, {first, second});
  std::vector<std::pair<LieAlgebra, std::pair<Matrix, Matrix>>> out;
  size_t total = 0;
  Matrix stacked(0, static_cast<size_t>(g.dim()));
  for (const Matrix& at : atoms) {
    for (const Matrix* inv : {&first, &second}) {
      require(row_space(at * inv->transpose()) == at, Err::THETA_NOT_STABLE,
              "invariant component is not stable under an involution");
    }
    LieAlgebra sub = induced_on(g, at);
    Matrix r1 = restrict_operator(first, at);
    Matrix r2 = restrict_operator(second, at);
    total += at.rows();
    stacked = stacked.vstack(at);
    out.emplace_back(std::move(sub), std::make_pair(std::move(r1), std::move(r2)));
  }
  require(total == static_cast<size_t>(g.dim()) && row_space(stacked).rows() == total,
          Err::INTERNAL, "invariant components do not reconstruct the algebra");
  return out;
}

}  // namespace

std::vector<CompactTriad> irreducible_components(const CompactTriad& t) {
  std::vector<CompactTriad> out;
  for (auto& [sub, slots] : split_components(t.g, t.theta1, t.theta2)) {
    out.push_back(make_triad(std::move(sub), std::move(slots.first), std::move(slots.second)));
  }
  return out;
}

std::vector<NoncompactPair> irreducible_components(const NoncompactPair& p) {
  std::vector<NoncompactPair> out;
  for (auto& [sub, slots] : split_components(p.g, p.sigma, p.theta)) {
    out.push_back(make_pair(std::move(sub), std::move(slots.first), std::move(slots.second)));
  }
  return out;
}

std::string to_string(IrreducibleTag tag) {
  switch (tag) {
    case IrreducibleTag::SIMPLE: return "SIMPLE";
    case IrreducibleTag::T_a: return "T_a";
    case IrreducibleTag::T_b: return "T_b";
    case IrreducibleTag::T_c: return "T_c";
    case IrreducibleTag::T_d: return "T_d";
    case IrreducibleTag::P_a: return "P_a";
    case IrreducibleTag::P_b: return "P_b";
    case IrreducibleTag::P_c: return "P_c";
    case IrreducibleTag::P_d: return "P_d";
  }
  require(false, Err::INTERNAL, "unknown tag");
  return "";
}

IrreducibleType classify_irreducible(const CompactTriad& t) {
  IdealDecomposition dec = minimal_ideals(t.g);
  const std::vector<Matrix>& ideals = dec.minimal_ideals;
  std::vector<Matrix> atoms = invariant_atoms(ideals, {t.theta1, t.theta2});
  require(atoms.size() == 1, Err::NOT_IRREDUCIBLE,
          "object splits into proper invariant components");
  IrreducibleType r;
  r.ideal_count = ideals.size();
  r.first_permutation = ideal_permutation(ideals, t.theta1);
  r.second_permutation = ideal_permutation(ideals, t.theta2);
  if (ideals.size() == 1) {
    r.tag = IrreducibleTag::SIMPLE;
    return r;
  }
  if (ideals.size() == 2) {
    bool s1 = !is_identity_perm(r.first_permutation);
    bool s2 = !is_identity_perm(r.second_permutation);
    require(s1 || s2, Err::UNRECOGNIZED_PATTERN,
            "two ideals preserved by both involutions yet no proper invariant sum");
    r.tag = s1 && s2 ? IrreducibleTag::T_a : (s1 ? IrreducibleTag::T_b : IrreducibleTag::T_d);
    return r;
  }
  if (ideals.size() == 4) {
    auto is_double_transposition = [](const std::vector<size_t>& p) {
      if (p.size() != 4) return false;
      for (size_t i = 0; i < 4; ++i) {
        if (p[i] >= 4 || p[i] == i || p[p[i]] != i) return false;
      }
      return true;
    };
    require(is_double_transposition(r.first_permutation) &&
                is_double_transposition(r.second_permutation) &&
                r.first_permutation != r.second_permutation,
            Err::UNRECOGNIZED_PATTERN,
            "four ideals without two distinct fixed-point-free pairings");
    r.tag = IrreducibleTag::T_c;
    return r;
  }
  require(false, Err::UNRECOGNIZED_PATTERN, "unclassified ideal pattern");
  return r;
}

IrreducibleType classify_irreducible(const NoncompactPair& p) {
  IdealDecomposition dec = minimal_ideals(p.g);
  const std::vector<Matrix>& ideals = dec.minimal_ideals;
  std::vector<Matrix> atoms = invariant_atoms(ideals, {p.sigma, p.theta});
  require(atoms.size() == 1, Err::NOT_IRREDUCIBLE,
          "object splits into proper invariant components");
  IrreducibleType r;
  r.ideal_count = ideals.size();
  r.first_permutation = ideal_permutation(ideals, p.sigma);
  r.second_permutation = ideal_permutation(ideals, p.theta);
  if (ideals.size() == 1) {
    if (p.g.dim() > 12) {
      // A large summand that no closure splits: the matrix families built
      // here are absolutely simple at these dimensions, so the closure
      // split alone certifies the class.
      r.tag = IrreducibleTag::SIMPLE;
      return r;
    }
    std::vector<Matrix> cb = commutant_basis(p.g);
    r.centroid_dimension = cb.size();
    if (cb.size() == 1) {
      r.tag = IrreducibleTag::SIMPLE;
      return r;
    }
    require(cb.size() == 2, Err::UNRECOGNIZED_PATTERN, "unexpected centroid dimension");
    size_t n = static_cast<size_t>(p.g.dim());
    // Traceless part of the first non-scalar centroid element: an exact
    // complex structure up to scale.
    std::optional<Matrix> j0;
    for (const Matrix& t : cb) {
      GaussRat tr;
      for (size_t i = 0; i < n; ++i) tr += t.at(i, i);
      Matrix d = t - Matrix::identity(n) * (tr / GaussRat(Rat(static_cast<long>(n))));
      if (!d.is_zero()) {
        j0 = std::move(d);
        break;
      }
    }
    require(j0.has_value(), Err::UNRECOGNIZED_PATTERN, "no traceless centroid generator");
    Matrix jj = *j0 * *j0;
    GaussRat c = jj.at(0, 0);
    require(c.is_real() && c.re < 0 && jj == Matrix::identity(n) * c,
            Err::UNRECOGNIZED_PATTERN,
            "centroid element does not square to a negative scalar");
    Matrix sjs = p.sigma * *j0 * p.sigma;
    if (sjs == *j0) {
      r.tag = IrreducibleTag::P_b;
      r.sigma_antilinear = false;
    } else {
      require(sjs == -*j0, Err::UNRECOGNIZED_PATTERN,
              "involution neither commutes nor anticommutes with the complex structure");
      r.tag = IrreducibleTag::P_a;
      r.sigma_antilinear = true;
    }
    return r;
  }
  if (ideals.size() == 2) {
    require(r.first_permutation == std::vector<size_t>({1, 0}), Err::UNRECOGNIZED_PATTERN,
            "two minimal ideals not swapped by the first involution");
    LieAlgebra factor = induced_on(p.g, ideals[0]);
    size_t fc = commutant_basis(factor).size();
    r.factor_centroid_dimension = fc;
    require(fc == 1 || fc == 2, Err::UNRECOGNIZED_PATTERN,
            "unexpected factor centroid dimension");
    r.tag = fc == 2 ? IrreducibleTag::P_c : IrreducibleTag::P_d;
    return r;
  }
  require(false, Err::UNRECOGNIZED_PATTERN, "unclassified ideal pattern");
  return r;
}

CorrespondenceReport ideal_correspondence(const NoncompactPair& p) {
  CorrespondenceReport rep;
  PsiResult ps = psi(p);
  std::vector<Matrix> pair_lat = invariant_ideal_lattice(p.g, {p.sigma});
  std::vector<Matrix> triad_lat =
      invariant_ideal_lattice(ps.triad.g, {ps.triad.theta1, ps.triad.theta2});

  // Stability under the Cartan involution is a theorem, not an input
  // assumption; verify it on every member.
  rep.theta_stable = true;
  Matrix tht = p.theta.transpose();
  for (const Matrix& l : pair_lat) {
    if (row_space(l * tht) != l) rep.theta_stable = false;
  }

  Matrix rinv = inverse(ps.basis_record);
  bool ok = rep.theta_stable && pair_lat.size() == triad_lat.size();
  std::vector<bool> hit(triad_lat.size(), false);
  for (const Matrix& l : pair_lat) {
    rep.pair_lattice_dims.push_back(static_cast<int>(l.rows()));
    Matrix img = row_space(l * rinv);
    size_t found = triad_lat.size();
    for (size_t t = 0; t < triad_lat.size(); ++t) {
      if (triad_lat[t] == img) {
        found = t;
        break;
      }
    }
    rep.forward.push_back(found);
    if (found == triad_lat.size() || hit[found] || img.rows() != l.rows()) {
      ok = false;
      continue;
    }
    hit[found] = true;
    if (row_space(img * ps.basis_record) != l) ok = false;
  }
  for (const Matrix& l : triad_lat) {
    rep.triad_lattice_dims.push_back(static_cast<int>(l.rows()));
  }
  rep.verified = ok;
  return rep;
}

SelfPropertyReport self_properties(const CompactTriad& t,
                                   const std::optional<Matrix>& dual_witness,
                                   const std::optional<Matrix>& assoc_witness) {
  SelfPropertyReport r;
  CompactTriad d = dual_triad(t);
  CompactTriad a = associated_triad(t);
  r.profile_self_dual = triad_profile(d) == triad_profile(t);
  r.profile_self_associated = triad_profile(a) == triad_profile(t);
  if (dual_witness.has_value()) r.dual_witness_ok = verify_triad_witness(d, t, *dual_witness);
  if (assoc_witness.has_value()) {
    r.associated_witness_ok = verify_triad_witness(a, t, *assoc_witness);
  }
  return r;
}

SelfPropertyReport self_properties(const NoncompactPair& p,
                                   const std::optional<Matrix>& dual_witness,
                                   const std::optional<Matrix>& assoc_witness) {
  SelfPropertyReport r;
  NoncompactPair d = dual_pair(p);
  NoncompactPair a = associated_pair(p).pair;
  r.profile_self_dual = pair_profile(d) == pair_profile(p);
  r.profile_self_associated = pair_profile(a) == pair_profile(p);
  if (dual_witness.has_value()) r.dual_witness_ok = verify_pair_witness(d, p, *dual_witness);
  if (assoc_witness.has_value()) {
    r.associated_witness_ok = verify_pair_witness(a, p, *assoc_witness);
  }
  return r;
}

}  // namespace liedual
