// Integer gradings, parity involutions, and the lattice construction of
// graded pairs. Reference values live in tests/data/golden/keps.json and in
// the grading blocks of tests/data/golden/roots.json.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "golden_util.hpp"
#include "liedual/catalog.hpp"
#include "liedual/keps.hpp"

using namespace liedual;
using goldutil::load_golden;
using goldutil::mat_from_json;
using goldutil::sig_from_json;

namespace {

Vec vec_from_json(const nlohmann::json& arr) {
  Vec v;
  for (const auto& s : arr) v.push_back(GaussRat(parse_rat(s.get<std::string>(), true)));
  return v;
}

std::map<int, size_t> dims_of(const GradingDatum& gd) {
  std::map<int, size_t> dims;
  for (const auto& [k, rows] : gd.components) dims[k] = rows.rows();
  return dims;
}

std::map<int, size_t> dims_from_json(const nlohmann::json& obj) {
  std::map<int, size_t> dims;
  for (const auto& [key, val] : obj.items()) dims[std::stoi(key)] = val.get<size_t>();
  return dims;
}

Err code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const LieError& e) {
    return e.code();
  }
  return Err::INTERNAL;
}

Vec unit(size_t d, size_t i) {
  Vec v(d);
  v[i] = GaussRat(1);
  return v;
}

}  // namespace

TEST_CASE("stored graded pairs match their records") {
  const nlohmann::json gold = load_golden("keps.json");
  for (const char* name : {"sl3_keps", "sl4_keps"}) {
    CAPTURE(name);
    const auto& rec = gold.at(name);
    NoncompactPair p = as_pair(build_fixture(name));
    PairNF nf = normal_form(p);
    size_t d = static_cast<size_t>(nf.pair.g.dim());

    // The characteristic element is the first natural basis vector (the
    // diagonal trace-zero matrix (1,-1,0,..)) in the normalized basis.
    Vec z = CoordSolver(nf.basis_record).coords(unit(d, 0)).value();
    CHECK(z == vec_from_json(rec.at("z_coords")));

    GradingDatum gd = grading_from_Z(nf.pair.g, z);
    CHECK(rec.at("char_recompute").get<bool>());
    CHECK(dims_of(gd) == dims_from_json(rec.at("grading_dims")));
    CHECK(gd.kind == rec.at("kind").get<int>());
    CHECK(!gd.degenerate);

    CHECK(rec.at("grade_reversing").get<bool>());
    CHECK(is_grade_reversing(gd, nf.pair.theta));

    // The pair's involution is exactly the parity twist of its Cartan
    // involution, and the parity map acts by signs on the components.
    Matrix P = sigma_Z(gd);
    CHECK(nf.pair.sigma == P * nf.pair.theta);
    for (const auto& [k, rows] : gd.components) {
      GaussRat s(rat_of(k % 2 != 0 ? -1 : 1));
      for (size_t r = 0; r < rows.rows(); ++r) CHECK(P * rows.row(r) == vec_scale(s, rows.row(r)));
    }

    NoncompactPair kp = keps_pair(gd, nf.pair.theta);
    CHECK(pairs_equal(kp, nf.pair));

    LieAlgebra fix = induced_on(nf.pair.g, eigensplit(nf.pair.sigma).plus);
    CHECK(fix.dim() == rec.at("sigma_fix_dim").get<int>());
    CHECK(symmetric_signature(fix.killing()) == sig_from_json(rec.at("sigma_fix_killing_sig")));

    // Self-duality of graded pairs.
    CHECK(pair_profile(dual_pair(kp)) == pair_profile(kp));
  }
}

TEST_CASE("the grading of the natural trace-zero presentation") {
  NoncompactPair p = as_pair(build_fixture("sl3_keps"));
  GradingDatum gd = grading_from_Z(p.g, unit(8, 0));
  CHECK(gd.kind == 2);
  CHECK(dims_of(gd) == std::map<int, size_t>{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}});
  CHECK(is_grade_reversing(gd, p.theta));

  // A Cartan involution fixing the element does not reverse the grading.
  Matrix w = block_perm_matrix({1, 1, 1}, {1, 0, 2});
  Matrix theta_fix = operator_from_ambient(
      sl_ambient_basis(3), [&](const Matrix& m) { return -(w * m.transpose() * w); });
  CHECK(theta_fix * unit(8, 0) == unit(8, 0));
  CHECK(!is_grade_reversing(gd, theta_fix));
  CHECK(code_of([&] { keps_pair(gd, theta_fix); }) == Err::NOT_GRADE_REVERSING);

  // The zero element gives the degenerate one-component grading.
  GradingDatum gd0 = grading_from_Z(p.g, Vec(8));
  CHECK(gd0.degenerate);
  CHECK(gd0.kind == 0);
  REQUIRE(gd0.components.size() == 1);
  CHECK(gd0.components[0].second.rows() == 8);
  CHECK(sigma_Z(gd0) == Matrix::identity(8));
  CHECK(is_grade_reversing(gd0, p.theta));
  NoncompactPair riem = keps_pair(gd0, p.theta);
  CHECK(riem.sigma == riem.theta);

  // Rejections: non-integer spectrum, non-diagonalizable action, wrong
  // length, non-semisimple algebra.
  CHECK(code_of([&] { grading_from_Z(p.g, vec_scale(GaussRat(rat_of(1, 2)), unit(8, 0))); }) ==
        Err::NON_INTEGER_GRADING);
  CHECK(code_of([&] { grading_from_Z(p.g, unit(8, 2)); }) == Err::NON_INTEGER_GRADING);
  CHECK(code_of([&] { grading_from_Z(p.g, Vec(5)); }) == Err::DIM_MISMATCH);
  LieAlgebra gl2 = algebra_from_ambient(gl_ambient_basis(2));
  CHECK(code_of([&] { grading_from_Z(gl2, Vec(4)); }) == Err::NOT_SEMISIMPLE);
}

TEST_CASE("lattice construction matches the stored grading blocks") {
  const nlohmann::json gold = load_golden("roots.json");
  for (const char* name : {"so4_I22", "so5_I23", "su3_conj"}) {
    CAPTURE(name);
    const auto& rec = gold.at(name);
    const auto& krec = rec.at("keps");
    Fixture fx = build_fixture(rec.at("base_fixture").get<std::string>());
    TriadNF nf = normal_form(as_triad(fx));
    RootDatum rd =
        restricted_roots(nf.triad.g, nf.triad.theta1, maximal_abelian(nf.triad.g, nf.triad.theta1));
    Vec v = gamma_lattice(rd)[0];

    KepsConstruction kc = keps_from_gamma(rd, v);
    CHECK(kc.triad.theta2 == mat_from_json(krec.at("theta2")));
    CHECK(kc.z_pair == vec_from_json(krec.at("z_pair_coords")));
    CHECK(dims_of(kc.grading) == dims_from_json(krec.at("grading_dims")));
    CHECK(kc.grading.kind == krec.at("kind").get<int>());
    CHECK(!kc.degenerate);
    CHECK(eigensplit(kc.triad.theta2).plus.rows() == krec.at("k2_dim").get<size_t>());
    CHECK(sigma_Z(kc.grading) == parity_operator(rd, v));
    CHECK(theta_sim_witness_check(kc.triad, rd, v));
    CHECK(triads_equal(psi(kc.dual.pair).triad, kc.triad));
    CHECK(pair_profile(dual_pair(kc.dual.pair)) == pair_profile(kc.dual.pair));

    // Zero vector: the Riemannian degenerate case.
    KepsConstruction kc0 = keps_from_gamma(rd, Vec(rd.a1.rows()));
    CHECK(kc0.degenerate);
    CHECK(kc0.grading.kind == 0);
    CHECK(kc0.triad.theta2 == kc0.triad.theta1);
    CHECK(theta_sim_witness_check(kc0.triad, rd, Vec(rd.a1.rows())));
  }
}

TEST_CASE("witness search over the lattice box") {
  const nlohmann::json gold = load_golden("roots.json");
  Fixture fx = build_fixture("so4_I22_J11");
  TriadNF nf = normal_form(as_triad(fx));
  RootDatum rd =
      restricted_roots(nf.triad.g, nf.triad.theta1, maximal_abelian(nf.triad.g, nf.triad.theta1));

  // A constructed triad always yields its own witness within one shell.
  Vec v = gamma_lattice(rd)[0];
  KepsConstruction kc = keps_from_gamma(rd, v);
  auto w = find_sim_witness(kc.triad, rd, 1);
  REQUIRE(w.has_value());
  CHECK(theta_sim_witness_check(kc.triad, rd, *w));

  // A Riemannian triad's minimal witness is the zero vector.
  KepsConstruction kc0 = keps_from_gamma(rd, Vec(2));
  auto w0 = find_sim_witness(kc0.triad, rd, 2);
  REQUIRE(w0.has_value());
  CHECK(vec_is_zero(*w0));

  // The catalog triad itself: the search reports any witness found in the
  // box consistently with the membership test.
  auto wt = find_sim_witness(nf.triad, rd, 2);
  if (wt.has_value()) CHECK(theta_sim_witness_check(nf.triad, rd, *wt));

  // Bad inputs.
  CHECK(code_of([&] { find_sim_witness(nf.triad, rd, -1); }) == Err::BAD_PARAMS);
  Vec bad = {GaussRat(rat_of(1, 2)), GaussRat()};
  CHECK(code_of([&] { keps_from_gamma(rd, bad); }) == Err::NOT_IN_GAMMA);
  CHECK(code_of([&] { theta_sim_witness_check(nf.triad, rd, bad); }) == Err::NOT_IN_GAMMA);
  Fixture other = build_fixture("su3_conj_I21conj");
  TriadNF onf = normal_form(as_triad(other));
  CHECK(code_of([&] { theta_sim_witness_check(onf.triad, rd, Vec(2)); }) == Err::BAD_PARAMS);
}
