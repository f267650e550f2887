// The worked-example registry: ambient matrix families, the named example
// objects with their stored reference records, and the named intertwining
// witnesses. Reference values live in tests/data/golden/fixtures.json.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "golden_util.hpp"
#include "liedual/catalog.hpp"
#include "liedual/duality.hpp"
#include "liedual/ideals.hpp"

using namespace liedual;
using goldutil::load_golden;
using goldutil::mat_from_json;
using goldutil::profile_from_json;
using goldutil::sc_from_json;
using goldutil::sig_from_json;
using goldutil::view_from_json;

namespace {

const nlohmann::json& gold() {
  static nlohmann::json j = load_golden("fixtures.json");
  return j;
}

template <typename T>
std::string tag_of(const T& obj) {
  try {
    return to_string(classify_irreducible(obj).tag);
  } catch (const LieError& e) {
    if (e.code() == Err::NOT_IRREDUCIBLE) return "NOT_IRREDUCIBLE";
    throw;
  }
}

std::vector<int> dims_sorted(const std::vector<Matrix>& subs) {
  std::vector<int> d;
  for (const Matrix& s : subs) d.push_back(static_cast<int>(s.rows()));
  std::sort(d.begin(), d.end());
  return d;
}

Err code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const LieError& e) {
    return e.code();
  }
  return Err::INTERNAL;
}

}  // namespace

TEST_CASE("ambient basis families and standard matrices") {
  CHECK(so_ambient_basis(4).size() == 6);
  CHECK(sopq_ambient_basis(2, 1).size() == 3);
  CHECK(su_ambient_basis(3).size() == 8);
  CHECK(sl_ambient_basis(4).size() == 15);
  CHECK(gl_ambient_basis(2).size() == 4);
  CHECK(dsum_ambient_basis({su_ambient_basis(2), su_ambient_basis(2)}).size() == 6);

  // Every family is trace-compatible with its defining conditions in the
  // smallest interesting size.
  for (const Matrix& m : so_ambient_basis(3)) CHECK(m.transpose() == -m);
  for (const Matrix& m : su_ambient_basis(2)) CHECK(m.conj().transpose() == -m);
  Matrix i21 = ipq_matrix(2, 1);
  for (const Matrix& m : sopq_ambient_basis(2, 1))
    CHECK((i21 * m.transpose() * i21) == -m);

  Matrix j1 = rot_J(1);
  CHECK(j1.at(0, 1) == GaussRat(-1));
  CHECK(j1.at(1, 0) == GaussRat(1));
  CHECK(j1 * j1 == -Matrix::identity(2));
  Matrix j11 = jpq_matrix(1, 1);
  CHECK(j11 * j11 == -Matrix::identity(4));
  CHECK(j11.at(0, 1) == GaussRat(-1));
  CHECK(j11.at(2, 3) == GaussRat(-1));
  Matrix jp = jprime_matrix(2);
  CHECK(jp == jp.transpose());
  CHECK(jp * jp == Matrix::identity(4));
  Matrix ip = iprime_matrix(1, 1);
  CHECK(ip.at(0, 0) == GaussRat(1));
  CHECK(ip.at(2, 2) == -gauss_i());
  Matrix ipinv(4, 4);
  ipinv.at(0, 0) = GaussRat(1);
  ipinv.at(1, 1) = GaussRat(1);
  ipinv.at(2, 2) = gauss_i();
  ipinv.at(3, 3) = gauss_i();
  CHECK(ip * ipinv == Matrix::identity(4));
  Matrix pr = block_perm_matrix({2, 2}, {1, 0});
  CHECK(pr.at(2, 0) == GaussRat(1));
  CHECK(pr.at(0, 2) == GaussRat(1));
  CHECK(pr * pr == Matrix::identity(4));

  LieAlgebra su2 = algebra_from_ambient(su_ambient_basis(2));
  CHECK(su2.dim() == 3);
  CHECK(su2.is_compact_semisimple());
  CHECK(su2.ambient().has_value());
  CHECK(su2.ambient()->n == 2);

  // Degenerate inputs are rejected.
  std::vector<Matrix> dep = {rot_J(1), rot_J(1) * GaussRat(Rat(2))};
  CHECK(code_of([&] { algebra_from_ambient(dep); }) == Err::MALFORMED);
  std::vector<Matrix> open = {Matrix::from_rows({{GaussRat(0), GaussRat(1), GaussRat(0), GaussRat(0)}}, 4)};
  // E_01 and E_10 bracket to a diagonal matrix outside their span.
  Matrix e01(2, 2), e10(2, 2);
  e01.at(0, 1) = GaussRat(1);
  e10.at(1, 0) = GaussRat(1);
  CHECK(code_of([&] { algebra_from_ambient({e01, e10}); }) == Err::MALFORMED);
  Matrix e00(2, 2);
  e00.at(0, 0) = GaussRat(1);
  CHECK(code_of([&] {
          operator_from_ambient(su_ambient_basis(2), [&](const Matrix&) { return e00; });
        }) == Err::NOT_IN_SPAN);
}

TEST_CASE("registry names and validation") {
  std::vector<std::string> names = fixture_names();
  CHECK(names.size() == 19);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  std::vector<Fixture> suite = fixture_suite();
  CHECK(suite.size() == names.size());
  for (size_t i = 0; i < suite.size(); ++i) CHECK(suite[i].name == names[i]);
  for (const Fixture& f : suite) {
    CHECK(!f.description.empty());
    CHECK(f.g.ambient().has_value());
    CHECK(f.g.ambient()->n == f.ambient_n);
  }
  CHECK(code_of([] { build_fixture("no_such_example"); }) == Err::BAD_PARAMS);
}

TEST_CASE("every fixture matches its stored record") {
  const auto& g = gold();
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    REQUIRE(g.contains(name));
    const auto& rec = g.at(name);
    Fixture f = build_fixture(name);
    bool triad = f.kind == "triad";
    CHECK(f.kind == rec.at("kind").get<std::string>());
    CHECK(f.g.dim() == rec.at("dim").get<int>());
    CHECK(f.ambient_n == rec.at("ambient_n").get<int>());
    CHECK(symmetric_signature(f.g.killing()) == sig_from_json(rec.at("killing_signature")));
    size_t terms = 0;
    for (const auto& [key, entry] : f.g.table()) terms += entry.size();
    CHECK(terms == rec.at("natural_sc_count").get<size_t>());

    const Matrix& dist = triad ? f.involutions[0].second : f.involutions[1].second;
    const Matrix& other = triad ? f.involutions[1].second : f.involutions[0].second;
    EigenSplit es = eigensplit(dist);
    CHECK(static_cast<int>(es.plus.rows()) == rec.at("split_dims").at(0).get<int>());
    CHECK(static_cast<int>(es.minus.rows()) == rec.at("split_dims").at(1).get<int>());
    std::array<int, 4> jd = joint_dims(joint_split(dist, other));
    for (size_t t = 0; t < 4; ++t) CHECK(jd[t] == rec.at("joint_dims").at(t).get<int>());

    std::vector<Matrix> ideals = minimal_ideals(f.g).minimal_ideals;
    CHECK(dims_sorted(ideals) == rec.at("minimal_ideal_dims").get<std::vector<int>>());
    std::vector<Matrix> atoms =
        invariant_atoms(ideals, {f.involutions[0].second, f.involutions[1].second});
    CHECK(dims_sorted(atoms) == rec.at("invariant_atom_dims").get<std::vector<int>>());

    if (triad) {
      CompactTriad t = as_triad(f);
      CHECK(tag_of(t) == rec.at("class").get<std::string>());
      CHECK(triad_profile(t) == profile_from_json(rec));
      if (rec.contains("components")) {
        std::vector<CompactTriad> comps = irreducible_components(t);
        REQUIRE(comps.size() == rec.at("components").size());
        for (size_t i = 0; i < comps.size(); ++i) {
          CHECK(comps[i].g.dim() == rec.at("components").at(i).at("dim").get<int>());
          CHECK(tag_of(comps[i]) == rec.at("components").at(i).at("class").get<std::string>());
        }
      }
      // Stored non-compact counterpart produced by the construction.
      const auto& drec = rec.at("dual");
      PhiResult d = phi(t);
      CHECK(symmetric_signature(d.pair.g.killing()) == sig_from_json(drec.at("g_killing_sig")));
      CHECK(fixed_point_view(d.pair.g, d.pair.sigma, d.pair.theta) ==
            view_from_json(drec.at("profile_h0")));
      CHECK(fixed_point_view(d.pair.g, d.pair.theta, d.pair.sigma) ==
            view_from_json(drec.at("profile_k0")));
      CHECK(tag_of(d.pair) == drec.at("class").get<std::string>());
      CHECK(dims_sorted(minimal_ideals(d.pair.g).minimal_ideals) ==
            drec.at("ideal_dims").get<std::vector<int>>());
      if (drec.contains("sc")) {
        CHECK(d.pair.g.table() == sc_from_json(drec.at("sc")));
        CHECK(d.pair.sigma == mat_from_json(drec.at("sigma")));
        CHECK(d.pair.theta == mat_from_json(drec.at("theta")));
      }
    } else {
      NoncompactPair p = as_pair(f);
      CHECK(tag_of(p) == rec.at("class").get<std::string>());
      CHECK(pair_profile(p) == profile_from_json(rec));
      if (rec.contains("components")) {
        std::vector<NoncompactPair> comps = irreducible_components(p);
        REQUIRE(comps.size() == rec.at("components").size());
        for (size_t i = 0; i < comps.size(); ++i) {
          CHECK(comps[i].g.dim() == rec.at("components").at(i).at("dim").get<int>());
          CHECK(tag_of(comps[i]) == rec.at("components").at(i).at("class").get<std::string>());
        }
      }
    }
  }
}

TEST_CASE("sample fixtures reproduce the stored presentations bit for bit") {
  const auto& g = gold();
  for (const std::string& name : fixture_names()) {
    const auto& rec = g.at(name);
    if (!rec.contains("natural_sc")) continue;
    CAPTURE(name);
    Fixture f = build_fixture(name);
    CHECK(f.g.table() == sc_from_json(rec.at("natural_sc")));
    for (const auto& [slot, m] : f.involutions)
      CHECK(m == mat_from_json(rec.at("natural_" + slot)));
    if (f.kind == "triad") {
      TriadNF nf = normal_form(as_triad(f));
      CHECK(nf.triad.g.table() == sc_from_json(rec.at("normalized_sc")));
      CHECK(nf.triad.theta1 == mat_from_json(rec.at("normalized_theta1")));
      CHECK(nf.triad.theta2 == mat_from_json(rec.at("normalized_theta2")));
      if (name == "so4_I22_J11")
        CHECK(nf.basis_record == mat_from_json(rec.at("adapted_rows")));
    } else {
      PairNF nf = normal_form(as_pair(f));
      CHECK(nf.pair.g.table() == sc_from_json(rec.at("normalized_sc")));
      CHECK(nf.pair.sigma == mat_from_json(rec.at("normalized_sigma")));
      CHECK(nf.pair.theta == mat_from_json(rec.at("normalized_theta")));
    }
  }
}

TEST_CASE("named witnesses verify") {
  // Conjugation of the first summand intertwines the swap-based triads with
  // their duals and associates.
  Matrix w_nu = witness("phi_nu");
  CHECK(w_nu == Matrix::diag_signs({-1, 1, -1, 1, 1, 1}));
  CompactTriad ta = as_triad(build_fixture("uu_su2_Ta"));
  CompactTriad tb = as_triad(build_fixture("uu_su2_Tb"));
  CompactTriad td = as_triad(build_fixture("uu_su2_Td"));
  SelfPropertyReport ra = self_properties(ta, w_nu, std::nullopt);
  CHECK(ra.profile_self_dual);
  REQUIRE(ra.dual_witness_ok.has_value());
  CHECK(*ra.dual_witness_ok);
  SelfPropertyReport rd = self_properties(td, std::nullopt, w_nu);
  CHECK(rd.profile_self_associated);
  REQUIRE(rd.associated_witness_ok.has_value());
  CHECK(*rd.associated_witness_ok);
  // The intermediate triad is associated to the first one on the nose.
  CHECK(triads_equal(associated_triad(tb), ta));
  CHECK_FALSE(self_properties(tb).profile_self_dual);

  // Fourfold block-exchange triad: self-dual and self-associated through
  // explicit block permutations.
  CompactTriad tc = as_triad(build_fixture("four_su2_Tc"));
  SelfPropertyReport rc = self_properties(tc, witness("rho_13"), witness("rho_34"));
  REQUIRE(rc.dual_witness_ok.has_value());
  CHECK(*rc.dual_witness_ok);
  REQUIRE(rc.associated_witness_ok.has_value());
  CHECK(*rc.associated_witness_ok);

  // The twisted so(4) example lands on the split real form so(2,2).
  PhiResult d = phi(as_triad(build_fixture("so4_I22_J11")));
  LieAlgebra so22 = algebra_from_ambient(sopq_ambient_basis(2, 2));
  CHECK(verify_algebra_witness(d.pair.g, so22, witness("so4_twist_to_so22")));

  // Fixed points of the block-exchange inside so(2,2) form a general linear
  // algebra, identified by adding the two blocks.
  Matrix jp = jprime_matrix(2);
  Matrix s = operator_from_ambient(so22.ambient()->basis,
                                   [&](const Matrix& x) { return jp * x * jp; });
  LieAlgebra fixalg = induced_on(so22, eigensplit(s).plus);
  CHECK(fixalg.dim() == 4);
  LieAlgebra gl2 = algebra_from_ambient(gl_ambient_basis(2));
  CHECK(verify_algebra_witness(fixalg, gl2, witness("gl_fix_to_gl2")));

  CHECK(code_of([] { witness("no_such_witness"); }) == Err::UNKNOWN_WITNESS);
}
