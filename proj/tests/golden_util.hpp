// Shared helpers for tests that compare library output against the frozen
// reference data under tests/data/golden (computed by the independent
// Python implementation in tests/oracles). All values are exact strings;
// parsing is strict so any drift in formats fails loudly.
#pragma once

#include <fstream>
#include <json.hpp>
#include <string>

#include "liedual/invol.hpp"
#include "liedual/lie.hpp"

namespace goldutil {

inline nlohmann::json load_golden(const std::string& filename) {
  std::string path = std::string(LIEDUAL_TEST_DATA_DIR) + "/golden/" + filename;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

inline liedual::Rat rat_from_json_pair(const nlohmann::json& num, const nlohmann::json& den) {
  liedual::Rat n = liedual::parse_rat(num.get<std::string>(), true);
  liedual::Rat d = liedual::parse_rat(den.get<std::string>(), true);
  return n / d;
}

inline liedual::SCTable sc_from_json(const nlohmann::json& arr) {
  liedual::SCTable t;
  for (const auto& e : arr) {
    int i = e.at("i").get<int>();
    int j = e.at("j").get<int>();
    int k = e.at("k").get<int>();
    t[{i, j}].push_back({k, rat_from_json_pair(e.at("num"), e.at("den"))});
  }
  return t;
}

inline liedual::Matrix mat_from_json(const nlohmann::json& rows) {
  size_t r = rows.size();
  size_t c = r == 0 ? 0 : rows.at(0).size();
  liedual::Matrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      m.at(i, j) = liedual::GaussRat(liedual::parse_rat(rows.at(i).at(j).get<std::string>(), true));
  return m;
}

inline liedual::Signature sig_from_json(const nlohmann::json& a) {
  return {a.at(0).get<size_t>(), a.at(1).get<size_t>(), a.at(2).get<size_t>()};
}

inline liedual::ViewProfile view_from_json(const nlohmann::json& v) {
  liedual::ViewProfile p;
  p.dim = v.at("dim").get<int>();
  p.center_dim = v.at("center_dim").get<int>();
  p.center_plus_dim = v.at("center_plus_dim").get<int>();
  p.center_minus_dim = v.at("center_minus_dim").get<int>();
  p.derived_dim = v.at("derived_dim").get<int>();
  p.own_sig = sig_from_json(v.at("own_killing_sig"));
  p.restricted_sig = sig_from_json(v.at("restricted_killing_sig"));
  return p;
}

// The full profile of a fixture record ("profile" key), first/second view
// keyed by object kind.
inline liedual::Profile profile_from_json(const nlohmann::json& rec) {
  const auto& pr = rec.at("profile");
  liedual::Profile p;
  p.g_sig = sig_from_json(pr.at("g_killing_sig"));
  if (rec.at("kind").get<std::string>() == "triad") {
    p.first_view = view_from_json(pr.at("view_theta1"));
    p.second_view = view_from_json(pr.at("view_theta2"));
  } else {
    p.first_view = view_from_json(pr.at("view_sigma"));
    p.second_view = view_from_json(pr.at("view_theta"));
  }
  return p;
}

// Builds the algebra of a sample-set record from its stored natural basis
// structure constants.
inline liedual::LieAlgebra algebra_from_record(const nlohmann::json& rec, const char* key) {
  return liedual::LieAlgebra::from_sc(rec.at("dim").get<int>(), sc_from_json(rec.at(key)));
}

inline liedual::CompactTriad triad_from_record(const nlohmann::json& rec, const char* sc_key,
                                               const char* t1_key, const char* t2_key) {
  return liedual::make_triad(algebra_from_record(rec, sc_key), mat_from_json(rec.at(t1_key)),
                             mat_from_json(rec.at(t2_key)));
}

inline liedual::NoncompactPair pair_from_record(const nlohmann::json& rec, const char* sc_key,
                                                const char* s_key, const char* th_key) {
  return liedual::make_pair(algebra_from_record(rec, sc_key), mat_from_json(rec.at(s_key)),
                            mat_from_json(rec.at(th_key)));
}

}  // namespace goldutil
