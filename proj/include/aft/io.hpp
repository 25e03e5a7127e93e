#pragma once

// JSON reading and writing for groups, complexes, actions, models, bounds
// configurations and reports. Every top-level report carries "schema": "aft/1".
// Exact integers that may exceed 64 bits are written as decimal strings.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aft/action.hpp"
#include "aft/bounds.hpp"
#include "aft/complex.hpp"
#include "aft/group.hpp"
#include "aft/homology.hpp"
#include "aft/linear.hpp"
#include "aft/pipeline.hpp"

namespace aft {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "aft/1";

inline Json report_header(const std::string& kind) { return Json{{"schema", kSchema}, {"kind", kind}}; }

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("io: cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("io: " + path.string() + ": " + e.what());
  }
}

inline std::string big_string(const BigInt& x) { return x.str(); }

namespace detail {

inline const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("io: ") + what + " is missing \"" + key + "\"");
  return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw Error(std::string("io: malformed ") + what + ": " + e.what());
  }
}

}  // namespace detail

// groups

inline FiniteAbelianGroup group_from_json(const Json& j) {
  const auto& prim = detail::field(j, "primary", "group");
  if (!prim.is_array()) throw Error("io: group \"primary\" must be an array");
  std::vector<PrimaryComponent> comps;
  for (const auto& c : prim) {
    PrimaryComponent pc;
    pc.p = detail::as<std::int64_t>(detail::field(c, "p", "primary component"), "prime");
    pc.exponents = detail::as<std::vector<int>>(detail::field(c, "exponents", "primary component"), "exponents");
    comps.push_back(std::move(pc));
  }
  return FiniteAbelianGroup(std::move(comps));
}

inline Json group_to_json(const FiniteAbelianGroup& g) {
  Json prim = Json::array();
  for (const auto& c : g.primary()) prim.push_back({{"p", c.p}, {"exponents", c.exponents}});
  return {{"primary", prim}};
}

inline Json element_to_json(const GroupElement& x) { return x.residues; }

inline GroupElement element_from_json(const FiniteAbelianGroup& g, const Json& j) {
  return g.make_element(detail::as<std::vector<std::int64_t>>(j, "group element"));
}

inline Json subgroup_to_json(const Subgroup& h) {
  Json gens = Json::array();
  for (const auto& x : h.generators()) gens.push_back(element_to_json(x));
  return {{"order", h.order()}, {"index", h.index()}, {"generators", gens}};
}

inline Json character_to_json(const Character& c) { return c.exponents; }

// complexes and homology

inline SimplicialComplex complex_from_json(const Json& j) {
  const auto& ms = detail::field(j, "maximal_simplices", "complex");
  return build_complex(detail::as<std::vector<Simplex>>(ms, "maximal_simplices"));
}

/// Accepts an inline literal or a string path resolved against base_dir.
inline SimplicialComplex complex_from_json(const Json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return complex_from_json(read_json_file(p));
  }
  return complex_from_json(j);
}

inline Json complex_to_json(const SimplicialComplex& x) {
  std::vector<Simplex> all = x.all_simplices();
  std::vector<Simplex> maximal;
  for (const auto& s : all) {
    bool is_face = false;
    for (const auto& t : all) {
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        is_face = true;
        break;
      }
    }
    if (!is_face) maximal.push_back(s);
  }
  return {{"maximal_simplices", maximal}};
}

inline Json homology_to_json(const HomologyProfile& h) {
  Json degrees = Json::array();
  for (std::size_t j = 0; j < h.betti_Z.size(); ++j) {
    std::vector<std::string> tors;
    for (const auto& t : h.betti_Z[j].torsion) tors.push_back(big_string(t));
    degrees.push_back({{"degree", j}, {"rank", h.betti_Z[j].rank}, {"torsion", tors}});
  }
  Json modp = Json::object();
  for (const auto& [p, b] : h.betti_mod_p) modp[std::to_string(p)] = b;
  return {{"degrees", degrees},
          {"ranks", h.ranks()},
          {"betti_mod_p", modp},
          {"euler", h.euler},
          {"torsion_primes", h.torsion_primes()},
          {"no_odd_cohomology", h.no_odd_cohomology()}};
}

inline Json analyze_report(const SimplicialComplex& x, const std::vector<std::int64_t>& primes) {
  auto r = report_header("homology");
  std::vector<std::size_t> counts;
  for (int d = 0; d <= x.dimension(); ++d) counts.push_back(x.count(d));
  r["dimension"] = x.dimension();
  r["simplex_counts"] = counts;
  r["components"] = connected_components(x).size();
  r["homology"] = homology_to_json(homology(x, primes));
  return r;
}

// actions

inline SimplicialAction action_from_json(const Json& j, const std::filesystem::path& base_dir = {}) {
  auto g = group_from_json(detail::field(j, "group", "action"));
  auto x = complex_from_json(detail::field(j, "complex", "action"), base_dir);
  auto images = detail::as<std::vector<Permutation>>(detail::field(j, "generator_images", "action"), "generator_images");
  return SimplicialAction(std::move(g), std::move(x), std::move(images));
}

inline Json action_to_json(const SimplicialAction& a) {
  return {{"group", group_to_json(a.group())},
          {"complex", complex_to_json(a.complex())},
          {"generator_images", a.generator_images()}};
}

inline Json goodness_report(const SimplicialAction& a) {
  auto r = report_header("goodness");
  const auto cert = a.validate_good();
  r["group"] = group_to_json(a.group());
  r["vertices"] = a.vertex_count();
  r["simplices"] = a.complex().size();
  r["is_good"] = cert.is_good;
  Json w = Json::array();
  for (const auto& x : cert.witnesses) {
    w.push_back({{"element", element_to_json(x.element)}, {"simplex", x.simplex}, {"moved_face", x.face}});
  }
  r["witnesses"] = w;
  r["action_kernel"] = subgroup_to_json(a.action_kernel());
  if (cert.is_good) {
    const auto fixed = a.fixed_subcomplex(Subgroup::whole(a.group()));
    r["fixed_set"] = {{"simplices", fixed.size()}, {"euler", fixed.euler_characteristic()}};
  } else {
    const auto good = make_good(a);
    r["subdivided"] = {{"vertices", good.vertex_count()}, {"simplices", good.complex().size()}, {"is_good", good.is_good()}};
  }
  return r;
}

// linear models

inline SummandKind summand_kind_from_string(const std::string& s) {
  if (s == "trivial") return SummandKind::Trivial;
  if (s == "sign") return SummandKind::Sign;
  if (s == "rotation") return SummandKind::Rotation;
  throw Error("io: unknown summand kind \"" + s + "\"");
}

inline LinearActionModel model_from_json(const Json& j) {
  auto g = group_from_json(detail::field(j, "group", "model"));
  const auto shape_s = detail::as<std::string>(detail::field(j, "shape", "model"), "shape");
  Shape shape;
  if (shape_s == "disk") {
    shape = Shape::Disk;
  } else if (shape_s == "sphere") {
    shape = Shape::Sphere;
  } else {
    throw Error("io: unknown shape \"" + shape_s + "\"");
  }
  std::vector<Summand> sums;
  for (const auto& s : detail::field(j, "summands", "model")) {
    Summand x;
    x.kind = summand_kind_from_string(detail::as<std::string>(detail::field(s, "kind", "summand"), "kind"));
    if (s.contains("character")) x.character.exponents = detail::as<std::vector<std::int64_t>>(s.at("character"), "character");
    sums.push_back(std::move(x));
  }
  return LinearActionModel(RealRepresentation(std::move(g), std::move(sums)), shape);
}

inline Json model_to_json(const LinearActionModel& m) {
  Json sums = Json::array();
  for (const auto& s : m.rep().summands()) {
    Json x = {{"kind", to_string(s.kind)}};
    if (s.kind != SummandKind::Trivial) x["character"] = character_to_json(s.character);
    sums.push_back(std::move(x));
  }
  return {{"group", group_to_json(m.group())}, {"shape", to_string(m.shape())}, {"summands", sums}};
}

inline Json descent_report(const LinearActionModel& m, std::int64_t lambda) {
  auto r = report_header("descent");
  r["model"] = model_to_json(m);
  r["lambda"] = lambda;
  r["dim_V"] = m.dim_V();
  Json primes = Json::array();
  bool stable_all = true;
  for (auto p : m.acting().primes()) {
    auto mp = m.restricted(m.acting().p_part(p));
    Json e = {{"p", p}, {"initial_fixed_dim", fixed_subspace_dim(mp, mp.acting())}};
    const auto cc = chi_condition(mp);
    e["chi_condition"] = cc.holds;
    if (!cc.holds) {
      e["chi_witness_fixed_summands"] = cc.witness_fixed;
      stable_all = false;
      primes.push_back(std::move(e));
      continue;
    }
    const auto d = descent_to_stable(mp, lambda);
    Json steps = Json::array();
    for (const auto& s : d.steps) {
      steps.push_back({{"character", character_to_json(s.character)},
                       {"index", s.index},
                       {"fixed_dim", s.fixed_dim},
                       {"subgroup", subgroup_to_json(s.subgroup)}});
    }
    e["steps"] = steps;
    e["step_bound"] = big_string(d.step_bound);
    e["index"] = d.index;
    e["stable_subgroup"] = subgroup_to_json(d.subgroup);
    const auto stable = mp.restricted(d.subgroup);
    const auto y = generic_element(stable);
    e["generic_element"] = element_to_json(y);
    e["generic_fixed_dim"] = fixed_subspace_dim(m, y);
    e["stable_fixed_dim"] = fixed_subspace_dim(m, d.subgroup);
    primes.push_back(std::move(e));
  }
  r["primes"] = primes;
  r["chi_condition"] = stable_all;
  return r;
}

// bounds

inline BoundsConfig bounds_config_from_json(const Json& j) {
  BoundsConfig c;
  c.dim = detail::as<std::int64_t>(detail::field(j, "dim", "bounds config"), "dim");
  c.betti_Z = detail::as<std::vector<std::int64_t>>(detail::field(j, "betti_Z", "bounds config"), "betti_Z");
  if (j.contains("betti_mod_p")) {
    for (const auto& [k, v] : j.at("betti_mod_p").items()) {
      std::int64_t p = 0;
      try {
        p = std::stoll(k);
      } catch (const std::exception&) {
        throw Error("io: betti_mod_p key \"" + k + "\" is not a prime");
      }
      c.betti_mod_p[p] = detail::as<std::vector<std::int64_t>>(v, "betti_mod_p");
    }
  }
  if (j.contains("torsion_primes")) {
    for (auto p : detail::as<std::vector<std::int64_t>>(j.at("torsion_primes"), "torsion_primes")) c.torsion_primes.insert(p);
  }
  if (j.contains("mu") && !j.at("mu").is_null()) c.mu = detail::as<std::int64_t>(j.at("mu"), "mu");
  c.validate();
  return c;
}

inline Json bounds_config_to_json(const BoundsConfig& c) {
  Json modp = Json::object();
  for (const auto& [p, b] : c.betti_mod_p) modp[std::to_string(p)] = b;
  Json j = {{"dim", c.dim}, {"betti_Z", c.betti_Z}, {"betti_mod_p", modp}, {"torsion_primes", c.torsion_primes}};
  j["mu"] = c.mu ? Json(*c.mu) : Json(nullptr);
  return j;
}

inline Json f_table(std::int64_t max_k) {
  auto r = report_header("f_table");
  Json rows = Json::array();
  for (std::int64_t k = -1; k <= max_k; ++k) rows.push_back({{"k", k}, {"f", big_string(f_constant(k))}});
  r["rows"] = rows;
  return r;
}

/// Every constant derivable from the configuration; constants that need mu
/// or no odd cohomology are null with a reason when unavailable.
inline Json constants_report(const BoundsConfig& cfg) {
  cfg.validate();
  auto r = report_header("constants");
  r["config"] = bounds_config_to_json(cfg);
  r["parametric_in_mu"] = true;
  Json fv = Json::array();
  for (std::int64_t k = -1; k <= cfg.dim; ++k) fv.push_back({{"k", k}, {"f", big_string(f_constant(k))}});
  r["f_values"] = fv;
  r["euler"] = cfg.euler();
  r["betti_sum"] = cfg.betti_sum();
  r["no_odd_cohomology"] = cfg.no_odd_cohomology();
  r["p0"] = torsion_free_prime(cfg);
  r["P_chi"] = chi_prime_threshold(cfg);
  r["chain_bound_e"] = big_string(chain_bound(cfg.dim, cfg.max_betti_sum()));
  Json cp = Json::array();
  for (auto p : primes_up_to(chi_prime_threshold(cfg))) {
    Json e = {{"p", p}};
    try {
      auto c = prime_chi_constant(p, cfg);
      e["n"] = c.n;
      e["C"] = big_string(c.value);
    } catch (const Error& err) {
      e["C"] = nullptr;
      e["error"] = err.what();
    }
    cp.push_back(std::move(e));
  }
  r["C_p_chi"] = cp;
  r["lambda_chi"] = lambda_chi(cfg);
  r["b"] = betti_square_sum(cfg);
  try {
    r["C_lambda_chi"] = big_string(stable_index_bound(lambda_chi(cfg), cfg));
  } catch (const Error& err) {
    r["C_lambda_chi"] = nullptr;
    r["C_lambda_chi_error"] = err.what();
  }
  try {
    r["composite_bound"] = big_string(composite_bound(cfg));
  } catch (const Error& err) {
    r["composite_bound"] = nullptr;
    r["composite_bound_error"] = err.what();
  }
  return r;
}

// pipeline

inline Json pipeline_to_json(const PipelineReport& p) {
  Json stages = Json::array();
  for (const auto& s : p.stages) {
    stages.push_back({{"p", s.p},
                      {"p_part", subgroup_to_json(s.part)},
                      {"n", s.n},
                      {"gamma_chi", subgroup_to_json(s.gamma_chi)},
                      {"chi_bound", big_string(s.chi_bound)},
                      {"stable", subgroup_to_json(s.stable)},
                      {"gamma_p", element_to_json(s.gamma)},
                      {"descent_steps", s.descent_steps}});
  }
  Json comps = Json::array();
  for (const auto& c : p.components) {
    comps.push_back({{"euler", c.euler}, {"fixed_euler", c.fixed_euler}, {"lefschetz", c.lefschetz}, {"ok", c.ok}});
  }
  return {{"name", p.name},
          {"config", bounds_config_to_json(p.config)},
          {"trivializing", subgroup_to_json(p.trivializing)},
          {"b", p.b},
          {"stages", stages},
          {"gamma", element_to_json(p.gamma)},
          {"a0", subgroup_to_json(p.a0)},
          {"index", p.index},
          {"composite_bound", big_string(p.composite_bound)},
          {"composite_bound_parametric_in_mu", true},
          {"components", comps},
          {"within_bound", p.within_bound},
          {"chi_ok", p.chi_ok},
          {"ok", p.ok()}};
}

}  // namespace aft
