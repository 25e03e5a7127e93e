#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <string>

#include "aft/corpus.hpp"
#include "aft/io.hpp"
#include "aft/verify.hpp"

using namespace aft;

namespace {

const std::filesystem::path kSamples = AFT_SAMPLES_DIR;

}  // namespace

TEST_CASE("group literals", "[io]") {
  auto j = Json::parse(R"({"primary": [{"p": 2, "exponents": [2, 1]}, {"p": 3, "exponents": [1]}]})");
  auto g = group_from_json(j);
  CHECK(g.order() == 24);
  CHECK(g.factor_orders() == std::vector<std::int64_t>{4, 2, 3});
  CHECK(group_to_json(g) == j);
  CHECK(group_from_json(Json::parse(R"({"primary": []})")).order() == 1);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"primary": [{"p": 4, "exponents": [1]}]})")), Error);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"primary": [{"p": 2, "exponents": [1, 2]}]})")), Error);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"primary": [{"p": 2}]})")), Error);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"cyclic": [6]})")), Error);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"primary": [{"p": "two", "exponents": [1]}]})")), Error);
  auto x = element_from_json(g, Json::parse("[5, 3, 4]"));
  CHECK(x.residues == std::vector<std::int64_t>{1, 1, 1});
}

TEST_CASE("complex literals round trip", "[io]") {
  for (const auto& x : {simplex_boundary(3), projective_plane_6(), cycle_complex(5), simplex_complex(2),
                        disjoint_union(simplex_complex(0), simplex_boundary(2))}) {
    auto j = complex_to_json(x);
    CHECK(complex_from_json(j) == x);
  }
  CHECK(complex_to_json(simplex_complex(2)) == Json::parse(R"({"maximal_simplices": [[0, 1, 2]]})"));
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"maximal_simplices": [[0, 0]]})")), Error);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"simplices": []})")), Error);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"maximal_simplices": "x"})")), Error);
}

TEST_CASE("homology report", "[io]") {
  auto r = analyze_report(projective_plane_6(), {2, 3});
  CHECK(r.at("schema") == "aft/1");
  const auto& h = r.at("homology");
  CHECK(h.at("ranks") == Json::parse("[1, 0, 0]"));
  CHECK(h.at("degrees").at(1).at("torsion") == Json::parse(R"(["2"])"));
  CHECK(h.at("betti_mod_p").at("2") == Json::parse("[1, 1, 1]"));
  CHECK(h.at("betti_mod_p").at("3") == Json::parse("[1, 0, 0]"));
  CHECK(h.at("no_odd_cohomology") == false);
  CHECK(r.at("simplex_counts") == Json::parse("[6, 15, 10]"));
}

TEST_CASE("actions: literal, file reference and round trip", "[io]") {
  auto a = action_from_json(read_json_file(kSamples / "hexagon_rotation.json"), kSamples);
  CHECK(a.group().order() == 6);
  CHECK(a.complex() == cycle_complex(6));
  CHECK(a.is_good());
  auto back = action_from_json(action_to_json(a));
  CHECK(back.complex() == a.complex());
  CHECK(back.generator_images() == a.generator_images());
  auto bad = action_to_json(a);
  bad["generator_images"] = Json::parse("[[1, 2, 3, 4, 5, 0]]");
  CHECK_THROWS_AS(action_from_json(bad), Error);
  bad["complex"] = "missing-file.json";
  CHECK_THROWS_AS(action_from_json(bad, kSamples), Error);
}

TEST_CASE("goodness report", "[io]") {
  auto good = goodness_report(action_from_json(read_json_file(kSamples / "hexagon_rotation.json"), kSamples));
  CHECK(good.at("is_good") == true);
  CHECK(good.at("witnesses").empty());
  CHECK(good.at("fixed_set").at("simplices") == 0);
  auto swap = goodness_report(action_from_json(read_json_file(kSamples / "segment_swap.json")));
  CHECK(swap.at("is_good") == false);
  CHECK(swap.at("witnesses").at(0).at("simplex") == Json::parse("[0, 1]"));
  CHECK(swap.at("subdivided").at("is_good") == true);
}

TEST_CASE("models round trip", "[io]") {
  auto m = model_from_json(read_json_file(kSamples / "klein_disk.json"));
  CHECK(m.shape() == Shape::Disk);
  CHECK(m.dim_V() == 6);
  auto back = model_from_json(model_to_json(m));
  CHECK(back.dim_V() == m.dim_V());
  CHECK(model_to_json(back) == model_to_json(m));
  auto j = model_to_json(m);
  j["shape"] = "torus";
  CHECK_THROWS_AS(model_from_json(j), Error);
  j = model_to_json(m);
  j["summands"][0]["kind"] = "rotation";
  CHECK_THROWS_AS(model_from_json(j), Error);  // order 2 character on a rotation summand
  j["summands"][0]["kind"] = "twist";
  CHECK_THROWS_AS(model_from_json(j), Error);
}

TEST_CASE("descent report", "[io]") {
  auto m = model_from_json(read_json_file(kSamples / "klein_disk.json"));
  auto r = descent_report(m, 2);
  CHECK(r.at("schema") == "aft/1");
  CHECK(r.at("chi_condition") == true);
  const auto& p2 = r.at("primes").at(0);
  CHECK(p2.at("p") == 2);
  CHECK(p2.at("generic_fixed_dim") == p2.at("stable_fixed_dim"));
  CHECK(p2.at("steps").size() < 8);
  auto anti = descent_report(model_from_json(read_json_file(kSamples / "sphere2_antipodal.json")), 4);
  CHECK(anti.at("chi_condition") == false);
}

TEST_CASE("bounds configuration and constants report", "[io]") {
  auto cfg = bounds_config_from_json(read_json_file(kSamples / "sphere2_config.json"));
  CHECK(cfg.dim == 2);
  CHECK(cfg.betti_Z == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cfg.mu == 3);
  auto r = constants_report(cfg);
  CHECK(r.at("composite_bound") == composite_bound(cfg).str());
  CHECK(r.at("lambda_chi") == 4);
  CHECK(r.at("b") == 2);
  CHECK(r.at("P_chi") == 5);
  CHECK(r.at("parametric_in_mu") == true);
  CHECK(r.at("chain_bound_e") == "10");

  auto rp2 = constants_report(bounds_config_from_json(read_json_file(kSamples / "projective_plane_config.json")));
  CHECK(rp2.at("composite_bound").is_null());
  CHECK(rp2.contains("composite_bound_error"));
  CHECK(rp2.at("p0") == 3);

  auto no_mu = bounds_config_to_json(cfg);
  no_mu["mu"] = nullptr;
  auto nm = constants_report(bounds_config_from_json(no_mu));
  CHECK(nm.at("composite_bound").is_null());
  CHECK(nm.at("C_p_chi").at(0).at("C").is_null());

  CHECK_THROWS_AS(bounds_config_from_json(Json::parse(R"({"dim": -1, "betti_Z": []})")), Error);
  CHECK_THROWS_AS(bounds_config_from_json(Json::parse(R"({"dim": 2, "betti_Z": [1], "betti_mod_p": {"4": [1]}})")), Error);
  CHECK_THROWS_AS(bounds_config_from_json(Json::parse(R"({"dim": 2})")), Error);
}

TEST_CASE("f table", "[io]") {
  auto t = f_table(8);
  CHECK(t.at("schema") == "aft/1");
  REQUIRE(t.at("rows").size() == 10);
  CHECK(t.at("rows").at(0).at("k") == -1);
  CHECK(t.at("rows").at(9).at("f") == "80640");
}

TEST_CASE("pipeline report", "[io]") {
  for (const auto& e : load_corpus()) {
    if (e.name != "sphere2-antipodal") continue;
    auto j = pipeline_to_json(run_pipeline(e));
    CHECK(j.at("index") == 2);
    CHECK(j.at("ok") == true);
    CHECK(j.at("a0").at("order") == 1);
  }
}

TEST_CASE("verification reports", "[io][verify]") {
  auto r = run_suite("chain-bound", 1);
  CHECK(r.cases.size() == 91);
  CHECK(r.ok());
  auto j = r.to_json();
  CHECK(j.at("schema") == "aft/1");
  CHECK(j.at("violations") == 0);
  CHECK(j.contains("wall_time_ms"));
  CHECK_FALSE(r.to_json(false).contains("wall_time_ms"));
  CHECK_THROWS_AS(run_suite("nope", 1), Error);
  CHECK_THROWS_AS(scale_from_string("huge"), Error);
  CHECK(suite_names().size() == 9);
}

TEST_CASE("verification reports are deterministic apart from timing", "[io][verify]") {
  for (const char* s : {"disks", "spheres", "minkowski"}) {
    CAPTURE(s);
    auto a = run_suite(s, 7).to_json(false).dump();
    auto b = run_suite(s, 7).to_json(false).dump();
    CHECK(a == b);
  }
  CHECK(run_suite("disks", 7).to_json(false) != run_suite("disks", 8).to_json(false));
}
