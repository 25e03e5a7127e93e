#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <vector>

#include "aft/bounds.hpp"
#include "aft/corpus.hpp"
#include "aft/pipeline.hpp"
#include "aft/random.hpp"

using namespace aft;

namespace {

// random complex on n vertices: each triangle and edge kept independently
SimplicialComplex random_complex(Rng& rng, int n, double p_tri, double p_edge) {
  std::vector<Simplex> gens;
  for (int a = 0; a < n; ++a) {
    gens.push_back({a});
    for (int b = a + 1; b < n; ++b) {
      if (rng.chance(p_edge)) gens.push_back({a, b});
      for (int c = b + 1; c < n; ++c) {
        if (rng.chance(p_tri)) gens.push_back({a, b, c});
      }
    }
  }
  return build_complex(gens);
}

std::int64_t count_divisible(const std::vector<BigInt>& torsion, std::int64_t p) {
  std::int64_t n = 0;
  for (const auto& t : torsion) n += t % p == 0;
  return n;
}

const std::vector<CorpusEntry>& corpus_entries() {
  static const auto c = load_corpus();
  return c;
}

}  // namespace

TEST_CASE("random complexes: Euler characteristic from ranks and from counts", "[property]") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Rng rng(11, i);
    const auto x = random_complex(rng, static_cast<int>(rng.uniform(3, 8)), 0.25, 0.3);
    const auto h = homology(x, {2, 3, 5});
    std::int64_t chi = 0;
    for (std::size_t j = 0; j < h.betti_Z.size(); ++j) chi += (j % 2 == 0 ? 1 : -1) * h.betti_Z[j].rank;
    CHECK(chi == x.euler_characteristic());
    CHECK(h.euler == chi);
    for (auto p : {2, 3, 5}) {
      std::int64_t chi_p = 0;
      const auto& b = h.betti_mod_p.at(p);
      for (std::size_t j = 0; j < b.size(); ++j) chi_p += (j % 2 == 0 ? 1 : -1) * b[j];
      CHECK(chi_p == chi);
    }
    CHECK(h.betti_Z.front().rank == static_cast<std::int64_t>(connected_components(x).size()));
  }
}

TEST_CASE("random complexes: universal coefficients", "[property]") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Rng rng(12, i);
    auto x = random_complex(rng, static_cast<int>(rng.uniform(4, 8)), 0.35, 0.2);
    if (rng.chance(0.2)) x = disjoint_union(x, projective_plane_6());
    const auto h = homology(x, {2, 3});
    for (auto p : {2, 3}) {
      const auto& b = h.betti_mod_p.at(p);
      for (std::size_t j = 0; j < h.betti_Z.size(); ++j) {
        std::int64_t expect = h.betti_Z[j].rank + count_divisible(h.betti_Z[j].torsion, p);
        if (j > 0) expect += count_divisible(h.betti_Z[j - 1].torsion, p);
        CHECK(b[j] == expect);
      }
    }
  }
}

TEST_CASE("random complexes: barycentric subdivision keeps homology", "[property]") {
  for (std::uint64_t i = 0; i < 25; ++i) {
    Rng rng(13, i);
    const auto x = random_complex(rng, static_cast<int>(rng.uniform(3, 6)), 0.3, 0.3);
    const auto sd = barycentric_subdivision(x).complex;
    const auto hx = homology(x, {2, 3});
    const auto hs = homology(sd, {2, 3});
    CHECK(hx.betti_Z == hs.betti_Z);
    CHECK(hx.betti_mod_p == hs.betti_mod_p);
  }
}

TEST_CASE("random complexes: homology of a disjoint union adds", "[property]") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Rng rng(14, i);
    const auto a = random_complex(rng, static_cast<int>(rng.uniform(3, 6)), 0.3, 0.3);
    const auto b = random_complex(rng, static_cast<int>(rng.uniform(3, 6)), 0.3, 0.3);
    const auto ha = homology(a, {2}), hb = homology(b, {2}), hu = homology(disjoint_union(a, b), {2});
    for (std::size_t j = 0; j < hu.betti_Z.size(); ++j) {
      const std::int64_t ra = j < ha.betti_Z.size() ? ha.betti_Z[j].rank : 0;
      const std::int64_t rb = j < hb.betti_Z.size() ? hb.betti_Z[j].rank : 0;
      CHECK(hu.betti_Z[j].rank == ra + rb);
    }
    CHECK(hu.euler == ha.euler + hb.euler);
  }
}

TEST_CASE("no odd cohomology detector", "[property]") {
  for (const auto& e : corpus_entries()) {
    if (e.is_linear()) continue;
    CAPTURE(e.name);
    const auto h = homology(e.space());
    bool manual = h.torsion_free();
    for (std::size_t j = 1; j < h.betti_Z.size(); j += 2) manual = manual && h.betti_Z[j].rank == 0;
    CHECK(h.no_odd_cohomology() == manual);
    CHECK(e.no_odd_cohomology == manual);
    if (manual) {
      // forces chi = sum of Betti numbers over every field
      CHECK(h.euler == h.betti_sum());
      for (const auto& [p, b] : h.betti_mod_p) CHECK(h.betti_sum_mod_p(p) == h.euler);
    }
  }
  CHECK_FALSE(homology(projective_plane_6()).no_odd_cohomology());
  CHECK_FALSE(homology(cycle_complex(5)).no_odd_cohomology());
  CHECK(homology(simplex_boundary(3)).no_odd_cohomology());
}

TEST_CASE("composite bound does not see the triangulation", "[property]") {
  for (const auto& e : corpus_entries()) {
    if (e.is_linear() || !e.no_odd_cohomology || e.space().size() > 40) continue;
    CAPTURE(e.name);
    const auto& x = e.space();
    const auto sd = barycentric_subdivision(x).complex;
    const auto a = config_from_homology(homology(x, {2, 3, 5, 7}), x.dimension(), e.mu);
    const auto b = config_from_homology(homology(sd, {2, 3, 5, 7}), sd.dimension(), e.mu);
    CHECK(composite_bound(a) == composite_bound(b));
  }
}

TEST_CASE("seeded generators are deterministic", "[property]") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng a(99, i), b(99, i);
    const auto ma = random_disk_model(a);
    const auto mb = random_disk_model(b);
    CHECK(ma.group().primary() == mb.group().primary());
    REQUIRE(ma.rep().summands().size() == mb.rep().summands().size());
    for (std::size_t k = 0; k < ma.rep().summands().size(); ++k) {
      CHECK(ma.rep().summands()[k].kind == mb.rep().summands()[k].kind);
      CHECK(ma.rep().summands()[k].character == mb.rep().summands()[k].character);
    }
  }
  // different streams differ somewhere
  std::set<std::int64_t> orders;
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng r(99, i);
    orders.insert(random_group(r).order());
  }
  CHECK(orders.size() > 5);
}

TEST_CASE("random groups respect the order cap", "[property]") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng r(5, i);
    const auto g = random_group(r, 512);
    CHECK(g.order() <= 512);
    Rng q(6, i);
    const auto h = random_group(q, 512, 3);
    CHECK(h.order() <= 512);
    CHECK(h.primes() == std::vector<std::int64_t>{3});
  }
}

TEST_CASE("corpus boundaries are invariant subcomplexes", "[property]") {
  std::int64_t with_boundary = 0;
  for (const auto& e : corpus_entries()) {
    if (e.is_linear()) continue;
    CAPTURE(e.name);
    CHECK(e.boundary.is_subcomplex_of(e.space()));
    with_boundary += !e.boundary.empty();
    if (!e.action) continue;
    for (const auto& perm : e.action->generator_images()) {
      for (const auto& s : e.boundary.all_simplices()) CHECK(e.boundary.contains(apply_to_simplex(perm, s)));
    }
  }
  CHECK(with_boundary > 0);
}
