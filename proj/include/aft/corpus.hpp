#pragma once

// Built-in corpus: standard complexes, good simplicial actions on them and
// parametric linear models, each with curated metadata (mu, expected
// homology) that is checked against recomputation when the corpus is loaded.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aft/action.hpp"
#include "aft/complex.hpp"
#include "aft/homology.hpp"
#include "aft/linear.hpp"

namespace aft {

struct CorpusEntry {
  std::string name;
  std::optional<SimplicialComplex> complex;
  std::optional<SimplicialAction> action;
  std::optional<LinearActionModel> model;
  std::int64_t mu = 0;
  std::vector<std::int64_t> betti;  ///< expected integral ranks
  std::set<std::int64_t> torsion_primes;
  std::int64_t euler = 0;
  bool no_odd_cohomology = false;
  SimplicialComplex boundary;  ///< empty for closed complexes and linear models; neatness is not checked

  const SimplicialComplex& space() const { return action ? action->complex() : *complex; }
  bool is_linear() const { return model.has_value(); }
};

namespace corpus {

inline FiniteAbelianGroup elementary(std::int64_t p, int rank) {
  return FiniteAbelianGroup(std::vector<PrimaryComponent>{{p, std::vector<int>(static_cast<std::size_t>(rank), 1)}});
}

inline FiniteAbelianGroup trivial_group() { return FiniteAbelianGroup(std::vector<PrimaryComponent>{}); }

/// Vertex v -> v + shift mod n on the first n vertices, identity elsewhere.
inline Permutation shift(std::size_t total, int n, int by) {
  Permutation p = identity_permutation(total);
  for (int v = 0; v < n; ++v) p[static_cast<std::size_t>(v)] = (v + by) % n;
  return p;
}

inline Permutation from_cycles(std::size_t total, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity_permutation(total);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
  }
  return p;
}

/// Suspension of the n-gon: equator 0..n-1, poles n and n+1.
inline SimplicialComplex bipyramid(int n) {
  std::vector<Simplex> tops;
  for (int i = 0; i < n; ++i) {
    tops.push_back({i, (i + 1) % n, n});
    tops.push_back({i, (i + 1) % n, n + 1});
  }
  for (auto& t : tops) std::sort(t.begin(), t.end());
  return build_complex(tops);
}

inline std::vector<std::int64_t> sphere_betti(int d) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(d + 1), 0);
  b.front() += 1;
  b.back() += 1;
  return b;
}

inline std::vector<std::int64_t> point_betti(int d) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(d + 1), 0);
  b.front() = 1;
  return b;
}

inline CorpusEntry complex_entry(std::string name, SimplicialComplex x, std::vector<std::int64_t> betti,
                                 std::set<std::int64_t> torsion, std::int64_t mu) {
  CorpusEntry e;
  e.name = std::move(name);
  e.complex = std::move(x);
  e.betti = std::move(betti);
  e.torsion_primes = std::move(torsion);
  e.mu = mu;
  return e;
}

inline CorpusEntry action_entry(std::string name, const FiniteAbelianGroup& g, SimplicialComplex x,
                                std::vector<Permutation> images, std::vector<std::int64_t> betti,
                                std::set<std::int64_t> torsion, std::int64_t mu) {
  CorpusEntry e;
  e.name = std::move(name);
  e.action = make_good(SimplicialAction(g, std::move(x), std::move(images)));
  e.betti = std::move(betti);
  e.torsion_primes = std::move(torsion);
  e.mu = mu;
  return e;
}

inline CorpusEntry model_entry(std::string name, const FiniteAbelianGroup& g, Shape shape,
                               std::vector<Summand> summands) {
  CorpusEntry e;
  e.name = std::move(name);
  e.model = LinearActionModel(RealRepresentation(g, std::move(summands)), shape);
  const auto n = e.model->space_dimension();
  e.betti = shape == Shape::Disk ? point_betti(static_cast<int>(n)) : sphere_betti(static_cast<int>(n));
  e.mu = e.model->dim_V();
  return e;
}

inline Summand trivial() { return {SummandKind::Trivial, {}}; }
inline Summand sign(std::vector<std::int64_t> c) { return {SummandKind::Sign, {std::move(c)}}; }
inline Summand rotation(std::vector<std::int64_t> c) { return {SummandKind::Rotation, {std::move(c)}}; }

/// Fills in Euler characteristic and the no-odd-cohomology flag and checks the
/// curated homology against a recomputation.
inline void finalize(CorpusEntry& e) {
  std::int64_t chi = 0;
  for (std::size_t j = 0; j < e.betti.size(); ++j) chi += (j % 2 == 0 ? 1 : -1) * e.betti[j];
  e.euler = chi;
  e.no_odd_cohomology = e.torsion_primes.empty();
  for (std::size_t j = 1; j < e.betti.size(); j += 2) e.no_odd_cohomology = e.no_odd_cohomology && e.betti[j] == 0;
  if (e.is_linear()) return;
  e.boundary = boundary_subcomplex(e.space());
  const auto h = homology(e.space());
  if (h.ranks() != e.betti || h.torsion_primes() != e.torsion_primes) {
    throw Error("corpus: metadata of " + e.name + " disagrees with the computed homology");
  }
  if (h.euler != e.space().euler_characteristic()) throw Error("corpus: Euler characteristic mismatch in " + e.name);
  if (e.action && !e.action->is_good()) throw Error("corpus: action " + e.name + " is not good");
}

}  // namespace corpus

/// The full built-in corpus, metadata verified.
inline std::vector<CorpusEntry> load_corpus() {
  using namespace corpus;
  std::vector<CorpusEntry> out;
  const auto z = [](std::int64_t n) { return FiniteAbelianGroup::cyclic(n); };

  for (int n = 0; n <= 6; ++n) out.push_back(complex_entry("simplex-" + std::to_string(n), simplex_complex(n), point_betti(n), {}, n));
  for (int m = 0; m <= 3; ++m) {
    out.push_back(complex_entry("sphere-" + std::to_string(2 * m), simplex_boundary(2 * m + 1), sphere_betti(2 * m), {}, 2 * m + 1));
  }
  out.push_back(complex_entry("sd-sphere-2", barycentric_subdivision(simplex_boundary(3)).complex, sphere_betti(2), {}, 3));
  out.push_back(complex_entry("sd-sphere-4", barycentric_subdivision(simplex_boundary(5)).complex, sphere_betti(4), {}, 5));
  out.push_back(complex_entry("sd-simplex-3", barycentric_subdivision(simplex_complex(3)).complex, point_betti(3), {}, 3));
  out.push_back(complex_entry("sphere2-plus-disk2", disjoint_union(simplex_boundary(3), simplex_complex(2)), {2, 0, 1}, {}, 4));
  out.push_back(complex_entry("two-points", build_complex({{0}, {1}}), {2}, {}, 1));
  out.push_back(complex_entry("projective-plane", projective_plane_6(), {1, 0, 0}, {2}, 3));
  out.push_back(complex_entry("sd-projective-plane", barycentric_subdivision(projective_plane_6()).complex, {1, 0, 0}, {2}, 3));
  out.push_back(complex_entry("circle-5", cycle_complex(5), {1, 1}, {}, 2));

  out.push_back(action_entry("point-trivial", z(2), simplex_complex(0), {{0}}, {1}, {}, 0));
  out.push_back(action_entry("trivial-group-sphere", trivial_group(), simplex_boundary(3), {}, sphere_betti(2), {}, 3));
  out.push_back(action_entry("segment-swap", z(2), simplex_complex(1), {{1, 0}}, point_betti(1), {}, 1));
  out.push_back(action_entry("triangle-rotation", z(3), simplex_complex(2), {{1, 2, 0}}, point_betti(2), {}, 2));
  out.push_back(action_entry("triangle-reflection", z(2), simplex_complex(2), {{0, 2, 1}}, point_betti(2), {}, 2));
  out.push_back(action_entry("tetrahedron-klein", elementary(2, 2), simplex_complex(3),
                             {from_cycles(4, {{0, 1}, {2, 3}}), from_cycles(4, {{0, 2}, {1, 3}})}, point_betti(3), {}, 3));
  {
    std::vector<Permutation> flips;
    for (int i = 0; i < 3; ++i) flips.push_back(from_cycles(6, {{2 * i, 2 * i + 1}}));
    out.push_back(action_entry("octahedron-signs", elementary(2, 3), cross_polytope_boundary(3), flips, sphere_betti(2), {}, 3));
  }
  out.push_back(action_entry("octahedron-antipodal", z(2), cross_polytope_boundary(3),
                             {from_cycles(6, {{0, 1}, {2, 3}, {4, 5}})}, sphere_betti(2), {}, 3));
  out.push_back(action_entry("octahedron-quarter-turn", z(4), cross_polytope_boundary(3),
                             {from_cycles(6, {{0, 2, 1, 3}})}, sphere_betti(2), {}, 3));
  out.push_back(action_entry("octahedron-coordinate-cycle", z(3), cross_polytope_boundary(3),
                             {from_cycles(6, {{0, 2, 4}, {1, 3, 5}})}, sphere_betti(2), {}, 3));
  out.push_back(action_entry("tetrahedron-boundary-rotation", z(3), simplex_boundary(3),
                             {from_cycles(4, {{1, 2, 3}})}, sphere_betti(2), {}, 3));
  out.push_back(action_entry("tetrahedron-boundary-klein", elementary(2, 2), simplex_boundary(3),
                             {from_cycles(4, {{0, 1}, {2, 3}}), from_cycles(4, {{0, 2}, {1, 3}})}, sphere_betti(2), {}, 3));
  out.push_back(action_entry("bipyramid-5", z(5), bipyramid(5), {shift(7, 5, 1)}, sphere_betti(2), {}, 3));
  {
    std::vector<Permutation> flips;
    for (int i = 0; i < 5; ++i) flips.push_back(from_cycles(10, {{2 * i, 2 * i + 1}}));
    out.push_back(action_entry("cross-polytope-4-signs", elementary(2, 5), cross_polytope_boundary(5), flips, sphere_betti(4), {}, 5));
  }
  out.push_back(action_entry("cross-polytope-4-turns", FiniteAbelianGroup(std::vector<PrimaryComponent>{{2, {2, 2}}}),
                             cross_polytope_boundary(5),
                             {from_cycles(10, {{0, 2, 1, 3}}), from_cycles(10, {{4, 6, 5, 7}})}, sphere_betti(4), {}, 5));
  out.push_back(action_entry("two-points-swap", z(2), build_complex({{0}, {1}}), {{1, 0}}, {2}, {}, 1));
  out.push_back(action_entry("two-spheres-swap", z(2), disjoint_union(simplex_boundary(3), simplex_boundary(3)),
                             {from_cycles(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})}, {2, 0, 2}, {}, 4));
  out.push_back(action_entry("two-spheres-z6", z(6), disjoint_union(simplex_boundary(3), simplex_boundary(3)),
                             {from_cycles(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}}), from_cycles(8, {{1, 2, 3}, {5, 6, 7}})},
                             {2, 0, 2}, {}, 4));
  out.push_back(action_entry("projective-plane-z5", z(5), projective_plane_6(), {from_cycles(6, {{1, 2, 3, 4, 5}})},
                             {1, 0, 0}, {2}, 3));
  out.push_back(action_entry("projective-plane-involution", z(2), projective_plane_6(),
                             {from_cycles(6, {{1, 5}, {2, 4}})}, {1, 0, 0}, {2}, 3));
  out.push_back(action_entry("hexagon-rotation", z(6), cycle_complex(6), {shift(6, 6, 3), shift(6, 6, 2)}, {1, 1}, {}, 2));
  out.push_back(action_entry("hexagon-reflection", z(2), cycle_complex(6), {{0, 5, 4, 3, 2, 1}}, {1, 1}, {}, 2));
  out.push_back(action_entry("hexagon-half-turn", z(2), cycle_complex(6), {shift(6, 6, 3)}, {1, 1}, {}, 2));

  out.push_back(model_entry("disk2-z3-rotation", z(3), Shape::Disk, {rotation({1})}));
  out.push_back(model_entry("disk3-trivial", z(2), Shape::Disk, {trivial(), trivial(), trivial()}));
  out.push_back(model_entry("disk4-klein-signs", elementary(2, 2), Shape::Disk, {sign({1, 0}), sign({0, 1}), trivial(), trivial()}));
  out.push_back(model_entry("disk5-z15", z(15), Shape::Disk, {rotation({1, 0}), rotation({0, 1}), trivial()}));
  out.push_back(model_entry("sphere2-antipodal", z(2), Shape::Sphere, {sign({1}), sign({1}), sign({1})}));
  out.push_back(model_entry("sphere2-z4-rotation", z(4), Shape::Sphere, {rotation({1}), trivial()}));
  out.push_back(model_entry("sphere4-z3-rotation", z(3), Shape::Sphere, {rotation({1}), trivial(), trivial(), trivial()}));
  out.push_back(model_entry("sphere4-klein-signs", elementary(2, 2), Shape::Sphere,
                            {sign({1, 0}), sign({0, 1}), trivial(), trivial(), trivial()}));
  out.push_back(model_entry("sphere4-trivial", z(3), Shape::Sphere, {trivial(), trivial(), trivial(), trivial(), trivial()}));

  for (auto& e : out) finalize(e);
  return out;
}

}  // namespace aft
