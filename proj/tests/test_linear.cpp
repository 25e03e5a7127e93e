#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "aft/corpus.hpp"
#include "aft/linear.hpp"
#include "aft/random.hpp"
#include "oracles.hpp"

using namespace aft;
using corpus::rotation;
using corpus::sign;
using corpus::trivial;

namespace {

LinearActionModel model(const FiniteAbelianGroup& g, Shape shape, std::vector<Summand> s) {
  return LinearActionModel(RealRepresentation(g, std::move(s)), shape);
}

GroupElement el(const FiniteAbelianGroup& g, std::vector<std::int64_t> r) { return g.make_element(std::move(r)); }

// dim V^H summed directly over the elements of h
std::int64_t naive_fixed_dim(const LinearActionModel& m, const Subgroup& h) {
  std::int64_t d = 0;
  for (const auto& s : m.rep().summands()) {
    bool fixed = true;
    for (const auto& x : h.elements()) fixed = fixed && m.group().character_value(s.character, x) == 0;
    if (fixed) d += s.dimension();
  }
  return d;
}

// chi(X^{H0}) = chi(X) over every subgroup from the lattice oracle
bool naive_chi_condition(const LinearActionModel& m) {
  for (const auto& h : enumerate_subgroups(m.acting(), m.acting().order())) {
    if (m.euler_for_dim(naive_fixed_dim(m, h)) != m.euler()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("fixed subspace dimensions", "[linear]") {
  auto z3 = FiniteAbelianGroup::cyclic(3);
  auto m3 = model(z3, Shape::Disk, {rotation({1})});
  CHECK(fixed_subspace_dim(m3, Subgroup::trivial(z3)) == 2);
  CHECK(fixed_subspace_dim(m3, Subgroup::whole(z3)) == 0);
  auto z5 = FiniteAbelianGroup::cyclic(5);
  auto m5 = model(z5, Shape::Disk, {trivial(), rotation({1})});
  CHECK(fixed_subspace_dim(m5, Subgroup::whole(z5)) == 1);
  CHECK(m5.dim_V() == 3);
  CHECK_THROWS_AS(RealRepresentation(z5, {sign({1})}), Error);
  CHECK_THROWS_AS(RealRepresentation(FiniteAbelianGroup::cyclic(2), {rotation({1})}), Error);
}

TEST_CASE("normal characters", "[linear]") {
  auto z2 = FiniteAbelianGroup::cyclic(2);
  CHECK(normal_characters(model(z2, Shape::Disk, {trivial(), trivial()})).empty());
  auto z4 = FiniteAbelianGroup::cyclic(4);
  auto n4 = normal_characters(model(z4, Shape::Disk, {rotation({1})}));
  REQUIRE(n4.size() == 1);
  CHECK(n4[0].index == 4);
  auto k = corpus::elementary(2, 2);
  auto nk = normal_characters(model(k, Shape::Disk, {sign({1, 0}), sign({0, 1})}));
  REQUIRE(nk.size() == 2);
  CHECK(nk[0].index == 2);
  CHECK(nk[1].index == 2);
  // conjugate rotations give one real character
  auto z5 = FiniteAbelianGroup::cyclic(5);
  CHECK(normal_characters(model(z5, Shape::Disk, {rotation({1}), rotation({4})})).size() == 1);
  CHECK(normal_characters(model(z5, Shape::Disk, {rotation({1}), rotation({2})})).size() == 2);
  // empty fixed sphere has no normal representation
  CHECK(normal_characters(model(z2, Shape::Sphere, {sign({1}), sign({1}), sign({1})})).empty());
}

TEST_CASE("lambda stability", "[linear]") {
  auto z5 = FiniteAbelianGroup::cyclic(5);
  auto m = model(z5, Shape::Disk, {rotation({1})});
  CHECK(is_lambda_stable(m, 4).stable);
  auto v = is_lambda_stable(m, 5);
  CHECK_FALSE(v.stable);
  REQUIRE(v.violating);
  CHECK(v.violating->index == 5);
  auto triv = model(FiniteAbelianGroup::cyclic(8), Shape::Sphere, {trivial(), trivial(), trivial()});
  for (std::int64_t lambda : {1, 10, 1000}) CHECK(is_lambda_stable(triv, lambda).stable);
  // a reflection of S^2: the fixed circle has chi 0
  auto refl = model(FiniteAbelianGroup::cyclic(2), Shape::Sphere, {sign({1}), trivial(), trivial()});
  auto rv = is_lambda_stable(refl, 1);
  CHECK_FALSE(rv.stable);
  CHECK_FALSE(rv.chi_condition);
}

TEST_CASE("descent", "[linear]") {
  auto z9 = FiniteAbelianGroup::cyclic(9);
  auto m9 = model(z9, Shape::Disk, {rotation({1})});
  auto d9 = descent_to_stable(m9, 3);
  CHECK(d9.steps.empty());
  CHECK(d9.subgroup == Subgroup::whole(z9));

  auto k = corpus::elementary(2, 2);
  auto mk = model(k, Shape::Disk, {sign({1, 0}), sign({0, 1})});
  auto dk = descent_to_stable(mk, 2);
  CHECK(dk.steps.size() == 2);
  CHECK(dk.subgroup.is_trivial());
  CHECK(dk.index == 4);
  CHECK(dk.step_bound == 4);  // D^2: C(2+1+1, 3)
  CHECK(dk.steps[0].fixed_dim == 1);
  CHECK(dk.steps[1].fixed_dim == 2);

  auto refl = model(FiniteAbelianGroup::cyclic(2), Shape::Sphere, {sign({1}), trivial(), trivial()});
  CHECK_THROWS_AS(descent_to_stable(refl, 2), Error);
}

TEST_CASE("generic element", "[linear]") {
  auto z7 = FiniteAbelianGroup::cyclic(7);
  CHECK(generic_element(model(z7, Shape::Disk, {rotation({1})})) == el(z7, {1}));
  auto g = corpus::elementary(3, 2);
  CHECK(generic_element(model(g, Shape::Disk, {rotation({1, 0}), rotation({0, 1})})) == el(g, {1, 1}));
  auto z4 = FiniteAbelianGroup::cyclic(4);
  CHECK(generic_element(model(z4, Shape::Disk, {trivial()})) == z4.identity());
  // both signs and their product: every element is in some kernel
  auto k = corpus::elementary(2, 2);
  CHECK_THROWS_AS(generic_element(model(k, Shape::Disk, {sign({1, 0}), sign({0, 1}), sign({1, 1})})), Error);
}

TEST_CASE("disk gamma search", "[linear]") {
  auto z5 = FiniteAbelianGroup::cyclic(5);
  auto r5 = disk_gamma_search(model(z5, Shape::Disk, {rotation({1}), rotation({2})}));
  CHECK(r5.r == 2);
  CHECK(r5.cost == 0);
  CHECK(r5.subgroup == Subgroup::whole(z5));
  auto k = corpus::elementary(2, 2);
  auto rk = disk_gamma_search(model(k, Shape::Disk, {sign({1, 0}), sign({0, 1})}));
  CHECK(rk.r == 2);
  CHECK(rk.cost_bound == 1);
  CHECK(rk.cost == 0);
  CHECK(rk.gamma == el(k, {1, 1}));
  CHECK(rk.subgroup == Subgroup::whole(k));
  auto z2 = FiniteAbelianGroup::cyclic(2);
  auto rt = disk_gamma_search(model(z2, Shape::Disk, {trivial()}));
  CHECK(rt.gamma == z2.identity());
  CHECK(rt.subgroup == Subgroup::whole(z2));
  // three signs on Klein four: I = 1 is forced
  auto r3 = disk_gamma_search(model(k, Shape::Disk, {sign({1, 0}), sign({0, 1}), sign({1, 1})}));
  CHECK(r3.cost == 1);
  CHECK(r3.subgroup.index() == 2);
}

TEST_CASE("sphere two-group reduction", "[linear]") {
  auto z2 = FiniteAbelianGroup::cyclic(2);
  auto anti = sphere_two_group_reduce(model(z2, Shape::Sphere, {sign({1}), sign({1}), sign({1})}));
  CHECK(anti.subgroup.is_trivial());
  CHECK(anti.index_bound == 4);
  CHECK(anti.fixed.size() == 3);

  auto triv = sphere_two_group_reduce(model(z2, Shape::Sphere, {trivial(), trivial(), trivial(), trivial(), trivial()}));
  CHECK(triv.subgroup == Subgroup::whole(z2));

  auto z4 = FiniteAbelianGroup::cyclic(4);
  auto m = model(z4, Shape::Sphere, {rotation({1}), trivial()});
  auto r = sphere_two_group_reduce(m);
  CHECK(fixed_subspace_dim(m, r.subgroup) == 1);
  CHECK(divides(BigInt(r.subgroup.index()), BigInt(8)));
}

TEST_CASE("sphere gamma search", "[linear]") {
  auto z3 = FiniteAbelianGroup::cyclic(3);
  auto r3 = sphere_gamma_search(model(z3, Shape::Sphere, {rotation({1}), trivial(), trivial(), trivial()}));
  CHECK(r3.r == 1);
  CHECK(r3.cost_bound == 0);
  CHECK(r3.gamma == el(z3, {1}));
  CHECK(r3.subgroup == Subgroup::whole(z3));
  auto rt = sphere_gamma_search(model(z3, Shape::Sphere, {trivial(), trivial(), trivial()}));
  CHECK(rt.gamma == z3.identity());
  auto k = corpus::elementary(2, 2);
  auto rk = sphere_gamma_search(model(k, Shape::Sphere, {sign({1, 0}), sign({0, 1}), trivial(), trivial(), trivial()}));
  CHECK(rk.r == 2);
  CHECK(rk.cost == 0);
  CHECK(rk.subgroup == Subgroup::whole(k));
  CHECK_THROWS_AS(sphere_gamma_search(model(z3, Shape::Sphere, {rotation({1}), trivial()})), Error);
}

TEST_CASE("cross-prime assembly", "[linear]") {
  auto z6 = FiniteAbelianGroup::cyclic(6);
  auto m = model(z6, Shape::Disk, {sign({1, 0}), rotation({0, 1})});
  auto g2 = el(z6, {1, 0}), g3 = el(z6, {0, 1});
  auto c = assemble_cross_prime(m, {{g2, p_part(z6, 2)}, {g3, p_part(z6, 3)}});
  CHECK(c.gamma == el(z6, {1, 1}));
  CHECK(z6.element_order(c.gamma) == 6);
  CHECK(z6.multiply(c.gamma, 4) == g3);
  CHECK(z6.multiply(c.gamma, 3) == g2);
  CHECK(c.subgroup == Subgroup::whole(z6));
  auto one = assemble_cross_prime(m, {{g3, p_part(z6, 3)}});
  CHECK(one.gamma == g3);
  auto ids = assemble_cross_prime(model(z6, Shape::Disk, {trivial()}),
                                  {{z6.identity(), p_part(z6, 2)}, {z6.identity(), p_part(z6, 3)}});
  CHECK(ids.gamma == z6.identity());
  CHECK(ids.subgroup == Subgroup::whole(z6));
}

TEST_CASE("fixed point theorems on corpus models", "[linear]") {
  for (const auto& e : load_corpus()) {
    if (!e.model) continue;
    CAPTURE(e.name);
    const auto& m = *e.model;
    if (m.shape() == Shape::Disk) {
      auto r = disk_fixed_point_theorem(m);
      CHECK(divides(BigInt(r.subgroup.index()), r.f));
    } else {
      auto r = sphere_fixed_point_theorem(m);
      CHECK(divides(BigInt(r.subgroup.index()), r.bound));
      CHECK(r.fixed_dim >= 1);
    }
  }
}

TEST_CASE("random models: fixed dims and chi condition against oracles", "[linear][property]") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Rng rng(11, i);
    auto m = i % 2 ? random_sphere_model(rng, 3, 64) : random_disk_model(rng, 8, 64);
    CAPTURE(i, m.group().to_string());
    for (const auto& h : enumerate_subgroups(m.group(), m.group().order())) {
      CHECK(fixed_subspace_dim(m, h) == naive_fixed_dim(m, h));
    }
    for (auto p : m.group().primes()) {
      auto mp = m.restricted(p_part(m.group(), p));
      CHECK(chi_condition(mp).holds == naive_chi_condition(mp));
    }
  }
}

TEST_CASE("random p-group models: stable subgroups of small index keep the fixed set", "[linear][property]") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(12, i);
    const std::int64_t p = rng.pick(std::vector<std::int64_t>{2, 3, 5});
    auto m = i % 3 == 0 ? random_sphere_model(rng, 3, 512, p) : random_disk_model(rng, 10, 512, p);
    CAPTURE(i, m.group().to_string());
    if (!chi_condition(m).holds) continue;
    for (std::int64_t lambda : {1, 2, 4, 8}) {
      auto d = descent_to_stable(m, lambda);
      CHECK(d.step_bound > static_cast<std::int64_t>(d.steps.size()));
      CHECK(BigInt(d.index) <= big_pow(lambda, static_cast<std::int64_t>(d.step_bound)));
      auto ms = m.restricted(d.subgroup);
      REQUIRE(is_lambda_stable(ms, lambda).stable);
      const auto base = fixed_subspace_dim(m, d.subgroup);
      for (const auto& g0 : enumerate_subgroups(d.subgroup, lambda)) CHECK(fixed_subspace_dim(m, g0) == base);
    }
    if (m.shape() == Shape::Disk) {
      const auto lambda = m.dim_V();
      auto ms = m.restricted(descent_to_stable(m, lambda).subgroup);
      auto gamma = generic_element(ms);
      CHECK(fixed_subspace_dim(m, gamma) == fixed_subspace_dim(m, ms.acting()));
    }
  }
}

TEST_CASE("random models: disk and sphere theorems", "[linear][property]") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(13, i);
    auto d = random_disk_model(rng);
    CAPTURE(i, d.group().to_string());
    auto rd = disk_fixed_point_theorem(d);
    CHECK(divides(BigInt(rd.subgroup.index()), rd.f));
    CHECK(fixed_euler_characteristic(d, rd.subgroup) == 1);
    auto s = random_sphere_model(rng);
    auto rs = sphere_fixed_point_theorem(s);
    CHECK(divides(BigInt(rs.subgroup.index()), rs.bound));
    CHECK(rs.fixed_dim >= 1);
  }
}
