#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "aft/corpus.hpp"
#include "oracles.hpp"

using namespace aft;

namespace {

const std::vector<CorpusEntry>& corpus_entries() {
  static const auto c = load_corpus();
  return c;
}

// fixed set by brute force: simplices all of whose vertices are fixed by every element of h
std::size_t naive_fixed_count(const SimplicialAction& a, const Subgroup& h) {
  std::size_t n = 0;
  auto elems = h.elements();
  for (const auto& s : a.complex().all_simplices()) {
    bool ok = true;
    for (const auto& x : elems) {
      auto p = a.permutation(x);
      for (int v : s) ok = ok && p[static_cast<std::size_t>(v)] == v;
    }
    n += ok;
  }
  return n;
}

}  // namespace

TEST_CASE("goodness examples", "[action]") {
  SimplicialAction rot(FiniteAbelianGroup::cyclic(3), simplex_boundary(2), {{1, 2, 0}});
  CHECK(validate_good(rot).is_good);
  CHECK(validate_good(rot).witnesses.empty());

  SimplicialAction swap(FiniteAbelianGroup::cyclic(2), simplex_complex(1), {{1, 0}});
  auto cert = validate_good(swap);
  CHECK_FALSE(cert.is_good);
  REQUIRE_FALSE(cert.witnesses.empty());
  CHECK(cert.witnesses.front().simplex == Simplex{0, 1});

  SimplicialAction triv(FiniteAbelianGroup::cyclic(2), simplex_complex(2), {{0, 1, 2}});
  CHECK(triv.is_good());
}

TEST_CASE("make_good", "[action]") {
  SimplicialAction swap(FiniteAbelianGroup::cyclic(2), simplex_complex(1), {{1, 0}});
  auto good = make_good(swap);
  CHECK(good.is_good());
  CHECK(good.complex().count(0) == 3);
  auto fixed = good.fixed_subcomplex(Subgroup::whole(good.group()));
  CHECK(fixed.size() == 1);
  CHECK(fixed.euler_characteristic() == 1);
  CHECK(good.lefschetz_number(good.group().generator(0)) == 1);

  SimplicialAction rot(FiniteAbelianGroup::cyclic(3), simplex_boundary(2), {{1, 2, 0}});
  CHECK(make_good(rot).complex() == rot.complex());

  SimplicialAction half(FiniteAbelianGroup::cyclic(2), cycle_complex(6), {{3, 4, 5, 0, 1, 2}});
  auto h = make_good(half);
  CHECK(h.is_good());
  CHECK(h.complex().count(0) <= 12);

  CHECK_THROWS_AS(swap.fixed_subcomplex(Subgroup::whole(swap.group())), Error);
}

TEST_CASE("malformed actions are rejected", "[action]") {
  auto z2 = FiniteAbelianGroup::cyclic(2);
  CHECK_THROWS_AS(SimplicialAction(z2, simplex_boundary(2), {{1, 2, 0}}), Error);  // order 3 image
  CHECK_THROWS_AS(SimplicialAction(z2, cycle_complex(5), {{1, 0, 2, 3, 4}}), Error);  // not simplicial
  CHECK_THROWS_AS(SimplicialAction(z2, simplex_complex(1), {{0, 0}}), Error);
  CHECK_THROWS_AS(SimplicialAction(z2, simplex_complex(1), {}), Error);
  auto k = corpus::elementary(2, 2);
  CHECK_THROWS_AS(SimplicialAction(k, simplex_complex(2), {{1, 0, 2}, {0, 2, 1}}), Error);  // do not commute
}

TEST_CASE("fixed subcomplexes and Lefschetz numbers", "[action]") {
  SimplicialAction rot(FiniteAbelianGroup::cyclic(3), simplex_boundary(2), {{1, 2, 0}});
  CHECK(rot.fixed_subcomplex(Subgroup::trivial(rot.group())) == rot.complex());
  CHECK(rot.fixed_subcomplex(Subgroup::whole(rot.group())).empty());
  CHECK(rot.lefschetz_number(rot.group().generator(0)) == 0);
  CHECK(rot.lefschetz_number(rot.group().identity()) == rot.complex().euler_characteristic());
  CHECK(rot.homological_lefschetz_number(rot.group().generator(0)) == 0);
}

TEST_CASE("divisibility examples", "[action]") {
  auto good = make_good(SimplicialAction(FiniteAbelianGroup::cyclic(2), simplex_complex(1), {{1, 0}}));
  auto whole = Subgroup::whole(good.group());
  auto r = chi_defect_divisibility(good, whole, 0);
  CHECK(r.verdict == DivisibilityVerdict::Divisible);
  CHECK(r.defect == 0);
  CHECK(r.orbit_defect == 0);

  auto t = chi_defect_divisibility(good, Subgroup::trivial(good.group()), 0);
  CHECK(t.defect == 0);
  CHECK(t.verdict == DivisibilityVerdict::Divisible);

  SimplicialAction circle(FiniteAbelianGroup::cyclic(5), cycle_complex(5), {{1, 2, 3, 4, 0}});
  auto c = chi_defect_divisibility(circle, Subgroup::trivial(circle.group()), 0);
  CHECK(c.defect == 0);
  CHECK(c.verdict == DivisibilityVerdict::Divisible);

  // orbits of size 2 cannot certify divisibility by 4
  auto big = chi_defect_divisibility(good, whole, 1);
  CHECK(big.verdict == DivisibilityVerdict::HypothesisViolated);
  CHECK(big.witness_index == 2);
}

TEST_CASE("gamma_chi examples", "[action]") {
  SimplicialAction pent(FiniteAbelianGroup::cyclic(5), corpus::bipyramid(5), {corpus::shift(7, 5, 1)});
  auto r5 = gamma_chi_subgroup(pent, 3);
  CHECK(r5.n == 0);
  CHECK(r5.subgroup == Subgroup::whole(pent.group()));
  CHECK(r5.bound == 1);
  CHECK(r5.chi_verified);

  // 2^{n+1} > 2 * 2 first holds at n = 2
  SimplicialAction anti(FiniteAbelianGroup::cyclic(2), cross_polytope_boundary(3),
                        {corpus::from_cycles(6, {{0, 1}, {2, 3}, {4, 5}})});
  auto r2 = gamma_chi_subgroup(anti, 3);
  CHECK(r2.n == 2);
  CHECK(r2.subgroup.is_trivial());
  CHECK(r2.bound == 64);

  SimplicialAction none(corpus::trivial_group(), simplex_boundary(3), {});
  auto r1 = gamma_chi_subgroup(none, 3);
  CHECK(r1.subgroup.is_trivial());
  CHECK(r1.bound == 1);

  // non-effective input: the kernel is kept in Gamma_chi
  SimplicialAction triv(FiniteAbelianGroup::cyclic(4), simplex_complex(0), {{0}});
  auto rt = gamma_chi_subgroup(triv, 0);
  CHECK(rt.subgroup == Subgroup::whole(triv.group()));
  CHECK(rt.effective_rank == 0);

  CHECK_THROWS_AS(gamma_chi_subgroup(anti, std::nullopt), Error);
  auto signs = corpus::elementary(2, 3);
  std::vector<Permutation> flips;
  for (int i = 0; i < 3; ++i) flips.push_back(corpus::from_cycles(6, {{2 * i, 2 * i + 1}}));
  SimplicialAction oct(signs, cross_polytope_boundary(3), flips);
  CHECK_THROWS_AS(gamma_chi_subgroup(oct, 2), Error);
  CHECK(gamma_chi_subgroup(oct, 3).effective_rank == 3);
}

TEST_CASE("fixed_set_precedes", "[action]") {
  auto two = build_complex({{0}, {1}});
  CHECK(fixed_set_precedes(build_complex({{0}}), two));
  CHECK_FALSE(fixed_set_precedes(two, build_complex({{0}})));
  CHECK_FALSE(fixed_set_precedes(build_complex({{0}}), simplex_complex(1)));
}

TEST_CASE("corpus actions: fixed sets match brute force and are monotone", "[action][property]") {
  for (const auto& e : corpus_entries()) {
    if (!e.action) continue;
    const auto& a = *e.action;
    CAPTURE(e.name);
    auto subs = enumerate_subgroups(a.group(), a.group().order());
    std::map<Subgroup, SimplicialComplex> fixed;
    for (const auto& h : subs) {
      fixed.emplace(h, a.fixed_subcomplex(h));
      CHECK(fixed.at(h).size() == naive_fixed_count(a, h));
    }
    for (const auto& h1 : subs) {
      for (const auto& h2 : subs) {
        if (h1.is_subgroup_of(h2)) CHECK(fixed.at(h2).is_subcomplex_of(fixed.at(h1)));
      }
    }
  }
}

TEST_CASE("corpus actions: Lefschetz-Hopf", "[action][property]") {
  for (const auto& e : corpus_entries()) {
    if (!e.action) continue;
    const auto& a = *e.action;
    CAPTURE(e.name);
    for (const auto& g : a.group().elements()) {
      const auto trace = a.lefschetz_number(g);
      CHECK(trace == a.fixed_subcomplex(g).euler_characteristic());
      if (a.complex().size() <= 400) CHECK(a.homological_lefschetz_number(g) == trace);
    }
  }
}

TEST_CASE("corpus actions: Smith inequality", "[action][property]") {
  for (const auto& e : corpus_entries()) {
    if (!e.action) continue;
    const auto& a = *e.action;
    CAPTURE(e.name);
    for (auto p : a.group().primes()) {
      const auto total = homology(a.complex(), {p}).betti_sum_mod_p(p);
      for (const auto& h : enumerate_subgroups(p_part(a.group(), p), a.group().order())) {
        CHECK(homology(a.fixed_subcomplex(h), {p}).betti_sum_mod_p(p) <= total);
      }
    }
  }
}

TEST_CASE("corpus actions: divisibility under the orbit hypothesis", "[action][property]") {
  for (const auto& e : corpus_entries()) {
    if (!e.action) continue;
    const auto& a = *e.action;
    CAPTURE(e.name);
    for (auto p : a.group().primes()) {
      auto gp = p_part(a.group(), p);
      for (const auto& g0 : enumerate_subgroups(gp, gp.order())) {
        for (std::int64_t n = 0; n <= 2; ++n) {
          auto r = chi_defect_divisibility(a, gp, g0, n);
          CHECK(r.verdict != DivisibilityVerdict::NotDivisible);
          CHECK(r.orbit_defect == r.defect);
        }
      }
    }
  }
}

TEST_CASE("corpus actions: equal Euler characteristic and precedence force equality", "[action][property]") {
  for (const auto& e : corpus_entries()) {
    if (!e.action || !e.no_odd_cohomology) continue;
    const auto& a = *e.action;
    CAPTURE(e.name);
    std::vector<SimplicialComplex> fixed;
    for (const auto& h : enumerate_subgroups(a.group(), a.group().order())) {
      auto f = a.fixed_subcomplex(h);
      if (f.euler_characteristic() == e.euler) fixed.push_back(std::move(f));
    }
    for (const auto& f1 : fixed) {
      for (const auto& f2 : fixed) {
        if (fixed_set_precedes(f1, f2)) CHECK(f1 == f2);
      }
    }
  }
}
