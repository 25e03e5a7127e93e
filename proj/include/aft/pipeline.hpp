#pragma once

// End-to-end search for a bounded index subgroup A_0 whose fixed set has the
// Euler characteristic of X on every connected component: trivialize the
// action on homology mod 3, shrink each p-part to Gamma_chi, find an element
// gamma_p with the same fixed set as a large subgroup of it, and recombine
// the primes.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aft/action.hpp"
#include "aft/bounds.hpp"
#include "aft/corpus.hpp"
#include "aft/homology.hpp"
#include "aft/linear.hpp"

namespace aft {

struct PrimeStage {
  std::int64_t p = 0;
  Subgroup part;        ///< p-part of the trivializing subgroup
  Subgroup gamma_chi;
  std::int64_t n = 0;
  BigInt chi_bound = 1;  ///< p^{n mu}
  Subgroup stable;       ///< A_{0,p}
  GroupElement gamma;
  std::int64_t descent_steps = 0;
};

struct ComponentCheck {
  std::int64_t euler = 0;        ///< chi(Y)
  std::int64_t fixed_euler = 0;  ///< chi(Y^{A_0})
  std::int64_t lefschetz = 0;    ///< trace of gamma on the chains of Y
  bool ok = false;
};

struct PipelineReport {
  std::string name;
  BoundsConfig config;
  Subgroup trivializing;
  std::int64_t b = 0;
  std::vector<PrimeStage> stages;
  GroupElement gamma;
  Subgroup a0;
  std::int64_t index = 1;  ///< [A : A_0]
  BigInt composite_bound = 1;
  std::vector<ComponentCheck> components;
  bool within_bound = false;
  bool chi_ok = false;

  bool ok() const { return within_bound && chi_ok; }
};

/// Bounds configuration read off the homology of x.
inline BoundsConfig config_from_homology(const HomologyProfile& h, int dim, std::optional<std::int64_t> mu) {
  BoundsConfig c;
  c.dim = std::max(dim, 0);
  c.betti_Z = h.ranks();
  c.betti_mod_p = h.betti_mod_p;
  c.torsion_primes = h.torsion_primes();
  c.mu = mu;
  return c;
}

/// Generator images on H_j(X; Z)/torsion for every degree j.
inline HomologyAction homology_action(const SimplicialAction& a) {
  HomologyAction act{a.group(), {}};
  std::vector<FreeHomologyBasis> bases;
  for (int j = 0; j <= a.complex().dimension(); ++j) bases.emplace_back(a.complex(), j);
  for (const auto& perm : a.generator_images()) {
    std::vector<IntMatrix> per_degree;
    for (const auto& b : bases) {
      auto m = b.induced_map(perm);
      IntMatrix im(m.rows(), m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) im(r, c) = static_cast<std::int64_t>(m(r, c));
      }
      per_degree.push_back(std::move(im));
    }
    act.images.push_back(std::move(per_degree));
  }
  return act;
}

namespace detail {

inline void finish_report(PipelineReport& r, const FiniteAbelianGroup& g) {
  r.index = g.order() / r.a0.order();
  r.composite_bound = composite_bound(r.config);
  r.within_bound = BigInt(r.index) <= r.composite_bound;
  r.chi_ok = !r.components.empty() || r.config.betti_Z.empty();
  for (const auto& c : r.components) r.chi_ok = r.chi_ok && c.ok;
}

}  // namespace detail

/// Pipeline on a good simplicial action; Gamma_chi is searched exhaustively
/// for the largest subgroup whose fixed set is that of a single element.
inline PipelineReport run_pipeline(const SimplicialAction& a, std::int64_t mu, std::string name = {}) {
  a.require_good("pipeline");
  const auto& g = a.group();
  const auto& x = a.complex();
  PipelineReport r;
  r.name = std::move(name);
  std::vector<std::int64_t> primes{2, 3, 5, 7};
  for (auto p : g.primes()) {
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  }
  const auto h = homology(x, primes);
  r.config = config_from_homology(h, x.dimension(), mu);
  if (!r.config.no_odd_cohomology()) throw Error("pipeline: " + r.name + " has odd or torsion cohomology");

  const auto triv = cohomology_trivializing_subgroup(homology_action(a));
  if (!triv.minkowski_violations.empty()) throw Error("pipeline: element acting trivially mod 3 but not over Z");
  r.trivializing = triv.subgroup;
  r.b = triv.b;

  std::vector<std::pair<GroupElement, Subgroup>> parts;
  for (auto p : r.trivializing.primes()) {
    PrimeStage st;
    st.p = p;
    st.part = r.trivializing.p_part(p);
    auto gc = gamma_chi_subgroup(a, st.part, mu);
    st.gamma_chi = gc.subgroup;
    st.n = gc.n;
    st.chi_bound = gc.bound;
    bool found = false;
    for (const auto& s : enumerate_subgroups(st.gamma_chi, st.gamma_chi.order())) {
      const auto fs = a.fixed_subcomplex(s);
      for (const auto& y : s.elements()) {
        if (a.fixed_subcomplex(y) == fs) {
          st.stable = s;
          st.gamma = y;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw Error("pipeline: no subgroup of Gamma_chi has the fixed set of an element");
    parts.emplace_back(st.gamma, st.stable);
    r.stages.push_back(std::move(st));
  }
  auto c = assemble_cross_prime(g, parts, [&](const Subgroup& s) { return a.fixed_subcomplex(s); });
  r.gamma = c.gamma;
  r.a0 = c.subgroup;

  const auto fixed = a.fixed_subcomplex(r.a0);
  const auto perm = a.permutation(r.gamma);
  for (const auto& y : connected_components(x)) {
    ComponentCheck cc;
    cc.euler = y.euler_characteristic();
    cc.fixed_euler = filter_complex(fixed, [&](const Simplex& s) { return y.contains(s); }).euler_characteristic();
    for (int j = 0; j <= y.dimension(); ++j) {
      for (const auto& s : y.simplices(j)) {
        auto [img, sign] = oriented_image(s, perm);
        if (img == s) cc.lefschetz += (j % 2 == 0 ? 1 : -1) * sign;
      }
    }
    cc.ok = cc.fixed_euler == cc.euler && cc.lefschetz == cc.euler;
    r.components.push_back(cc);
  }
  detail::finish_report(r, g);
  return r;
}

/// Pipeline on a linear model, following the exact route: Gamma_chi, then
/// descent to a lambda_chi-stable subgroup and a generic element.
inline PipelineReport run_pipeline(const LinearActionModel& m, std::string name = {}) {
  const auto& g = m.group();
  if (m.shape() == Shape::Sphere && m.dim_V() < 2) throw Error("pipeline: the 0-sphere is not supported");
  PipelineReport r;
  r.name = std::move(name);
  const auto dim = m.space_dimension();
  HomologyProfile h;
  h.betti_Z.assign(static_cast<std::size_t>(dim + 1), {});
  h.betti_Z.front().rank += 1;
  if (m.shape() == Shape::Sphere) h.betti_Z.back().rank += 1;
  for (auto p : {2, 3, 5, 7}) h.betti_mod_p[p] = h.ranks();
  r.config = config_from_homology(h, static_cast<int>(dim), m.dim_V());
  if (!r.config.no_odd_cohomology()) throw Error("pipeline: " + r.name + " is an odd dimensional sphere");

  HomologyAction act{g, {}};
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::vector<IntMatrix> per_degree;
    for (std::int64_t j = 0; j <= dim; ++j) {
      const auto rank = h.betti_Z[static_cast<std::size_t>(j)].rank;
      IntMatrix im = IntMatrix::identity(static_cast<std::size_t>(rank));
      if (rank == 1 && j == dim && j > 0) im(0, 0) = orientation_sign(m, g.generator(i));
      per_degree.push_back(im);
    }
    act.images.push_back(std::move(per_degree));
  }
  const auto triv = cohomology_trivializing_subgroup(act);
  r.trivializing = triv.subgroup;
  r.b = triv.b;

  Subgroup kernel = Subgroup::whole(g);
  for (const auto& s : m.rep().summands()) kernel = kernel.kernel_of(s.character);
  const auto lambda = lambda_chi(r.config);
  std::vector<std::pair<GroupElement, Subgroup>> parts;
  for (auto p : r.trivializing.primes()) {
    PrimeStage st;
    st.p = p;
    st.part = r.trivializing.p_part(p);
    st.n = gamma_chi_exponent(p, r.config.betti_sum_for(p));
    st.gamma_chi = join(st.part.power(st.n), intersect(kernel, st.part));
    st.chi_bound = big_pow(p, st.n * m.dim_V());
    auto mc = m.restricted(st.gamma_chi);
    if (!chi_condition(mc).holds) throw Error("pipeline: Gamma_chi violates the Euler characteristic condition");
    auto d = descent_to_stable(mc, lambda);
    st.stable = d.subgroup;
    st.descent_steps = static_cast<std::int64_t>(d.steps.size());
    st.gamma = generic_element(m.restricted(st.stable));
    parts.emplace_back(st.gamma, st.stable);
    r.stages.push_back(std::move(st));
  }
  auto c = assemble_cross_prime(m, parts);
  r.gamma = c.gamma;
  r.a0 = c.subgroup;

  ComponentCheck cc;
  cc.euler = m.euler();
  cc.fixed_euler = fixed_euler_characteristic(m, r.a0);
  cc.lefschetz = m.shape() == Shape::Disk ? 1 : 1 + orientation_sign(m, r.gamma);
  cc.ok = cc.fixed_euler == cc.euler && cc.lefschetz == cc.euler &&
          m.euler_for_dim(fixed_subspace_dim(m, r.gamma)) == cc.euler;
  r.components.push_back(cc);
  detail::finish_report(r, g);
  return r;
}

inline PipelineReport run_pipeline(const CorpusEntry& e) {
  if (e.model) return run_pipeline(*e.model, e.name);
  if (!e.action) throw Error("pipeline: corpus entry " + e.name + " has no action");
  return run_pipeline(*e.action, e.mu, e.name);
}

}  // namespace aft
