#pragma once

// Verification suites: invariant batteries over the built-in corpus and over
// seeded random linear models. Reports are deterministic given (suite, seed,
// scale) apart from the wall time field.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "aft/bounds.hpp"
#include "aft/corpus.hpp"
#include "aft/io.hpp"
#include "aft/linear.hpp"
#include "aft/pipeline.hpp"
#include "aft/random.hpp"

namespace aft {

enum class Scale { Small, Full };

inline const char* to_string(Scale s) { return s == Scale::Small ? "small" : "full"; }

inline Scale scale_from_string(const std::string& s) {
  if (s == "small") return Scale::Small;
  if (s == "full") return Scale::Full;
  throw Error("verify: unknown scale \"" + s + "\"");
}

struct CaseVerdict {
  std::string id;
  bool ok = true;
  Json detail = Json::object();  ///< witness data on failure
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  Scale scale = Scale::Small;
  std::vector<CaseVerdict> cases;
  double wall_ms = 0;

  std::size_t violations() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += !c.ok;
    return n;
  }
  bool ok() const { return violations() == 0; }

  Json to_json(bool with_timing = true) const {
    auto r = report_header("verification");
    r["suite"] = suite;
    r["seed"] = seed;
    r["scale"] = to_string(scale);
    r["cases_run"] = cases.size();
    r["violations"] = violations();
    Json cs = Json::array();
    for (const auto& c : cases) {
      Json x = {{"id", c.id}, {"ok", c.ok}};
      if (!c.detail.empty()) x["detail"] = c.detail;
      cs.push_back(std::move(x));
    }
    r["cases"] = cs;
    if (with_timing) r["wall_time_ms"] = wall_ms;
    return r;
  }
};

inline const std::vector<CorpusEntry>& builtin_corpus() {
  static const auto c = load_corpus();
  return c;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"smith",   "lefschetz", "divisibility", "chain-bound", "descent",
                                              "disks",   "spheres",   "pipeline",     "minkowski"};
  return names;
}

/// Number of random models per sweep.
inline std::int64_t random_model_count(Scale s) { return s == Scale::Small ? 1000 : 10000; }

namespace verify {

// stream tags keep the random families independent of each other
inline constexpr std::uint64_t kDiskStream = 1ULL << 32;
inline constexpr std::uint64_t kSphereStream = 2ULL << 32;
inline constexpr std::uint64_t kPipelineStream = 3ULL << 32;
inline constexpr std::uint64_t kCoveringDiskStream = 4ULL << 32;
inline constexpr std::uint64_t kCoveringSphereStream = 5ULL << 32;

/// Model i of a sweep: the first random_model_count(scale) are uniform, the
/// next half as many come from random_covering_model.
inline LinearActionModel disk_model(std::uint64_t seed, std::int64_t i, Scale scale) {
  const auto n = random_model_count(scale);
  if (i < n) {
    Rng rng(seed, kDiskStream + static_cast<std::uint64_t>(i));
    return random_disk_model(rng, 10, 512);
  }
  Rng rng(seed, kCoveringDiskStream + static_cast<std::uint64_t>(i - n));
  return random_covering_model(rng, Shape::Disk);
}

inline LinearActionModel sphere_model(std::uint64_t seed, std::int64_t i, Scale scale) {
  const auto n = random_model_count(scale);
  if (i < n) {
    Rng rng(seed, kSphereStream + static_cast<std::uint64_t>(i));
    return random_sphere_model(rng, 5, 512);
  }
  Rng rng(seed, kCoveringSphereStream + static_cast<std::uint64_t>(i - n));
  return random_covering_model(rng, Shape::Sphere);
}

inline std::int64_t sweep_size(Scale scale) { return random_model_count(scale) + random_model_count(scale) / 2; }

inline std::string sweep_id(const char* family, std::int64_t i, Scale scale) {
  const auto n = random_model_count(scale);
  return i < n ? std::string(family) + "-" + std::to_string(i) : std::string(family) + "-covering-" + std::to_string(i - n);
}

inline std::string model_id(const char* family, std::int64_t i) { return std::string(family) + "-" + std::to_string(i); }

/// Runs body and turns a thrown Error into a failed verdict.
inline CaseVerdict guarded(std::string id, const std::function<void(CaseVerdict&)>& body) {
  CaseVerdict v{std::move(id), true, Json::object()};
  try {
    body(v);
  } catch (const Error& e) {
    v.ok = false;
    v.detail["error"] = e.what();
  }
  return v;
}

inline void fail(CaseVerdict& v, const std::string& what, Json witness = Json::object()) {
  if (v.ok) {
    v.ok = false;
    v.detail["failure"] = what;
    if (!witness.empty()) v.detail["witness"] = std::move(witness);
  }
}

inline std::vector<CaseVerdict> smith() {
  std::vector<CaseVerdict> out;
  for (const auto& e : builtin_corpus()) {
    if (!e.action) continue;
    const auto& a = *e.action;
    for (auto p : a.group().primes()) {
      out.push_back(guarded(e.name + "/p" + std::to_string(p), [&](CaseVerdict& v) {
        const auto total = homology(a.complex(), {p}).betti_sum_mod_p(p);
        const auto gp = p_part(a.group(), p);
        if (gp.order() > 512) throw Error("smith: p-part larger than 512");
        std::int64_t checked = 0;
        for (const auto& h : enumerate_subgroups(gp, gp.order())) {
          const auto fixed = homology(a.fixed_subcomplex(h), {p}).betti_sum_mod_p(p);
          ++checked;
          if (fixed > total) {
            fail(v, "sum b_j(X^H; F_p) exceeds sum b_j(X; F_p)",
                 {{"subgroup", subgroup_to_json(h)}, {"fixed", fixed}, {"total", total}});
          }
        }
        v.detail["subgroups"] = checked;
      }));
    }
  }
  return out;
}

inline std::vector<CaseVerdict> lefschetz() {
  std::vector<CaseVerdict> out;
  for (const auto& e : builtin_corpus()) {
    if (!e.action) continue;
    const auto& a = *e.action;
    out.push_back(guarded(e.name, [&](CaseVerdict& v) {
      std::int64_t checked = 0;
      for (const auto& g : a.group().elements()) {
        const auto chi = a.fixed_subcomplex(cyclic_subgroup(a.group(), g)).euler_characteristic();
        const auto trace = a.lefschetz_number(g);
        ++checked;
        if (chi != trace) fail(v, "chi of the fixed set differs from the chain trace", {{"element", element_to_json(g)}, {"chi", chi}, {"trace", trace}});
      }
      v.detail["elements"] = checked;
    }));
  }
  return out;
}

inline std::vector<CaseVerdict> divisibility() {
  std::vector<CaseVerdict> out;
  for (const auto& e : builtin_corpus()) {
    if (!e.action) continue;
    const auto& a = *e.action;
    for (auto p : a.group().primes()) {
      out.push_back(guarded(e.name + "/p" + std::to_string(p), [&](CaseVerdict& v) {
        const auto gp = p_part(a.group(), p);
        std::int64_t certified = 0, hypothesis_fails = 0;
        for (const auto& g0 : enumerate_subgroups(gp, gp.order())) {
          for (std::int64_t n = 0; ipow(p, n) <= gp.order(); ++n) {
            const auto r = chi_defect_divisibility(a, gp, g0, n);
            if (r.verdict == DivisibilityVerdict::HypothesisViolated) {
              ++hypothesis_fails;
              continue;
            }
            ++certified;
            if (r.verdict == DivisibilityVerdict::NotDivisible || r.defect % r.modulus != 0) {
              fail(v, "p^{n+1} does not divide chi(X) - chi(X^{Gamma_0})",
                   {{"subgroup", subgroup_to_json(g0)}, {"n", n}, {"defect", r.defect}});
            }
          }
        }
        v.detail["certified"] = certified;
        v.detail["hypothesis_not_met"] = hypothesis_fails;
      }));
    }
  }
  return out;
}

inline std::vector<CaseVerdict> chain_bound_suite() {
  std::vector<CaseVerdict> out;
  for (std::int64_t m = 0; m <= 12; ++m) {
    for (std::int64_t k = 0; m + k <= 12; ++k) {
      out.push_back(guarded("m" + std::to_string(m) + "-k" + std::to_string(k), [&](CaseVerdict& v) {
        const auto closed = chain_bound(m, k);
        const auto oracle = chain_bound_oracle(m, k);
        if (closed != oracle) fail(v, "closed form differs from the chain oracle", {{"closed", big_string(closed)}, {"oracle", big_string(oracle)}});
      }));
    }
  }
  return out;
}

/// Descent on every p-part of a random disk model with lambda = lambda_chi.
inline std::vector<CaseVerdict> descent(std::uint64_t seed, Scale scale) {
  std::vector<CaseVerdict> out;
  for (std::int64_t i = 0; i < sweep_size(scale); ++i) {
    out.push_back(guarded(sweep_id("disk", i, scale), [&](CaseVerdict& v) {
      const auto m = disk_model(seed, i, scale);
      const std::int64_t lambda = m.euler() * m.space_dimension();
      std::int64_t steps = 0;
      for (auto p : m.acting().primes()) {
        const auto mp = m.restricted(m.acting().p_part(p));
        const auto d = descent_to_stable(mp, lambda);
        const auto e = chain_bound(mp.space_dimension(), mp.betti_sum());
        const auto index = mp.acting().order() / d.subgroup.order();
        steps += static_cast<std::int64_t>(d.steps.size());
        Json w = {{"model", model_to_json(m)}, {"p", p}, {"steps", d.steps.size()}, {"index", index}};
        if (!(BigInt(d.steps.size()) < e)) fail(v, "descent used at least C(m+k+1, m+1) steps", w);
        if (BigInt(index) > big_pow(std::max<std::int64_t>(lambda, 1), static_cast<std::int64_t>(e))) fail(v, "index exceeds lambda^e", w);
        const auto stable = mp.restricted(d.subgroup);
        if (!is_lambda_stable(stable, lambda).stable) fail(v, "descent result is not lambda-stable", w);
        const auto y = generic_element(stable);
        if (!d.subgroup.contains(y) || fixed_subspace_dim(m, y) != fixed_subspace_dim(m, d.subgroup)) {
          fail(v, "generic element does not achieve the fixed dimension", w);
        }
      }
      v.detail["steps"] = steps;
    }));
  }
  return out;
}

inline std::vector<CaseVerdict> disks(std::uint64_t seed, Scale scale) {
  std::vector<CaseVerdict> out;
  for (std::int64_t i = 0; i < sweep_size(scale); ++i) {
    out.push_back(guarded(sweep_id("disk", i, scale), [&](CaseVerdict& v) {
      const auto m = disk_model(seed, i, scale);
      const auto r = disk_fixed_point_theorem(m);
      const auto& a = m.acting();
      const auto k = floor_div(m.dim_V() - 3, 2);
      const auto index = a.order() / r.subgroup.order();
      Json w = {{"model", model_to_json(m)}, {"index", index}, {"k", k}};
      if (!divides(BigInt(index), f_constant(k))) fail(v, "[A:A'] does not divide f(k)", w);
      if (fixed_euler_characteristic(m, r.subgroup) != 1) fail(v, "chi(X^{A'}) != 1", w);
      if (!r.low_dimensional && (!r.subgroup.contains(r.gamma) || fixed_subspace_dim(m, r.gamma) != fixed_subspace_dim(m, r.subgroup))) {
        fail(v, "X^gamma differs from X^{A'}", w);
      }
      bool large = true;
      for (auto p : a.primes()) large = large && p > std::max<std::int64_t>(2, k);
      if (large && !(r.subgroup == a)) fail(v, "all primes exceed max{2, k} but A' != A", w);
      v.detail["index"] = index;
      v.detail["low_dimensional"] = r.low_dimensional;
    }));
  }
  return out;
}

inline std::vector<CaseVerdict> spheres(std::uint64_t seed, Scale scale) {
  std::vector<CaseVerdict> out;
  for (std::int64_t i = 0; i < sweep_size(scale); ++i) {
    out.push_back(guarded(sweep_id("sphere", i, scale), [&](CaseVerdict& v) {
      const auto m = sphere_model(seed, i, scale);
      const auto r = sphere_fixed_point_theorem(m);
      const auto half = (m.dim_V() - 1) / 2;
      const auto index = m.acting().order() / r.subgroup.order();
      const auto bound = big_pow(2, half + 1) * f_constant(half - 1);
      Json w = {{"model", model_to_json(m)}, {"index", index}, {"m", half}};
      if (!divides(BigInt(index), bound)) fail(v, "[A:A'] does not divide 2^{m+1} f(m-1)", w);
      // a fixed subspace of dimension >= 1 meets the sphere in at least two points
      if (fixed_subspace_dim(m, r.subgroup) < 1) fail(v, "fixed sphere of A' has fewer than two points", w);
      v.detail["index"] = index;
      v.detail["two_point_branch"] = r.two_point_branch;
    }));
  }
  return out;
}

inline void check_pipeline(CaseVerdict& v, const PipelineReport& r, const FiniteAbelianGroup& g) {
  const auto index = g.order() / r.a0.order();
  const auto bound = composite_bound(r.config);
  Json w = {{"index", index}, {"composite_bound", big_string(bound)}};
  if (BigInt(index) > bound) fail(v, "[A:A_0] exceeds the composite bound", w);
  if (r.components.empty()) fail(v, "no component checks", w);
  for (const auto& c : r.components) {
    if (c.fixed_euler != c.euler) fail(v, "chi(Y^{A_0}) != chi(Y) on a component", {{"euler", c.euler}, {"fixed_euler", c.fixed_euler}});
  }
  v.detail["index"] = index;
}

/// Every eligible corpus entry, then random disk and sphere models through
/// the linear route.
inline std::vector<CaseVerdict> pipeline(std::uint64_t seed, Scale scale) {
  std::vector<CaseVerdict> out;
  for (const auto& e : builtin_corpus()) {
    if (!e.no_odd_cohomology || (!e.action && !e.model)) continue;
    out.push_back(guarded(e.name, [&](CaseVerdict& v) {
      const auto r = run_pipeline(e);
      check_pipeline(v, r, e.model ? e.model->group() : e.action->group());
    }));
  }
  const std::int64_t n = random_model_count(scale) / 10;
  for (std::int64_t i = 0; i < n; ++i) {
    out.push_back(guarded(model_id("random", i), [&](CaseVerdict& v) {
      Rng rng(seed, kPipelineStream + static_cast<std::uint64_t>(i));
      const auto m = rng.chance(0.5) ? random_disk_model(rng, 8, 512) : random_sphere_model(rng, 4, 512);
      const auto r = run_pipeline(m, model_id("random", i));
      check_pipeline(v, r, m.group());
      if (!v.ok) v.detail["model"] = model_to_json(m);
    }));
  }
  return out;
}

inline std::vector<CaseVerdict> minkowski() {
  std::vector<CaseVerdict> out;
  for (int n = 1; n <= 4; ++n) {
    out.push_back(guarded("signed-permutations-" + std::to_string(n), [&](CaseVerdict& v) {
      const auto r = minkowski_injectivity_check(signed_permutation_matrices(n));
      v.detail["group_order"] = r.group_order;
      if (!r.injective) fail(v, "two matrices agree mod 3", {{"first", r.collision->first}, {"second", r.collision->second}});
    }));
  }
  return out;
}

}  // namespace verify

/// Runs one suite; throws on an unknown suite name.
inline VerificationReport run_suite(const std::string& name, std::uint64_t seed, Scale scale = Scale::Small) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.suite = name;
  r.seed = seed;
  r.scale = scale;
  if (name == "smith") {
    r.cases = verify::smith();
  } else if (name == "lefschetz") {
    r.cases = verify::lefschetz();
  } else if (name == "divisibility") {
    r.cases = verify::divisibility();
  } else if (name == "chain-bound") {
    r.cases = verify::chain_bound_suite();
  } else if (name == "descent") {
    r.cases = verify::descent(seed, scale);
  } else if (name == "disks") {
    r.cases = verify::disks(seed, scale);
  } else if (name == "spheres") {
    r.cases = verify::spheres(seed, scale);
  } else if (name == "pipeline") {
    r.cases = verify::pipeline(seed, scale);
  } else if (name == "minkowski") {
    r.cases = verify::minkowski();
  } else {
    throw Error("verify: unknown suite \"" + name + "\"");
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace aft
