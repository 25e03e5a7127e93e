#pragma once

// Linear models: a finite abelian group acting orthogonally on a real
// representation V, and the induced actions on the unit disk D(V) and the
// unit sphere S(V). Fixed sets are D(V^H) and S(V^H), so everything reduces
// to bookkeeping on the irreducible summands of V.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aft/bounds.hpp"
#include "aft/group.hpp"
#include "aft/numeric.hpp"

namespace aft {

enum class SummandKind { Trivial, Sign, Rotation };

inline const char* to_string(SummandKind k) {
  switch (k) {
    case SummandKind::Trivial: return "trivial";
    case SummandKind::Sign: return "sign";
    case SummandKind::Rotation: return "rotation";
  }
  return "?";
}

struct Summand {
  SummandKind kind = SummandKind::Trivial;
  Character character;

  int dimension() const { return kind == SummandKind::Rotation ? 2 : 1; }
};

class RealRepresentation {
 public:
  RealRepresentation() = default;

  /// Sign characters must have order 2 and rotation characters order >= 3.
  RealRepresentation(FiniteAbelianGroup group, std::vector<Summand> summands)
      : group_(std::move(group)), summands_(std::move(summands)) {
    for (std::size_t i = 0; i < summands_.size(); ++i) {
      auto& s = summands_[i];
      if (s.kind == SummandKind::Trivial && s.character.exponents.empty()) s.character = group_.trivial_character();
      if (s.character.exponents.size() != group_.rank()) {
        throw Error("representation: summand " + std::to_string(i) + " has a character of the wrong length");
      }
      s.character = group_.make_character(s.character.exponents);
      const std::int64_t ord = group_.character_order(s.character);
      if (s.kind == SummandKind::Trivial && ord != 1) throw Error("representation: trivial summand with nontrivial character");
      if (s.kind == SummandKind::Sign && ord != 2) {
        throw Error("representation: sign summand " + std::to_string(i) + " has character of order " + std::to_string(ord));
      }
      if (s.kind == SummandKind::Rotation && ord < 3) {
        throw Error("representation: rotation summand " + std::to_string(i) + " has character of order " + std::to_string(ord));
      }
    }
  }

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<Summand>& summands() const { return summands_; }

  std::int64_t dimension() const {
    std::int64_t d = 0;
    for (const auto& s : summands_) d += s.dimension();
    return d;
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<Summand> summands_;
};

enum class Shape { Disk, Sphere };

inline const char* to_string(Shape s) { return s == Shape::Disk ? "disk" : "sphere"; }

class LinearActionModel {
 public:
  LinearActionModel(RealRepresentation rep, Shape shape)
      : rep_(std::move(rep)), shape_(shape), acting_(Subgroup::whole(rep_.group())) {}

  const RealRepresentation& rep() const { return rep_; }
  const FiniteAbelianGroup& group() const { return rep_.group(); }
  Shape shape() const { return shape_; }
  /// The subgroup whose action is under study (the whole group by default).
  const Subgroup& acting() const { return acting_; }

  LinearActionModel restricted(const Subgroup& h) const {
    if (!h.is_subgroup_of(acting_)) throw Error("linear model: restriction to a subgroup not contained in the acting group");
    LinearActionModel m = *this;
    m.acting_ = h;
    return m;
  }

  std::int64_t dim_V() const { return rep_.dimension(); }

  /// Dimension of the manifold: n for D(V), n - 1 for S(V).
  std::int64_t space_dimension() const { return shape_ == Shape::Disk ? dim_V() : dim_V() - 1; }

  std::int64_t betti_sum() const { return shape_ == Shape::Disk ? 1 : 2; }

  std::int64_t euler() const { return euler_for_dim(dim_V()); }

  /// chi of D(W) or S(W) for a subspace of dimension d.
  std::int64_t euler_for_dim(std::int64_t d) const {
    if (shape_ == Shape::Disk) return 1;
    return d % 2 == 1 ? 2 : 0;
  }

  bool fixes(std::size_t summand, const Subgroup& h) const {
    const auto& theta = rep_.summands().at(summand).character;
    for (const auto& g : h.generators()) {
      if (!group().character_trivial_on(theta, g)) return false;
    }
    return true;
  }

  std::vector<std::size_t> fixed_summands(const Subgroup& h) const {
    check_subgroup(h);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rep_.summands().size(); ++i) {
      if (fixes(i, h)) out.push_back(i);
    }
    return out;
  }

  std::int64_t dim_of(const std::vector<std::size_t>& summand_set) const {
    std::int64_t d = 0;
    for (auto i : summand_set) d += rep_.summands()[i].dimension();
    return d;
  }

  void check_subgroup(const Subgroup& h) const {
    if (!(h.parent() == group())) throw Error("linear model: subgroup of a different group");
  }

 private:
  RealRepresentation rep_;
  Shape shape_;
  Subgroup acting_;
};

inline std::int64_t fixed_subspace_dim(const LinearActionModel& m, const Subgroup& h) {
  return m.dim_of(m.fixed_summands(h));
}

inline std::int64_t fixed_subspace_dim(const LinearActionModel& m, const GroupElement& g) {
  return fixed_subspace_dim(m, cyclic_subgroup(m.group(), g));
}

inline std::int64_t fixed_euler_characteristic(const LinearActionModel& m, const Subgroup& h) {
  return m.euler_for_dim(fixed_subspace_dim(m, h));
}

/// Orientation sign of g on V: product of the sign characters at g.
inline int orientation_sign(const LinearActionModel& m, const GroupElement& g) {
  int s = 1;
  for (const auto& sm : m.rep().summands()) {
    if (sm.kind == SummandKind::Sign && !m.group().character_trivial_on(sm.character, g)) s = -s;
  }
  return s;
}

struct NormalCharacter {
  Character character;     ///< an ambient representative
  std::int64_t index = 1;  ///< [H : Ker(theta) on H]
  std::vector<std::size_t> summands;
};

namespace detail {

inline bool trivial_on(const FiniteAbelianGroup& g, const Character& theta, const Subgroup& h) {
  for (const auto& x : h.generators()) {
    if (!g.character_trivial_on(theta, x)) return false;
  }
  return true;
}

}  // namespace detail

/// Distinct real characters of h on the summands h moves. Characters that
/// agree on h, or agree after complex conjugation, are identified. Sorted by
/// (index, exponent vector).
inline std::vector<NormalCharacter> moving_characters(const LinearActionModel& m, const Subgroup& h) {
  m.check_subgroup(h);
  const auto& g = m.group();
  std::vector<NormalCharacter> out;
  const auto& sums = m.rep().summands();
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (m.fixes(i, h)) continue;
    const Character& theta = sums[i].character;
    const Character conj = g.conjugate(theta);
    const Character& rep = std::min(theta, conj);
    bool merged = false;
    for (auto& nc : out) {
      if (detail::trivial_on(g, g.character_difference(nc.character, theta), h) ||
          detail::trivial_on(g, g.character_difference(nc.character, conj), h)) {
        nc.summands.push_back(i);
        nc.character = std::min(nc.character, rep);
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({rep, h.order() / h.kernel_of(theta).order(), {i}});
  }
  std::sort(out.begin(), out.end(), [](const NormalCharacter& a, const NormalCharacter& b) {
    return a.index != b.index ? a.index < b.index : a.character < b.character;
  });
  return out;
}

/// Characters occurring in the normal representation at the fixed set of h;
/// empty when the fixed set is empty.
inline std::vector<NormalCharacter> normal_characters(const LinearActionModel& m, const Subgroup& h) {
  if (m.shape() == Shape::Sphere && fixed_subspace_dim(m, h) == 0) return {};
  return moving_characters(m, h);
}

inline std::vector<NormalCharacter> normal_characters(const LinearActionModel& m) {
  return normal_characters(m, m.acting());
}

struct ChiConditionReport {
  bool holds = true;
  std::vector<std::size_t> witness_fixed;  ///< fixed summands of an offending subgroup
  std::size_t fixed_sets_examined = 0;
};

/// Checks chi(X^{H_0}) = chi(X) for every subgroup H_0 of the acting group.
/// The fixed summand sets of subgroups are exactly the closed sets
/// F(H cap Ker theta_T), which are found by closing under adding one summand.
inline ChiConditionReport chi_condition(const LinearActionModel& m) {
  ChiConditionReport r;
  const auto& sums = m.rep().summands();
  const auto& h = m.acting();
  const std::int64_t target = m.euler();
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue{m.fixed_summands(h)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    auto c = std::move(queue.back());
    queue.pop_back();
    ++r.fixed_sets_examined;
    if (m.euler_for_dim(m.dim_of(c)) != target && r.holds) {
      r.holds = false;
      r.witness_fixed = c;
    }
    Subgroup base = h;
    for (auto i : c) base = base.kernel_of(sums[i].character);
    for (std::size_t i = 0; i < sums.size(); ++i) {
      if (std::binary_search(c.begin(), c.end(), i)) continue;
      auto next = m.fixed_summands(base.kernel_of(sums[i].character));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return r;
}

struct StabilityVerdict {
  bool stable = true;
  bool chi_condition = true;
  std::optional<std::int64_t> prime;  ///< prime part where it fails
  std::optional<NormalCharacter> violating;
};

/// lambda-stability of the restriction to every p-part of the acting group.
inline StabilityVerdict is_lambda_stable(const LinearActionModel& m, std::int64_t lambda) {
  StabilityVerdict v;
  for (auto p : m.acting().primes()) {
    auto mp = m.restricted(m.acting().p_part(p));
    if (!chi_condition(mp).holds) {
      v.stable = false;
      v.chi_condition = false;
      v.prime = p;
      return v;
    }
    for (const auto& nc : normal_characters(mp)) {
      if (nc.index <= lambda) {
        v.stable = false;
        v.prime = p;
        v.violating = nc;
        return v;
      }
    }
  }
  return v;
}

struct DescentStep {
  Character character;
  std::int64_t index = 1;       ///< [Gamma_i : Ker theta cap Gamma_i]
  Subgroup subgroup;            ///< Gamma_{i+1}
  std::int64_t fixed_dim = 0;   ///< dim V^{Gamma_{i+1}}
};

struct DescentResult {
  Subgroup subgroup;
  std::vector<DescentStep> steps;
  BigInt step_bound = 1;  ///< e = C(m+k+1, m+1)
  std::int64_t index = 1;
};

/// Replaces Gamma_i by Ker(theta) cap Gamma_i for a violating character until
/// the model is lambda-stable.
inline DescentResult descent_to_stable(const LinearActionModel& m, std::int64_t lambda) {
  if (!m.acting().is_p_group()) throw Error("descent: acting group must be a p-group");
  if (!chi_condition(m).holds) {
    throw Error("descent: some subgroup fixes a set with a different Euler characteristic");
  }
  DescentResult r;
  r.step_bound = chain_bound(m.space_dimension(), m.betti_sum());
  Subgroup cur = m.acting();
  std::int64_t cur_dim = fixed_subspace_dim(m, cur);
  while (true) {
    auto chars = normal_characters(m, cur);
    auto it = std::find_if(chars.begin(), chars.end(), [&](const NormalCharacter& c) { return c.index <= lambda; });
    if (it == chars.end()) break;
    if (BigInt(r.steps.size() + 1) >= r.step_bound) {
      throw Error("descent: step count reached the chain bound " + r.step_bound.str());
    }
    Subgroup next = cur.kernel_of(it->character);
    const std::int64_t d = fixed_subspace_dim(m, next);
    if (d <= cur_dim) throw Error("descent: fixed subspace did not grow");
    r.steps.push_back({it->character, it->index, next, d});
    cur = std::move(next);
    cur_dim = d;
  }
  r.subgroup = cur;
  r.index = m.acting().order() / cur.order();
  return r;
}

/// Least element of the acting group outside the kernels of all characters
/// it moves, so that V^gamma = V^Gamma.
inline GroupElement generic_element(const LinearActionModel& m) {
  const auto& g = m.group();
  const auto chars = moving_characters(m, m.acting());
  for (const auto& x : m.acting().elements()) {
    bool outside = std::all_of(chars.begin(), chars.end(), [&](const NormalCharacter& c) {
      return !g.character_trivial_on(c.character, x);
    });
    if (!outside) continue;
    if (m.fixed_summands(cyclic_subgroup(g, x)) != m.fixed_summands(m.acting())) {
      throw Error("generic_element: fixed subspace of the chosen element differs from that of the group");
    }
    return x;
  }
  throw Error("generic_element: every element lies in the kernel of some normal character");
}

struct GammaSearchResult {
  GroupElement gamma;
  Subgroup subgroup;  ///< A'
  std::int64_t r = 0;
  std::int64_t cost = 0;       ///< I(gamma)
  std::int64_t cost_bound = 0; ///< floor(r / p)
};

namespace detail {

/// Minimizes I(gamma) = sum_{j : gamma in A_j} e_j over the acting p-group.
inline GammaSearchResult gamma_search(const LinearActionModel& m, const char* who) {
  const auto& a = m.acting();
  const auto& g = m.group();
  GammaSearchResult res;
  auto ps = a.primes();
  if (ps.size() > 1) throw Error(std::string(who) + ": acting group must be a p-group");
  if (ps.empty()) {
    res.gamma = g.identity();
    res.subgroup = a;
    return res;
  }
  const std::int64_t p = ps.front();
  const auto chars = moving_characters(m, a);
  res.r = static_cast<std::int64_t>(chars.size());
  res.cost_bound = res.r / p;
  std::vector<Subgroup> kernels;
  std::vector<std::int64_t> e;
  for (const auto& c : chars) {
    kernels.push_back(a.kernel_of(c.character));
    e.push_back(valuation(c.index, p));
  }
  bool found = false;
  for (const auto& x : a.elements()) {
    std::int64_t cost = 0;
    for (std::size_t j = 0; j < chars.size(); ++j) {
      if (kernels[j].contains(x)) cost += e[j];
    }
    if (!found || cost < res.cost) {
      res.cost = cost;
      res.gamma = x;
      found = true;
    }
  }
  if (res.cost > res.cost_bound) {
    throw Error(std::string(who) + ": minimal I(gamma) = " + std::to_string(res.cost) + " exceeds [r/p] = " +
                std::to_string(res.cost_bound));
  }
  std::vector<Subgroup> containing;
  for (std::size_t j = 0; j < chars.size(); ++j) {
    if (kernels[j].contains(res.gamma)) containing.push_back(kernels[j]);
  }
  res.subgroup = a;
  for (const auto& k : containing) res.subgroup = intersect(res.subgroup, k);
  if (m.fixed_summands(cyclic_subgroup(g, res.gamma)) != m.fixed_summands(res.subgroup)) {
    throw Error(std::string(who) + ": fixed set of gamma differs from that of A'");
  }
  if (!divides(BigInt(a.order() / res.subgroup.order()), big_pow(p, res.cost_bound))) {
    throw Error(std::string(who) + ": [A:A'] does not divide p^[r/p]");
  }
  return res;
}

}  // namespace detail

inline GammaSearchResult disk_gamma_search(const LinearActionModel& m) {
  if (m.shape() != Shape::Disk) throw Error("disk_gamma_search: model is not a disk");
  auto res = detail::gamma_search(m, "disk_gamma_search");
  if (!m.acting().primes().empty()) {
    const std::int64_t p = m.acting().primes().front();
    const std::int64_t codim = m.dim_V() - fixed_subspace_dim(m, m.acting());
    if (p == 2 ? res.r > codim : (codim % 2 != 0 || res.r > codim / 2)) {
      throw Error("disk_gamma_search: number of normal characters exceeds the codimension bound");
    }
  }
  return res;
}

inline GammaSearchResult sphere_gamma_search(const LinearActionModel& m) {
  if (m.shape() != Shape::Sphere) throw Error("sphere_gamma_search: model is not a sphere");
  const std::int64_t fixed = fixed_subspace_dim(m, m.acting());
  if (fixed < 3) {
    throw Error("sphere_gamma_search: fixed sphere has dimension " + std::to_string(fixed - 1) +
                " < 2; use the two-point branch");
  }
  if (m.dim_V() % 2 == 0 || fixed % 2 == 0) throw Error("sphere_gamma_search: expected even dimensional spheres");
  auto res = detail::gamma_search(m, "sphere_gamma_search");
  if (!m.acting().primes().empty()) {
    const std::int64_t p = m.acting().primes().front();
    const std::int64_t half = (m.dim_V() - 1) / 2, l = (fixed - 1) / 2;
    const std::int64_t r_bound = p == 2 ? 2 * half - 2 * l : half - l;
    if (res.r > r_bound) {
      throw Error("sphere_gamma_search: r = " + std::to_string(res.r) + " exceeds " + std::to_string(r_bound));
    }
  }
  return res;
}

struct TwoGroupReduction {
  Subgroup subgroup;                 ///< A_0
  std::vector<std::size_t> fixed;    ///< summands spanning V^{A_0}
  std::int64_t rounds = 0;
  BigInt index_bound = 1;            ///< 2^{m+1}
};

/// Alternately restricts to orientation preserving elements and passes to the
/// fixed sphere of an involution until the group acts trivially.
inline TwoGroupReduction sphere_two_group_reduce(const LinearActionModel& m) {
  if (m.shape() != Shape::Sphere) throw Error("sphere_two_group_reduce: model is not a sphere");
  if (m.dim_V() % 2 == 0) throw Error("sphere_two_group_reduce: sphere must be even dimensional");
  auto ps = m.acting().primes();
  if (!(ps.empty() || (ps.size() == 1 && ps.front() == 2))) throw Error("sphere_two_group_reduce: acting group must be a 2-group");
  const auto& g = m.group();
  const auto& sums = m.rep().summands();
  TwoGroupReduction r;
  const std::int64_t half = (m.dim_V() - 1) / 2;
  r.index_bound = big_pow(2, half + 1);
  std::vector<std::size_t> w(sums.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = i;
  Subgroup b = m.acting();
  while (true) {
    ++r.rounds;
    Character omega = g.trivial_character();
    for (auto i : w) {
      if (sums[i].kind == SummandKind::Sign) {
        for (std::size_t f = 0; f < g.rank(); ++f) {
          omega.exponents[f] = mod(omega.exponents[f] + sums[i].character.exponents[f], g.factor_order(f));
        }
      }
    }
    b = b.kernel_of(omega);
    Subgroup k = b;
    for (auto i : w) k = k.kernel_of(sums[i].character);
    if (k == b) break;
    std::optional<GroupElement> inv;
    for (const auto& x : b.elements()) {
      if (!k.contains(x) && k.contains(g.multiply(x, 2))) {
        inv = x;
        break;
      }
    }
    if (!inv) throw Error("sphere_two_group_reduce: no involution modulo the kernel");
    std::vector<std::size_t> next;
    for (auto i : w) {
      if (g.character_trivial_on(sums[i].character, *inv)) next.push_back(i);
    }
    const std::int64_t drop = m.dim_of(w) - m.dim_of(next);
    if (drop < 2 || drop % 2 != 0) throw Error("sphere_two_group_reduce: involution fixed sphere has odd codimension");
    w = std::move(next);
  }
  r.subgroup = b;
  r.fixed = m.fixed_summands(b);
  if (r.fixed != w) throw Error("sphere_two_group_reduce: fixed subspace of A_0 differs from the recursion's sphere");
  if (m.dim_of(w) % 2 == 0) throw Error("sphere_two_group_reduce: fixed sphere is odd dimensional");
  if (!divides(BigInt(m.acting().order() / b.order()), r.index_bound)) throw Error("sphere_two_group_reduce: index does not divide 2^{m+1}");
  return r;
}

struct CrossPrimeResult {
  GroupElement gamma;
  Subgroup subgroup;
};

/// gamma = sum of the gamma_p and A' = join of the A'_p; certifies
/// X^gamma = X^{A'} through the recovered components gamma^e = gamma_p.
/// `fixed` maps a subgroup to a comparable description of its fixed set.
template <class FixedOf>
CrossPrimeResult assemble_cross_prime(const FiniteAbelianGroup& g,
                                      const std::vector<std::pair<GroupElement, Subgroup>>& parts, FixedOf fixed) {
  CrossPrimeResult r{g.identity(), Subgroup::trivial(g)};
  for (const auto& [gp, ap] : parts) {
    r.gamma = g.add(r.gamma, gp);
    r.subgroup = join(r.subgroup, ap);
  }
  if (!r.subgroup.contains(r.gamma)) throw Error("assemble_cross_prime: gamma is not in A'");
  for (const auto& [gp, ap] : parts) {
    auto ps = ap.primes();
    if (ps.size() > 1) throw Error("assemble_cross_prime: per-prime subgroup is not a p-group");
    if (ps.empty()) continue;
    const auto comp = crt_power_extract(g, r.gamma, ps.front());
    if (comp.component != gp) throw Error("assemble_cross_prime: CRT component does not recover gamma_p");
    if (fixed(cyclic_subgroup(g, comp.component)) != fixed(ap)) {
      throw Error("assemble_cross_prime: X^{gamma_p} differs from X^{A'_p}");
    }
  }
  if (fixed(cyclic_subgroup(g, r.gamma)) != fixed(r.subgroup)) throw Error("assemble_cross_prime: X^gamma differs from X^{A'}");
  return r;
}

inline CrossPrimeResult assemble_cross_prime(const LinearActionModel& m,
                                             const std::vector<std::pair<GroupElement, Subgroup>>& parts) {
  return assemble_cross_prime(m.group(), parts, [&](const Subgroup& h) { return m.fixed_summands(h); });
}

struct DiskTheoremResult {
  std::int64_t k = 0;
  BigInt f = 1;
  GroupElement gamma;
  Subgroup subgroup;  ///< A'
  bool low_dimensional = false;  ///< some dim V^{A_p} <= 2, so A' = A
  bool large_primes = false;     ///< every prime of |A| exceeds max{2, k}
  std::vector<GammaSearchResult> per_prime;
};

/// Subgroup A' with [A:A'] | f([(n-3)/2]) and X^gamma = X^{A'} a disk.
inline DiskTheoremResult disk_fixed_point_theorem(const LinearActionModel& m) {
  if (m.shape() != Shape::Disk) throw Error("disk theorem: model is not a disk");
  const auto& a = m.acting();
  const auto& g = m.group();
  DiskTheoremResult r;
  r.k = floor_div(m.dim_V() - 3, 2);
  r.f = f_constant(r.k);
  r.large_primes = true;
  for (auto p : a.primes()) {
    if (p <= std::max<std::int64_t>(2, r.k)) r.large_primes = false;
  }
  for (auto p : a.primes()) {
    if (fixed_subspace_dim(m, a.p_part(p)) <= 2) r.low_dimensional = true;
  }
  if (r.low_dimensional) {
    r.subgroup = a;
    r.gamma = g.identity();
  } else {
    std::vector<std::pair<GroupElement, Subgroup>> parts;
    for (auto p : a.primes()) {
      auto res = disk_gamma_search(m.restricted(a.p_part(p)));
      parts.emplace_back(res.gamma, res.subgroup);
      r.per_prime.push_back(std::move(res));
    }
    auto c = assemble_cross_prime(m, parts);
    r.gamma = c.gamma;
    r.subgroup = c.subgroup;
  }
  if (!divides(BigInt(a.order() / r.subgroup.order()), r.f)) {
    throw Error("disk theorem: [A:A'] = " + std::to_string(a.order() / r.subgroup.order()) + " does not divide f(" +
                std::to_string(r.k) + ") = " + r.f.str());
  }
  if (fixed_euler_characteristic(m, r.subgroup) != 1) throw Error("disk theorem: fixed set of A' is not acyclic");
  if (r.large_primes && !(r.subgroup == a)) throw Error("disk theorem: large primes but A' != A");
  return r;
}

struct SphereTheoremResult {
  std::int64_t half = 0;  ///< m with X = S^{2m}
  BigInt bound = 1;       ///< 2^{m+1} f(m-1)
  Subgroup reduced;       ///< A_0
  GroupElement gamma;
  Subgroup subgroup;      ///< A'
  bool two_point_branch = false;
  std::int64_t fixed_dim = 0;  ///< dim V^{A'}
};

/// Subgroup A' with [A:A'] | 2^{m+1} f(m-1) and |X^{A'}| >= 2.
inline SphereTheoremResult sphere_fixed_point_theorem(const LinearActionModel& m) {
  if (m.shape() != Shape::Sphere) throw Error("sphere theorem: model is not a sphere");
  if (m.dim_V() % 2 == 0) throw Error("sphere theorem: sphere must be even dimensional");
  const auto& a = m.acting();
  const auto& g = m.group();
  SphereTheoremResult r;
  r.half = (m.dim_V() - 1) / 2;
  r.bound = big_pow(2, r.half + 1) * f_constant(r.half - 1);
  std::vector<Subgroup> parts;
  for (auto p : a.primes()) {
    Subgroup ap = a.p_part(p);
    if (p == 2) ap = sphere_two_group_reduce(m.restricted(ap)).subgroup;
    parts.push_back(ap);
  }
  r.reduced = join_all(g, parts);
  std::optional<std::size_t> point_pair;
  for (const auto& ap : parts) {
    auto fs = m.fixed_summands(ap);
    if (m.dim_of(fs) == 1) point_pair = fs.front();
  }
  if (point_pair) {
    r.two_point_branch = true;
    r.subgroup = a.kernel_of(m.rep().summands()[*point_pair].character);
    r.gamma = g.identity();
  } else {
    std::vector<std::pair<GroupElement, Subgroup>> found;
    for (const auto& ap : parts) {
      auto res = sphere_gamma_search(m.restricted(ap));
      found.emplace_back(res.gamma, res.subgroup);
    }
    auto c = assemble_cross_prime(m, found);
    r.gamma = c.gamma;
    r.subgroup = c.subgroup;
  }
  r.fixed_dim = fixed_subspace_dim(m, r.subgroup);
  if (!divides(BigInt(a.order() / r.subgroup.order()), r.bound)) {
    throw Error("sphere theorem: [A:A'] does not divide 2^{m+1} f(m-1) = " + r.bound.str());
  }
  if (r.fixed_dim < 1) throw Error("sphere theorem: fixed set of A' is empty");
  return r;
}

}  // namespace aft
