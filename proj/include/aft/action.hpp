#pragma once

// Finite abelian groups acting on simplicial complexes by vertex permutations:
// goodness, fixed subcomplexes, Lefschetz numbers and the orbit counting
// behind the Euler characteristic divisibility argument.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aft/complex.hpp"
#include "aft/group.hpp"
#include "aft/homology.hpp"
#include "aft/numeric.hpp"

namespace aft {

using Permutation = std::vector<int>;

inline Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation r(inner.size());
  for (std::size_t v = 0; v < inner.size(); ++v) r[v] = outer[static_cast<std::size_t>(inner[v])];
  return r;
}

inline Permutation identity_permutation(std::size_t n) {
  Permutation r(n);
  for (std::size_t v = 0; v < n; ++v) r[v] = static_cast<int>(v);
  return r;
}

inline Simplex apply_to_simplex(const Permutation& perm, const Simplex& s) {
  Simplex img;
  img.reserve(s.size());
  for (int v : s) img.push_back(perm[static_cast<std::size_t>(v)]);
  std::sort(img.begin(), img.end());
  return img;
}

struct GoodnessWitness {
  GroupElement element;
  Simplex simplex;  ///< stabilized as a set
  Simplex face;     ///< a face of it that is moved
};

struct GoodnessCertificate {
  bool is_good = true;
  std::vector<GoodnessWitness> witnesses;
};

class SimplicialAction {
 public:
  static constexpr std::size_t kMaxWitnesses = 32;

  /// Validates that every image is a simplicial automorphism, that
  /// generator i has order dividing its factor order and that images commute.
  SimplicialAction(FiniteAbelianGroup group, SimplicialComplex complex, std::vector<Permutation> generator_images)
      : group_(std::move(group)), complex_(std::move(complex)), images_(std::move(generator_images)) {
    const auto verts = complex_.vertices();
    n_ = verts.size();
    for (std::size_t i = 0; i < n_; ++i) {
      if (verts[i] != static_cast<int>(i)) throw Error("action: vertex labels must be 0..n-1");
    }
    if (images_.size() != group_.rank()) {
      throw Error("action: expected " + std::to_string(group_.rank()) + " generator images, got " +
                  std::to_string(images_.size()));
    }
    for (std::size_t g = 0; g < images_.size(); ++g) {
      const auto& p = images_[g];
      if (p.size() != n_) throw Error("action: image of generator " + std::to_string(g) + " has wrong length");
      std::vector<bool> hit(n_, false);
      for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= n_ || hit[static_cast<std::size_t>(v)]) {
          throw Error("action: image of generator " + std::to_string(g) + " is not a permutation");
        }
        hit[static_cast<std::size_t>(v)] = true;
      }
      for (const auto& s : complex_.all_simplices()) {
        if (!complex_.contains(apply_to_simplex(p, s))) {
          throw Error("action: generator " + std::to_string(g) + " maps simplex " + simplex_string(s) +
                      " outside the complex");
        }
      }
      Permutation q = identity_permutation(n_);
      for (std::int64_t k = 0; k < group_.factor_order(g); ++k) q = compose(p, q);
      if (q != identity_permutation(n_)) {
        throw Error("action: generator " + std::to_string(g) + " does not have order dividing " +
                    std::to_string(group_.factor_order(g)));
      }
      for (std::size_t h = 0; h < g; ++h) {
        if (compose(p, images_[h]) != compose(images_[h], p)) {
          throw Error("action: images of generators " + std::to_string(h) + " and " + std::to_string(g) +
                      " do not commute");
        }
      }
    }
  }

  const FiniteAbelianGroup& group() const { return group_; }
  const SimplicialComplex& complex() const { return complex_; }
  const std::vector<Permutation>& generator_images() const { return images_; }
  std::size_t vertex_count() const { return n_; }

  Permutation permutation(const GroupElement& x) const {
    if (!group_.is_element(x)) throw Error("action: not an element of " + group_.to_string());
    Permutation r = identity_permutation(n_);
    for (std::size_t g = 0; g < images_.size(); ++g) {
      for (std::int64_t k = 0; k < x.residues[g]; ++k) r = compose(images_[g], r);
    }
    return r;
  }

  bool fixes_pointwise(const Permutation& p, const Simplex& s) const {
    return std::all_of(s.begin(), s.end(), [&](int v) { return p[static_cast<std::size_t>(v)] == v; });
  }

  GoodnessCertificate validate_good() const {
    GoodnessCertificate cert;
    for (const auto& x : group_.elements()) {
      const auto p = permutation(x);
      for (const auto& s : complex_.all_simplices()) {
        if (apply_to_simplex(p, s) != s) continue;
        for (int v : s) {
          if (p[static_cast<std::size_t>(v)] == v) continue;
          cert.is_good = false;
          if (cert.witnesses.size() < kMaxWitnesses) cert.witnesses.push_back({x, s, {v}});
          break;
        }
      }
    }
    return cert;
  }

  bool is_good() const {
    if (!good_) good_ = validate_good().is_good;
    return *good_;
  }

  /// The induced action on the barycentric subdivision.
  SimplicialAction subdivide() const {
    auto sd = barycentric_subdivision(complex_);
    std::map<Simplex, int> id;
    for (std::size_t i = 0; i < sd.simplex_of.size(); ++i) id[sd.simplex_of[i]] = static_cast<int>(i);
    std::vector<Permutation> imgs;
    for (const auto& p : images_) {
      Permutation q(sd.simplex_of.size());
      for (std::size_t i = 0; i < q.size(); ++i) q[i] = id.at(apply_to_simplex(p, sd.simplex_of[i]));
      imgs.push_back(std::move(q));
    }
    return SimplicialAction(group_, sd.complex, std::move(imgs));
  }

  std::vector<GroupElement> element_list(const Subgroup& h) const {
    if (!(h.parent() == group_)) throw Error("action: subgroup of a different group");
    return h.generators();
  }

  /// Simplices fixed pointwise by every element of h.
  SimplicialComplex fixed_subcomplex(const Subgroup& h) const {
    require_good("fixed_subcomplex");
    std::vector<Permutation> perms;
    for (const auto& g : element_list(h)) perms.push_back(permutation(g));
    return filter_complex(complex_, [&](const Simplex& s) {
      return std::all_of(perms.begin(), perms.end(), [&](const Permutation& p) { return fixes_pointwise(p, s); });
    });
  }

  SimplicialComplex fixed_subcomplex(const GroupElement& g) const {
    return fixed_subcomplex(cyclic_subgroup(group_, g));
  }

  /// Chain-level trace sum_j (-1)^j tr(g_# on C_j).
  std::int64_t lefschetz_number(const GroupElement& g) const {
    const auto p = permutation(g);
    std::int64_t total = 0;
    for (int j = 0; j <= complex_.dimension(); ++j) {
      std::int64_t tr = 0;
      for (const auto& s : complex_.simplices(j)) {
        auto [img, sign] = oriented_image(s, p);
        if (img == s) tr += sign;
      }
      total += (j % 2 == 0 ? 1 : -1) * tr;
    }
    return total;
  }

  /// Alternating trace on H_*(X; Q), via free homology bases.
  BigInt homological_lefschetz_number(const GroupElement& g) const {
    return homological_lefschetz(complex_, permutation(g));
  }

  /// Elements acting as the identity permutation.
  Subgroup action_kernel() const {
    std::vector<GroupElement> triv;
    const auto id = identity_permutation(n_);
    for (const auto& x : group_.elements()) {
      if (permutation(x) == id) triv.push_back(x);
    }
    return Subgroup::generated_by(group_, triv);
  }

  bool is_effective() const { return action_kernel().is_trivial(); }

  /// Setwise stabilizer of a simplex.
  Subgroup stabilizer(const Simplex& s) const {
    std::vector<GroupElement> st;
    for (const auto& x : group_.elements()) {
      if (apply_to_simplex(permutation(x), s) == s) st.push_back(x);
    }
    return Subgroup::generated_by(group_, st);
  }

  /// Orbits of simplices under h, each sorted, ordered by their least simplex.
  std::vector<std::vector<Simplex>> orbits(const Subgroup& h) const {
    std::vector<Permutation> perms;
    for (const auto& x : h.elements()) perms.push_back(permutation(x));
    std::set<Simplex> done;
    std::vector<std::vector<Simplex>> out;
    for (const auto& s : complex_.all_simplices()) {
      if (done.count(s)) continue;
      std::set<Simplex> orb;
      for (const auto& p : perms) orb.insert(apply_to_simplex(p, s));
      done.insert(orb.begin(), orb.end());
      out.emplace_back(orb.begin(), orb.end());
    }
    return out;
  }

  std::vector<std::vector<Simplex>> orbits() const { return orbits(Subgroup::whole(group_)); }

  void require_good(const char* what) const {
    if (!is_good()) {
      throw Error(std::string(what) + ": action is not good (a stabilized simplex is moved); apply make_good first");
    }
  }

 private:
  FiniteAbelianGroup group_;
  SimplicialComplex complex_;
  std::vector<Permutation> images_;
  std::size_t n_ = 0;
  mutable std::optional<bool> good_;
};

inline GoodnessCertificate validate_good(const SimplicialAction& a) { return a.validate_good(); }

/// Subdivides until the action is good; at most two subdivisions.
inline SimplicialAction make_good(const SimplicialAction& a) {
  if (a.is_good()) return a;
  SimplicialAction cur = a;
  for (int round = 1; round <= 2; ++round) {
    cur = cur.subdivide();
    if (cur.is_good()) return cur;
  }
  auto w = cur.validate_good().witnesses.front();
  throw Error("make_good: action still not good after 2 subdivisions; simplex " + simplex_string(w.simplex) +
              " is stabilized but face " + simplex_string(w.face) + " moves");
}

/// Every component of a is a component of b.
inline bool fixed_set_precedes(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto cb = connected_components(b);
  for (const auto& c : connected_components(a)) {
    if (std::find(cb.begin(), cb.end(), c) == cb.end()) return false;
  }
  return true;
}

enum class DivisibilityVerdict { Divisible, NotDivisible, HypothesisViolated };

inline const char* to_string(DivisibilityVerdict v) {
  switch (v) {
    case DivisibilityVerdict::Divisible: return "divisible";
    case DivisibilityVerdict::NotDivisible: return "not_divisible";
    case DivisibilityVerdict::HypothesisViolated: return "hypothesis_violated";
  }
  return "?";
}

struct DivisibilityReport {
  DivisibilityVerdict verdict = DivisibilityVerdict::Divisible;
  std::int64_t defect = 0;       ///< chi(X) - chi(X^{Gamma_0})
  std::int64_t orbit_defect = 0; ///< the same number summed over orbits
  std::int64_t modulus = 1;      ///< p^{n+1}
  std::optional<Simplex> witness;
  std::int64_t witness_index = 0;
};

/// Orbit bookkeeping for chi(X) - chi(X^{Gamma_0}): every simplex outside
/// X^{Gamma_0} lies in a Gamma-orbit of size [Gamma : Stab] which must be at
/// least p^{n+1}.
inline DivisibilityReport chi_defect_divisibility(const SimplicialAction& a, const Subgroup& gamma,
                                                  const Subgroup& gamma0, std::int64_t n) {
  a.require_good("chi_defect_divisibility");
  auto ps = gamma.primes();
  if (ps.size() > 1) throw Error("chi_defect_divisibility: acting group must be a p-group");
  if (!gamma0.is_subgroup_of(gamma)) throw Error("chi_defect_divisibility: Gamma_0 is not a subgroup of Gamma");
  DivisibilityReport r;
  if (ps.empty()) return r;
  const std::int64_t p = ps.front();
  r.modulus = ipow(p, n + 1);
  const auto fixed = a.fixed_subcomplex(gamma0);
  r.defect = a.complex().euler_characteristic() - fixed.euler_characteristic();
  for (const auto& orb : a.orbits(gamma)) {
    const Simplex& s = orb.front();
    if (fixed.contains(s)) continue;
    const std::int64_t size = static_cast<std::int64_t>(orb.size());
    const int dim = static_cast<int>(s.size()) - 1;
    r.orbit_defect += (dim % 2 == 0 ? 1 : -1) * size;
    if (size < r.modulus && r.verdict != DivisibilityVerdict::HypothesisViolated) {
      r.verdict = DivisibilityVerdict::HypothesisViolated;
      r.witness = s;
      r.witness_index = size;
    }
  }
  if (r.orbit_defect != r.defect) throw Error("chi_defect_divisibility: orbit count disagrees with Euler characteristics");
  if (r.verdict != DivisibilityVerdict::HypothesisViolated) {
    r.verdict = (r.defect % r.modulus == 0) ? DivisibilityVerdict::Divisible : DivisibilityVerdict::NotDivisible;
  }
  return r;
}

inline DivisibilityReport chi_defect_divisibility(const SimplicialAction& a, const Subgroup& gamma0, std::int64_t n) {
  return chi_defect_divisibility(a, Subgroup::whole(a.group()), gamma0, n);
}

struct GammaChiResult {
  std::int64_t p = 0;
  std::int64_t n = 0;
  Subgroup subgroup;
  BigInt bound = 1;          ///< p^{n mu}
  Subgroup kernel;           ///< action kernel, quotiented out
  std::int64_t effective_rank = 0;
  bool chi_verified = false; ///< chi(X^{Gamma_0}) = chi(X) checked on every subgroup
};

/// Smallest n with p^{n+1} > 2 * betti_sum.
inline std::int64_t gamma_chi_exponent(std::int64_t p, std::int64_t betti_sum) {
  std::int64_t n = 0;
  while (ipow(p, n + 1) <= 2 * betti_sum) ++n;
  return n;
}

/// Gamma_chi = p^n Gamma + (Gamma cap Ker(action)): index at most p^{n mu},
/// and every subgroup of it fixes a set with the Euler characteristic of X.
inline GammaChiResult gamma_chi_subgroup(const SimplicialAction& a, const Subgroup& gamma, std::optional<std::int64_t> mu,
                                         bool verify_subgroups = true) {
  if (!mu) throw Error("gamma_chi_subgroup: mu(X) must be supplied in the configuration");
  if (*mu < 0) throw Error("gamma_chi_subgroup: mu must be nonnegative");
  a.require_good("gamma_chi_subgroup");
  auto ps = gamma.primes();
  if (ps.size() > 1) throw Error("gamma_chi_subgroup: acting group must be a p-group");
  GammaChiResult r;
  r.kernel = intersect(a.action_kernel(), gamma);
  if (ps.empty()) {
    r.subgroup = gamma;
    r.chi_verified = true;
    return r;
  }
  r.p = ps.front();
  const auto h = homology(a.complex(), {r.p});
  r.n = gamma_chi_exponent(r.p, h.betti_sum_mod_p(r.p));
  r.effective_rank = valuation(gamma.order() / join(gamma.power(1), r.kernel).order(), r.p);
  if (r.effective_rank > *mu) {
    throw Error("gamma_chi_subgroup: effective quotient has rank " + std::to_string(r.effective_rank) +
                " > mu = " + std::to_string(*mu));
  }
  r.subgroup = join(gamma.power(r.n), r.kernel);
  r.bound = big_pow(r.p, r.n * *mu);
  if (BigInt(gamma.order() / r.subgroup.order()) > r.bound) throw Error("gamma_chi_subgroup: index exceeds p^{n mu}");
  if (verify_subgroups && h.no_odd_cohomology()) {
    const std::int64_t chi = a.complex().euler_characteristic();
    for (const auto& s : enumerate_subgroups(r.subgroup, r.subgroup.order())) {
      if (a.fixed_subcomplex(s).euler_characteristic() != chi) {
        throw Error("gamma_chi_subgroup: subgroup " + s.to_string() + " has a fixed set with different Euler characteristic");
      }
    }
    r.chi_verified = true;
  }
  return r;
}

inline GammaChiResult gamma_chi_subgroup(const SimplicialAction& a, std::optional<std::int64_t> mu,
                                         bool verify_subgroups = true) {
  return gamma_chi_subgroup(a, Subgroup::whole(a.group()), mu, verify_subgroups);
}

}  // namespace aft
