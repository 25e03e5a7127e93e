#pragma once

// Explicit constants: f(k), the chain bound, C_{p,chi}, P_chi, C_lambda and
// the composite bound 3^b C_{lambda_chi}; the mod 3 Minkowski check and the
// subgroup acting trivially on integral homology.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aft/group.hpp"
#include "aft/matrix.hpp"
#include "aft/numeric.hpp"

namespace aft {

/// f(k) = 2^k prod_{odd p} p^{floor(k/p)}, and 1 for k < 0.
inline BigInt f_constant(std::int64_t k) {
  if (k < 0) return 1;
  BigInt r = big_pow(2, k);
  for (auto p : primes_up_to(k)) {
    if (p != 2) r *= big_pow(p, k / p);
  }
  return r;
}

/// (m+k+1 choose m+1)
inline BigInt chain_bound(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0) throw Error("chain_bound: m and k must be nonnegative");
  return binomial(m + k + 1, m + 1);
}

/// Counts (m+1)-tuples of nonnegative integers with sum at most k.
inline BigInt chain_bound_oracle(std::int64_t m, std::int64_t k, std::int64_t cap = 12) {
  if (m < 0 || k < 0) throw Error("chain_bound_oracle: m and k must be nonnegative");
  if (m + k > cap) throw Error("chain_bound_oracle: m + k = " + std::to_string(m + k) + " exceeds cap " + std::to_string(cap));
  std::vector<std::int64_t> d(static_cast<std::size_t>(m + 1), 0);
  BigInt count = 0;
  while (true) {
    std::int64_t sum = 0;
    for (auto x : d) sum += x;
    if (sum <= k) ++count;
    std::size_t i = 0;
    while (i < d.size()) {
      if (++d[i] <= k) break;
      d[i] = 0;
      ++i;
    }
    if (i == d.size()) break;
  }
  return count;
}

struct BoundsConfig {
  std::int64_t dim = 0;
  std::vector<std::int64_t> betti_Z;
  std::map<std::int64_t, std::vector<std::int64_t>> betti_mod_p;
  std::set<std::int64_t> torsion_primes;
  std::optional<std::int64_t> mu;

  void validate() const {
    if (dim < 0) throw Error("bounds config: dim must be nonnegative");
    if (mu && *mu < 0) throw Error("bounds config: mu must be nonnegative");
    auto nonneg = [](const std::vector<std::int64_t>& v) {
      return std::all_of(v.begin(), v.end(), [](std::int64_t b) { return b >= 0; });
    };
    if (!nonneg(betti_Z)) throw Error("bounds config: negative Betti number");
    for (const auto& [p, b] : betti_mod_p) {
      if (!is_prime(p)) throw Error("bounds config: " + std::to_string(p) + " is not prime");
      if (!nonneg(b)) throw Error("bounds config: negative F_p Betti number");
    }
    for (auto p : torsion_primes) {
      if (!is_prime(p)) throw Error("bounds config: torsion prime " + std::to_string(p) + " is not prime");
    }
  }

  std::int64_t require_mu() const {
    if (!mu) throw Error("bounds config: mu(X) is required for this constant");
    return *mu;
  }

  /// b_j(X; F_p): explicit data if present, else the integral ranks when p is
  /// not a torsion prime.
  std::vector<std::int64_t> betti_for(std::int64_t p) const {
    auto it = betti_mod_p.find(p);
    if (it != betti_mod_p.end()) return it->second;
    if (torsion_primes.count(p)) {
      throw Error("bounds config: missing F_" + std::to_string(p) + " Betti numbers for a torsion prime");
    }
    return betti_Z;
  }

  std::int64_t betti_sum_for(std::int64_t p) const {
    std::int64_t s = 0;
    for (auto b : betti_for(p)) s += b;
    return s;
  }

  std::int64_t betti_sum() const {
    std::int64_t s = 0;
    for (auto b : betti_Z) s += b;
    return s;
  }

  std::int64_t euler() const {
    std::int64_t chi = 0;
    for (std::size_t j = 0; j < betti_Z.size(); ++j) chi += (j % 2 == 0 ? 1 : -1) * betti_Z[j];
    return chi;
  }

  bool no_odd_cohomology() const {
    if (!torsion_primes.empty()) return false;
    for (std::size_t j = 1; j < betti_Z.size(); j += 2) {
      if (betti_Z[j] != 0) return false;
    }
    return true;
  }

  /// K = sum_j max_p b_j(X; F_p).
  std::int64_t max_betti_sum() const {
    std::size_t len = betti_Z.size();
    for (const auto& [p, b] : betti_mod_p) len = std::max(len, b.size());
    std::int64_t k = 0;
    for (std::size_t j = 0; j < len; ++j) {
      std::int64_t best = j < betti_Z.size() ? betti_Z[j] : 0;
      for (const auto& [p, b] : betti_mod_p) {
        if (j < b.size()) best = std::max(best, b[j]);
      }
      k += best;
    }
    for (auto p : torsion_primes) {
      if (!betti_mod_p.count(p)) throw Error("bounds config: missing F_" + std::to_string(p) + " Betti numbers for a torsion prime");
    }
    return k;
  }
};

struct PrimeChiConstant {
  std::int64_t n = 0;
  BigInt value = 1;  ///< p^{n mu}
};

/// Smallest n with p^{n+1} > 2 sum_j b_j(X; F_p), and C_{p,chi} = p^{n mu}.
inline PrimeChiConstant prime_chi_constant(std::int64_t p, const BoundsConfig& cfg) {
  if (!is_prime(p)) throw Error("C_p_chi: " + std::to_string(p) + " is not prime");
  const std::int64_t twice = 2 * cfg.betti_sum_for(p);
  PrimeChiConstant c;
  BigInt pk = p;
  while (pk <= twice) {
    pk *= p;
    ++c.n;
  }
  c.value = c.n == 0 ? BigInt(1) : big_pow(p, c.n * cfg.require_mu());
  return c;
}

/// Smallest prime strictly larger than every torsion prime (2 without torsion).
inline std::int64_t torsion_free_prime(const BoundsConfig& cfg) {
  std::int64_t top = 1;
  for (auto p : cfg.torsion_primes) top = std::max(top, p);
  return next_prime_after(top);
}

/// P_chi = max{p_0, 2 sum_j b_j + 1}.
inline std::int64_t chi_prime_threshold(const BoundsConfig& cfg) {
  return std::max(torsion_free_prime(cfg), 2 * cfg.betti_sum() + 1);
}

/// C_lambda = prod_{p <= P_chi} C_{p,chi} * prod_{p <= lambda} lambda^e with
/// e = C(m+K+1, m+1).
inline BigInt stable_index_bound(std::int64_t lambda, const BoundsConfig& cfg) {
  BigInt c = 1;
  for (auto p : primes_up_to(chi_prime_threshold(cfg))) c *= prime_chi_constant(p, cfg).value;
  if (lambda >= 2) {
    const BigInt e = chain_bound(cfg.dim, cfg.max_betti_sum());
    if (e > 1000000) throw Error("C_lambda: exponent e = " + e.str() + " is too large to expand exactly");
    const auto e64 = static_cast<std::int64_t>(e);
    for (std::size_t i = 0, n = primes_up_to(lambda).size(); i < n; ++i) c *= big_pow(lambda, e64);
  }
  return c;
}

/// lambda_chi = chi(X) dim X.
inline std::int64_t lambda_chi(const BoundsConfig& cfg) { return cfg.euler() * cfg.dim; }

/// b = sum_j b_j^2.
inline std::int64_t betti_square_sum(const BoundsConfig& cfg) {
  std::int64_t b = 0;
  for (auto x : cfg.betti_Z) b += x * x;
  return b;
}

/// 3^b C_{lambda_chi}; requires no odd cohomology.
inline BigInt composite_bound(const BoundsConfig& cfg) {
  if (!cfg.no_odd_cohomology()) {
    throw Error("composite_bound: the space has odd or torsion cohomology, the bound does not apply");
  }
  return big_pow(3, betti_square_sum(cfg)) * stable_index_bound(lambda_chi(cfg), cfg);
}

// -- Minkowski ----------------------------------------------------------------

using IntMatrix = Matrix<std::int64_t>;

inline IntMatrix mul_checked(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
    }
  }
  return c;
}

inline IntMatrix reduce_mod(const IntMatrix& a, std::int64_t q) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = mod(a(i, j), q);
  }
  return r;
}

namespace detail {
inline std::vector<std::int64_t> flat(const IntMatrix& a) {
  std::vector<std::int64_t> v;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
  }
  return v;
}
}  // namespace detail

struct MinkowskiReport {
  std::size_t group_order = 0;
  bool injective = true;
  std::optional<std::pair<std::size_t, std::size_t>> collision;
};

/// Checks that the set is a group under multiplication and that reduction
/// mod 3 is injective on it.
inline MinkowskiReport minkowski_injectivity_check(const std::vector<IntMatrix>& mats) {
  if (mats.empty()) throw Error("minkowski: empty matrix set");
  const std::size_t n = mats.front().rows();
  std::set<std::vector<std::int64_t>> members;
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) throw Error("minkowski: matrices must be square of equal size");
    if (!members.insert(detail::flat(m)).second) throw Error("minkowski: duplicate matrix in input");
  }
  if (!members.count(detail::flat(IntMatrix::identity(n)))) throw Error("minkowski: identity missing, not a group");
  for (const auto& a : mats) {
    for (const auto& b : mats) {
      if (!members.count(detail::flat(mul_checked(a, b)))) throw Error("minkowski: set is not closed under products");
    }
  }
  MinkowskiReport r;
  r.group_order = mats.size();
  std::map<std::vector<std::int64_t>, std::size_t> seen;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    auto [it, fresh] = seen.emplace(detail::flat(reduce_mod(mats[i], 3)), i);
    if (!fresh) {
      r.injective = false;
      r.collision = {it->second, i};
      break;
    }
  }
  return r;
}

/// All n x n signed permutation matrices, order 2^n n!.
inline std::vector<IntMatrix> signed_permutation_matrices(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<IntMatrix> out;
  do {
    for (std::uint32_t signs = 0; signs < (1U << n); ++signs) {
      IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])) = (signs >> i) & 1U ? -1 : 1;
      }
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Action of the group generators on H_j(X; Z)/torsion, one matrix per degree.
struct HomologyAction {
  FiniteAbelianGroup group;
  std::vector<std::vector<IntMatrix>> images;  ///< images[generator][degree]
};

struct TrivializingResult {
  Subgroup subgroup;
  BigInt bound = 1;  ///< 3^b
  std::int64_t b = 0;
  std::vector<GroupElement> minkowski_violations;  ///< trivial mod 3 but not over Z
};

/// Kernel of the composite A -> prod_j GL(b_j, F_3); certified to have index
/// at most 3^b.
inline TrivializingResult cohomology_trivializing_subgroup(const HomologyAction& act) {
  const auto& g = act.group;
  if (act.images.size() != g.rank()) throw Error("homology action: one image list per generator required");
  std::vector<std::size_t> dims;
  if (!act.images.empty()) {
    for (const auto& m : act.images.front()) dims.push_back(m.rows());
  }
  for (std::size_t i = 0; i < act.images.size(); ++i) {
    if (act.images[i].size() != dims.size()) throw Error("homology action: degree count differs between generators");
    for (std::size_t j = 0; j < dims.size(); ++j) {
      const auto& m = act.images[i][j];
      if (m.rows() != dims[j] || m.cols() != dims[j]) throw Error("homology action: matrix shape mismatch in degree " + std::to_string(j));
      IntMatrix pw = IntMatrix::identity(dims[j]);
      for (std::int64_t k = 0; k < g.factor_order(i); ++k) pw = mul_checked(m, pw);
      if (!(pw == IntMatrix::identity(dims[j]))) {
        throw Error("homology action: image of generator " + std::to_string(i) + " in degree " + std::to_string(j) +
                    " does not have order dividing " + std::to_string(g.factor_order(i)));
      }
      for (std::size_t h = 0; h < i; ++h) {
        if (!(mul_checked(m, act.images[h][j]) == mul_checked(act.images[h][j], m))) {
          throw Error("homology action: generator images do not commute");
        }
      }
    }
  }
  TrivializingResult r;
  for (auto d : dims) r.b += static_cast<std::int64_t>(d * d);
  r.bound = big_pow(3, r.b);
  std::vector<GroupElement> triv;
  for (const auto& x : g.elements()) {
    bool mod3_trivial = true, z_trivial = true;
    for (std::size_t j = 0; j < dims.size(); ++j) {
      IntMatrix m = IntMatrix::identity(dims[j]);
      for (std::size_t i = 0; i < g.rank(); ++i) {
        for (std::int64_t k = 0; k < x.residues[i]; ++k) m = mul_checked(act.images[i][j], m);
      }
      if (!(reduce_mod(m, 3) == reduce_mod(IntMatrix::identity(dims[j]), 3))) mod3_trivial = false;
      if (!(m == IntMatrix::identity(dims[j]))) z_trivial = false;
    }
    if (mod3_trivial) triv.push_back(x);
    if (mod3_trivial && !z_trivial) r.minkowski_violations.push_back(x);
  }
  r.subgroup = Subgroup::generated_by(g, triv);
  if (static_cast<std::size_t>(r.subgroup.order()) != triv.size()) {
    throw Error("homology action: mod 3 kernel is not closed, images do not define a homomorphism");
  }
  if (BigInt(r.subgroup.index()) > r.bound) throw Error("homology action: index exceeds 3^b");
  return r;
}

}  // namespace aft
