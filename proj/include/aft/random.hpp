#pragma once

// Seeded generators for random groups and linear models. Every case gets its
// own engine seeded from (master seed, case index).

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "aft/group.hpp"
#include "aft/linear.hpp"
#include "aft/numeric.hpp"

namespace aft {

class Rng {
 public:
  Rng(std::uint64_t master, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

/// Random finite abelian group of order at most max_order, built from random
/// cyclic prime power factors; a p-group when prime is given.
inline FiniteAbelianGroup random_group(Rng& rng, std::int64_t max_order = 512, std::optional<std::int64_t> prime = {}) {
  const std::vector<std::int64_t> weighted{2, 2, 2, 2, 3, 3, 3, 5, 5, 7, 11, 13};
  std::vector<std::int64_t> orders;
  std::int64_t order = 1;
  do {
    std::vector<std::int64_t> options;
    for (auto p : prime ? std::vector<std::int64_t>{*prime} : weighted) {
      for (std::int64_t q = p; order * q <= max_order; q *= p) options.push_back(q);
    }
    if (options.empty()) break;
    const auto q = rng.pick(options);
    orders.push_back(q);
    order *= q;
  } while (rng.chance(0.6));
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

inline Character random_character(Rng& rng, const FiniteAbelianGroup& g) {
  std::vector<std::int64_t> e;
  for (std::size_t i = 0; i < g.rank(); ++i) e.push_back(rng.uniform(0, g.factor_order(i) - 1));
  return g.make_character(e);
}

/// Real representation of dimension exactly `dim` with characters drawn
/// uniformly from the dual group.
inline RealRepresentation random_representation(Rng& rng, const FiniteAbelianGroup& g, std::int64_t dim) {
  std::vector<Summand> s;
  std::int64_t d = 0;
  while (d < dim) {
    auto theta = random_character(rng, g);
    const auto ord = g.character_order(theta);
    if (ord == 1) {
      s.push_back({SummandKind::Trivial, theta});
      d += 1;
    } else if (ord == 2) {
      s.push_back({SummandKind::Sign, theta});
      d += 1;
    } else if (d + 2 <= dim) {
      s.push_back({SummandKind::Rotation, theta});
      d += 2;
    }
  }
  return RealRepresentation(g, std::move(s));
}

/// Disk model with 1 <= dim V <= max_dim.
inline LinearActionModel random_disk_model(Rng& rng, std::int64_t max_dim = 10, std::int64_t max_order = 512,
                                           std::optional<std::int64_t> prime = {}) {
  auto g = random_group(rng, max_order, prime);
  const auto dim = rng.uniform(1, max_dim);
  return LinearActionModel(random_representation(rng, g, dim), Shape::Disk);
}

/// Model of an even dimensional sphere S^{2m}, 1 <= m <= max_half.
inline LinearActionModel random_sphere_model(Rng& rng, std::int64_t max_half = 5, std::int64_t max_order = 512,
                                             std::optional<std::int64_t> prime = {}) {
  auto g = random_group(rng, max_order, prime);
  const auto half = rng.uniform(1, max_half);
  return LinearActionModel(random_representation(rng, g, 2 * half + 1), Shape::Sphere);
}

/// Elementary abelian p-group of rank 2 or 3 with three trivial summands and
/// nontrivial characters elsewhere. The kernels of the moving characters can
/// cover the group, which is where [A:A'] > 1 is forced.
inline LinearActionModel random_covering_model(Rng& rng, Shape shape) {
  const std::vector<std::int64_t> primes{2, 2, 3, 3, 5};
  const auto g = FiniteAbelianGroup::from_cyclic_orders(
      std::vector<std::int64_t>(static_cast<std::size_t>(rng.uniform(2, 3)), rng.pick(primes)));
  std::vector<Summand> s(3, Summand{SummandKind::Trivial, g.trivial_character()});
  std::int64_t d = 3;
  const std::int64_t dim = shape == Shape::Disk ? rng.uniform(5, 10) : 2 * rng.uniform(2, 5) + 1;
  while (d < dim) {
    const auto theta = random_character(rng, g);
    const auto ord = g.character_order(theta);
    if (ord == 1) continue;
    if (ord == 2) {
      s.push_back({SummandKind::Sign, theta});
      d += 1;
    } else if (d + 2 <= dim) {
      s.push_back({SummandKind::Rotation, theta});
      d += 2;
    } else {
      s.push_back({SummandKind::Trivial, g.trivial_character()});
      d += 1;
    }
  }
  return LinearActionModel(RealRepresentation(g, std::move(s)), shape);
}

}  // namespace aft
