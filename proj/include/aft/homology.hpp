#pragma once

// Integral and mod p homology of simplicial complexes, plus a free basis of
// H_j(X; Z)/torsion used to compute induced maps of simplicial automorphisms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aft/complex.hpp"
#include "aft/matrix.hpp"
#include "aft/numeric.hpp"

namespace aft {

struct DegreeHomology {
  std::int64_t rank = 0;
  std::vector<BigInt> torsion;  ///< invariant factors > 1

  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologyProfile {
  std::vector<DegreeHomology> betti_Z;
  std::map<std::int64_t, std::vector<std::int64_t>> betti_mod_p;
  std::int64_t euler = 0;

  std::vector<std::int64_t> ranks() const {
    std::vector<std::int64_t> out;
    for (const auto& d : betti_Z) out.push_back(d.rank);
    return out;
  }

  std::int64_t betti_sum() const {
    std::int64_t s = 0;
    for (const auto& d : betti_Z) s += d.rank;
    return s;
  }

  std::int64_t betti_sum_mod_p(std::int64_t p) const {
    auto it = betti_mod_p.find(p);
    if (it == betti_mod_p.end()) throw Error("homology: no F_" + std::to_string(p) + " Betti numbers computed");
    std::int64_t s = 0;
    for (auto b : it->second) s += b;
    return s;
  }

  bool torsion_free() const {
    return std::all_of(betti_Z.begin(), betti_Z.end(), [](const DegreeHomology& d) { return d.torsion.empty(); });
  }

  /// Torsion free with homology only in even degrees.
  bool no_odd_cohomology() const {
    if (!torsion_free()) return false;
    for (std::size_t j = 1; j < betti_Z.size(); j += 2) {
      if (betti_Z[j].rank != 0) return false;
    }
    return true;
  }

  std::set<std::int64_t> torsion_primes() const {
    std::set<std::int64_t> out;
    for (const auto& d : betti_Z) {
      for (const auto& t : d.torsion) {
        BigInt x = t;
        for (std::int64_t p = 2; BigInt(p) * p <= x; ++p) {
          if (x % p != 0) continue;
          out.insert(p);
          while (x % p == 0) x /= p;
        }
        if (x > 1) out.insert(static_cast<std::int64_t>(x));
      }
    }
    return out;
  }

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Homology over Z (ranks and torsion per degree) and over F_p for the given
/// primes. Euler characteristic is the alternating simplex count and is
/// checked against both kinds of Betti numbers.
inline HomologyProfile homology(const SimplicialComplex& x, const std::vector<std::int64_t>& primes = {2, 3, 5}) {
  HomologyProfile h;
  const int dim = x.dimension();
  h.euler = x.euler_characteristic();
  if (dim < 0) {
    for (auto p : primes) h.betti_mod_p[p] = {};
    return h;
  }
  // rank and invariant factors of each boundary map d_j, j = 1..dim
  std::vector<std::int64_t> rank_z(static_cast<std::size_t>(dim + 2), 0);
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(dim + 2));
  std::vector<Matrix<std::int64_t>> boundaries(static_cast<std::size_t>(dim + 2));
  for (int j = 1; j <= dim; ++j) {
    boundaries[static_cast<std::size_t>(j)] = x.boundary_matrix(j);
    auto snf = smith_normal_form(boundaries[static_cast<std::size_t>(j)]);
    rank_z[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(snf.rank);
    factors[static_cast<std::size_t>(j)] = snf.torsion();
  }
  std::int64_t alt_z = 0;
  for (int j = 0; j <= dim; ++j) {
    DegreeHomology d;
    d.rank = static_cast<std::int64_t>(x.count(j)) - rank_z[static_cast<std::size_t>(j)] -
             rank_z[static_cast<std::size_t>(j + 1)];
    d.torsion = factors[static_cast<std::size_t>(j + 1)];
    alt_z += (j % 2 == 0 ? 1 : -1) * d.rank;
    h.betti_Z.push_back(std::move(d));
  }
  if (alt_z != h.euler) throw Error("homology: Euler characteristic mismatch over Z");
  for (auto p : primes) {
    std::vector<std::int64_t> rk(static_cast<std::size_t>(dim + 2), 0);
    for (int j = 1; j <= dim; ++j) {
      rk[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(rank_mod_p(boundaries[static_cast<std::size_t>(j)], p));
    }
    std::vector<std::int64_t> b;
    std::int64_t alt = 0;
    for (int j = 0; j <= dim; ++j) {
      b.push_back(static_cast<std::int64_t>(x.count(j)) - rk[static_cast<std::size_t>(j)] - rk[static_cast<std::size_t>(j + 1)]);
      alt += (j % 2 == 0 ? 1 : -1) * b.back();
    }
    if (alt != h.euler) throw Error("homology: Euler characteristic mismatch over F_" + std::to_string(p));
    h.betti_mod_p[p] = std::move(b);
  }
  return h;
}

/// Image of the oriented simplex s under a vertex map, with the sign of the
/// sorting permutation. Returns sign 0 if the image degenerates.
inline std::pair<Simplex, int> oriented_image(const Simplex& s, const std::vector<int>& perm) {
  Simplex img;
  img.reserve(s.size());
  for (int v : s) img.push_back(perm.at(static_cast<std::size_t>(v)));
  int sign = 1;
  for (std::size_t i = 1; i < img.size(); ++i) {
    for (std::size_t k = i; k > 0 && img[k - 1] > img[k]; --k) {
      std::swap(img[k - 1], img[k]);
      sign = -sign;
    }
  }
  if (std::adjacent_find(img.begin(), img.end()) != img.end()) sign = 0;
  return {img, sign};
}

/// A Z-basis of H_j(X; Z) modulo torsion with a coordinate map for cycles.
class FreeHomologyBasis {
 public:
  FreeHomologyBasis(const SimplicialComplex& x, int j) : x_(&x), j_(j) {
    const std::size_t n = x.count(j);
    Matrix<std::int64_t> up = x.boundary_matrix(j + 1);  // n x count(j+1)
    Matrix<std::int64_t> down = x.boundary_matrix(j);    // count(j-1) x n
    if (up.rows() != n) up = Matrix<std::int64_t>(n, 0);
    if (j == 0) down = Matrix<std::int64_t>(0, n);
    auto s1 = smith_normal_form(up, true);
    s_ = s1.rank;
    left_ = *s1.left;
    const Matrix<BigInt>& li = *s1.left_inverse;
    // M = d_j L^{-1} restricted to columns s..n-1
    Matrix<BigInt> tail(n, n - s_);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = s_; c < n; ++c) tail(r, c - s_) = li(r, c);
    }
    Matrix<BigInt> m = to_big_matrix(down) * tail;
    auto s2 = smith_normal_form(m, true);
    t_ = s2.rank;
    right_inv_ = *s2.right_inverse;
    const Matrix<BigInt>& r2 = *s2.right;
    rank_ = (n - s_) - t_;
    Matrix<BigInt> kernel(n - s_, rank_);
    for (std::size_t r = 0; r < n - s_; ++r) {
      for (std::size_t c = 0; c < rank_; ++c) kernel(r, c) = r2(r, t_ + c);
    }
    basis_ = tail * kernel;  // n x rank, columns are cycles
  }

  std::size_t rank() const { return rank_; }
  int degree() const { return j_; }

  /// Column k is a cycle representing the k-th basis class.
  const Matrix<BigInt>& cycles() const { return basis_; }

  /// Coordinates of the class of cycle z in the basis (torsion ignored).
  std::vector<BigInt> coordinates(const std::vector<BigInt>& z) const {
    const std::size_t n = z.size();
    std::vector<BigInt> y(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) y[r] += left_(r, c) * z[c];
    }
    const std::size_t u = n - s_;
    std::vector<BigInt> out(rank_, 0);
    for (std::size_t k = 0; k < rank_; ++k) {
      for (std::size_t c = 0; c < u; ++c) out[k] += right_inv_(t_ + k, c) * y[s_ + c];
    }
    return out;
  }

  /// Matrix of the map induced on H_j/torsion by a vertex permutation that is
  /// a simplicial automorphism. Column k holds the image of basis class k.
  Matrix<BigInt> induced_map(const std::vector<int>& perm) const {
    const auto& simp = x_->simplices(j_);
    Matrix<BigInt> out(rank_, rank_);
    for (std::size_t k = 0; k < rank_; ++k) {
      std::vector<BigInt> z(simp.size(), 0);
      for (std::size_t i = 0; i < simp.size(); ++i) {
        if (basis_(i, k) == 0) continue;
        auto [img, sign] = oriented_image(simp[i], perm);
        auto idx = x_->index_of(img);
        if (idx < 0 || sign == 0) throw Error("induced_map: permutation is not a simplicial automorphism");
        z[static_cast<std::size_t>(idx)] += sign * basis_(i, k);
      }
      auto c = coordinates(z);
      for (std::size_t r = 0; r < rank_; ++r) out(r, k) = c[r];
    }
    return out;
  }

 private:
  const SimplicialComplex* x_;
  int j_;
  std::size_t s_ = 0, t_ = 0, rank_ = 0;
  Matrix<BigInt> left_, right_inv_, basis_;
};

/// Alternating trace of the maps induced on free homology.
inline BigInt homological_lefschetz(const SimplicialComplex& x, const std::vector<int>& perm) {
  BigInt total = 0;
  for (int j = 0; j <= x.dimension(); ++j) {
    FreeHomologyBasis b(x, j);
    auto m = b.induced_map(perm);
    BigInt tr = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
    total += (j % 2 == 0) ? tr : BigInt(-tr);
  }
  return total;
}

}  // namespace aft
