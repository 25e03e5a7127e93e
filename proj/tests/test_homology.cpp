#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "aft/homology.hpp"

using namespace aft;

namespace {

// rank over Q by fraction-free elimination, independent of the Smith code
std::int64_t rational_rank(const Matrix<std::int64_t>& in) {
  Matrix<BigInt> a = to_big_matrix(in);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      BigInt f = a(i, c), g = a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
    }
    ++r;
  }
  return static_cast<std::int64_t>(r);
}

std::vector<std::int64_t> rational_betti(const SimplicialComplex& x) {
  std::vector<std::int64_t> b;
  for (int j = 0; j <= x.dimension(); ++j) {
    std::int64_t down = j >= 1 ? rational_rank(x.boundary_matrix(j)) : 0;
    std::int64_t up = j < x.dimension() ? rational_rank(x.boundary_matrix(j + 1)) : 0;
    b.push_back(static_cast<std::int64_t>(x.count(j)) - down - up);
  }
  return b;
}

}  // namespace

TEST_CASE("spheres and simplices", "[homology]") {
  auto h = homology(simplex_boundary(3));
  CHECK(h.ranks() == std::vector<std::int64_t>{1, 0, 1});
  CHECK(h.torsion_free());
  CHECK(h.euler == 2);
  for (int n = 0; n <= 6; ++n) {
    auto d = homology(simplex_complex(n));
    std::vector<std::int64_t> expect(static_cast<std::size_t>(n + 1), 0);
    expect[0] = 1;
    CHECK(d.ranks() == expect);
    CHECK(d.euler == 1);
  }
  for (int m = 0; m <= 3; ++m) {
    auto s = homology(simplex_boundary(2 * m + 1));
    std::vector<std::int64_t> expect(static_cast<std::size_t>(2 * m + 1), 0);
    expect.front() = 1;
    expect.back() += 1;
    CHECK(s.ranks() == expect);
    CHECK(s.euler == 2);
    CHECK(s.no_odd_cohomology());
  }
}

TEST_CASE("projective plane torsion", "[homology]") {
  auto h = homology(projective_plane_6(), {2, 3});
  CHECK(h.betti_mod_p.at(2) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(h.betti_mod_p.at(3) == std::vector<std::int64_t>{1, 0, 0});
  CHECK(h.betti_Z[1].torsion == std::vector<BigInt>{2});
  CHECK(h.betti_Z[0].torsion.empty());
  CHECK(h.betti_Z[2].torsion.empty());
  CHECK(h.ranks() == rational_betti(projective_plane_6()));
  CHECK_FALSE(h.no_odd_cohomology());
  CHECK(h.torsion_primes() == std::set<std::int64_t>{2});
}

TEST_CASE("universal coefficients and rational ranks", "[homology]") {
  std::vector<SimplicialComplex> corpus{simplex_complex(3), simplex_boundary(4), cross_polytope_boundary(4),
                                        projective_plane_6(), cycle_complex(5),
                                        disjoint_union(simplex_boundary(3), simplex_complex(2)),
                                        barycentric_subdivision(projective_plane_6()).complex};
  for (const auto& x : corpus) {
    auto h = homology(x, {2, 3, 5, 7});
    CHECK(h.ranks() == rational_betti(x));
    for (const auto& [p, b] : h.betti_mod_p) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::int64_t tors = 0;
        for (const auto& t : h.betti_Z[j].torsion) tors += (t % p == 0);
        if (j > 0) {
          for (const auto& t : h.betti_Z[j - 1].torsion) tors += (t % p == 0);
        }
        CHECK(b[j] == h.betti_Z[j].rank + tors);
      }
    }
  }
}

TEST_CASE("subdivision preserves homology", "[homology]") {
  for (const auto& x : {simplex_boundary(3), projective_plane_6(), cross_polytope_boundary(3), simplex_complex(2)}) {
    CHECK(homology(x) == homology(barycentric_subdivision(x).complex));
  }
}

TEST_CASE("free homology basis and induced maps", "[homology]") {
  auto s2 = simplex_boundary(3);
  FreeHomologyBasis b2(s2, 2);
  REQUIRE(b2.rank() == 1);
  // an odd permutation of the vertices reverses the orientation of S^2
  auto m = b2.induced_map({1, 0, 2, 3});
  CHECK(m(0, 0) == -1);
  CHECK(b2.induced_map({1, 2, 0, 3})(0, 0) == 1);
  auto circle = cycle_complex(6);
  CHECK(FreeHomologyBasis(circle, 1).induced_map({1, 2, 3, 4, 5, 0})(0, 0) == 1);
  CHECK(FreeHomologyBasis(circle, 1).induced_map({0, 5, 4, 3, 2, 1})(0, 0) == -1);
  CHECK(homological_lefschetz(circle, {1, 2, 3, 4, 5, 0}) == 0);
  CHECK(FreeHomologyBasis(projective_plane_6(), 1).rank() == 0);
}
