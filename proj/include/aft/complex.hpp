#pragma once

// Finite abstract simplicial complexes with sorted vertex tuples, boundary
// matrices in the lexicographic orientation, barycentric subdivision and a
// handful of standard triangulations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aft/matrix.hpp"
#include "aft/numeric.hpp"

namespace aft {

using Simplex = std::vector<int>;

inline std::string simplex_string(const Simplex& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Takes a downward closed family of sorted simplices, grouped by dimension.
  explicit SimplicialComplex(std::vector<std::vector<Simplex>> by_dim) : by_dim_(std::move(by_dim)) {
    for (auto& layer : by_dim_) std::sort(layer.begin(), layer.end());
    while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
  }

  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }

  const std::vector<Simplex>& simplices(int d) const {
    static const std::vector<Simplex> none;
    if (d < 0 || d > dimension()) return none;
    return by_dim_[static_cast<std::size_t>(d)];
  }

  std::size_t count(int d) const { return simplices(d).size(); }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& l : by_dim_) n += l.size();
    return n;
  }

  std::vector<Simplex> all_simplices() const {
    std::vector<Simplex> out;
    for (const auto& l : by_dim_) out.insert(out.end(), l.begin(), l.end());
    return out;
  }

  std::vector<int> vertices() const {
    std::vector<int> out;
    for (const auto& s : simplices(0)) out.push_back(s[0]);
    return out;
  }

  bool contains(const Simplex& s) const {
    const auto& l = simplices(static_cast<int>(s.size()) - 1);
    return std::binary_search(l.begin(), l.end(), s);
  }

  /// Position of s among the simplices of its dimension, or -1.
  std::ptrdiff_t index_of(const Simplex& s) const {
    const auto& l = simplices(static_cast<int>(s.size()) - 1);
    auto it = std::lower_bound(l.begin(), l.end(), s);
    if (it == l.end() || *it != s) return -1;
    return it - l.begin();
  }

  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(count(d));
    return chi;
  }

  bool is_subcomplex_of(const SimplicialComplex& other) const {
    for (const auto& l : by_dim_) {
      for (const auto& s : l) {
        if (!other.contains(s)) return false;
      }
    }
    return true;
  }

  /// Matrix of d_j : C_j -> C_{j-1}, rows indexed by (j-1)-simplices.
  /// d[v_0..v_j] = sum_i (-1)^i [v_0..^v_i..v_j].
  Matrix<std::int64_t> boundary_matrix(int j) const {
    Matrix<std::int64_t> m(j >= 1 ? count(j - 1) : 0, count(j));
    if (j < 1) return m;
    const auto& cols = simplices(j);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (std::size_t i = 0; i < cols[c].size(); ++i) {
        Simplex face = cols[c];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        m(static_cast<std::size_t>(index_of(face)), c) = (i % 2 == 0) ? 1 : -1;
      }
    }
    return m;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
};

/// Downward closure of a list of simplices. Rejects empty tuples, repeated or
/// negative vertices and duplicated input tuples.
inline SimplicialComplex build_complex(const std::vector<Simplex>& generators) {
  std::set<Simplex> seen_input;
  std::set<Simplex> all;
  for (const auto& raw : generators) {
    if (raw.empty()) throw Error("complex: empty simplex in input");
    Simplex s = raw;
    std::sort(s.begin(), s.end());
    if (s.front() < 0) throw Error("complex: negative vertex label in " + simplex_string(raw));
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error("complex: repeated vertex in " + simplex_string(raw));
    }
    if (!seen_input.insert(s).second) throw Error("complex: duplicate simplex " + simplex_string(raw));
    if (s.size() > 24) throw Error("complex: simplex " + simplex_string(raw) + " is too large to close");
    const std::size_t k = s.size();
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1U << i)) f.push_back(s[i]);
      }
      all.insert(std::move(f));
    }
  }
  std::vector<std::vector<Simplex>> by_dim;
  for (const auto& s : all) {
    if (by_dim.size() < s.size()) by_dim.resize(s.size());
    by_dim[s.size() - 1].push_back(s);
  }
  return SimplicialComplex(std::move(by_dim));
}

/// Subcomplex of x consisting of the simplices accepted by keep (which must
/// describe a downward closed set).
template <class Pred>
SimplicialComplex filter_complex(const SimplicialComplex& x, Pred keep) {
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(x.dimension() + 1));
  for (int d = 0; d <= x.dimension(); ++d) {
    for (const auto& s : x.simplices(d)) {
      if (keep(s)) by_dim[static_cast<std::size_t>(d)].push_back(s);
    }
  }
  return SimplicialComplex(std::move(by_dim));
}

/// Relabel vertices v -> v + offset on the second complex and union.
inline SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  int offset = 0;
  for (int v : a.vertices()) offset = std::max(offset, v + 1);
  std::vector<Simplex> gens = a.all_simplices();
  for (auto s : b.all_simplices()) {
    for (int& v : s) v += offset;
    gens.push_back(std::move(s));
  }
  return build_complex(gens);
}

/// Closure of the codimension one faces of maximal d-simplices that lie in
/// exactly one d-simplex. Empty for closed pseudomanifolds.
inline SimplicialComplex boundary_subcomplex(const SimplicialComplex& x) {
  std::vector<Simplex> gens;
  for (int d = 1; d <= x.dimension(); ++d) {
    std::map<Simplex, int> cofaces;
    for (const auto& s : x.simplices(d)) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        ++cofaces[f];
      }
    }
    for (const auto& s : x.simplices(d)) {
      bool maximal = d == x.dimension();
      if (!maximal) {
        maximal = true;
        for (const auto& t : x.simplices(d + 1)) {
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            maximal = false;
            break;
          }
        }
      }
      if (!maximal) continue;
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        if (cofaces[f] == 1) gens.push_back(std::move(f));
      }
    }
  }
  if (gens.empty()) return {};
  return build_complex(gens);
}

/// Connected components, each keeping the original vertex labels, ordered by
/// their smallest vertex.
inline std::vector<SimplicialComplex> connected_components(const SimplicialComplex& x) {
  const auto verts = x.vertices();
  std::map<int, int> parent;
  for (int v : verts) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : x.simplices(1)) {
    int a = find(e[0]), b = find(e[1]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<Simplex>> groups;
  for (const auto& s : x.all_simplices()) groups[find(s[0])].push_back(s);
  std::vector<SimplicialComplex> out;
  for (auto& [root, list] : groups) {
    std::vector<std::vector<Simplex>> by_dim;
    for (auto& s : list) {
      if (by_dim.size() < s.size()) by_dim.resize(s.size());
      by_dim[s.size() - 1].push_back(std::move(s));
    }
    out.emplace_back(std::move(by_dim));
  }
  return out;
}

struct Subdivision {
  SimplicialComplex complex;
  /// vertex i of the subdivision is the barycenter of simplex_of[i]
  std::vector<Simplex> simplex_of;
};

/// Barycentric subdivision: vertices are the simplices of x (numbered in
/// dimension then lexicographic order), simplices are chains under inclusion.
inline Subdivision barycentric_subdivision(const SimplicialComplex& x) {
  Subdivision sd;
  sd.simplex_of = x.all_simplices();
  std::map<Simplex, int> id;
  for (std::size_t i = 0; i < sd.simplex_of.size(); ++i) id[sd.simplex_of[i]] = static_cast<int>(i);
  // each descending chain s_0 > s_1 > ... is produced exactly once
  std::vector<Simplex> chains;
  std::vector<int> chain;
  auto extend = [&](auto&& self, const Simplex& s) -> void {
    chain.push_back(id[s]);
    chains.push_back(chain);
    const std::uint32_t full = (1U << s.size()) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (1U << i)) f.push_back(s[i]);
      }
      self(self, f);
    }
    chain.pop_back();
  };
  for (const auto& s : sd.simplex_of) extend(extend, s);
  std::vector<std::vector<Simplex>> by_dim;
  for (auto& c : chains) {
    std::sort(c.begin(), c.end());
    if (by_dim.size() < c.size()) by_dim.resize(c.size());
    by_dim[c.size() - 1].push_back(std::move(c));
  }
  sd.complex = SimplicialComplex(std::move(by_dim));
  return sd;
}

// -- standard complexes -------------------------------------------------------

/// The full n-simplex on vertices 0..n.
inline SimplicialComplex simplex_complex(int n) {
  Simplex s(static_cast<std::size_t>(n + 1));
  std::iota(s.begin(), s.end(), 0);
  return build_complex({s});
}

/// Boundary of the n-simplex, an (n-1)-sphere.
inline SimplicialComplex simplex_boundary(int n) {
  if (n < 1) throw Error("simplex_boundary: need n >= 1");
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= n; ++skip) {
    Simplex f;
    for (int v = 0; v <= n; ++v) {
      if (v != skip) f.push_back(v);
    }
    facets.push_back(std::move(f));
  }
  return build_complex(facets);
}

/// Boundary of the n-dimensional cross polytope, an (n-1)-sphere. Vertex 2i is
/// +e_i and 2i+1 is -e_i.
inline SimplicialComplex cross_polytope_boundary(int n) {
  if (n < 1) throw Error("cross_polytope_boundary: need n >= 1");
  std::vector<Simplex> facets;
  for (std::uint32_t signs = 0; signs < (1U << n); ++signs) {
    Simplex f;
    for (int i = 0; i < n; ++i) f.push_back(2 * i + ((signs >> i) & 1U ? 1 : 0));
    facets.push_back(std::move(f));
  }
  return build_complex(facets);
}

/// Six vertex real projective plane.
inline SimplicialComplex projective_plane_6() {
  return build_complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                        {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

/// Cycle graph on n >= 3 vertices.
inline SimplicialComplex cycle_complex(int n) {
  if (n < 3) throw Error("cycle_complex: need n >= 3");
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return build_complex(edges);
}

}  // namespace aft
