#pragma once

// Brute-force reference computations: element sets, closures, exhaustive counts.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "aft/group.hpp"

namespace aft::test {

inline std::set<GroupElement> element_set(const Subgroup& h) {
  auto e = h.elements();
  return {e.begin(), e.end()};
}

/// Subgroup generated by gens, by repeated addition until stable.
inline std::set<GroupElement> closure(const FiniteAbelianGroup& g, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> s{g.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GroupElement> cur(s.begin(), s.end());
    for (const auto& x : cur) {
      for (const auto& y : gens) {
        if (s.insert(g.add(x, y)).second) grew = true;
      }
    }
  }
  return s;
}

/// Every subgroup as an element set, by closing all pairs of cyclic subgroups
/// until no new sets appear.
inline std::set<std::set<GroupElement>> all_subgroups(const FiniteAbelianGroup& g) {
  std::set<std::set<GroupElement>> out;
  std::vector<std::set<GroupElement>> frontier;
  for (const auto& x : g.elements()) {
    auto c = closure(g, {x});
    if (out.insert(c).second) frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<std::set<GroupElement>> next;
    std::vector<std::set<GroupElement>> known(out.begin(), out.end());
    for (const auto& a : frontier) {
      for (const auto& b : known) {
        std::vector<GroupElement> gens(a.begin(), a.end());
        gens.insert(gens.end(), b.begin(), b.end());
        auto c = closure(g, gens);
        if (out.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

inline std::int64_t factorial(std::int64_t n) {
  std::int64_t r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace aft::test
