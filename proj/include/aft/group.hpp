#pragma once

// Finite abelian groups in canonical primary decomposition, their elements,
// characters and subgroups.
//
// A group is stored as  prod_p prod_i Z/p^{e_i}  with primes increasing and each
// exponent list sorted descending. The cyclic factors are numbered in that
// order and an element is the vector of its residues, one per factor. Group
// operations are written additively in code (x + y, k * x).
//
// Subgroups are kept in a canonical form: the p-primary part of a subgroup is a
// submodule of (Z/p^E)^r (E = largest exponent at p, coordinates scaled by
// p^{E - e_i}) and is stored as its Howell form. Two subgroups are equal iff
// their Howell forms agree, so equality, ordering and dedup are cheap.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aft/numeric.hpp"

namespace aft {

inline constexpr std::int64_t kOracleCap = 4096;

struct PrimaryComponent {
  std::int64_t p = 0;
  std::vector<int> exponents;

  friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;
};

struct GroupElement {
  std::vector<std::int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A character x -> exp(2 pi i * sum_i exponents_i x_i / n_i), n_i the factor orders.
struct Character {
  std::vector<std::int64_t> exponents;

  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

class FiniteAbelianGroup {
 public:
  /// The trivial group.
  FiniteAbelianGroup() = default;

  /// Validates canonical form: primes strictly increasing, exponents >= 1 and
  /// sorted descending.
  explicit FiniteAbelianGroup(std::vector<PrimaryComponent> primary) : primary_(std::move(primary)) {
    std::int64_t last = 1;
    for (const auto& c : primary_) {
      if (!is_prime(c.p)) throw Error("group: " + std::to_string(c.p) + " is not prime");
      if (c.p <= last) throw Error("group: primes must be strictly increasing");
      if (c.exponents.empty()) throw Error("group: empty exponent list for p=" + std::to_string(c.p));
      for (std::size_t i = 0; i < c.exponents.size(); ++i) {
        if (c.exponents[i] < 1) throw Error("group: exponents must be >= 1");
        if (i > 0 && c.exponents[i] > c.exponents[i - 1]) {
          throw Error("group: exponent lists must be sorted descending");
        }
      }
      last = c.p;
    }
    rebuild();
  }

  static FiniteAbelianGroup cyclic(std::int64_t n) { return from_cyclic_orders(std::vector<std::int64_t>{n}); }

  /// Canonical group isomorphic to the product of Z/n over the given orders.
  /// Factor numbering follows the canonical form, not the argument order.
  static FiniteAbelianGroup from_cyclic_orders(std::span<const std::int64_t> orders) {
    std::vector<std::pair<std::int64_t, int>> parts;
    for (auto n : orders) {
      if (n < 1) throw Error("group: cyclic orders must be positive");
      for (auto pe : factorize(n)) parts.push_back(pe);
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first < b.first : a.second > b.second;
    });
    std::vector<PrimaryComponent> primary;
    for (const auto& [p, e] : parts) {
      if (primary.empty() || primary.back().p != p) primary.push_back({p, {}});
      primary.back().exponents.push_back(e);
    }
    return FiniteAbelianGroup(std::move(primary));
  }

  const std::vector<PrimaryComponent>& primary() const { return primary_; }
  std::size_t rank() const { return orders_.size(); }
  std::int64_t factor_order(std::size_t i) const { return orders_.at(i); }
  std::int64_t factor_prime(std::size_t i) const { return primes_.at(i); }
  int factor_exponent(std::size_t i) const { return exps_.at(i); }
  const std::vector<std::int64_t>& factor_orders() const { return orders_; }
  std::int64_t order() const { return order_; }

  /// Least common multiple of the factor orders.
  std::int64_t exponent() const {
    std::int64_t l = 1;
    for (auto n : orders_) l = lcm64(l, n);
    return l;
  }

  std::vector<std::int64_t> primes() const {
    std::vector<std::int64_t> out;
    for (const auto& c : primary_) out.push_back(c.p);
    return out;
  }

  bool is_p_group() const { return primary_.size() <= 1; }

  GroupElement identity() const { return {std::vector<std::int64_t>(rank(), 0)}; }

  GroupElement generator(std::size_t i) const {
    auto g = identity();
    g.residues.at(i) = orders_[i] == 1 ? 0 : 1;
    return g;
  }

  GroupElement make_element(std::vector<std::int64_t> residues) const {
    if (residues.size() != rank()) {
      throw Error("group element has " + std::to_string(residues.size()) + " residues, expected " +
                  std::to_string(rank()));
    }
    for (std::size_t i = 0; i < rank(); ++i) residues[i] = mod(residues[i], orders_[i]);
    return {std::move(residues)};
  }

  bool is_element(const GroupElement& x) const {
    if (x.residues.size() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x.residues[i] < 0 || x.residues[i] >= orders_[i]) return false;
    }
    return true;
  }

  GroupElement add(const GroupElement& x, const GroupElement& y) const {
    GroupElement r = identity();
    for (std::size_t i = 0; i < rank(); ++i) r.residues[i] = (x.residues[i] + y.residues[i]) % orders_[i];
    return r;
  }

  GroupElement negate(const GroupElement& x) const {
    GroupElement r = identity();
    for (std::size_t i = 0; i < rank(); ++i) r.residues[i] = mod(-x.residues[i], orders_[i]);
    return r;
  }

  /// k * x (the power x^k in multiplicative notation).
  GroupElement multiply(const GroupElement& x, std::int64_t k) const {
    GroupElement r = identity();
    for (std::size_t i = 0; i < rank(); ++i) r.residues[i] = mul_mod(mod(k, orders_[i]), x.residues[i], orders_[i]);
    return r;
  }

  std::int64_t element_order(const GroupElement& x) const {
    std::int64_t o = 1;
    for (std::size_t i = 0; i < rank(); ++i) o = lcm64(o, orders_[i] / gcd64(x.residues[i], orders_[i]));
    return o;
  }

  /// All elements in lexicographic residue order.
  std::vector<GroupElement> elements(std::int64_t cap = kOracleCap) const {
    if (order_ > cap) {
      throw Error("group of order " + std::to_string(order_) + " exceeds enumeration cap " + std::to_string(cap));
    }
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    GroupElement x = identity();
    for (std::int64_t n = 0; n < order_; ++n) {
      out.push_back(x);
      for (std::size_t i = rank(); i-- > 0;) {
        if (++x.residues[i] < orders_[i]) break;
        x.residues[i] = 0;
      }
    }
    return out;
  }

  // -- characters -----------------------------------------------------------

  Character trivial_character() const { return {std::vector<std::int64_t>(rank(), 0)}; }

  Character make_character(std::vector<std::int64_t> exponents) const {
    if (exponents.size() != rank()) throw Error("character has wrong number of exponents");
    for (std::size_t i = 0; i < rank(); ++i) exponents[i] = mod(exponents[i], orders_[i]);
    return {std::move(exponents)};
  }

  /// theta(x) = exp(2 pi i v / exponent()); returns v in [0, exponent()).
  std::int64_t character_value(const Character& theta, const GroupElement& x) const {
    const std::int64_t l = exponent();
    std::int64_t v = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      v = (v + mul_mod(mul_mod(theta.exponents[i], x.residues[i], l), l / orders_[i], l)) % l;
    }
    return v;
  }

  bool character_trivial_on(const Character& theta, const GroupElement& x) const {
    return character_value(theta, x) == 0;
  }

  /// Order of theta in the dual group.
  std::int64_t character_order(const Character& theta) const {
    std::int64_t o = 1;
    for (std::size_t i = 0; i < rank(); ++i) o = lcm64(o, orders_[i] / gcd64(theta.exponents[i], orders_[i]));
    return o;
  }

  Character conjugate(const Character& theta) const {
    Character c = trivial_character();
    for (std::size_t i = 0; i < rank(); ++i) c.exponents[i] = mod(-theta.exponents[i], orders_[i]);
    return c;
  }

  Character character_difference(const Character& a, const Character& b) const {
    Character c = trivial_character();
    for (std::size_t i = 0; i < rank(); ++i) c.exponents[i] = mod(a.exponents[i] - b.exponents[i], orders_[i]);
    return c;
  }

  /// All characters of order dividing p, i.e. the p-torsion of the dual group.
  std::vector<Character> characters_of_order_dividing(std::int64_t p) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (primes_[i] == p) idx.push_back(i);
    }
    std::vector<Character> out;
    std::vector<std::int64_t> digits(idx.size(), 0);
    while (true) {
      Character c = trivial_character();
      for (std::size_t k = 0; k < idx.size(); ++k) c.exponents[idx[k]] = digits[k] * (orders_[idx[k]] / p);
      out.push_back(std::move(c));
      std::size_t k = idx.size();
      while (k-- > 0) {
        if (++digits[k] < p) break;
        digits[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
    return out;
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a.primary_ == b.primary_; }

  std::string to_string() const {
    if (rank() == 0) return "1";
    std::string s;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (i) s += " + ";
      s += "Z/" + std::to_string(orders_[i]);
    }
    return s;
  }

 private:
  void rebuild() {
    orders_.clear();
    primes_.clear();
    exps_.clear();
    order_ = 1;
    for (const auto& c : primary_) {
      for (int e : c.exponents) {
        orders_.push_back(ipow(c.p, e));
        primes_.push_back(c.p);
        exps_.push_back(e);
        order_ = checked_mul(order_, orders_.back());
      }
    }
  }

  std::vector<PrimaryComponent> primary_;
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> primes_;
  std::vector<int> exps_;
  std::int64_t order_ = 1;
};

namespace detail {

using Row = std::vector<std::int64_t>;

inline bool row_is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
}

/// r -= q * s (mod n)
inline void row_axpy(Row& r, std::int64_t q, const Row& s, std::int64_t n) {
  if (q == 0) return;
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = mod(r[j] - mul_mod(q, s[j], n), n);
}

/// Howell form of the row span of `rows` over Z/p^E (modulus = p^E).
/// Pivots are powers of p, entries above a pivot are reduced into [0, pivot),
/// and the span of rows whose first k entries vanish is spanned by the rows
/// of the form with that property. The result is unique for the module.
inline std::vector<Row> howell_form(std::vector<Row> pending, std::int64_t p, std::int64_t modulus, std::size_t cols) {
  for (auto& r : pending) {
    for (auto& v : r) v = mod(v, modulus);
  }
  std::erase_if(pending, row_is_zero);
  std::vector<Row> done;
  for (std::size_t c = 0; c < cols && !pending.empty(); ++c) {
    std::size_t best = pending.size();
    int best_v = 0;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (pending[i][c] == 0) continue;
      int v = valuation(pending[i][c], p);
      if (best == pending.size() || v < best_v) {
        best = i;
        best_v = v;
      }
    }
    if (best == pending.size()) continue;
    Row piv = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    const std::int64_t pv = ipow(p, best_v);
    const std::int64_t unit_inv = inverse_mod(piv[c] / pv, modulus);
    for (auto& v : piv) v = mul_mod(v, unit_inv, modulus);
    for (auto& r : pending) {
      if (r[c] != 0) row_axpy(r, r[c] / pv, piv, modulus);
    }
    Row closure = piv;
    for (auto& v : closure) v = mul_mod(v, modulus / pv, modulus);
    if (!row_is_zero(closure)) pending.push_back(std::move(closure));
    for (auto& r : done) {
      if (r[c] >= pv) row_axpy(r, r[c] / pv, piv, modulus);
    }
    done.push_back(std::move(piv));
    std::erase_if(pending, row_is_zero);
  }
  return done;
}

inline std::size_t pivot_column(const Row& r) {
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] != 0) return j;
  }
  return r.size();
}

}  // namespace detail

class Subgroup;
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Subgroup of a FiniteAbelianGroup in canonical (per-prime Howell) form.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup generated_by(const FiniteAbelianGroup& g, std::span<const GroupElement> gens) {
    Subgroup s(g);
    for (auto& b : s.blocks_) {
      std::vector<detail::Row> rows;
      for (const auto& x : gens) {
        if (!g.is_element(x)) throw Error("subgroup generator is not an element of " + g.to_string());
        rows.push_back(s.scaled(b, x));
      }
      b.rows = detail::howell_form(std::move(rows), b.p, b.modulus, b.factors.size());
    }
    return s;
  }

  static Subgroup generated_by(const FiniteAbelianGroup& g, std::initializer_list<GroupElement> gens) {
    return generated_by(g, std::span<const GroupElement>(gens.begin(), gens.size()));
  }

  static Subgroup whole(const FiniteAbelianGroup& g) {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i));
    return generated_by(g, gens);
  }

  static Subgroup trivial(const FiniteAbelianGroup& g) { return Subgroup(g); }

  const FiniteAbelianGroup& parent() const { return parent_; }

  std::int64_t order() const {
    std::int64_t o = 1;
    for (const auto& b : blocks_) {
      for (const auto& r : b.rows) o = checked_mul(o, b.modulus / r[detail::pivot_column(r)]);
    }
    return o;
  }

  std::int64_t index() const { return parent_.order() / order(); }

  /// Order of this subgroup's p-primary part.
  std::int64_t p_order(std::int64_t p) const {
    std::int64_t o = 1;
    for (const auto& b : blocks_) {
      if (b.p != p) continue;
      for (const auto& r : b.rows) o = checked_mul(o, b.modulus / r[detail::pivot_column(r)]);
    }
    return o;
  }

  bool is_trivial() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.rows.empty(); });
  }

  /// Primes dividing the order of this subgroup.
  std::vector<std::int64_t> primes() const {
    std::vector<std::int64_t> out;
    for (const auto& b : blocks_) {
      if (!b.rows.empty()) out.push_back(b.p);
    }
    return out;
  }

  bool is_p_group() const { return primes().size() <= 1; }

  bool contains(const GroupElement& x) const {
    if (!parent_.is_element(x)) return false;
    for (const auto& b : blocks_) {
      detail::Row v = scaled(b, x);
      for (const auto& r : b.rows) {
        std::size_t c = detail::pivot_column(r);
        if (v[c] % r[c] != 0) return false;
        detail::row_axpy(v, v[c] / r[c], r, b.modulus);
      }
      if (!detail::row_is_zero(v)) return false;
    }
    return true;
  }

  bool is_subgroup_of(const Subgroup& other) const {
    if (!(parent_ == other.parent_)) return false;
    for (const auto& g : generators()) {
      if (!other.contains(g)) return false;
    }
    return true;
  }

  /// Canonical generators: one element per Howell row.
  std::vector<GroupElement> generators() const {
    std::vector<GroupElement> out;
    for (const auto& b : blocks_) {
      for (const auto& r : b.rows) out.push_back(unscaled(b, r));
    }
    return out;
  }

  /// All elements in lexicographic residue order.
  std::vector<GroupElement> elements(std::int64_t cap = kOracleCap) const {
    const std::int64_t n = order();
    if (n > cap) throw Error("subgroup of order " + std::to_string(n) + " exceeds enumeration cap");
    std::vector<GroupElement> out{parent_.identity()};
    for (const auto& b : blocks_) {
      for (const auto& r : b.rows) {
        const std::int64_t mult = b.modulus / r[detail::pivot_column(r)];
        const GroupElement g = unscaled(b, r);
        std::vector<GroupElement> next;
        next.reserve(out.size() * static_cast<std::size_t>(mult));
        for (const auto& x : out) {
          GroupElement y = x;
          for (std::int64_t k = 0; k < mult; ++k) {
            next.push_back(y);
            y = parent_.add(y, g);
          }
        }
        out = std::move(next);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// The p-primary part of this subgroup (trivial when p does not divide the order).
  Subgroup p_part(std::int64_t p) const {
    Subgroup s(parent_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (blocks_[i].p == p) s.blocks_[i].rows = blocks_[i].rows;
    }
    return s;
  }

  /// {p^n h : h in this subgroup}; requires a p-group.
  Subgroup power(std::int64_t n) const {
    auto ps = primes();
    if (ps.size() > 1) throw Error("power_subgroup: expected a p-group, got order " + std::to_string(order()));
    if (ps.empty()) return *this;
    const std::int64_t p = ps.front();
    std::vector<GroupElement> gens;
    const std::int64_t k = ipow(p, n);
    for (const auto& g : generators()) gens.push_back(parent_.multiply(g, k));
    return generated_by(parent_, gens);
  }

  /// Number of cyclic factors of a p-subgroup: log_p [H : pH].
  int p_rank(std::int64_t p) const {
    Subgroup hp = p_part(p);
    std::int64_t q = hp.order() / hp.power(1).order();
    return valuation(q, p);
  }

  /// Ker(theta) intersected with this subgroup.
  Subgroup kernel_of(const Character& theta) const {
    Subgroup s(parent_);
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
      const Block& b = blocks_[bi];
      std::vector<detail::Row> rows;
      for (const auto& r : b.rows) {
        detail::Row aug(1 + r.size());
        std::int64_t phi = 0;
        for (std::size_t k = 0; k < b.factors.size(); ++k) {
          phi = mod(phi + mul_mod(theta.exponents[b.factors[k]], r[k], b.modulus), b.modulus);
          aug[1 + k] = r[k];
        }
        aug[0] = phi;
        rows.push_back(std::move(aug));
      }
      auto h = detail::howell_form(std::move(rows), b.p, b.modulus, 1 + b.factors.size());
      std::vector<detail::Row> ker;
      for (auto& r : h) {
        if (r[0] == 0) ker.emplace_back(r.begin() + 1, r.end());
      }
      s.blocks_[bi].rows = detail::howell_form(std::move(ker), b.p, b.modulus, b.factors.size());
    }
    return s;
  }

  std::string to_string() const {
    std::string s = "<";
    bool first = true;
    for (const auto& g : generators()) {
      if (!first) s += ", ";
      first = false;
      s += "(";
      for (std::size_t i = 0; i < g.residues.size(); ++i) s += (i ? "," : "") + std::to_string(g.residues[i]);
      s += ")";
    }
    return s + ">";
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.parent_ == b.parent_ && a.key() == b.key(); }
  friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.key() < b.key(); }

  friend Subgroup join(const Subgroup& a, const Subgroup& b);
  friend Subgroup intersect(const Subgroup& a, const Subgroup& b);

 private:
  struct Block {
    std::int64_t p = 0;
    std::int64_t modulus = 1;
    std::vector<std::size_t> factors;
    std::vector<int> shift;  // E - e_i for each factor
    std::vector<detail::Row> rows;
  };

  explicit Subgroup(const FiniteAbelianGroup& g) : parent_(g) {
    std::size_t f = 0;
    for (const auto& c : g.primary()) {
      Block b;
      b.p = c.p;
      const int top = c.exponents.front();
      b.modulus = ipow(c.p, top);
      for (int e : c.exponents) {
        b.factors.push_back(f++);
        b.shift.push_back(top - e);
      }
      blocks_.push_back(std::move(b));
    }
  }

  detail::Row scaled(const Block& b, const GroupElement& x) const {
    detail::Row v(b.factors.size());
    for (std::size_t k = 0; k < b.factors.size(); ++k) {
      v[k] = mul_mod(x.residues[b.factors[k]], ipow(b.p, b.shift[k]), b.modulus);
    }
    return v;
  }

  GroupElement unscaled(const Block& b, const detail::Row& r) const {
    GroupElement x = parent_.identity();
    for (std::size_t k = 0; k < b.factors.size(); ++k) x.residues[b.factors[k]] = r[k] / ipow(b.p, b.shift[k]);
    return x;
  }

  std::vector<std::int64_t> key() const {
    std::vector<std::int64_t> k;
    for (const auto& b : blocks_) {
      k.push_back(static_cast<std::int64_t>(b.rows.size()));
      for (const auto& r : b.rows) k.insert(k.end(), r.begin(), r.end());
    }
    return k;
  }

  void check_parent(const Subgroup& other, const char* what) const {
    if (!(parent_ == other.parent_)) throw Error(std::string(what) + ": subgroups have different parent groups");
  }

  FiniteAbelianGroup parent_;
  std::vector<Block> blocks_;
};

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  a.check_parent(b, "join");
  Subgroup s = a;
  for (std::size_t i = 0; i < s.blocks_.size(); ++i) {
    auto rows = a.blocks_[i].rows;
    rows.insert(rows.end(), b.blocks_[i].rows.begin(), b.blocks_[i].rows.end());
    s.blocks_[i].rows = detail::howell_form(std::move(rows), s.blocks_[i].p, s.blocks_[i].modulus, s.blocks_[i].factors.size());
  }
  return s;
}

/// Largest subgroup contained in both (Zassenhaus on the Howell forms).
inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  a.check_parent(b, "intersect");
  Subgroup s = a;
  for (std::size_t i = 0; i < s.blocks_.size(); ++i) {
    const auto& blk = s.blocks_[i];
    const std::size_t r = blk.factors.size();
    std::vector<detail::Row> rows;
    for (const auto& h : a.blocks_[i].rows) {
      detail::Row v(2 * r);
      std::copy(h.begin(), h.end(), v.begin());
      std::copy(h.begin(), h.end(), v.begin() + static_cast<std::ptrdiff_t>(r));
      rows.push_back(std::move(v));
    }
    for (const auto& h : b.blocks_[i].rows) {
      detail::Row v(2 * r, 0);
      std::copy(h.begin(), h.end(), v.begin());
      rows.push_back(std::move(v));
    }
    auto hf = detail::howell_form(std::move(rows), blk.p, blk.modulus, 2 * r);
    std::vector<detail::Row> inter;
    for (auto& v : hf) {
      if (std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r), [](std::int64_t x) { return x == 0; })) {
        inter.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
      }
    }
    s.blocks_[i].rows = detail::howell_form(std::move(inter), blk.p, blk.modulus, r);
  }
  return s;
}

/// Intersection over a list; the empty intersection is the whole parent group.
inline Subgroup intersect_all(const FiniteAbelianGroup& g, std::span<const Subgroup> subgroups) {
  Subgroup s = Subgroup::whole(g);
  for (const auto& h : subgroups) s = intersect(s, h);
  return s;
}

inline Subgroup join_all(const FiniteAbelianGroup& g, std::span<const Subgroup> subgroups) {
  Subgroup s = Subgroup::trivial(g);
  for (const auto& h : subgroups) s = join(s, h);
  return s;
}

inline Subgroup cyclic_subgroup(const FiniteAbelianGroup& g, const GroupElement& x) {
  return Subgroup::generated_by(g, {x});
}

// -- operations -------------------------------------------------------------

/// Elements of p-power order. Trivial when p does not divide |G|.
inline Subgroup p_part(const FiniteAbelianGroup& g, std::int64_t p) {
  if (!is_prime(p)) throw Error("p_part: " + std::to_string(p) + " is not prime");
  return Subgroup::whole(g).p_part(p);
}

/// <gamma_1^{p^n}, ..., gamma_r^{p^n}> for the canonical generators of a p-group.
inline Subgroup power_subgroup(const FiniteAbelianGroup& g, std::int64_t n) {
  if (!g.is_p_group()) throw Error("power_subgroup: " + g.to_string() + " is not a p-group");
  return Subgroup::whole(g).power(n);
}

inline Subgroup power_subgroup(const Subgroup& h, std::int64_t n) { return h.power(n); }

inline Subgroup kernel(const FiniteAbelianGroup& g, const Character& theta) {
  return Subgroup::whole(g).kernel_of(theta);
}

struct PowerComponent {
  std::int64_t exponent = 0;   ///< e with gamma^e equal to the p-component
  GroupElement component;      ///< the p-component gamma_p
};

/// CRT: the exponent e with e = 1 mod p^a and e = 0 mod m, where ord(gamma) = p^a m.
inline PowerComponent crt_power_extract(const FiniteAbelianGroup& g, const GroupElement& gamma, std::int64_t p) {
  if (!is_prime(p)) throw Error("crt_power_extract: " + std::to_string(p) + " is not prime");
  const std::int64_t n = g.element_order(gamma);
  std::int64_t pa = 1;
  std::int64_t m = n;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  std::int64_t e = mul_mod(m, inverse_mod(mod(m, pa), pa), n);
  return {e, g.multiply(gamma, e)};
}

/// Subgroups of index p in h: preimages of the hyperplanes of h_p / p h_p.
inline std::vector<Subgroup> maximal_subgroups(const Subgroup& h, std::int64_t p) {
  const auto& g = h.parent();
  Subgroup hp = h.p_part(p);
  if (hp.is_trivial()) return {};
  std::vector<Subgroup> others;
  for (auto q : h.primes()) {
    if (q != p) others.push_back(h.p_part(q));
  }
  const Subgroup frattini = join(hp.power(1), join_all(g, others));
  std::vector<GroupElement> basis;
  Subgroup cur = frattini;
  for (const auto& x : hp.generators()) {
    if (cur.contains(x)) continue;
    basis.push_back(x);
    cur = join(cur, cyclic_subgroup(g, x));
  }
  const std::size_t d = basis.size();
  std::vector<Subgroup> out;
  // functionals c on F_p^d normalized so the first nonzero coordinate is 1
  for (std::size_t lead = 0; lead < d; ++lead) {
    const std::size_t free_count = d - lead - 1;
    const std::int64_t combos = ipow(p, static_cast<std::int64_t>(free_count));
    for (std::int64_t code = 0; code < combos; ++code) {
      std::vector<std::int64_t> c(d, 0);
      c[lead] = 1;
      std::int64_t rem = code;
      for (std::size_t i = lead + 1; i < d; ++i) {
        c[i] = rem % p;
        rem /= p;
      }
      std::vector<GroupElement> gens;
      for (std::size_t i = 0; i < d; ++i) {
        if (i == lead) continue;
        gens.push_back(g.add(basis[i], g.multiply(basis[lead], -c[i])));
      }
      out.push_back(join(frattini, Subgroup::generated_by(g, gens)));
    }
  }
  return out;
}

/// Brute-force oracle: all subgroups of h with index in h at most max_index,
/// sorted by decreasing order then canonical form. Works top-down through
/// maximal subgroups.
inline std::vector<Subgroup> enumerate_subgroups(const Subgroup& h, std::int64_t max_index, std::int64_t cap = kOracleCap) {
  if (h.order() > cap) {
    throw Error("enumerate_subgroups: order " + std::to_string(h.order()) + " exceeds oracle cap " +
                std::to_string(cap) + "; the lattice oracle is meant for desk-scale groups only");
  }
  std::set<Subgroup> seen{h};
  std::vector<Subgroup> queue{h};
  const std::int64_t base = h.order();
  while (!queue.empty()) {
    Subgroup s = std::move(queue.back());
    queue.pop_back();
    for (auto p : s.primes()) {
      if (checked_mul(base / s.order(), p) > max_index) continue;
      for (auto& k : maximal_subgroups(s, p)) {
        if (seen.insert(k).second) queue.push_back(std::move(k));
      }
    }
  }
  std::vector<Subgroup> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.order() > b.order(); });
  return out;
}

inline std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, std::int64_t max_index, std::int64_t cap = kOracleCap) {
  if (g.order() > cap) {
    throw Error("enumerate_subgroups: |G| = " + std::to_string(g.order()) + " exceeds oracle cap " + std::to_string(cap) +
                "; the lattice oracle is meant for desk-scale groups only");
  }
  return enumerate_subgroups(Subgroup::whole(g), max_index, cap);
}

}  // namespace aft
