#pragma once

// Dense integer matrices, Smith normal form with optional transforms, and
// rank over F_p.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "aft/numeric.hpp"

namespace aft {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw Error("matrix rows have unequal length");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& q) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += q * (*this)(src, j);
  }

  /// col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, const T& q) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += q * (*this)(i, src);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == 0; });
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

/// int64 with overflow detection, so the fast path can bail out to BigInt.
struct Checked {
  std::int64_t v = 0;
  Checked() = default;
  Checked(std::int64_t x) : v(x) {}  // NOLINT
  Checked& operator+=(const Checked& o) {
    v = checked_add(v, o.v);
    return *this;
  }
  friend Checked operator*(const Checked& a, const Checked& b) { return checked_mul(a.v, b.v); }
  friend Checked operator-(const Checked& a) { return checked_sub(0, a.v); }
  friend Checked operator-(const Checked& a, const Checked& b) { return checked_sub(a.v, b.v); }
  friend Checked operator/(const Checked& a, const Checked& b) { return a.v / b.v; }
  friend Checked operator%(const Checked& a, const Checked& b) { return a.v % b.v; }
  friend bool operator==(const Checked& a, const Checked& b) = default;
  friend bool operator==(const Checked& a, int b) { return a.v == b; }
  friend auto operator<=>(const Checked& a, const Checked& b) = default;
};

inline Checked abs_value(const Checked& x) { return x.v < 0 ? -x : x; }
inline BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline Checked floor_quot(const Checked& a, const Checked& b) {
  std::int64_t q = a.v / b.v;
  if ((a.v % b.v != 0) && ((a.v < 0) != (b.v < 0))) --q;
  return q;
}

inline BigInt floor_quot(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Checked gcd_value(Checked a, Checked b) { return gcd64(a.v, b.v); }
inline BigInt gcd_value(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

/// Extended gcd: returns (g, s, t) with s a + t b = g >= 0.
template <class T>
std::tuple<T, T, T> ext_gcd(T a, T b) {
  T s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!(b == 0)) {
    T q = floor_quot(a, b);
    T r = a - q * b;
    a = b;
    b = r;
    T s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    T t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < T(0)) return {-a, -s0, -t0};
  return {a, s0, t0};
}

inline BigInt to_big(const Checked& x) { return BigInt(x.v); }
inline BigInt to_big(const BigInt& x) { return x; }

}  // namespace detail

/// D = L A R with D diagonal, invariant factors d_1 | d_2 | ... positive.
/// Transforms are filled only when requested; L^{-1} and R^{-1} come along.
struct SmithForm {
  std::vector<BigInt> invariant_factors;  ///< nonzero diagonal entries
  std::size_t rank = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::optional<Matrix<BigInt>> left, left_inverse, right, right_inverse;

  /// Invariant factors greater than one.
  std::vector<BigInt> torsion() const {
    std::vector<BigInt> out;
    for (const auto& d : invariant_factors) {
      if (d > 1) out.push_back(d);
    }
    return out;
  }

  Matrix<BigInt> diagonal() const {
    Matrix<BigInt> d(rows, cols);
    for (std::size_t i = 0; i < rank; ++i) d(i, i) = invariant_factors[i];
    return d;
  }
};

namespace detail {

template <class T>
struct SnfWork {
  Matrix<T> a, l, li, r, ri;
  bool track = false;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (track) {
      l.swap_rows(i, j);
      li.swap_cols(i, j);
    }
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (track) {
      r.swap_cols(i, j);
      ri.swap_rows(i, j);
    }
  }
  // row[i] += q row[j]
  void add_row(std::size_t i, std::size_t j, const T& q) {
    a.add_row(i, j, q);
    if (track) {
      l.add_row(i, j, q);
      li.add_col(j, i, -q);
    }
  }
  // col[i] += q col[j]
  void add_col(std::size_t i, std::size_t j, const T& q) {
    a.add_col(i, j, q);
    if (track) {
      r.add_col(i, j, q);
      ri.add_row(j, i, -q);
    }
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    if (track) {
      l.negate_row(i);
      for (std::size_t k = 0; k < li.rows(); ++k) li(k, i) = -li(k, i);
    }
  }
  // Replace rows (i, j) by [[s, t], [u, v]] (rows i, j), a unimodular 2x2 with inverse [[v, -t], [-u, s]] (det 1).
  void mix_rows(std::size_t i, std::size_t j, const T& s, const T& t, const T& u, const T& v) {
    auto mix = [&](Matrix<T>& m) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        T x = m(i, c), y = m(j, c);
        m(i, c) = s * x;
        m(i, c) += t * y;
        m(j, c) = u * x;
        m(j, c) += v * y;
      }
    };
    mix(a);
    if (track) {
      mix(l);
      for (std::size_t k = 0; k < li.rows(); ++k) {
        T x = li(k, i), y = li(k, j);
        li(k, i) = x * v;
        li(k, i) += y * (-u);
        li(k, j) = x * (-t);
        li(k, j) += y * s;
      }
    }
  }
  void mix_cols(std::size_t i, std::size_t j, const T& s, const T& t, const T& u, const T& v) {
    // columns (i, j) <- (s col_i + t col_j, u col_i + v col_j), det 1
    auto mix = [&](Matrix<T>& m) {
      for (std::size_t k = 0; k < m.rows(); ++k) {
        T x = m(k, i), y = m(k, j);
        m(k, i) = s * x;
        m(k, i) += t * y;
        m(k, j) = u * x;
        m(k, j) += v * y;
      }
    };
    mix(a);
    if (track) {
      mix(r);
      for (std::size_t c = 0; c < ri.cols(); ++c) {
        T x = ri(i, c), y = ri(j, c);
        ri(i, c) = x * v;
        ri(i, c) += y * (-u);
        ri(j, c) = x * (-t);
        ri(j, c) += y * s;
      }
    }
  }
};

template <class T>
SmithForm smith_impl(const Matrix<T>& input, bool track) {
  const std::size_t m = input.rows(), n = input.cols();
  SnfWork<T> w;
  w.a = input;
  w.track = track;
  if (track) {
    w.l = Matrix<T>::identity(m);
    w.li = Matrix<T>::identity(m);
    w.r = Matrix<T>::identity(n);
    w.ri = Matrix<T>::identity(n);
  }
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // pivot: smallest nonzero |entry| in the trailing block, first unit wins
    std::size_t pi = m, pj = n;
    T best = 0;
    for (std::size_t i = t; i < m && !(best == 1); ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (w.a(i, j) == 0) continue;
        T v = abs_value(w.a(i, j));
        if (pi == m || v < best) {
          best = v;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    }
    if (pi == m) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.a(i, t) == 0) continue;
        T q = floor_quot(w.a(i, t), w.a(t, t));
        w.add_row(i, t, -q);
        if (!(w.a(i, t) == 0)) {
          w.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.a(t, j) == 0) continue;
        T q = floor_quot(w.a(t, j), w.a(t, t));
        w.add_col(j, t, -q);
        if (!(w.a(t, j) == 0)) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
      if (clean) break;
    }
    if (w.a(t, t) < T(0)) w.negate_row(t);
  }
  const std::size_t rank = t;
  // Normalize the diagonal to divisibility order by pairwise gcd / lcm moves.
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      T a = w.a(i, i), b = w.a(j, j);
      if ((b % a) == 0) continue;
      auto [g, s, tt] = ext_gcd(a, b);
      // [[1, 1], [-tt b/g, s a/g]] on rows, [[s, -b/g], [tt, a/g]] on cols brings diag(a,b) to diag(g, ab/g)
      // Row step: row_i += row_j  -> [[a, b], [0, b]]
      w.add_row(i, j, T(1));
      // Column step with (s, tt): col_i' = s col_i + tt col_j has entry s a + tt b = g in row i.
      const T bg = b / g, ag = a / g;
      w.mix_cols(i, j, s, tt, -bg, ag);
      // Now row i = [g, 0] and row j = [s*0 + tt*b, ... ]: clear below the pivot.
      if (!(w.a(j, i) == 0)) {
        T q = w.a(j, i) / w.a(i, i);
        w.add_row(j, i, -q);
      }
      if (!(w.a(i, j) == 0)) {
        T q = w.a(i, j) / w.a(i, i);
        w.add_col(j, i, -q);
      }
      if (w.a(j, j) < T(0)) w.negate_row(j);
    }
  }
  SmithForm out;
  out.rank = rank;
  out.rows = m;
  out.cols = n;
  for (std::size_t i = 0; i < rank; ++i) out.invariant_factors.push_back(to_big(w.a(i, i)));
  if (track) {
    auto conv = [](const Matrix<T>& x) {
      Matrix<BigInt> y(x.rows(), x.cols());
      for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) y(i, j) = to_big(x(i, j));
      }
      return y;
    };
    out.left = conv(w.l);
    out.left_inverse = conv(w.li);
    out.right = conv(w.r);
    out.right_inverse = conv(w.ri);
  }
  return out;
}

}  // namespace detail

/// Smith normal form of an integer matrix. Runs in checked int64 and retries
/// with arbitrary precision on overflow.
inline SmithForm smith_normal_form(const Matrix<std::int64_t>& a, bool track_transforms = false) {
  try {
    Matrix<detail::Checked> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    }
    return detail::smith_impl(c, track_transforms);
  } catch (const OverflowError&) {
    Matrix<BigInt> b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = a(i, j);
    }
    return detail::smith_impl(b, track_transforms);
  }
}

inline SmithForm smith_normal_form(const Matrix<BigInt>& a, bool track_transforms = false) {
  return detail::smith_impl(a, track_transforms);
}

/// Rank of an integer matrix reduced mod p.
inline std::size_t rank_mod_p(const Matrix<std::int64_t>& input, std::int64_t p) {
  if (!is_prime(p)) throw Error("rank_mod_p: " + std::to_string(p) + " is not prime");
  const std::size_t m = input.rows(), n = input.cols();
  Matrix<std::int64_t> a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = mod(input(i, j), p);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t piv = m;
    for (std::size_t i = rank; i < m; ++i) {
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == m) continue;
    a.swap_rows(rank, piv);
    const std::int64_t inv = inverse_mod(a(rank, c), p);
    for (std::size_t j = c; j < n; ++j) a(rank, j) = mul_mod(a(rank, j), inv, p);
    for (std::size_t i = rank + 1; i < m; ++i) {
      const std::int64_t f = a(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) a(i, j) = mod(a(i, j) - mul_mod(f, a(rank, j), p), p);
    }
    ++rank;
  }
  return rank;
}

template <class T>
Matrix<BigInt> to_big_matrix(const Matrix<T>& a) {
  Matrix<BigInt> b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = BigInt(a(i, j));
  }
  return b;
}

}  // namespace aft
