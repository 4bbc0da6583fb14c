#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "cubrecon/errors.hpp"

namespace cubrecon {

/// Dense row-major int64 matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw StructuralError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

namespace checked {

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticError("int64 overflow in multiplication");
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticError("int64 overflow in subtraction");
  return out;
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticError("int64 overflow in addition");
  return out;
}

inline std::int64_t abs(std::int64_t a) {
  if (a == INT64_MIN) throw ArithmeticError("int64 overflow in absolute value");
  return a < 0 ? -a : a;
}

}  // namespace checked

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        out(r, c) = checked::add(out(r, c), checked::mul(x, b(k, c)));
      }
    }
  }
  return out;
}

/// Invariant factors d_1 | d_2 | ... | d_r (all positive, r = rank).
///
/// Unimodular row and column operations with smallest-magnitude pivoting;
/// every arithmetic step is overflow-checked.
inline std::vector<std::int64_t> smith_normal_form(IntMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::int64_t> diag;

  // Moves the smallest nonzero |entry| of a(t.., t..) to (t, t).
  auto pivot_smallest = [&](std::size_t t, bool row_col_only) -> bool {
    std::size_t br = m, bc = n;
    std::int64_t best = 0;
    auto consider = [&](std::size_t r, std::size_t c) {
      const std::int64_t v = a(r, c);
      if (v == 0) return;
      const std::int64_t av = checked::abs(v);
      if (best == 0 || av < best) {
        best = av;
        br = r;
        bc = c;
      }
    };
    if (row_col_only) {
      for (std::size_t r = t; r < m; ++r) consider(r, t);
      for (std::size_t c = t + 1; c < n; ++c) consider(t, c);
    } else {
      for (std::size_t r = t; r < m; ++r) {
        for (std::size_t c = t; c < n; ++c) {
          consider(r, c);
          if (best == 1) break;
        }
        if (best == 1) break;
      }
    }
    if (best == 0) return false;
    if (br != t) {
      for (std::size_t c = t; c < n; ++c) std::swap(a(br, c), a(t, c));
    }
    if (bc != t) {
      for (std::size_t r = t; r < m; ++r) std::swap(a(r, bc), a(r, t));
    }
    return true;
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    if (!pivot_smallest(t, false)) break;
    while (true) {
      bool clean = true;
      const std::int64_t p = a(t, t);
      for (std::size_t r = t + 1; r < m; ++r) {
        if (a(r, t) == 0) continue;
        const std::int64_t q = a(r, t) / p;
        if (q != 0) {
          for (std::size_t c = t; c < n; ++c) {
            if (a(t, c) != 0) a(r, c) = checked::sub(a(r, c), checked::mul(q, a(t, c)));
          }
        }
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (a(t, c) == 0) continue;
        const std::int64_t q = a(t, c) / p;
        if (q != 0) {
          for (std::size_t r = t; r < m; ++r) {
            if (a(r, t) != 0) a(r, c) = checked::sub(a(r, c), checked::mul(q, a(r, t)));
          }
        }
        if (a(t, c) != 0) clean = false;
      }
      if (clean) break;
      pivot_smallest(t, true);
    }
    diag.push_back(checked::abs(a(t, t)));
  }

  // diag(a, b) ~ diag(gcd, lcm); pairwise passes produce a divisor chain.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const std::int64_t g = std::gcd(diag[i], diag[j]);
      if (g == diag[i]) continue;
      const std::int64_t l = checked::mul(diag[i] / g, diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  }
  return diag;
}

}  // namespace cubrecon
