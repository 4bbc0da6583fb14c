#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace cubrecon {

/// Dense matrix over GF(2) with rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    std::uint64_t& w = data_[r * stride_ + c / 64];
    const std::uint64_t b = std::uint64_t{1} << (c % 64);
    w = value ? (w | b) : (w & ~b);
  }
  void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  std::size_t row_weight(std::size_t r) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < stride_; ++i) n += static_cast<std::size_t>(std::popcount(data_[r * stride_ + i]));
    return n;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (get(r, c)) t.set(c, r);
      }
    }
    return t;
  }

  BitMatrix operator*(const BitMatrix& rhs) const {
    BitMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols_; ++k) {
        if (!get(r, k)) continue;
        for (std::size_t i = 0; i < out.stride_; ++i) out.data_[r * out.stride_ + i] ^= rhs.data_[k * rhs.stride_ + i];
      }
    }
    return out;
  }

  bool is_zero() const {
    for (auto w : data_) {
      if (w != 0) return false;
    }
    return true;
  }

  /// Rank by Gaussian elimination on a copy.
  std::size_t rank() const {
    std::vector<std::uint64_t> m = data_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      const std::size_t word = c / 64;
      const std::uint64_t b = std::uint64_t{1} << (c % 64);
      std::size_t pivot = rank;
      while (pivot < rows_ && (m[pivot * stride_ + word] & b) == 0) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != rank) {
        for (std::size_t i = 0; i < stride_; ++i) std::swap(m[pivot * stride_ + i], m[rank * stride_ + i]);
      }
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        if ((m[r * stride_ + word] & b) == 0) continue;
        // Columns left of `word` are already clear in the pivot row.
        for (std::size_t i = word; i < stride_; ++i) m[r * stride_ + i] ^= m[rank * stride_ + i];
      }
      ++rank;
    }
    return rank;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace cubrecon
