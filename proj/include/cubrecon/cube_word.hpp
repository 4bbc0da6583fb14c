#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cubrecon/errors.hpp"

namespace cubrecon {

enum class Letter : std::uint8_t { Zero = 0, One = 1, Star = 2 };

/// A face of the ambient cube I^n written as a word over {0, 1, *}.
///
/// Position i (0-based, leftmost first) is stored in bit i of two masks:
/// `stars` marks free coordinates, `ones` marks coordinates fixed to 1. A
/// ONE bit is never set under a STAR. Ambient dimensions up to 64 are
/// supported.
class CubeWord {
 public:
  static constexpr std::size_t kMaxAmbient = 64;

  CubeWord() = default;

  /// The all-ZERO vertex of I^n.
  explicit CubeWord(std::size_t ambient) : ambient_(check_ambient(ambient)) {}

  static CubeWord from_masks(std::size_t ambient, std::uint64_t stars,
                             std::uint64_t ones) {
    CubeWord w(ambient);
    const std::uint64_t m = mask_for(ambient);
    if ((stars & ~m) != 0 || (ones & ~m) != 0) {
      throw StructuralError("cube word mask exceeds ambient dimension");
    }
    w.stars_ = stars;
    w.ones_ = ones & ~stars;
    return w;
  }

  static CubeWord vertex(std::size_t ambient, std::uint64_t bits) {
    return from_masks(ambient, 0, bits);
  }

  /// Parses a string over '0', '1', '*'.
  static CubeWord parse(std::string_view text) {
    CubeWord w(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case '0':
          break;
        case '1':
          w.ones_ |= bit(i);
          break;
        case '*':
          w.stars_ |= bit(i);
          break;
        default:
          throw StructuralError("invalid letter '" + std::string(1, text[i]) +
                                "' in cube word \"" + std::string(text) + "\"");
      }
    }
    return w;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return static_cast<std::size_t>(std::popcount(stars_)); }
  std::uint64_t stars() const { return stars_; }
  std::uint64_t ones() const { return ones_; }
  bool is_vertex() const { return stars_ == 0; }

  Letter operator[](std::size_t i) const {
    if ((stars_ >> i) & 1U) return Letter::Star;
    return ((ones_ >> i) & 1U) ? Letter::One : Letter::Zero;
  }

  CubeWord with(std::size_t i, Letter letter) const {
    CubeWord w = *this;
    w.stars_ &= ~bit(i);
    w.ones_ &= ~bit(i);
    if (letter == Letter::Star) w.stars_ |= bit(i);
    if (letter == Letter::One) w.ones_ |= bit(i);
    return w;
  }

  /// Face order: this ⪯ other iff every letter equals the other's or the
  /// other's letter is STAR.
  bool precedes(const CubeWord& other) const {
    return ambient_ == other.ambient_ && (stars_ & ~other.stars_) == 0 &&
           ((ones_ ^ other.ones_) & ~other.stars_) == 0;
  }

  /// True iff the two faces have at least one vertex in common.
  bool meets(const CubeWord& other) const {
    return ((ones_ ^ other.ones_) & ~stars_ & ~other.stars_) == 0;
  }

  /// The 2*dim codimension-one faces, in star order (ZERO before ONE).
  std::vector<CubeWord> facets() const {
    std::vector<CubeWord> out;
    out.reserve(2 * dim());
    for (std::uint64_t s = stars_; s != 0; s &= s - 1) {
      const std::uint64_t b = s & (~s + 1);
      CubeWord zero = *this;
      zero.stars_ &= ~b;
      CubeWord one = zero;
      one.ones_ |= b;
      out.push_back(zero);
      out.push_back(one);
    }
    return out;
  }

  /// Calls fn on every nonempty subface, including the word itself.
  template <typename Fn>
  void for_each_subface(Fn&& fn) const {
    std::uint64_t star_bits[kMaxAmbient];
    std::size_t count = 0;
    for (std::uint64_t s = stars_; s != 0; s &= s - 1) star_bits[count++] = s & (~s + 1);
    // Base-3 counter over the star positions.
    std::vector<std::uint8_t> digit(count, 0);
    while (true) {
      CubeWord w = *this;
      for (std::size_t i = 0; i < count; ++i) {
        if (digit[i] != 2) {
          w.stars_ &= ~star_bits[i];
          if (digit[i] == 1) w.ones_ |= star_bits[i];
        }
      }
      fn(w);
      std::size_t i = 0;
      while (i < count && digit[i] == 2) digit[i++] = 0;
      if (i == count) break;
      ++digit[i];
    }
  }

  template <typename Fn>
  void for_each_vertex(Fn&& fn) const {
    // Enumerate subsets of the star mask.
    std::uint64_t sub = 0;
    while (true) {
      fn(vertex(ambient_, ones_ | sub));
      if (sub == stars_) break;
      sub = (sub - stars_) & stars_;
    }
  }

  std::string str() const {
    std::string s(ambient_, '0');
    for (std::size_t i = 0; i < ambient_; ++i) {
      const Letter l = (*this)[i];
      s[i] = l == Letter::Star ? '*' : (l == Letter::One ? '1' : '0');
    }
    return s;
  }

  /// Word of the product face: this word followed by `tail`.
  CubeWord concat(const CubeWord& tail) const {
    const std::size_t n = ambient_ + tail.ambient_;
    CubeWord w(n);
    w.stars_ = stars_ | (tail.ambient_ == 0 ? 0 : tail.stars_ << ambient_);
    w.ones_ = ones_ | (tail.ambient_ == 0 ? 0 : tail.ones_ << ambient_);
    return w;
  }

  friend bool operator==(const CubeWord&, const CubeWord&) = default;

  /// Lexicographic with ZERO < ONE < STAR; shorter ambient sorts first.
  friend std::strong_ordering operator<=>(const CubeWord& a, const CubeWord& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ <=> b.ambient_;
    const std::uint64_t diff = (a.stars_ ^ b.stars_) | (a.ones_ ^ b.ones_);
    if (diff == 0) return std::strong_ordering::equal;
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(diff));
    return static_cast<int>(a[i]) <=> static_cast<int>(b[i]);
  }

 private:
  static constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  static constexpr std::uint64_t mask_for(std::size_t ambient) {
    return ambient >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ambient) - 1;
  }

  static std::size_t check_ambient(std::size_t ambient) {
    if (ambient > kMaxAmbient) {
      throw StructuralError("ambient dimension " + std::to_string(ambient) +
                            " exceeds the supported maximum of 64");
    }
    return ambient;
  }

  std::uint64_t stars_ = 0;
  std::uint64_t ones_ = 0;
  std::uint8_t ambient_ = 0;
};

/// Smallest face of I^n containing all the given vertices.
inline CubeWord span_of_vertices(std::size_t ambient, const std::vector<CubeWord>& vertices) {
  if (vertices.empty()) throw StructuralError("span of an empty vertex set");
  std::uint64_t differ = 0;
  const std::uint64_t first = vertices.front().ones();
  for (const auto& v : vertices) differ |= v.ones() ^ first;
  return CubeWord::from_masks(ambient, differ, first & ~differ);
}

}  // namespace cubrecon

template <>
struct std::hash<cubrecon::CubeWord> {
  std::size_t operator()(const cubrecon::CubeWord& w) const noexcept {
    std::uint64_t h = w.stars() * 0x9E3779B97F4A7C15ULL;
    h ^= w.ones() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= w.ambient_dim() * 0xBF58476D1CE4E5B9ULL;
    return static_cast<std::size_t>(h);
  }
};
