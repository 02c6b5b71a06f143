#pragma once

// Bit-packed binary words for the exhaustive scans (maximal palindrome-pair
// counts, minimal non-palindrome-pair enumeration). Bit i of `bits` is the
// letter at position i. Lengths up to 32.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>

#include "palinpair/word.hpp"

namespace palinpair::detail {

inline constexpr unsigned kBitWordMax = 32;

inline const std::array<std::uint8_t, 256>& byte_reverse_table() {
  static const std::array<std::uint8_t, 256> table = [] {
    std::array<std::uint8_t, 256> t{};
    for (unsigned v = 0; v < 256; ++v) {
      std::uint8_t r = 0;
      for (unsigned b = 0; b < 8; ++b)
        if (v & (1u << b)) r |= static_cast<std::uint8_t>(1u << (7 - b));
      t[v] = r;
    }
    return t;
  }();
  return table;
}

/// Reverses the low `len` bits of v (the rest must be zero).
inline std::uint32_t bit_reverse(std::uint32_t v, unsigned len) {
  const auto& t = byte_reverse_table();
  std::uint32_t full = (static_cast<std::uint32_t>(t[v & 0xff]) << 24) |
                       (static_cast<std::uint32_t>(t[(v >> 8) & 0xff]) << 16) |
                       (static_cast<std::uint32_t>(t[(v >> 16) & 0xff]) << 8) |
                       static_cast<std::uint32_t>(t[(v >> 24) & 0xff]);
  return len == 0 ? 0 : full >> (32 - len);
}

inline std::uint32_t low_mask(unsigned len) {
  return len >= 32 ? 0xffffffffu : (1u << len) - 1u;
}

inline bool is_pal_bits(std::uint32_t bits, unsigned len) {
  return bits == bit_reverse(bits, len);
}

/// Bit s (0 <= s <= len) set iff the prefix w[0:s] is a palindrome.
inline std::uint64_t prefix_pal_mask(std::uint32_t bits, unsigned len) {
  std::uint64_t m = 1;  // empty prefix
  for (unsigned s = 1; s <= len; ++s)
    if (is_pal_bits(bits & low_mask(s), s)) m |= std::uint64_t{1} << s;
  return m;
}

/// Bit s set iff the suffix w[s:len] is a palindrome.
inline std::uint64_t suffix_pal_mask(std::uint32_t bits, unsigned len) {
  std::uint64_t m = std::uint64_t{1} << len;  // empty suffix
  for (unsigned s = 0; s < len; ++s)
    if (is_pal_bits(bits >> s, len - s)) m |= std::uint64_t{1} << s;
  return m;
}

inline bool is_pp_bits(std::uint32_t bits, unsigned len) {
  return (prefix_pal_mask(bits, len) & suffix_pal_mask(bits, len)) != 0;
}

/// Per-word palindrome structure: pal(i, j) for every factor in O(1) after an
/// O(len^2) build, plus O(1) palindrome-pair tests per factor.
struct PalBitTable {
  unsigned len = 0;
  std::array<std::uint64_t, kBitWordMax + 1> from{};  // from[i] bit s: w[i:s] pal
  std::array<std::uint64_t, kBitWordMax + 1> upto{};  // upto[j] bit s: w[s:j] pal

  void build(std::uint32_t bits, unsigned n) {
    len = n;
    for (unsigned i = 0; i <= n; ++i)
      from[i] = prefix_pal_mask(bits >> i, n - i) << i;
    for (unsigned j = 0; j <= n; ++j) {
      std::uint64_t col = 0;
      for (unsigned i = 0; i <= j; ++i) col |= ((from[i] >> j) & 1u) << i;
      upto[j] = col;
    }
  }

  bool pal(unsigned i, unsigned j) const { return (from[i] >> j) & 1u; }

  bool pp(unsigned i, unsigned j) const {
    std::uint64_t range = (j >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (j + 1)) - 1) &
                          ~((std::uint64_t{1} << i) - 1);
    return (from[i] & upto[j] & range) != 0;
  }
};

/// True iff w is not a palindrome pair while every proper factor is one.
inline bool is_mnpp_bits(std::uint32_t bits, unsigned len) {
  PalBitTable t;
  t.build(bits, len);
  if (t.pp(0, len)) return false;
  for (unsigned i = 0; i <= len; ++i)
    for (unsigned j = i; j <= len; ++j) {
      if (i == 0 && j == len) continue;
      if (!t.pp(i, j)) return false;
    }
  return true;
}

/// Number of distinct factors of w (the empty factor included) that are
/// palindrome pairs.
inline std::size_t count_pp_factors_bits(std::uint32_t bits, unsigned len) {
  PalBitTable t;
  t.build(bits, len);
  // distinct nonempty factors keyed by (length, content); keep one occurrence
  std::array<std::uint64_t, kBitWordMax*(kBitWordMax + 1) / 2> keys;
  std::size_t cnt = 0;
  for (unsigned i = 0; i < len; ++i)
    for (unsigned j = i + 1; j <= len; ++j) {
      std::uint64_t content = (bits >> i) & low_mask(j - i);
      keys[cnt++] = (std::uint64_t{j - i} << 38) | (content << 6) | (t.pp(i, j) ? 1 : 0);
    }
  std::sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(cnt));
  std::size_t pp = 1;  // the empty factor
  for (std::size_t k = 0; k < cnt; ++k) {
    if (k > 0 && (keys[k] >> 6) == (keys[k - 1] >> 6)) continue;
    pp += keys[k] & 1u;
  }
  return pp;
}

inline std::uint32_t bits_from_word(const Word& w) {
  if (w.size() > kBitWordMax)
    throw std::invalid_argument("bits_from_word: word longer than 32");
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 1) throw std::invalid_argument("bits_from_word: binary word required");
    bits |= static_cast<std::uint32_t>(w[i]) << i;
  }
  return bits;
}

}  // namespace palinpair::detail
