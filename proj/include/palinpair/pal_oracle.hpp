#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "palinpair/word.hpp"

namespace palinpair {

/// Constant-time "is w[i:j] a palindrome?" queries over one host word.
///
/// Two equivalent backends: a full boolean table filled by center expansion
/// for hosts up to kTableLimit symbols, and Manacher palindromic radii
/// (odd and even centers) above that. The empty factor and all single
/// letters are palindromes.
class PalOracle {
public:
  static constexpr std::size_t kTableLimit = 8192;

  explicit PalOracle(const Word& w) : PalOracle(w.view()) {}

  explicit PalOracle(std::span<const std::uint8_t> s) : n_(s.size()) {
    if (n_ <= kTableLimit)
      build_table(s);
    else
      build_radii(s);
  }

  std::size_t size() const { return n_; }

  /// True iff the factor host[i:j] (half-open, 0 <= i <= j <= size) reads the
  /// same in both directions.
  bool is_pal(std::size_t i, std::size_t j) const {
    std::size_t len = j - i;
    if (len <= 1) return true;
    if (!table_.empty()) return table_[i * (n_ + 1) + j];
    if (len % 2 == 1) {
      std::size_t c = i + len / 2;
      return odd_[c] >= (len + 1) / 2;
    }
    std::size_t c = i + len / 2;  // boundary between c-1 and c
    return even_[c] >= len / 2;
  }

private:
  void build_table(std::span<const std::uint8_t> s) {
    table_.assign((n_ + 1) * (n_ + 1), false);
    auto mark = [&](std::size_t i, std::size_t j) { table_[i * (n_ + 1) + j] = true; };
    for (std::size_t c = 0; c < n_; ++c) {
      // odd lengths centered at c
      std::size_t r = 0;
      while (c >= r && c + r < n_ && s[c - r] == s[c + r]) {
        mark(c - r, c + r + 1);
        ++r;
      }
      // even lengths centered between c and c+1
      r = 1;
      while (c + 1 >= r && c + r < n_ && s[c + 1 - r] == s[c + r]) {
        mark(c + 1 - r, c + r + 1);
        ++r;
      }
    }
  }

  void build_radii(std::span<const std::uint8_t> s) {
    // odd_[c]: number of odd palindromes centered at c (radius count incl. the
    // single letter); even_[c]: number of even palindromes centered at the
    // boundary before c.
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(n_);
    odd_.assign(n_, 1);
    even_.assign(n_ + 1, 0);
    for (std::ptrdiff_t i = 0, l = 0, r = -1; i < n; ++i) {
      std::ptrdiff_t k =
          (i > r) ? 1 : std::min<std::ptrdiff_t>(odd_[static_cast<std::size_t>(l + r - i)], r - i + 1);
      while (i - k >= 0 && i + k < n && s[static_cast<std::size_t>(i - k)] == s[static_cast<std::size_t>(i + k)]) ++k;
      odd_[static_cast<std::size_t>(i)] = static_cast<std::size_t>(k--);
      if (i + k > r) {
        l = i - k;
        r = i + k;
      }
    }
    // even centers: even_[c] counts pairs matched around the boundary (c-1, c)
    std::vector<std::ptrdiff_t> d2(n_, 0);
    for (std::ptrdiff_t i = 0, l = 0, r = -1; i < n; ++i) {
      std::ptrdiff_t k =
          (i > r) ? 0 : std::min<std::ptrdiff_t>(d2[static_cast<std::size_t>(l + r - i + 1)], r - i);
      while (i - k - 1 >= 0 && i + k < n &&
             s[static_cast<std::size_t>(i - k - 1)] == s[static_cast<std::size_t>(i + k)])
        ++k;
      d2[static_cast<std::size_t>(i)] = k--;
      if (i + k > r) {
        l = i - k - 1;
        r = i + k;
      }
    }
    for (std::size_t c = 0; c < n_; ++c) even_[c] = static_cast<std::size_t>(d2[c]);
    even_[n_] = 0;
  }

  std::size_t n_;
  std::vector<bool> table_;         // (n+1)^2 entries when table backend is used
  std::vector<std::size_t> odd_;    // odd-center radii
  std::vector<std::size_t> even_;   // even-center radii, indexed by boundary
};

}  // namespace palinpair
