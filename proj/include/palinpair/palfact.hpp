#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "palinpair/pal_oracle.hpp"
#include "palinpair/word.hpp"

namespace palinpair {

/// A factorization of `value` into nonempty palindromic parts.
struct PalFactorization {
  std::vector<Word> parts;
  Word value;
};

namespace detail {

// DP over prefix lengths: pl[j] = min over palindromic suffixes w[i:j] of
// pl[i] + 1. Scanning i upward and keeping strictly better values picks the
// smallest i, i.e. the longest final palindrome, as the reconstruction
// tie-break.
template <typename Oracle>
inline std::vector<std::size_t> pal_length_dp(const Oracle& oracle, std::size_t n,
                                              std::vector<std::size_t>* back = nullptr) {
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> pl(n + 1, inf);
  pl[0] = 0;
  if (back) back->assign(n + 1, 0);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (pl[i] == inf || !oracle.is_pal(i, j)) continue;
      if (pl[i] + 1 < pl[j]) {
        pl[j] = pl[i] + 1;
        if (back) (*back)[j] = i;
      }
    }
  }
  return pl;
}

}  // namespace detail

/// The least number of nonempty palindromes whose concatenation is w.
/// The empty word has palindromic length 0.
inline std::size_t palindromic_length(const Word& w) {
  if (w.empty()) return 0;
  PalOracle oracle(w);
  return detail::pal_length_dp(oracle, w.size()).back();
}

/// One minimal factorization witness (parts are palindromes, their
/// concatenation is w). Ties prefer the longest final palindrome.
inline PalFactorization minimal_palindromic_factorization(const Word& w) {
  PalFactorization f;
  f.value = w;
  if (w.empty()) return f;
  PalOracle oracle(w);
  std::vector<std::size_t> back;
  detail::pal_length_dp(oracle, w.size(), &back);
  std::size_t j = w.size();
  while (j > 0) {
    std::size_t i = back[j];
    f.parts.push_back(w.slice(i, j));
    j = i;
  }
  std::reverse(f.parts.begin(), f.parts.end());
  return f;
}

/// Palindrome-pair test against a prebuilt oracle; checks the factor
/// host[i:j]. Linear in the factor length.
inline bool is_palindrome_pair(const PalOracle& oracle, std::size_t i, std::size_t j) {
  for (std::size_t s = i; s <= j; ++s)
    if (oracle.is_pal(i, s) && oracle.is_pal(s, j)) return true;
  return false;
}

/// True iff w is a product of two (possibly empty) palindromes, i.e. has
/// palindromic length at most 2.
inline bool is_palindrome_pair(const Word& w) {
  PalOracle oracle(w);
  return is_palindrome_pair(oracle, 0, w.size());
}

/// The smallest s such that w[0:s] and w[s:|w|] are both palindromes, if any.
/// Absent exactly when w is not a palindrome pair.
inline std::optional<std::size_t> palindrome_pair_split(const Word& w) {
  PalOracle oracle(w);
  for (std::size_t s = 0; s <= w.size(); ++s)
    if (oracle.is_pal(0, s) && oracle.is_pal(s, w.size())) return s;
  return std::nullopt;
}

/// Independent palindromic-length oracle: breadth-first search over prefix
/// lengths, one palindrome appended per edge, with naive two-pointer
/// palindrome tests and no shared code with the dynamic program. Capped at
/// 24 symbols; it exists to cross-check, not to be fast.
inline std::size_t bfs_palindromic_length(const Word& w) {
  if (w.size() > 24)
    throw std::invalid_argument("bfs_palindromic_length: refusing words longer than 24");
  if (w.empty()) return 0;
  const std::size_t n = w.size();
  auto naive_pal = [&](std::size_t i, std::size_t j) {
    while (i + 1 < j) {
      if (w[i] != w[j - 1]) return false;
      ++i;
      --j;
    }
    return true;
  };
  std::vector<int> dist(n + 1, -1);
  dist[0] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    if (i == n) break;
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (dist[j] == -1 && naive_pal(i, j)) {
        dist[j] = dist[i] + 1;
        queue.push_back(j);
      }
    }
  }
  return static_cast<std::size_t>(dist[n]);
}

}  // namespace palinpair
