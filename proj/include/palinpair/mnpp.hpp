#pragma once

// Minimal non-palindrome-pairs: binary words that are not palindrome pairs
// although every proper factor is one. None exist below length 6; from
// length 6 on they are generated by extending internal maximum blocks, plus
// a fixed batch of new words at each even length.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "palinpair/bitword.hpp"
#include "palinpair/palfact.hpp"
#include "palinpair/parallel.hpp"
#include "palinpair/word.hpp"

namespace palinpair::mnpp {

/// True iff w is not a palindrome pair while all of its proper factors are.
/// Every proper factor is checked directly; palindrome-pair-ness is not
/// hereditary, so no shortcut over the factor lattice is taken.
inline bool is_mnpp(const Word& w) {
  if (!w.is_binary()) throw std::invalid_argument("is_mnpp: binary word required");
  if (w.size() <= palinpair::detail::kBitWordMax)
    return palinpair::detail::is_mnpp_bits(palinpair::detail::bits_from_word(w),
                                           static_cast<unsigned>(w.size()));
  PalOracle oracle(w);
  if (is_palindrome_pair(oracle, 0, w.size())) return false;
  for (std::size_t i = 0; i <= w.size(); ++i)
    for (std::size_t j = i; j <= w.size(); ++j) {
      if (i == 0 && j == w.size()) continue;
      if (!is_palindrome_pair(oracle, i, j)) return false;
    }
  return true;
}

/// Ground truth by exhaustive scan over all 2^n binary words, no symmetry
/// shortcuts. Supported for 6 <= n <= 20.
inline std::vector<Word> enumerate_mnpp_brute(std::size_t n, unsigned jobs = 0) {
  if (n < 6 || n > 20)
    throw std::invalid_argument("enumerate_mnpp_brute: n must be in 6..20 "
                                "(no minimal non palindrome pair is shorter than 6)");
  auto scan = [n](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> hits;
    for (std::uint64_t x = lo; x < hi; ++x)
      if (palinpair::detail::is_mnpp_bits(static_cast<std::uint32_t>(x),
                                          static_cast<unsigned>(n)))
        hits.push_back(static_cast<std::uint32_t>(x));
    return hits;
  };
  std::vector<std::uint32_t> bits = palinpair::detail::parallel_chunked<std::vector<std::uint32_t>>(
      std::uint64_t{1} << n, jobs, scan,
      [](std::vector<std::uint32_t>& acc, std::vector<std::uint32_t>&& part) {
        acc.insert(acc.end(), part.begin(), part.end());
      });
  std::vector<Word> out;
  out.reserve(bits.size());
  for (std::uint32_t b : bits) out.push_back(Word::from_bits(b, n));
  std::sort(out.begin(), out.end());
  return out;
}

/// Lengthens the maximal run starting at block_position by `amount` letters.
/// The run must be an internal maximum block.
inline Word extend_internal_max_block(const Word& w, std::size_t block_position,
                                      std::size_t amount) {
  if (amount < 1) throw std::invalid_argument("extend_internal_max_block: amount >= 1");
  for (const BlockRun& run : blocks(w)) {
    if (run.position != block_position) continue;
    if (!run.is_internal || !run.is_maximum)
      throw std::invalid_argument(
          "extend_internal_max_block: block is not an internal maximum block");
    std::vector<std::uint8_t> syms(w.symbols());
    syms.insert(syms.begin() + static_cast<std::ptrdiff_t>(run.position), amount, run.symbol);
    return Word(std::move(syms));
  }
  throw std::invalid_argument("extend_internal_max_block: no block starts at position " +
                              std::to_string(block_position));
}

/// A verified minimal non-palindrome-pair together with the start positions
/// of its internal maximum blocks (the extension points).
struct MnppWord {
  Word word;
  std::vector<std::size_t> internal_max_block_positions;

  static MnppWord from_word(Word w) {
    if (!is_mnpp(w)) throw std::invalid_argument("MnppWord: word is not a minimal non palindrome pair");
    MnppWord out;
    for (const BlockRun& run : blocks(w))
      if (run.is_internal && run.is_maximum)
        out.internal_max_block_positions.push_back(run.position);
    out.word = std::move(w);
    return out;
  }
};

namespace detail_ {

/// The 12 minimal non palindrome pairs of length 6, verified against the
/// brute-force enumeration by the test suite.
inline const std::vector<Word>& base_length_6() {
  static const std::vector<Word> base = [] {
    std::vector<Word> words;
    for (const char* text : {"001011", "001101", "010011", "010110", "011001", "011010",
                             "100101", "100110", "101001", "101100", "110010", "110100"})
      words.push_back(Word::from_text(text));
    std::sort(words.begin(), words.end());
    return words;
  }();
  return base;
}

inline Word run_pattern(std::initializer_list<std::pair<std::uint8_t, std::size_t>> runs) {
  std::vector<std::uint8_t> syms;
  for (auto [letter, len] : runs) syms.insert(syms.end(), len, letter);
  return Word(std::move(syms));
}

/// The eight words adjoined at even length i: 11(01)^{(i-4)/2}00,
/// 01^{(i-4)/2}01^{(i-4)/2+1}0, 10^{(i-4)/2}10^{(i-4)/2+1}1,
/// 01^{(i-2)/2}0^{(i-2)/2}1, and their reverses.
inline std::vector<Word> even_step_words(std::size_t i) {
  const std::size_t a = (i - 4) / 2, b = (i - 2) / 2;
  std::vector<Word> out;
  {
    std::vector<std::uint8_t> syms{1, 1};
    for (std::size_t r = 0; r < a; ++r) {
      syms.push_back(0);
      syms.push_back(1);
    }
    syms.push_back(0);
    syms.push_back(0);
    out.push_back(Word(std::move(syms)));
  }
  out.push_back(run_pattern({{0, 1}, {1, a}, {0, 1}, {1, a + 1}, {0, 1}}));
  out.push_back(run_pattern({{1, 1}, {0, a}, {1, 1}, {0, a + 1}, {1, 1}}));
  out.push_back(run_pattern({{0, 1}, {1, b}, {0, b}, {1, 1}}));
  for (std::size_t w = 0, end = out.size(); w < end; ++w)
    out.push_back(palinpair::reverse(out[w]));
  return out;
}

}  // namespace detail_

/// The number of minimal non palindrome pairs of length i:
/// 0 below 6, 4i - 12 at even i, and the previous count at odd i.
inline std::size_t npp_count_formula(std::size_t i) {
  if (i < 6) return 0;
  if (i % 2 == 0) return 4 * i - 12;
  return npp_count_formula(i - 1);
}

/// The inductive construction: the twelve length-6 words, then for each
/// length one-letter extensions of every internal maximum block of the
/// previous generation, plus the eight fixed words at even lengths.
/// Duplicates are merged. Returns the empty set below length 6.
inline std::vector<Word> generate_mnpp(std::size_t n) {
  if (n < 6) return {};
  std::vector<Word> current = detail_::base_length_6();
  for (std::size_t i = 7; i <= n; ++i) {
    std::set<Word> next;
    for (const Word& w : current)
      for (const BlockRun& run : blocks(w))
        if (run.is_internal && run.is_maximum)
          next.insert(extend_internal_max_block(w, run.position, 1));
    if (i % 2 == 0)
      for (Word& w : detail_::even_step_words(i)) next.insert(std::move(w));
    current.assign(next.begin(), next.end());
  }
  return current;
}

/// Collapses a full MNPP set to the table form used for short lists:
/// prefix-0 members only, and of a reversal pair only the smaller.
inline std::vector<Word> table_representatives(const std::vector<Word>& mnpp_set) {
  std::vector<Word> out;
  for (const Word& w : mnpp_set) {
    if (w.empty() || w[0] != 0) continue;
    Word rev = palinpair::reverse(w);
    if (rev[0] == 0 && rev < w) continue;  // its reverse is listed instead
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace palinpair::mnpp
