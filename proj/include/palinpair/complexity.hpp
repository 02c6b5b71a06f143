#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "palinpair/bitword.hpp"
#include "palinpair/infinite_word.hpp"
#include "palinpair/pal_oracle.hpp"
#include "palinpair/palfact.hpp"
#include "palinpair/parallel.hpp"
#include "palinpair/word.hpp"

namespace palinpair::complexity {

/// Per-length counts: factors (C), palindromic factors (P), palindrome-pair
/// factors (PP). P <= PP <= C on every row, and all_pp holds exactly when
/// PP == C. Unsaturated rows carry the counts seen so far and make no
/// all-factors claim.
struct ProfileRow {
  std::size_t n = 0;
  std::size_t C = 0;
  std::size_t P = 0;
  std::size_t PP = 0;
  bool all_pp = false;
  bool saturated = false;
};

struct ComplexityProfile {
  std::vector<ProfileRow> rows;
  /// Set when the scan stopped early (memory budget, seed exhaustion):
  /// the first length not scanned and the reason.
  std::optional<std::pair<std::size_t, std::string>> truncation;

  /// The saturated lengths at which every factor is a palindrome pair.
  std::vector<std::size_t> all_pp_lengths() const {
    std::vector<std::size_t> ns;
    for (const ProfileRow& r : rows)
      if (r.saturated && r.all_pp) ns.push_back(r.n);
    return ns;
  }
};

namespace detail_ {

inline ProfileRow row_from_positions(std::span<const std::uint8_t> window,
                                     const std::vector<std::size_t>& positions, std::size_t n,
                                     bool saturated) {
  ProfileRow row;
  row.n = n;
  row.saturated = saturated;
  row.C = positions.size();
  PalOracle oracle(window);
  for (std::size_t p : positions) {
    if (oracle.is_pal(p, p + n)) {
      ++row.P;
      ++row.PP;  // palindromes are palindrome pairs
    } else if (is_palindrome_pair(oracle, p, p + n)) {
      ++row.PP;
    }
  }
  row.all_pp = saturated && row.PP == row.C;
  return row;
}

}  // namespace detail_

/// Complexity profile of an infinite word over [min_n, max_n]. Rows whose
/// factor set fails to saturate are reported unsaturated rather than
/// erroring out.
inline ComplexityProfile profile(InfiniteWordSource& src, std::size_t min_n, std::size_t max_n,
                                 const SaturationPolicy& policy) {
  ComplexityProfile out;
  for (std::size_t n = min_n; n <= max_n; ++n) {
    try {
      auto collected = palinpair::detail::collect_factor_positions(src, n, policy);
      out.rows.push_back(detail_::row_from_positions(collected.window, collected.positions, n,
                                                     collected.saturated));
    } catch (const std::exception& e) {
      // deeper lengths need at least as much material; stop here
      out.truncation = {n, e.what()};
      break;
    }
  }
  return out;
}

/// Complexity profile of a finite word; every row is exact.
inline ComplexityProfile profile(const Word& w, std::size_t min_n, std::size_t max_n) {
  ComplexityProfile out;
  for (std::size_t n = min_n; n <= max_n && n <= w.size(); ++n) {
    std::vector<std::size_t> positions =
        palinpair::detail::distinct_factor_positions(w.view(), n);
    out.rows.push_back(detail_::row_from_positions(w.view(), positions, n, true));
  }
  return out;
}

/// The saturated lengths n in [1, max_n] at which every length-n factor of
/// the stream is a palindrome pair: finite evidence for or against the
/// infinitely-many-n property.
inline std::vector<std::size_t> all_pp_lengths(InfiniteWordSource& src, std::size_t max_n,
                                               const SaturationPolicy& policy) {
  return profile(src, 1, max_n, policy).all_pp_lengths();
}

/// Number of distinct factors of w, the empty factor included, that are
/// palindrome pairs. Binary words only.
inline std::size_t count_pp_factors(const Word& w) {
  if (!w.is_binary()) throw std::invalid_argument("count_pp_factors: binary word required");
  if (w.size() <= palinpair::detail::kBitWordMax)
    return palinpair::detail::count_pp_factors_bits(palinpair::detail::bits_from_word(w),
                                                    static_cast<unsigned>(w.size()));
  PalOracle oracle(w);
  std::size_t count = 1;  // the empty factor
  for (std::size_t n = 1; n <= w.size(); ++n)
    for (std::size_t p : palinpair::detail::distinct_factor_positions(w.view(), n))
      if (is_palindrome_pair(oracle, p, p + n)) ++count;
  return count;
}

/// The conjectured maximum number of distinct palindrome-pair factors of a
/// binary word of length n: ceil((n^2 + 2n + 3) / 3).
inline std::size_t max_pp_formula(std::size_t n) { return (n * n + 2 * n + 3 + 2) / 3; }

/// Result of the exhaustive maximum search at one length. Witnesses begin
/// with 0; the complementary witnesses are implied.
struct MaxPPResult {
  std::size_t n = 0;
  std::size_t max_count = 0;
  std::size_t formula_value = 0;
  std::vector<Word> witnesses;  // sorted, prefix 0
};

/// Exhaustive scan of all binary words of length n beginning with 0 (the
/// complement symmetry covers the rest). n is capped at 24: the scan is
/// 2^{n-1} words.
inline MaxPPResult max_pp_search(std::size_t n, bool parallel = true, unsigned jobs = 0) {
  if (n < 1 || n > 24) throw std::invalid_argument("max_pp_search: n must be in 1..24");
  struct Chunk {
    std::size_t best = 0;
    std::vector<std::uint32_t> witnesses;
  };
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  auto scan = [n](std::uint64_t lo, std::uint64_t hi) {
    Chunk c;
    for (std::uint64_t x = lo; x < hi; ++x) {
      // position 0 is the fixed leading 0, positions 1.. come from x
      std::uint32_t bits = static_cast<std::uint32_t>(x) << 1;
      std::size_t count =
          palinpair::detail::count_pp_factors_bits(bits, static_cast<unsigned>(n));
      if (count > c.best) {
        c.best = count;
        c.witnesses.clear();
      }
      if (count == c.best) c.witnesses.push_back(bits);
    }
    return c;
  };

  Chunk merged = palinpair::detail::parallel_chunked<Chunk>(
      total, parallel ? jobs : 1, scan, [](Chunk& acc, Chunk&& part) {
        if (part.best > acc.best) {
          acc = std::move(part);
        } else if (part.best == acc.best) {
          acc.witnesses.insert(acc.witnesses.end(), part.witnesses.begin(),
                               part.witnesses.end());
        }
      });

  MaxPPResult result;
  result.n = n;
  result.max_count = merged.best;
  result.formula_value = max_pp_formula(n);
  result.witnesses.reserve(merged.witnesses.size());
  for (std::uint32_t bits : merged.witnesses)
    result.witnesses.push_back(Word::from_bits(bits, n));
  std::sort(result.witnesses.begin(), result.witnesses.end());
  return result;
}

/// Lexicographically least member of the orbit of w under identity, reversal,
/// complement and reversed complement.
inline Word canonical_orbit_representative(const Word& w) {
  Word best = w;
  for (const Word& cand :
       {palinpair::reverse(w), complement(w), palinpair::reverse(complement(w))})
    best = std::min(best, cand);
  return best;
}

/// The closed-form families of prefix-0 words attaining the maximum
/// palindrome-pair factor count, by n mod 3: three-block words
/// 0-run / 1-run / 0-run with run lengths near n/3 (outer runs may vanish;
/// shapes whose first run vanishes start with 1 and are dropped, their
/// complements being the implied prefix-0 forms). Verified against the
/// exhaustive search for every n up to 18.
inline std::vector<Word> extremal_family(std::size_t n) {
  if (n < 3) throw std::invalid_argument("extremal_family: n >= 3");
  const std::size_t lo = n / 3, hi = (n + 2) / 3;  // floor, ceil
  auto zeros_ones_zeros = [](std::size_t a, std::size_t b, std::size_t c) {
    std::vector<std::uint8_t> syms;
    syms.reserve(a + b + c);
    syms.insert(syms.end(), a, 0);
    syms.insert(syms.end(), b, 1);
    syms.insert(syms.end(), c, 0);
    return Word(std::move(syms));
  };
  std::vector<std::array<std::size_t, 3>> shapes;
  switch (n % 3) {
    case 0:
      shapes = {{lo + 1, lo, lo - 1},
                {lo, lo, lo},
                {lo, lo + 1, lo - 1},
                {lo - 1, lo, lo + 1},
                {lo - 1, lo + 1, lo}};
      break;
    case 1:
      shapes = {{hi, lo, lo}, {hi, hi, lo - 1}, {lo, lo, hi}, {lo, hi, lo}, {lo - 1, hi, hi}};
      break;
    default:  // n % 3 == 2
      shapes = {{hi, hi, lo}, {lo, hi, hi}};
      break;
  }
  std::vector<Word> out;
  for (auto [a, b, c] : shapes)
    if (a > 0) out.push_back(zeros_ones_zeros(a, b, c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace palinpair::complexity
