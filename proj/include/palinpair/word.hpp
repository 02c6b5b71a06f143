#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace palinpair {

/// Largest alphabet the library handles; letters are 0..15, written as
/// '0'-'9' then 'a'-'f' in text form.
inline constexpr std::size_t kMaxAlphabet = 16;

/// A finite word over a small integer alphabet. Immutable in spirit: all
/// operations return new words. Position indexing is 0-based and ranges are
/// half-open, so slice(i, j) is the factor starting at i and ending at j-1.
class Word {
public:
  using value_type = std::uint8_t;
  using const_iterator = std::vector<value_type>::const_iterator;

  Word() = default;

  explicit Word(std::vector<value_type> symbols) : syms_(std::move(symbols)) {
    validate();
  }

  Word(std::initializer_list<int> symbols) {
    syms_.reserve(symbols.size());
    for (int s : symbols) {
      if (s < 0 || static_cast<std::size_t>(s) >= kMaxAlphabet)
        throw std::invalid_argument("Word: letter out of range");
      syms_.push_back(static_cast<value_type>(s));
    }
  }

  /// Parses the text form: one letter per character, '0'-'9' then 'a'-'f'.
  static Word from_text(std::string_view text) {
    std::vector<value_type> syms;
    syms.reserve(text.size());
    for (char c : text) {
      int v;
      if (c >= '0' && c <= '9')
        v = c - '0';
      else if (c >= 'a' && c <= 'f')
        v = 10 + (c - 'a');
      else
        throw std::invalid_argument(std::string("Word: invalid letter '") + c +
                                    "' in \"" + std::string(text) + "\"");
      syms.push_back(static_cast<value_type>(v));
    }
    return Word(std::move(syms));
  }

  /// Binary word from a bit pattern; bit i of `bits` is the letter at
  /// position i.
  static Word from_bits(std::uint64_t bits, std::size_t length) {
    if (length > 64) throw std::invalid_argument("Word::from_bits: length > 64");
    std::vector<value_type> syms(length);
    for (std::size_t i = 0; i < length; ++i)
      syms[i] = static_cast<value_type>((bits >> i) & 1u);
    return Word(std::move(syms));
  }

  std::size_t size() const { return syms_.size(); }
  bool empty() const { return syms_.empty(); }
  value_type operator[](std::size_t i) const { return syms_[i]; }
  const_iterator begin() const { return syms_.begin(); }
  const_iterator end() const { return syms_.end(); }
  const std::vector<value_type>& symbols() const { return syms_; }
  std::span<const value_type> view() const { return {syms_.data(), syms_.size()}; }

  /// The factor w[i:j] (half-open). Requires i <= j <= size().
  Word slice(std::size_t i, std::size_t j) const {
    if (i > j || j > size()) throw std::out_of_range("Word::slice: bad range");
    return Word(std::vector<value_type>(syms_.begin() + static_cast<std::ptrdiff_t>(i),
                                        syms_.begin() + static_cast<std::ptrdiff_t>(j)));
  }

  bool is_binary() const {
    return std::all_of(syms_.begin(), syms_.end(), [](value_type s) { return s < 2; });
  }

  std::string to_text() const {
    std::string out;
    out.reserve(size());
    for (value_type s : syms_) out.push_back(s < 10 ? static_cast<char>('0' + s)
                                                    : static_cast<char>('a' + (s - 10)));
    return out;
  }

  Word operator+(const Word& rhs) const {
    std::vector<value_type> syms;
    syms.reserve(size() + rhs.size());
    syms.insert(syms.end(), syms_.begin(), syms_.end());
    syms.insert(syms.end(), rhs.syms_.begin(), rhs.syms_.end());
    return Word(std::move(syms));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(a.syms_.begin(), a.syms_.end(),
                                                  b.syms_.begin(), b.syms_.end());
  }

  friend std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.to_text();
  }

private:
  void validate() const {
    for (value_type s : syms_)
      if (s >= kMaxAlphabet) throw std::invalid_argument("Word: letter out of range");
  }

  std::vector<value_type> syms_;
};

inline Word reverse(const Word& w) {
  std::vector<Word::value_type> syms(w.symbols().rbegin(), w.symbols().rend());
  return Word(std::move(syms));
}

/// Binary complement (0 <-> 1). Defined for binary words only.
inline Word complement(const Word& w) {
  if (!w.is_binary())
    throw std::invalid_argument("complement: defined for binary words only");
  std::vector<Word::value_type> syms(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    syms[i] = static_cast<Word::value_type>(1 - w[i]);
  return Word(std::move(syms));
}

/// All |w| rotations uv -> vu in rotation order; duplicates are retained so
/// callers can count distinct conjugates themselves. The empty word has one
/// conjugate: itself.
inline std::vector<Word> conjugates(const Word& w) {
  if (w.empty()) return {Word()};
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t r = 0; r < w.size(); ++r) {
    std::vector<Word::value_type> syms;
    syms.reserve(w.size());
    syms.insert(syms.end(), w.symbols().begin() + static_cast<std::ptrdiff_t>(r),
                w.symbols().end());
    syms.insert(syms.end(), w.symbols().begin(),
                w.symbols().begin() + static_cast<std::ptrdiff_t>(r));
    out.emplace_back(std::move(syms));
  }
  return out;
}

/// A maximal single-letter run inside a host word.
struct BlockRun {
  std::uint8_t symbol = 0;
  std::size_t length = 0;    // run length, >= 1
  std::size_t position = 0;  // start index in the host word
  bool is_internal = false;  // neither the first nor the last run
  bool is_maximum = false;   // no run in the word is strictly longer
};

/// Maximal-run decomposition of w. Concatenating the runs restores w.
inline std::vector<BlockRun> blocks(const Word& w) {
  std::vector<BlockRun> runs;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i + 1;
    while (j < w.size() && w[j] == w[i]) ++j;
    runs.push_back({w[i], j - i, i, false, false});
    i = j;
  }
  if (runs.empty()) return runs;
  std::size_t longest = 0;
  for (const BlockRun& r : runs) longest = std::max(longest, r.length);
  for (std::size_t r = 0; r < runs.size(); ++r) {
    runs[r].is_internal = (r != 0 && r + 1 != runs.size());
    runs[r].is_maximum = (runs[r].length == longest);
  }
  return runs;
}

/// The distinct factors of one fixed length, kept sorted. `saturated` records
/// whether the set is certified complete for the originating word or stream.
struct FactorSet {
  std::size_t length = 0;
  std::vector<Word> factors;  // sorted, distinct
  bool saturated = false;

  std::size_t size() const { return factors.size(); }
  bool contains(const Word& w) const {
    return std::binary_search(factors.begin(), factors.end(), w);
  }
};

/// Exactly the distinct length-n factors of w. For n > |w| there are none and
/// the empty result is still complete.
inline FactorSet factors(const Word& w, std::size_t n) {
  FactorSet fs;
  fs.length = n;
  fs.saturated = true;
  if (n > w.size()) return fs;
  fs.factors.reserve(w.size() - n + 1);
  for (std::size_t i = 0; i + n <= w.size(); ++i) fs.factors.push_back(w.slice(i, i + n));
  std::sort(fs.factors.begin(), fs.factors.end());
  fs.factors.erase(std::unique(fs.factors.begin(), fs.factors.end()), fs.factors.end());
  return fs;
}

/// Searches the given factor sets for a pair of equal-length factors whose
/// counts of 1s differ by at least 2 (a balance violation). Binary only.
inline std::optional<std::pair<Word, Word>>
balanced_violation(std::span<const FactorSet> sets) {
  auto ones = [](const Word& w) {
    std::size_t c = 0;
    for (auto s : w) c += s;
    return c;
  };
  for (const FactorSet& fs : sets)
    for (const Word& w : fs.factors)
      if (!w.is_binary())
        throw std::invalid_argument("balanced_violation: balance defined for binary only");
  for (const FactorSet& fs : sets) {
    if (fs.factors.empty()) continue;
    const Word* lo = &fs.factors.front();
    const Word* hi = &fs.factors.front();
    for (const Word& w : fs.factors) {
      if (ones(w) < ones(*lo)) lo = &w;
      if (ones(w) > ones(*hi)) hi = &w;
    }
    if (ones(*hi) - ones(*lo) >= 2) return std::make_pair(*lo, *hi);
  }
  return std::nullopt;
}

/// The left special factors among fs_n: those w with both 0w and 1w present
/// in fs_n_plus_1. Requires saturated binary inputs.
inline std::vector<Word> left_special_factors(const FactorSet& fs_n,
                                              const FactorSet& fs_n_plus_1) {
  if (!fs_n.saturated || !fs_n_plus_1.saturated)
    throw std::invalid_argument("left_special_factors: unsaturated input");
  if (fs_n_plus_1.length != fs_n.length + 1)
    throw std::invalid_argument("left_special_factors: lengths must be n and n+1");
  std::vector<Word> out;
  const Word zero{0}, one{1};
  for (const Word& w : fs_n.factors) {
    if (!w.is_binary())
      throw std::invalid_argument("left_special_factors: binary alphabet required");
    if (fs_n_plus_1.contains(zero + w) && fs_n_plus_1.contains(one + w)) out.push_back(w);
  }
  return out;
}

// ---- text format ----------------------------------------------------------
// One word per line; blank lines and lines starting with '#' are ignored.

inline std::vector<Word> parse_word_lines(std::istream& in) {
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    words.push_back(Word::from_text(line));
  }
  return words;
}

inline void write_word_lines(std::ostream& out, std::span<const Word> words) {
  for (const Word& w : words) out << w.to_text() << '\n';
}

}  // namespace palinpair
