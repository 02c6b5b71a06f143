#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "palinpair/infinite_word.hpp"
#include "palinpair/palfact.hpp"
#include "palinpair/word.hpp"

namespace palinpair::streams {

/// A letter-to-word substitution over a fixed alphabet.
struct Morphism {
  std::size_t alphabet = 0;
  std::vector<Word> images;  // one per letter

  Morphism(std::size_t alphabet_size, std::vector<Word> letter_images)
      : alphabet(alphabet_size), images(std::move(letter_images)) {
    if (alphabet == 0 || alphabet > kMaxAlphabet)
      throw std::invalid_argument("Morphism: bad alphabet size");
    if (images.size() != alphabet)
      throw std::invalid_argument("Morphism: need one image per letter");
    for (const Word& im : images)
      for (auto s : im)
        if (s >= alphabet) throw std::invalid_argument("Morphism: image letter out of alphabet");
  }

  /// Parses "letter=image" lines (blank lines and '#' comments ignored).
  /// The alphabet size is one more than the largest letter mentioned.
  static Morphism parse(std::span<const std::string> lines) {
    std::vector<std::pair<std::uint8_t, Word>> rules;
    std::size_t alphabet = 0;
    for (const std::string& raw : lines) {
      std::string_view line(raw);
      if (line.empty() || line.front() == '#') continue;
      auto eq = line.find('=');
      if (eq == std::string_view::npos || eq != 1)
        throw std::invalid_argument("Morphism: expected \"letter=image\", got \"" + raw + "\"");
      Word lhs = Word::from_text(line.substr(0, 1));
      Word rhs = Word::from_text(line.substr(2));
      rules.emplace_back(lhs[0], rhs);
      alphabet = std::max<std::size_t>(alphabet, lhs[0] + 1u);
      for (auto s : rhs) alphabet = std::max<std::size_t>(alphabet, s + 1u);
    }
    std::vector<Word> images(alphabet);
    std::vector<bool> defined(alphabet, false);
    for (auto& [letter, image] : rules) {
      if (defined[letter])
        throw std::invalid_argument("Morphism: duplicate rule for letter " +
                                    std::to_string(int(letter)));
      defined[letter] = true;
      images[letter] = std::move(image);
    }
    for (std::size_t s = 0; s < alphabet; ++s)
      if (!defined[s])
        throw std::invalid_argument("Morphism: no rule for letter " + std::to_string(s));
    return Morphism(alphabet, std::move(images));
  }

  Word apply(const Word& w) const {
    std::vector<std::uint8_t> out;
    for (auto s : w) {
      if (s >= alphabet)
        throw std::invalid_argument("Morphism: letter " + std::to_string(int(s)) +
                                    " outside alphabet");
      out.insert(out.end(), images[s].symbols().begin(), images[s].symbols().end());
    }
    return Word(std::move(out));
  }
};

inline Word apply_morphism(const Morphism& m, const Word& w) { return m.apply(w); }

inline Morphism thue_morse_morphism() { return Morphism(2, {Word{0, 1}, Word{1, 0}}); }

inline Morphism tribonacci_morphism() {
  return Morphism(3, {Word{0, 1}, Word{0, 2}, Word{0}});
}

/// Fixed point of a morphism whose seed image starts with the seed letter and
/// has length at least 2. Materialized by repeated application; every
/// intermediate prefix is retained.
class MorphicFixedPointStream final : public InfiniteWordSource {
public:
  MorphicFixedPointStream(Morphism m, std::uint8_t seed)
      : morphism_(std::move(m)), seed_(seed) {
    if (seed >= morphism_.alphabet)
      throw std::invalid_argument("fixed point: seed outside alphabet");
    const Word& im = morphism_.images[seed];
    if (im.size() < 2 || im[0] != seed)
      throw std::invalid_argument(
          "fixed point: seed image must start with the seed and have length >= 2");
    buf_.push_back(seed);
  }

  std::string name() const override { return "morphic-fixed-point"; }
  std::size_t alphabet_size() const override { return morphism_.alphabet; }

private:
  void extend_to(std::size_t len) override {
    while (buf_.size() < len) {
      Word image = morphism_.apply(Word(std::vector<std::uint8_t>(buf_.begin(), buf_.end())));
      if (image.size() <= buf_.size())
        throw std::logic_error("fixed point: morphism does not grow the prefix");
      buf_.assign(image.symbols().begin(), image.symbols().end());
    }
  }

  Morphism morphism_;
  std::uint8_t seed_;
};

inline std::unique_ptr<InfiniteWordSource> fixed_point_stream(Morphism m, std::uint8_t seed) {
  return std::make_unique<MorphicFixedPointStream>(std::move(m), seed);
}

inline std::unique_ptr<InfiniteWordSource> thue_morse_stream() {
  return fixed_point_stream(thue_morse_morphism(), 0);
}

inline std::unique_ptr<InfiniteWordSource> tribonacci_stream() {
  return fixed_point_stream(tribonacci_morphism(), 0);
}

/// Closed form for the palindromic complexity of the Thue-Morse word. The two
/// even cases are applied in order, the 4-valued band winning on the overlap,
/// which makes the bands partition the even lengths:
/// 4 on [4^k+2, 3*4^k], 2 on (3*4^k, 4^{k+1}].
inline std::size_t tm_palindromic_complexity(std::size_t n) {
  if (n == 0) return 1;
  if (n <= 4) return 2;
  if (n % 2 == 1) return 0;
  std::size_t pow = 4;  // 4^k
  while (!(n >= pow + 2 && n <= 4 * pow)) pow *= 4;
  return n <= 3 * pow ? 4 : 2;
}

/// The distinct conjugates of mu^{2k}(010) and mu^{2k}(101): palindrome-pair
/// factors of the Thue-Morse word of length 3*4^k. Each output is checked to
/// be a palindrome pair, and the generating squares are located in the word
/// so that every conjugate is certified a factor.
inline std::vector<Word> tm_pp_square_conjugates(std::size_t k) {
  if (k < 1) throw std::invalid_argument("tm_pp_square_conjugates: k >= 1");
  Morphism mu = thue_morse_morphism();
  Word g0{0, 1, 0}, g1{1, 0, 1};
  for (std::size_t r = 0; r < 2 * k; ++r) {
    g0 = mu.apply(g0);
    g1 = mu.apply(g1);
  }
  auto locate_square = [&](const Word& g) {
    Word square = g + g;
    auto src = thue_morse_stream();
    for (std::size_t window = std::max<std::size_t>(4 * square.size(), 1024);; window *= 2) {
      auto prefix = src->prefix(window);
      auto it = std::search(prefix.begin(), prefix.end(), square.symbols().begin(),
                            square.symbols().end());
      if (it != prefix.end()) return;
      if (window > (std::size_t{1} << 24))
        throw std::logic_error("tm_pp_square_conjugates: square not found");
    }
  };
  locate_square(g0);
  locate_square(g1);

  std::set<Word> out;
  for (const Word& g : {g0, g1})
    for (Word& c : conjugates(g)) {
      if (!is_palindrome_pair(c))
        throw std::logic_error("tm_pp_square_conjugates: conjugate is not a palindrome pair");
      out.insert(std::move(c));
    }
  return {out.begin(), out.end()};
}

/// Seeds w_1, w_2, ... for the palindrome-shuffle construction
/// p_1 = 0, p_{i+1} = p_i w_{i,1} p_i w_{i,2} ... p_i w_{i,t_i} p_i.
/// Every seed must be a nonempty binary palindrome.
class ShuffleSpec {
public:
  static ShuffleSpec from_seeds(std::vector<Word> seeds) {
    ShuffleSpec spec;
    for (const Word& w : seeds) validate_seed(w);
    spec.seeds_ = std::move(seeds);
    spec.label_ = "shuffle(explicit)";
    return spec;
  }

  static ShuffleSpec from_generator(std::function<Word(std::size_t)> gen, std::string label) {
    ShuffleSpec spec;
    spec.gen_ = std::move(gen);
    spec.label_ = std::move(label);
    return spec;
  }

  /// w_i = 1, 00, 111, 0000, ...: runs of alternating letter and growing
  /// length. A convenient unbounded seed family.
  static ShuffleSpec alternating_runs() {
    return from_generator(
        [](std::size_t i) {
          std::vector<std::uint8_t> syms(i, static_cast<std::uint8_t>(i % 2));
          return Word(std::move(syms));
        },
        "shuffle(alternating-runs)");
  }

  /// Random palindromic seeds from an explicitly given seed value. The seed
  /// is recorded so reports can echo it; generation draws the raw engine
  /// stream, so a given seed value is reproducible everywhere.
  static ShuffleSpec seeded_random(std::uint64_t seed, std::size_t max_half_length = 4) {
    ShuffleSpec spec = from_generator(
        [seed, max_half_length](std::size_t i) {
          std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * i);
          std::size_t half = 1 + static_cast<std::size_t>(rng() % max_half_length);
          bool odd = (rng() & 1u) != 0;
          std::vector<std::uint8_t> syms(half);
          for (auto& s : syms) s = static_cast<std::uint8_t>(rng() & 1u);
          std::vector<std::uint8_t> full(syms.begin(), syms.end());
          if (odd) full.pop_back();
          full.insert(full.end(), syms.rbegin(), syms.rend());
          return Word(std::move(full));
        },
        "shuffle(random:" + std::to_string(seed) + ")");
    spec.random_seed_ = seed;
    return spec;
  }

  /// w_i, 1-based; throws when an explicit seed list runs out.
  Word seed(std::size_t i) const {
    if (i == 0) throw std::invalid_argument("ShuffleSpec: seeds start at w_1");
    if (gen_) {
      Word w = gen_(i);
      validate_seed(w);
      return w;
    }
    if (i <= seeds_.size()) return seeds_[i - 1];
    throw std::out_of_range(label_ + ": seed w_" + std::to_string(i) +
                            " is not available (" + std::to_string(seeds_.size()) +
                            " seeds given)");
  }

  bool has_seed(std::size_t i) const { return gen_ != nullptr || (i >= 1 && i <= seeds_.size()); }
  const std::string& label() const { return label_; }
  std::optional<std::uint64_t> random_seed() const { return random_seed_; }

private:
  static void validate_seed(const Word& w) {
    if (w.empty() || !w.is_binary() || w != palinpair::reverse(w))
      throw std::invalid_argument("ShuffleSpec: seeds must be nonempty binary palindromes");
  }

  std::vector<Word> seeds_;
  std::function<Word(std::size_t)> gen_;
  std::string label_;
  std::optional<std::uint64_t> random_seed_;
};

/// The limit word of a shuffle spec. The stream extends symbol by symbol:
/// within level i+1 the symbol at position x is p_i[x mod (|p_i|+1)] when
/// that index falls inside a p_i copy and the (x / (|p_i|+1))-th letter of
/// w_i otherwise, so prefixes of a level can be materialized without the
/// whole level (deep levels are budget-bound).
class ShuffleStream final : public InfiniteWordSource {
public:
  explicit ShuffleStream(ShuffleSpec spec) : spec_(std::move(spec)) {
    base_ = {0};  // p_1
    buf_ = base_;
  }

  std::string name() const override { return spec_.label(); }
  std::size_t alphabet_size() const override { return 2; }
  const ShuffleSpec& spec() const { return spec_; }

  /// Fully materialized p_i (budget-checked).
  Word level(std::size_t i) {
    std::size_t len = level_length(i);
    return prefix_word(len);
  }

  /// |p_i| from the length recurrence, without materializing anything.
  std::size_t level_length(std::size_t i) const {
    if (i == 0) throw std::invalid_argument("ShuffleStream: levels start at p_1");
    std::size_t len = 1;
    for (std::size_t lvl = 1; lvl < i; ++lvl) {
      std::size_t t = spec_.seed(lvl).size();
      if (len > (budget_symbols() - t) / (t + 1))
        throw std::length_error(name() + ": |p_" + std::to_string(lvl + 1) +
                                "| exceeds the memory budget");
      len = (t + 1) * len + t;
    }
    return len;
  }

private:
  void extend_to(std::size_t len) override {
    while (buf_.size() < len) {
      if (!seed_.has_value()) seed_ = spec_.seed(base_level_);  // throws when seeds run out
      const Word& w = *seed_;
      const std::size_t period = base_.size() + 1;
      const std::size_t full_len = (w.size() + 1) * base_.size() + w.size();
      while (buf_.size() < len && buf_.size() < full_len) {
        std::size_t x = buf_.size();
        std::size_t q = x / period, r = x % period;
        buf_.push_back(r < base_.size() ? base_[r] : w[q]);
      }
      if (buf_.size() == full_len) {  // level complete; descend into the next
        base_ = buf_;
        ++base_level_;
        seed_.reset();
      }
    }
  }

  ShuffleSpec spec_;
  std::vector<std::uint8_t> base_;  // the deepest fully materialized level
  std::size_t base_level_ = 1;
  std::optional<Word> seed_;
};

inline std::unique_ptr<ShuffleStream> shuffle_stream(ShuffleSpec spec) {
  return std::make_unique<ShuffleStream>(std::move(spec));
}

/// The lexicographically least binary de Bruijn sequence of order k, in
/// linear form: the least cyclic sequence (the Lyndon-word concatenation)
/// with its first k-1 symbols appended, so every length-k binary word occurs
/// exactly once as a factor. Length 2^k + k - 1.
inline Word de_bruijn(unsigned order) {
  if (order < 1 || order > 24) throw std::invalid_argument("de_bruijn: order must be in 1..24");
  std::vector<std::uint8_t> cyc;
  cyc.reserve(std::size_t{1} << order);
  std::vector<std::uint8_t> a(order + 1, 0);
  // standard recursive generation of Lyndon words of length dividing `order`,
  // in lexicographic order
  std::function<void(unsigned, unsigned)> db = [&](unsigned t, unsigned p) {
    if (t > order) {
      if (order % p == 0)
        for (unsigned j = 1; j <= p; ++j) cyc.push_back(a[j]);
      return;
    }
    a[t] = a[t - p];
    db(t + 1, p);
    for (std::uint8_t v = static_cast<std::uint8_t>(a[t - p] + 1); v < 2; ++v) {
      a[t] = v;
      db(t + 1, t);
    }
  };
  db(1, 1);
  std::vector<std::uint8_t> out(cyc);
  out.insert(out.end(), cyc.begin(), cyc.begin() + (order - 1));
  return Word(std::move(out));
}

/// Shuffle seeds w_i = B_i reverse(B_i) with B_i the de Bruijn word of order
/// |p_i| + 1, built level by level. Errors name the first level whose seed
/// does not fit the budget (order 25 and up is already out of reach).
inline ShuffleSpec de_bruijn_shuffle_spec(std::size_t levels) {
  if (levels < 1) throw std::invalid_argument("de_bruijn_shuffle_spec: levels >= 1");
  std::vector<Word> seeds;
  std::size_t p_len = 1;  // |p_1|
  for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
    std::size_t order = p_len + 1;
    if (order > 24 || (std::size_t{2} << (order - 1)) + order - 1 > budget_symbols() / 2)
      throw std::length_error("de_bruijn_shuffle_spec: budget exceeded at level " +
                              std::to_string(lvl) + " (order " + std::to_string(order) + ")");
    Word b = de_bruijn(static_cast<unsigned>(order));
    Word w = b + palinpair::reverse(b);
    std::size_t t = w.size();
    seeds.push_back(std::move(w));
    if (p_len > (budget_symbols() - t) / (t + 1)) {
      if (lvl < levels)
        throw std::length_error("de_bruijn_shuffle_spec: budget exceeded at level " +
                                std::to_string(lvl + 1));
      break;
    }
    p_len = (t + 1) * p_len + t;
  }
  ShuffleSpec spec = ShuffleSpec::from_seeds(std::move(seeds));
  return spec;
}

}  // namespace palinpair::streams
