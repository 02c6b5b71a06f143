#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "palinpair/infinite_word.hpp"
#include "palinpair/pal_oracle.hpp"
#include "palinpair/palfact.hpp"
#include "palinpair/word.hpp"

namespace palinpair::sturmian {

/// The partial quotients a_1, a_2, ... describing a Sturmian slope
/// [0; a_1 + 1, a_2, a_3, ...]. Either a finite head plus an eventually
/// periodic tail, or a generator callback. All partials must be >= 1; slopes
/// above 1/2 are the caller's 0<->1 exchange.
class ContinuedFraction {
public:
  static ContinuedFraction periodic(std::vector<unsigned> head, std::vector<unsigned> tail) {
    ContinuedFraction cf;
    cf.head_ = std::move(head);
    cf.tail_ = std::move(tail);
    for (unsigned a : cf.head_) cf.check_partial(a);
    for (unsigned a : cf.tail_) cf.check_partial(a);
    if (cf.head_.empty() && cf.tail_.empty())
      throw std::invalid_argument("ContinuedFraction: no partials");
    cf.label_ = cf.render();
    return cf;
  }

  static ContinuedFraction from_generator(std::function<unsigned(std::size_t)> gen,
                                          std::string label) {
    ContinuedFraction cf;
    cf.gen_ = std::move(gen);
    cf.label_ = std::move(label);
    return cf;
  }

  /// Text form: comma-separated partials with an optional parenthesized
  /// periodic tail, e.g. "1,(1)" for the Fibonacci slope or "2,(1,2)".
  static ContinuedFraction parse(std::string_view text) {
    std::vector<unsigned> head, tail;
    bool in_tail = false, tail_closed = false;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("ContinuedFraction: cannot parse \"" + std::string(text) +
                                  "\": " + why);
    };
    while (i < text.size()) {
      char c = text[i];
      if (c == '(') {
        if (in_tail || tail_closed) fail("unexpected '('");
        in_tail = true;
        ++i;
      } else if (c == ')') {
        if (!in_tail) fail("unexpected ')'");
        in_tail = false;
        tail_closed = true;
        ++i;
      } else if (c == ',') {
        ++i;
      } else if (c >= '0' && c <= '9') {
        if (tail_closed) fail("digits after the periodic tail");
        unsigned v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          v = v * 10 + static_cast<unsigned>(text[i] - '0');
          ++i;
        }
        (in_tail ? tail : head).push_back(v);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    if (in_tail) fail("unterminated tail");
    if (tail_closed && tail.empty()) fail("empty periodic tail");
    return periodic(std::move(head), std::move(tail));
  }

  /// a_i with 1-based i; throws naming the index when the expansion is finite
  /// and exhausted.
  unsigned partial(std::size_t i) const {
    if (i == 0) throw std::invalid_argument("ContinuedFraction: partials start at a_1");
    if (gen_) {
      unsigned a = gen_(i);
      check_partial(a);
      return a;
    }
    if (i <= head_.size()) return head_[i - 1];
    if (!tail_.empty()) return tail_[(i - head_.size() - 1) % tail_.size()];
    throw std::out_of_range("ContinuedFraction: partial a_" + std::to_string(i) +
                            " is not available");
  }

  bool has_partial(std::size_t i) const {
    return gen_ || !tail_.empty() || (i >= 1 && i <= head_.size());
  }

  const std::string& label() const { return label_; }

private:
  static void check_partial(unsigned a) {
    if (a < 1) throw std::invalid_argument("ContinuedFraction: partials must be >= 1");
  }

  std::string render() const {
    std::string out;
    for (std::size_t i = 0; i < head_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(head_[i]);
    }
    if (!tail_.empty()) {
      if (!head_.empty()) out += ',';
      out += '(';
      for (std::size_t i = 0; i < tail_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(tail_[i]);
      }
      out += ')';
    }
    return out;
  }

  std::vector<unsigned> head_, tail_;
  std::function<unsigned(std::size_t)> gen_;
  std::string label_;
};

/// The standard sequence s_0 = 1, s_1 = 0, s_n = s_{n-1}^{a_{n-1}} s_{n-2},
/// cached as far as it has been requested. s_n is a prefix of s_{n+1} for
/// n >= 1, so the family converges to the characteristic word.
class StandardFamily {
public:
  explicit StandardFamily(ContinuedFraction cf) : cf_(std::move(cf)) {
    seqs_.push_back(Word{1});  // s_0
    seqs_.push_back(Word{0});  // s_1
  }

  const ContinuedFraction& cf() const { return cf_; }

  const Word& sequence(std::size_t m) {
    while (seqs_.size() <= m) {
      std::size_t n = seqs_.size();
      unsigned a = cf_.partial(n - 1);  // throws when partials run out
      const Word& prev = seqs_[n - 1];
      const Word& prev2 = seqs_[n - 2];
      std::vector<std::uint8_t> syms;
      syms.reserve(prev.size() * a + prev2.size());
      for (unsigned r = 0; r < a; ++r)
        syms.insert(syms.end(), prev.symbols().begin(), prev.symbols().end());
      syms.insert(syms.end(), prev2.symbols().begin(), prev2.symbols().end());
      seqs_.emplace_back(std::move(syms));
    }
    return seqs_[m];
  }

  std::size_t length(std::size_t m) { return sequence(m).size(); }

private:
  ContinuedFraction cf_;
  std::vector<Word> seqs_;
};

inline Word standard_sequence(const ContinuedFraction& cf, std::size_t m) {
  StandardFamily fam(cf);
  return fam.sequence(m);
}

/// The characteristic Sturmian word c_alpha as a stream; its length-|s_m|
/// prefix equals s_m for every m >= 1.
class CharacteristicStream final : public InfiniteWordSource {
public:
  explicit CharacteristicStream(ContinuedFraction cf) : family_(std::move(cf)) {}
  std::string name() const override { return "sturmian(" + family_.cf().label() + ")"; }
  std::size_t alphabet_size() const override { return 2; }

private:
  void extend_to(std::size_t len) override {
    std::size_t m = 1;
    while (family_.length(m) < len) ++m;
    const Word& s = family_.sequence(m);
    buf_.assign(s.symbols().begin(), s.symbols().end());
  }
  StandardFamily family_;
};

inline std::unique_ptr<InfiniteWordSource> characteristic_stream(ContinuedFraction cf) {
  return std::make_unique<CharacteristicStream>(std::move(cf));
}

/// The smallest n covered by the all-palindrome-pair characterization for
/// this slope.
inline std::size_t all_pp_threshold(const ContinuedFraction& cf) {
  return 3 * static_cast<std::size_t>(cf.partial(1)) + 6;
}

/// A length n = |s_{m-1}^k s_{m-2}|. At such lengths (with m >= 4 and n over
/// the slope threshold) every length-n factor of the characteristic word is a
/// palindrome pair, and at no other length above the threshold.
struct GoodLength {
  std::size_t n = 0;
  std::size_t m = 0;  // smallest index realizing n
  std::size_t k = 0;
  bool in_characterized_range = false;  // some representation has m >= 4 and n is at or above the slope threshold
  bool collision = false;             // n has more than one (m, k) representation
};

/// All good lengths up to max_n, sorted by n and deduplicated (smallest m
/// kept, collisions flagged).
inline std::vector<GoodLength> good_lengths(const ContinuedFraction& cf, std::size_t max_n) {
  StandardFamily fam(cf);
  const std::size_t threshold = all_pp_threshold(cf);
  std::map<std::size_t, GoodLength> by_n;
  for (std::size_t m = 2;; ++m) {
    if (!cf.has_partial(m - 1)) break;
    std::size_t base = fam.length(m - 2);
    std::size_t step = fam.length(m - 1);
    if (step + base > max_n) break;  // k = 1 already too long; longer m only grows
    unsigned a = cf.partial(m - 1);
    for (std::size_t k = 1; k <= a; ++k) {
      std::size_t n = k * step + base;
      if (n > max_n) break;
      bool bounds = (m >= 4) && (n >= threshold);
      auto [it, inserted] = by_n.try_emplace(n, GoodLength{n, m, k, bounds, false});
      if (!inserted) {
        it->second.collision = true;
        it->second.in_characterized_range |= bounds;
      }
    }
  }
  std::vector<GoodLength> out;
  out.reserve(by_n.size());
  for (auto& [n, g] : by_n) out.push_back(g);
  return out;
}

/// One row of the all-palindrome-pair verification report.
struct AllPpRow {
  std::size_t n = 0;
  std::size_t factor_count = 0;
  std::size_t pp_count = 0;
  bool all_pp = false;
  bool predicted = false;  // good length with m >= 4 at or above threshold
  bool in_scope = false;   // n >= 3 a_1 + 6; below that the prediction is not asserted
  bool agreement = false;  // all_pp == predicted (meaningful when in_scope)
};

/// Checks, for each n in [min_n, max_n], whether every length-n factor of the
/// characteristic word is a palindrome pair, against the good-length
/// prediction. min_n defaults to the slope threshold; passing a smaller one
/// reports out-of-scope rows too.
inline std::vector<AllPpRow> verify_all_pp_lengths(const ContinuedFraction& cf,
                                                   std::size_t max_n,
                                                   std::optional<std::size_t> min_n = {}) {
  const std::size_t threshold = all_pp_threshold(cf);
  const std::size_t lo = min_n.value_or(threshold);
  if (lo < 1) throw std::invalid_argument("verify_all_pp_lengths: min_n must be >= 1");
  std::vector<AllPpRow> rows;
  if (lo > max_n) return rows;

  std::vector<bool> predicted(max_n + 1, false);
  for (const GoodLength& g : good_lengths(cf, max_n))
    if (g.in_characterized_range) predicted[g.n] = true;

  CharacteristicStream src{cf};
  const SaturationPolicy policy = SaturationPolicy::sturmian();
  for (std::size_t n = lo; n <= max_n; ++n) {
    auto collected = detail::collect_factor_positions(src, n, policy);
    if (!collected.saturated)
      throw SaturationError(src.name() + ": length " + std::to_string(n) + " did not saturate",
                            collected.count_before, collected.count_after);
    PalOracle oracle(collected.window);
    AllPpRow row;
    row.n = n;
    row.factor_count = collected.positions.size();
    for (std::size_t p : collected.positions)
      if (is_palindrome_pair(oracle, p, p + n)) ++row.pp_count;
    row.all_pp = (row.pp_count == row.factor_count);
    row.predicted = predicted[n];
    row.in_scope = (n >= threshold);
    row.agreement = (row.all_pp == row.predicted);
    rows.push_back(row);
  }
  return rows;
}

/// Lengths (up to max_n) of the palindromic prefixes of the characteristic
/// word, read off the stream directly.
inline std::set<std::size_t> palindromic_prefix_lengths(const ContinuedFraction& cf,
                                                        std::size_t max_n) {
  CharacteristicStream src{cf};
  auto window = src.prefix(max_n);
  PalOracle oracle(window);
  std::set<std::size_t> lengths;
  for (std::size_t len = 0; len <= max_n; ++len)
    if (oracle.is_pal(0, len)) lengths.insert(len);
  return lengths;
}

}  // namespace palinpair::sturmian
