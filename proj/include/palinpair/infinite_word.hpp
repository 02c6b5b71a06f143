#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "palinpair/word.hpp"

namespace palinpair {

/// Symbol budget for memory-heavy materializations. Defaults to 2^28 symbols;
/// override with the PALINPAIR_BUDGET_MB environment variable (1 MB = 2^20
/// symbols).
inline std::size_t budget_symbols() {
  static const std::size_t value = [] {
    if (const char* env = std::getenv("PALINPAIR_BUDGET_MB")) {
      char* end = nullptr;
      unsigned long long mb = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && mb > 0) return static_cast<std::size_t>(mb) << 20;
    }
    return std::size_t{1} << 28;
  }();
  return value;
}

/// A deterministic infinite symbol stream with on-demand prefix
/// materialization. Prefixes are stable: once materialized, symbols never
/// change. Single consumer; independently constructed sources over the same
/// parameters yield identical streams.
class InfiniteWordSource {
public:
  virtual ~InfiniteWordSource() = default;

  virtual std::string name() const = 0;
  virtual std::size_t alphabet_size() const = 0;

  /// Materializes at least `len` symbols and returns a view of the first
  /// `len`. The view is invalidated by the next prefix() call.
  std::span<const std::uint8_t> prefix(std::size_t len) {
    if (len > budget_symbols())
      throw std::length_error(name() + ": prefix of " + std::to_string(len) +
                              " symbols exceeds the memory budget");
    if (buf_.size() < len) {
      extend_to(len);
      if (buf_.size() < len)
        throw std::logic_error(name() + ": source failed to extend");
    }
    return {buf_.data(), len};
  }

  Word prefix_word(std::size_t len) {
    auto v = prefix(len);
    return Word(std::vector<std::uint8_t>(v.begin(), v.end()));
  }

  std::size_t materialized() const { return buf_.size(); }

protected:
  /// Grows buf_ to at least `len` symbols, or throws.
  virtual void extend_to(std::size_t len) = 0;

  std::vector<std::uint8_t> buf_;
};

/// w^omega, mostly for tests and degenerate-case reports.
class PeriodicSource final : public InfiniteWordSource {
public:
  explicit PeriodicSource(Word period) : period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("PeriodicSource: empty period");
  }
  std::string name() const override { return "periodic(" + period_.to_text() + ")"; }
  std::size_t alphabet_size() const override {
    std::uint8_t mx = 0;
    for (auto s : period_) mx = std::max(mx, s);
    return static_cast<std::size_t>(mx) + 1;
  }

private:
  void extend_to(std::size_t len) override {
    while (buf_.size() < len) buf_.push_back(period_[buf_.size() % period_.size()]);
  }
  Word period_;
};

/// How factor collection certifies that it has seen every factor of a given
/// length of an infinite word.
struct SaturationPolicy {
  enum class Mode {
    exact_complexity,   // grow until the count matches a known complexity
    doubling_fixpoint,  // grow until two consecutive doublings agree
    fixed_window,       // one window, never certified
  };

  Mode mode = Mode::doubling_fixpoint;
  std::function<std::size_t(std::size_t)> expected_count;  // exact_complexity
  std::size_t initial_window = 0;                          // 0: max(64, 16n)
  std::size_t max_doublings = 8;

  static SaturationPolicy exact(std::function<std::size_t(std::size_t)> hint) {
    SaturationPolicy p;
    p.mode = Mode::exact_complexity;
    p.expected_count = std::move(hint);
    return p;
  }

  /// Sturmian factor complexity is n+1, so exact counting is available.
  static SaturationPolicy sturmian() {
    return exact([](std::size_t n) { return n + 1; });
  }

  static SaturationPolicy doubling(std::size_t initial_window = 0,
                                   std::size_t max_doublings = 8) {
    SaturationPolicy p;
    p.mode = Mode::doubling_fixpoint;
    p.initial_window = initial_window;
    p.max_doublings = max_doublings;
    return p;
  }

  static SaturationPolicy fixed(std::size_t window) {
    SaturationPolicy p;
    p.mode = Mode::fixed_window;
    p.initial_window = window;
    return p;
  }

  std::size_t start_window(std::size_t n) const {
    if (initial_window > 0) return initial_window;
    return std::max<std::size_t>(64, 16 * n);
  }
};

/// Raised when a certifying policy runs out of budget before the factor set
/// stabilizes. Carries the last two counts observed.
class SaturationError : public std::runtime_error {
public:
  SaturationError(const std::string& what, std::size_t before, std::size_t after)
      : std::runtime_error(what), count_before(before), count_after(after) {}
  std::size_t count_before;
  std::size_t count_after;
};

namespace detail {

/// Distinct length-n factors of the window, as sorted start positions of
/// first occurrences.
inline std::vector<std::size_t> distinct_factor_positions(std::span<const std::uint8_t> window,
                                                          std::size_t n) {
  std::vector<std::size_t> pos;
  if (n > window.size()) return pos;
  if (n == 0) return {0};
  std::unordered_set<std::string_view> seen;
  seen.reserve(window.size() - n + 1);
  const char* base = reinterpret_cast<const char*>(window.data());
  for (std::size_t i = 0; i + n <= window.size(); ++i)
    if (seen.insert(std::string_view(base + i, n)).second) pos.push_back(i);
  return pos;
}

struct CollectedFactors {
  std::size_t n = 0;
  std::span<const std::uint8_t> window;  // valid until the source grows again
  std::vector<std::size_t> positions;    // first occurrences of distinct factors
  bool saturated = false;
  std::size_t count_before = 0;  // diagnostics for unsaturated results
  std::size_t count_after = 0;
};

/// Collection core shared by the throwing public entry point and the
/// partial-result profile path.
inline CollectedFactors collect_factor_positions(InfiniteWordSource& src, std::size_t n,
                                                 const SaturationPolicy& policy) {
  CollectedFactors out;
  out.n = n;
  if (n == 0) {
    out.window = src.prefix(0);
    out.positions = {0};
    out.saturated = true;  // the empty factor is the whole set
    return out;
  }

  auto measure = [&](std::size_t window_len) {
    out.window = src.prefix(window_len);
    out.positions = distinct_factor_positions(out.window, n);
  };

  std::size_t window = std::max(policy.start_window(n), n);
  switch (policy.mode) {
    case SaturationPolicy::Mode::fixed_window:
      measure(window);
      out.saturated = false;
      return out;

    case SaturationPolicy::Mode::exact_complexity: {
      const std::size_t expected = policy.expected_count(n);
      for (std::size_t round = 0; round <= policy.max_doublings; ++round, window *= 2) {
        measure(window);
        if (out.positions.size() == expected) {
          out.saturated = true;
          return out;
        }
        if (out.positions.size() > expected)
          throw std::logic_error(src.name() + ": found " +
                                 std::to_string(out.positions.size()) + " factors of length " +
                                 std::to_string(n) + " but the complexity hint says " +
                                 std::to_string(expected));
        out.count_before = out.count_after;
        out.count_after = out.positions.size();
      }
      return out;  // unsaturated
    }

    case SaturationPolicy::Mode::doubling_fixpoint: {
      measure(window);
      std::size_t prev = out.positions.size();
      for (std::size_t round = 0; round < policy.max_doublings; ++round) {
        window *= 2;
        measure(window);
        out.count_before = prev;
        out.count_after = out.positions.size();
        // factor sets grow monotonically with the window, so equal counts
        // mean equal sets
        if (out.positions.size() == prev) {
          out.saturated = true;
          return out;
        }
        prev = out.positions.size();
      }
      return out;  // unsaturated
    }
  }
  return out;
}

}  // namespace detail

/// Collects the certified set of length-n factors of an infinite word.
/// Certifying policies throw SaturationError when their budget runs out; the
/// fixed-window policy returns an uncertified set instead.
inline FactorSet collect_factors(InfiniteWordSource& src, std::size_t n,
                                 const SaturationPolicy& policy) {
  auto collected = detail::collect_factor_positions(src, n, policy);
  if (!collected.saturated && policy.mode != SaturationPolicy::Mode::fixed_window)
    throw SaturationError(src.name() + ": factor set of length " + std::to_string(n) +
                              " did not saturate (last counts " +
                              std::to_string(collected.count_before) + ", " +
                              std::to_string(collected.count_after) + ")",
                          collected.count_before, collected.count_after);
  FactorSet fs;
  fs.length = n;
  fs.saturated = collected.saturated;
  fs.factors.reserve(collected.positions.size());
  for (std::size_t p : collected.positions) {
    auto first = collected.window.begin() + static_cast<std::ptrdiff_t>(p);
    fs.factors.emplace_back(std::vector<std::uint8_t>(first, first + static_cast<std::ptrdiff_t>(n)));
  }
  std::sort(fs.factors.begin(), fs.factors.end());
  return fs;
}

}  // namespace palinpair
