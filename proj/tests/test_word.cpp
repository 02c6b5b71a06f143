#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "palinpair/infinite_word.hpp"
#include "palinpair/word.hpp"

using namespace palinpair;

namespace {

Word random_word(std::mt19937& rng, std::size_t len, unsigned alphabet = 2) {
  std::vector<std::uint8_t> syms(len);
  for (auto& s : syms) s = static_cast<std::uint8_t>(rng() % alphabet);
  return Word(std::move(syms));
}

}  // namespace

TEST_CASE("word text round trip") {
  CHECK(Word::from_text("0100").to_text() == "0100");
  CHECK(Word::from_text("").empty());
  CHECK(Word::from_text("a1f").symbols() == std::vector<std::uint8_t>{10, 1, 15});
  CHECK_THROWS_AS(Word::from_text("0x1"), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_text("2 "), std::invalid_argument);
}

TEST_CASE("factors of short words") {
  auto fs = factors(Word::from_text("0100"), 2);
  REQUIRE(fs.saturated);
  REQUIRE(fs.size() == 3);
  CHECK(fs.contains(Word::from_text("01")));
  CHECK(fs.contains(Word::from_text("10")));
  CHECK(fs.contains(Word::from_text("00")));

  auto whole = factors(Word::from_text("000"), 3);
  CHECK(whole.size() == 1);
  CHECK(whole.contains(Word::from_text("000")));

  auto empty_factor = factors(Word::from_text("0100"), 0);
  CHECK(empty_factor.size() == 1);
  CHECK(empty_factor.contains(Word()));

  auto too_long = factors(Word::from_text("01"), 5);
  CHECK(too_long.size() == 0);
  CHECK(too_long.saturated);
}

TEST_CASE("factor counts never exceed the window bound") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_word(rng, 1 + rng() % 30);
    for (std::size_t k = 0; k <= w.size(); ++k)
      CHECK(factors(w, k).size() <= w.size() - k + 1);
    CHECK(factors(w, w.size()).factors == std::vector<Word>{w});
  }
}

TEST_CASE("conjugates") {
  auto c = conjugates(Word::from_text("011"));
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Word::from_text("011"));
  CHECK(c[1] == Word::from_text("110"));
  CHECK(c[2] == Word::from_text("101"));

  auto periodic = conjugates(Word::from_text("00"));
  REQUIRE(periodic.size() == 2);
  CHECK(periodic[0] == periodic[1]);

  auto trivial = conjugates(Word());
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].empty());
}

TEST_CASE("conjugates preserve length and letter multiset") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Word w = random_word(rng, 1 + rng() % 16, 3);
    auto ones = [](const Word& x) {
      std::size_t total = 0;
      for (auto s : x) total += s;
      return total;
    };
    for (const Word& c : conjugates(w)) {
      CHECK(c.size() == w.size());
      CHECK(ones(c) == ones(w));
    }
  }
}

TEST_CASE("reverse is an involution") {
  CHECK(reverse(Word::from_text("001")) == Word::from_text("100"));
  CHECK(reverse(Word::from_text("010")) == Word::from_text("010"));
  CHECK(reverse(Word()).empty());
  for (std::uint32_t bits = 0; bits < (1u << 10); ++bits) {
    Word w = Word::from_bits(bits, 10);
    CHECK(reverse(reverse(w)) == w);
  }
}

TEST_CASE("blocks decomposition") {
  auto runs = blocks(Word::from_text("001011"));
  REQUIRE(runs.size() == 4);
  CHECK(runs[0].symbol == 0);
  CHECK(runs[0].length == 2);
  CHECK(runs[1].length == 1);
  CHECK(runs[2].length == 1);
  CHECK(runs[3].length == 2);
  CHECK(runs[0].is_maximum);
  CHECK(runs[3].is_maximum);
  CHECK_FALSE(runs[1].is_maximum);
  for (const auto& r : runs) CHECK_FALSE(r.is_internal == (r.position == 0 || r.position == 4));

  auto mid = blocks(Word::from_text("0110"));
  REQUIRE(mid.size() == 3);
  CHECK(mid[1].is_internal);
  CHECK(mid[1].is_maximum);

  auto single = blocks(Word::from_text("1"));
  REQUIRE(single.size() == 1);
  CHECK_FALSE(single[0].is_internal);
  CHECK(single[0].is_maximum);
}

TEST_CASE("blocks reconstruct the word") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    Word w = random_word(rng, 1 + rng() % 24);
    auto runs = blocks(w);
    std::vector<std::uint8_t> rebuilt;
    std::size_t changes = 0;
    for (std::size_t i = 1; i < w.size(); ++i) changes += (w[i] != w[i - 1]);
    CHECK(runs.size() == changes + 1);
    for (const auto& r : runs) rebuilt.insert(rebuilt.end(), r.length, r.symbol);
    CHECK(Word(std::move(rebuilt)) == w);
  }
}

TEST_CASE("balance violations") {
  std::vector<FactorSet> sets;
  sets.push_back(factors(Word::from_text("000111"), 3));
  auto hit = balanced_violation(sets);
  REQUIRE(hit.has_value());
  CHECK(hit->first == Word::from_text("000"));
  CHECK(hit->second == Word::from_text("111"));

  std::vector<FactorSet> balanced;
  balanced.push_back(factors(Word::from_text("010010"), 2));
  CHECK_FALSE(balanced_violation(balanced).has_value());

  std::vector<FactorSet> ternary;
  ternary.push_back(factors(Word::from_text("012"), 1));
  CHECK_THROWS_AS(balanced_violation(ternary), std::invalid_argument);
}

TEST_CASE("left special factors") {
  // host word 00100110: length-1 and length-2 factor sets by hand
  Word host = Word::from_text("00100110");
  auto fs1 = factors(host, 1);
  auto fs2 = factors(host, 2);
  auto specials = left_special_factors(fs1, fs2);
  // both 00 and 10 occur, and both 01 and 11 occur
  REQUIRE(specials.size() == 2);
  CHECK(specials[0] == Word::from_text("0"));
  CHECK(specials[1] == Word::from_text("1"));

  FactorSet unsat = fs1;
  unsat.saturated = false;
  CHECK_THROWS_AS(left_special_factors(unsat, fs2), std::invalid_argument);

  // single factor per length: no left specials
  auto pfs1 = factors(Word::from_text("0000"), 1);
  auto pfs2 = factors(Word::from_text("0000"), 2);
  CHECK(left_special_factors(pfs1, pfs2).empty());
}

TEST_CASE("word line parsing skips blanks and comments") {
  std::istringstream in("# header\n0100\n\n1a\n");
  auto words = parse_word_lines(in);
  REQUIRE(words.size() == 2);
  CHECK(words[0] == Word::from_text("0100"));
  CHECK(words[1] == Word::from_text("1a"));
}

TEST_CASE("periodic source materializes prefixes") {
  PeriodicSource src(Word::from_text("01"));
  CHECK(src.prefix_word(5) == Word::from_text("01010"));
  CHECK(src.prefix_word(2) == Word::from_text("01"));
  CHECK(src.alphabet_size() == 2);
}

TEST_CASE("collect_factors saturates on periodic sources") {
  PeriodicSource src(Word::from_text("01"));
  auto fs = collect_factors(src, 3, SaturationPolicy::doubling());
  REQUIRE(fs.saturated);
  CHECK(fs.size() == 2);
  CHECK(fs.contains(Word::from_text("010")));
  CHECK(fs.contains(Word::from_text("101")));

  auto empty = collect_factors(src, 0, SaturationPolicy::doubling());
  CHECK(empty.size() == 1);
  CHECK(empty.saturated);
}

TEST_CASE("collect_factors with a wrong exact hint fails loudly") {
  PeriodicSource src(Word::from_text("01"));
  auto never_reached = SaturationPolicy::exact([](std::size_t) { return 99; });
  CHECK_THROWS_AS(collect_factors(src, 2, never_reached), SaturationError);
  auto too_low = SaturationPolicy::exact([](std::size_t) { return 1; });
  CHECK_THROWS_AS(collect_factors(src, 2, too_low), std::logic_error);
}

TEST_CASE("fixed window policy never certifies") {
  PeriodicSource src(Word::from_text("01"));
  auto fs = collect_factors(src, 2, SaturationPolicy::fixed(64));
  CHECK_FALSE(fs.saturated);
  CHECK(fs.size() == 2);
}
