#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "palinpair/complexity.hpp"
#include "palinpair/palfact.hpp"
#include "palinpair/streams.hpp"
#include "palinpair/word.hpp"

using namespace palinpair;
using namespace palinpair::streams;

TEST_CASE("morphism application") {
  Morphism mu = thue_morse_morphism();
  CHECK(mu.apply(Word::from_text("0")) == Word::from_text("01"));
  CHECK(mu.apply(Word::from_text("01")) == Word::from_text("0110"));
  CHECK(mu.apply(mu.apply(Word::from_text("0"))) == Word::from_text("0110"));

  Morphism identity(2, {Word{0}, Word{1}});
  CHECK(identity.apply(Word::from_text("0101")) == Word::from_text("0101"));

  CHECK_THROWS_AS(mu.apply(Word::from_text("012")), std::invalid_argument);
}

TEST_CASE("morphism parsing") {
  std::vector<std::string> lines{"# thue-morse", "0=01", "1=10"};
  Morphism mu = Morphism::parse(lines);
  CHECK(mu.alphabet == 2);
  CHECK(mu.apply(Word::from_text("0")) == Word::from_text("01"));

  std::vector<std::string> incomplete{"0=01"};
  CHECK_THROWS_AS(Morphism::parse(incomplete), std::invalid_argument);
  std::vector<std::string> dup{"0=01", "0=0", "1=1"};
  CHECK_THROWS_AS(Morphism::parse(dup), std::invalid_argument);
}

TEST_CASE("fixed point streams") {
  auto tm = thue_morse_stream();
  CHECK(tm->prefix_word(16) == Word::from_text("0110100110010110"));
  CHECK(tm->prefix_word(1) == Word::from_text("0"));

  Morphism mu = thue_morse_morphism();
  Word image{0};
  for (int k = 0; k < 5; ++k) image = mu.apply(image);
  auto tm2 = thue_morse_stream();
  CHECK(tm2->prefix_word(32) == image);

  auto trib = tribonacci_stream();
  CHECK(trib->prefix_word(7) == Word::from_text("0102010"));
  CHECK(trib->alphabet_size() == 3);

  // seed image must start with the seed and grow
  Morphism wrong_start(2, {Word{0, 1}, Word{0, 1}});
  CHECK_THROWS_AS(fixed_point_stream(wrong_start, 1), std::invalid_argument);
  Morphism shrinking(2, {Word{0}, Word{1}});
  CHECK_THROWS_AS(fixed_point_stream(shrinking, 0), std::invalid_argument);
}

TEST_CASE("thue-morse is overlap free in the sampled range") {
  auto tm = thue_morse_stream();
  auto w = tm->prefix(4096);
  for (std::size_t period = 1; period <= 15; ++period) {
    std::size_t span = 2 * period + 1;  // a x a x a with |ax| = period
    if (span > 32) break;
    for (std::size_t i = 0; i + span <= w.size(); ++i) {
      bool overlap = true;
      for (std::size_t j = i + period; j < i + span && overlap; ++j)
        overlap = (w[j] == w[j - period]);
      CHECK_FALSE(overlap);
    }
  }
}

TEST_CASE("thue-morse palindromic complexity closed form") {
  CHECK(tm_palindromic_complexity(0) == 1);
  CHECK(tm_palindromic_complexity(1) == 2);
  CHECK(tm_palindromic_complexity(4) == 2);
  CHECK(tm_palindromic_complexity(5) == 0);
  CHECK(tm_palindromic_complexity(6) == 4);
  CHECK(tm_palindromic_complexity(12) == 4);
  CHECK(tm_palindromic_complexity(14) == 2);
  CHECK(tm_palindromic_complexity(16) == 2);
  CHECK(tm_palindromic_complexity(18) == 4);
}

TEST_CASE("closed form matches brute force to length 256") {
  auto tm = thue_morse_stream();
  auto profile = complexity::profile(*tm, 0, 256, SaturationPolicy::doubling());
  for (const auto& row : profile.rows) {
    REQUIRE(row.saturated);
    CHECK(row.P == tm_palindromic_complexity(row.n));
  }
}

TEST_CASE("square conjugates are palindrome-pair factors") {
  auto words = tm_pp_square_conjugates(1);
  CHECK(words.size() >= 24);
  for (const Word& w : words) CHECK(w.size() == 12);

  Morphism mu = thue_morse_morphism();
  Word g{0, 1, 0};
  g = mu.apply(mu.apply(g));
  CHECK(g == reverse(g));  // mu^2(010) is a palindrome

  // all outputs really occur in the word
  auto tm = thue_morse_stream();
  auto fs = collect_factors(*tm, 12, SaturationPolicy::doubling());
  for (const Word& w : words) CHECK(fs.contains(w));

  CHECK_THROWS_AS(tm_pp_square_conjugates(0), std::invalid_argument);
}

TEST_CASE("shuffle levels unroll the definition") {
  auto one = shuffle_stream(ShuffleSpec::from_seeds({Word::from_text("1")}));
  CHECK(one->level(2) == Word::from_text("010"));

  auto two = shuffle_stream(ShuffleSpec::from_seeds({Word::from_text("11")}));
  CHECK(two->level(2) == Word::from_text("01010"));

  CHECK_THROWS_AS(ShuffleSpec::from_seeds({Word::from_text("10")}), std::invalid_argument);

  auto exhausted = shuffle_stream(ShuffleSpec::from_seeds({Word::from_text("1")}));
  CHECK_THROWS_AS(exhausted->prefix(100), std::out_of_range);
}

TEST_CASE("shuffle levels are palindromic prefixes of each other") {
  std::vector<ShuffleSpec> specs;
  specs.push_back(ShuffleSpec::alternating_runs());
  specs.push_back(ShuffleSpec::from_seeds({Word::from_text("1"), Word::from_text("00"),
                                           Word::from_text("0110"), Word::from_text("111")}));
  specs.push_back(ShuffleSpec::seeded_random(42));
  for (auto& spec : specs) {
    auto stream = shuffle_stream(spec);
    Word prev = stream->level(1);
    CHECK(prev == Word::from_text("0"));
    for (std::size_t i = 2; i <= 5; ++i) {
      Word cur = stream->level(i);
      CHECK(cur.slice(0, prev.size()) == prev);
      CHECK(cur == reverse(cur));
      std::size_t t = spec.seed(i - 1).size();
      CHECK(cur.size() == (t + 1) * prev.size() + t);
      prev = cur;
    }
  }
}

TEST_CASE("seeded random specs are reproducible and recorded") {
  auto a = ShuffleSpec::seeded_random(7);
  auto b = ShuffleSpec::seeded_random(7);
  auto c = ShuffleSpec::seeded_random(8);
  REQUIRE(a.random_seed().has_value());
  CHECK(a.random_seed() == 7);
  bool all_equal = true, any_diff = false;
  for (std::size_t i = 1; i <= 6; ++i) {
    all_equal = all_equal && (a.seed(i) == b.seed(i));
    any_diff = any_diff || (a.seed(i) != c.seed(i));
    CHECK(a.seed(i) == reverse(a.seed(i)));
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("factors one past a level length are palindrome pairs") {
  // two different seed choices
  std::vector<ShuffleSpec> specs;
  specs.push_back(ShuffleSpec::alternating_runs());
  specs.push_back(ShuffleSpec::from_seeds(
      {Word::from_text("00"), Word::from_text("010"), Word::from_text("1"),
       Word::from_text("11"), Word::from_text("101"), Word::from_text("0"),
       Word::from_text("111"), Word::from_text("00"), Word::from_text("010"),
       Word::from_text("1")}));
  for (auto& spec : specs) {
    auto stream = shuffle_stream(spec);
    for (std::size_t i = 1; i <= 3; ++i) {
      std::size_t n = stream->level_length(i) + 1;
      auto fs = collect_factors(*stream, n, SaturationPolicy::doubling());
      REQUIRE(fs.saturated);
      for (const Word& f : fs.factors) CHECK(is_palindrome_pair(f));
    }
  }
}

TEST_CASE("de bruijn words") {
  CHECK(de_bruijn(1) == Word::from_text("01"));
  CHECK(de_bruijn(2) == Word::from_text("00110"));
  CHECK_THROWS_AS(de_bruijn(0), std::invalid_argument);
  CHECK_THROWS_AS(de_bruijn(25), std::invalid_argument);
  for (unsigned k = 1; k <= 10; ++k) {
    Word b = de_bruijn(k);
    CHECK(b.size() == (std::size_t{1} << k) + k - 1);
    // every length-k word occurs exactly once
    auto fs = factors(b, k);
    CHECK(fs.size() == (std::size_t{1} << k));
    std::set<Word> seen;
    for (std::size_t i = 0; i + k <= b.size(); ++i) {
      Word f = b.slice(i, i + k);
      CHECK(seen.insert(f).second);
    }
  }
}

TEST_CASE("de bruijn shuffle spec") {
  ShuffleSpec level1 = de_bruijn_shuffle_spec(1);
  Word w1 = level1.seed(1);
  CHECK(w1.size() == 10);
  CHECK(w1 == reverse(w1));

  auto stream = shuffle_stream(de_bruijn_shuffle_spec(2));
  CHECK(stream->level_length(2) == 21);

  // Seed letters always sit between palindromic levels that start and end
  // with 0, so "11" never occurs; the de Bruijn content shows up one level
  // up: the length-(|p_1|+1)^2 = 4 factors already number 2^{|p_1|+1} = 4.
  auto fs2 = collect_factors(*stream, 2, SaturationPolicy::doubling());
  REQUIRE(fs2.saturated);
  CHECK(fs2.size() == 3);
  CHECK_FALSE(fs2.contains(Word::from_text("11")));
  auto fs4 = collect_factors(*stream, 4, SaturationPolicy::doubling());
  REQUIRE(fs4.saturated);
  CHECK(fs4.size() >= 4);

  CHECK_THROWS_AS(de_bruijn_shuffle_spec(3), std::length_error);
}
