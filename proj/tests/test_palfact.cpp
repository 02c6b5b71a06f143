#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "palinpair/bitword.hpp"
#include "palinpair/pal_oracle.hpp"
#include "palinpair/palfact.hpp"
#include "palinpair/word.hpp"

using namespace palinpair;

namespace {

bool naive_pal(const Word& w, std::size_t i, std::size_t j) {
  while (i + 1 < j) {
    if (w[i] != w[j - 1]) return false;
    ++i;
    --j;
  }
  return true;
}

Word random_word(std::mt19937& rng, std::size_t len, unsigned alphabet = 2) {
  std::vector<std::uint8_t> syms(len);
  for (auto& s : syms) s = static_cast<std::uint8_t>(rng() % alphabet);
  return Word(std::move(syms));
}

}  // namespace

TEST_CASE("oracle basics") {
  PalOracle oracle(Word::from_text("0110"));
  CHECK(oracle.is_pal(0, 4));
  CHECK_FALSE(oracle.is_pal(1, 4));
  CHECK(oracle.is_pal(1, 3));
  CHECK(oracle.is_pal(2, 2));  // empty factor
  CHECK(oracle.is_pal(3, 4));  // single letter
  PalOracle two(Word::from_text("01"));
  CHECK(two.is_pal(1, 1));
  CHECK_FALSE(two.is_pal(0, 2));
}

TEST_CASE("oracle agrees with the naive check on random words") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 80; ++trial) {
    Word w = random_word(rng, 1 + rng() % 40, trial % 2 ? 2 : 3);
    PalOracle oracle(w);
    for (std::size_t i = 0; i <= w.size(); ++i)
      for (std::size_t j = i; j <= w.size(); ++j)
        CHECK(oracle.is_pal(i, j) == naive_pal(w, i, j));
  }
}

TEST_CASE("radii backend matches the table backend") {
  // Hosts above the table limit switch to palindromic radii; splice a
  // palindrome-rich pattern into noise and compare every query on a slice.
  std::mt19937 rng(202);
  std::vector<std::uint8_t> syms(PalOracle::kTableLimit + 512);
  for (auto& s : syms) s = static_cast<std::uint8_t>(rng() % 2);
  for (std::size_t k = 0; k < 300; ++k) syms[3300 + k] = syms[3299 - k];
  Word big{std::vector<std::uint8_t>(syms)};
  PalOracle radii(big);  // above the limit: radii path
  // compare against naive on sampled ranges
  for (int trial = 0; trial < 4000; ++trial) {
    std::size_t i = rng() % big.size();
    std::size_t j = i + rng() % std::min<std::size_t>(big.size() - i + 1, 64);
    CHECK(radii.is_pal(i, j) == naive_pal(big, i, j));
  }
  // and exhaustively on a small window
  for (std::size_t i = 3400; i < 3500; ++i)
    for (std::size_t j = i; j < 3500; ++j)
      CHECK(radii.is_pal(i, j) == naive_pal(big, i, j));
}

TEST_CASE("palindromic length on the fixed examples") {
  CHECK(palindromic_length(Word()) == 0);
  CHECK(palindromic_length(Word::from_text("0")) == 1);
  CHECK(palindromic_length(Word::from_text("01")) == 2);
  CHECK(palindromic_length(Word::from_text("0110")) == 1);
  // a minimal non palindrome pair: length is at least 3
  CHECK(palindromic_length(Word::from_text("010011")) == 3);
}

TEST_CASE("dp equals the independent bfs oracle up to length 14") {
  for (unsigned n = 0; n <= 14; ++n)
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      Word w = Word::from_bits(bits, n);
      CHECK(palindromic_length(w) == bfs_palindromic_length(w));
    }
}

TEST_CASE("bfs oracle refuses long input") {
  CHECK_THROWS_AS(bfs_palindromic_length(Word::from_bits(0, 25)), std::invalid_argument);
}

TEST_CASE("factorization witness is valid and minimal") {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 120; ++trial) {
    Word w = random_word(rng, rng() % 20, trial % 3 ? 2 : 3);
    auto f = minimal_palindromic_factorization(w);
    CHECK(f.parts.size() == palindromic_length(w));
    Word rebuilt;
    for (const Word& p : f.parts) {
      CHECK(!p.empty());
      CHECK(p == reverse(p));
      rebuilt = rebuilt + p;
    }
    CHECK(rebuilt == w);
  }
}

TEST_CASE("palindromic length is reversal invariant") {
  for (unsigned n = 0; n <= 12; ++n)
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      Word w = Word::from_bits(bits, n);
      CHECK(palindromic_length(w) == palindromic_length(reverse(w)));
    }
  std::mt19937 rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_word(rng, 20 + rng() % 60, 2);
    CHECK(palindromic_length(w) == palindromic_length(reverse(w)));
  }
}

TEST_CASE("palindromic length is subadditive at random splits") {
  std::mt19937 rng(505);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = random_word(rng, 2 + rng() % 40, 2);
    std::size_t cut = rng() % (w.size() + 1);
    CHECK(palindromic_length(w) <=
          palindromic_length(w.slice(0, cut)) + palindromic_length(w.slice(cut, w.size())));
  }
}

TEST_CASE("palindrome pair detection and splits") {
  CHECK_FALSE(is_palindrome_pair(Word::from_text("001011")));
  CHECK(is_palindrome_pair(Word::from_text("01001")));
  CHECK(palindrome_pair_split(Word::from_text("0110")) == 0);
  CHECK_FALSE(palindrome_pair_split(Word::from_text("001011")).has_value());
  CHECK(palindrome_pair_split(Word::from_text("0010")) == 1);
}

TEST_CASE("pair detection, split presence and length<=2 agree up to length 14") {
  for (unsigned n = 0; n <= 14; ++n)
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      Word w = Word::from_bits(bits, n);
      bool pp = is_palindrome_pair(w);
      CHECK(pp == (palindromic_length(w) <= 2));
      CHECK(pp == palindrome_pair_split(w).has_value());
    }
}

TEST_CASE("every palindrome is a palindrome pair") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 60; ++trial) {
    Word half = random_word(rng, rng() % 12, 2);
    Word pal = half + reverse(half);
    CHECK(is_palindrome_pair(pal));
    CHECK(palindrome_pair_split(pal) == 0);
  }
}

TEST_CASE("bitword helpers agree with the word-level routines") {
  std::mt19937 rng(707);
  for (unsigned n = 0; n <= 14; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      std::uint32_t bits = rng() & detail::low_mask(n);
      Word w = Word::from_bits(bits, n);
      CHECK(detail::is_pal_bits(bits, n) == (w == reverse(w)));
      CHECK(detail::is_pp_bits(bits, n) == is_palindrome_pair(w));
      CHECK(detail::bits_from_word(w) == bits);
    }
}

TEST_CASE("bit reversal") {
  CHECK(detail::bit_reverse(0b001u, 3) == 0b100u);
  CHECK(detail::bit_reverse(0b1u, 1) == 0b1u);
  CHECK(detail::bit_reverse(0u, 0) == 0u);
  CHECK(detail::bit_reverse(0x00000001u, 32) == 0x80000000u);
}

TEST_CASE("pal bit table matches pairwise oracle queries") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 150; ++trial) {
    unsigned n = 1 + rng() % 20;
    std::uint32_t bits = rng() & detail::low_mask(n);
    Word w = Word::from_bits(bits, n);
    PalOracle oracle(w);
    detail::PalBitTable t;
    t.build(bits, n);
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned j = i; j <= n; ++j) {
        CHECK(t.pal(i, j) == oracle.is_pal(i, j));
        CHECK(t.pp(i, j) == is_palindrome_pair(oracle, i, j));
      }
  }
}
