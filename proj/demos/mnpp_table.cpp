// Prints the minimal non-palindrome-pairs in the compact table form (words
// starting with 0, one of each reversal pair) and the counts by length.

#include <cstdio>

#include "palinpair/mnpp.hpp"

int main() {
  using namespace palinpair;
  for (std::size_t n = 6; n <= 10; ++n) {
    auto words = mnpp::generate_mnpp(n);
    std::printf("length %zu (%zu words, %zu shown):\n", n, words.size(),
                mnpp::table_representatives(words).size());
    for (const Word& w : mnpp::table_representatives(words))
      std::printf("  %s\n", w.to_text().c_str());
  }
  std::printf("\ncounts:\n");
  for (std::size_t i = 6; i <= 20; ++i)
    std::printf("  npp(%2zu) = %zu\n", i, mnpp::npp_count_formula(i));
  return 0;
}
