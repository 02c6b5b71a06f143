// Scans a Sturmian characteristic word and prints, for each factor length,
// how many factors are palindrome pairs and whether that matches the
// predicted all-pair lengths.

#include <cstdio>

#include "palinpair/sturmian.hpp"

int main(int argc, char** argv) {
  using namespace palinpair;
  const char* cf_text = argc > 1 ? argv[1] : "1,(1)";
  auto cf = sturmian::ContinuedFraction::parse(cf_text);

  std::printf("slope %s, threshold %zu\n", cf.label().c_str(), sturmian::all_pp_threshold(cf));
  std::printf("palindromic prefix lengths up to 100:");
  for (std::size_t len : sturmian::palindromic_prefix_lengths(cf, 100)) std::printf(" %zu", len);
  std::printf("\n\n%6s %8s %10s %8s %10s\n", "n", "factors", "pp", "all_pp", "predicted");
  for (const auto& row : sturmian::verify_all_pp_lengths(cf, 100)) {
    std::printf("%6zu %8zu %10zu %8s %10s%s\n", row.n, row.factor_count, row.pp_count,
                row.all_pp ? "yes" : "no", row.predicted ? "yes" : "no",
                row.agreement ? "" : "   <-- disagreement");
  }
  return 0;
}
