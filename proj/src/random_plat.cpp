#include "augrule/random_plat.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "augrule/errors.hpp"

namespace augrule {

PlatDiagram random_plat(int cusps, int crossings, std::uint64_t seed, int max_attempts) {
  if (cusps < 1) throw RangeError("cusp count must be positive");
  if (crossings < 0) throw RangeError("crossing count must be non-negative");
  if (cusps == 1 && crossings > 0) throw GiveUp("a one-cusp plat has no crossing positions");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(1, std::max(1, 2 * cusps - 2));
  std::vector<int> word(static_cast<std::size_t>(crossings));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (int& p : word) p = letter(rng);
    if (count_components(cusps, word) == 1) return PlatDiagram{cusps, word};
  }
  throw GiveUp("no knot among " + std::to_string(max_attempts) + " samples with " + std::to_string(cusps) +
               " cusps and " + std::to_string(crossings) + " crossings");
}

}  // namespace augrule
