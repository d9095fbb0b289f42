#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "augrule/dga.hpp"
#include "augrule/halfpow.hpp"

namespace augrule {

// Generator -> {0,1}, indexed like Dga::generators.
struct Augmentation {
  std::vector<std::uint8_t> values;

  bool operator[](int generator) const { return values[static_cast<std::size_t>(generator)] != 0; }
  auto operator<=>(const Augmentation&) const = default;
};

struct AugmentOptions {
  // Refuse searches over more free bits than this.
  int max_eligible = 30;
};

// epsilon(word) over Z/2; the empty word evaluates to 1.
bool evaluate(const Augmentation& eps, const Word& w);
bool evaluate(const Augmentation& eps, const std::vector<Word>& sum);

bool is_augmentation(const Dga& g, const Augmentation& eps, int rho);

// All rho-graded augmentations in lexicographic order.
std::vector<Augmentation> enumerate_augmentations(const Dga& g, int rho, AugmentOptions options = {});

// (#augmentations) * 2^(-chi*/2).
HalfPow aug_number(const Dga& g, int rho, AugmentOptions options = {});

}  // namespace augrule
