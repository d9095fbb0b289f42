#include "augrule/atlas.hpp"

#include <algorithm>

namespace augrule {

namespace {

std::vector<AtlasEntry> build_atlas() {
  std::vector<AtlasEntry> entries;

  entries.push_back({"unknot", {1, {}}, -1, 0, "standard flying-saucer unknot",
                     {{0, {1}, 1, -1, HalfPow(1, 1)}, {1, {1}, 2, 1, HalfPow(1, 1)}}});

  entries.push_back({"unknot_two_cusp", {2, {2}}, -1, 0,
                     "unknot drawn with two cusp pairs and one crossing (Legendrian isotopic to the standard unknot)",
                     {{0, {1}, 1, -1, HalfPow(1, 1)}, {1, {1}, 4, 3, HalfPow(1, 1)}}});

  entries.push_back({"unknot_stabilized", {2, {1, 2}}, -2, -1,
                     "once-stabilized unknot; the crossing between companion strands has d q1 = 1",
                     {{1, {}, 0, 4, HalfPow::zero()}}});

  entries.push_back({"trefoil", {2, {2, 2, 2}}, 1, 0, "maximal-tb right-handed trefoil, three middle crossings",
                     {{0, {-1, 1, 1}, 5, 1, HalfPow(5, -1)}, {1, {-1, 1, 1}, 20, 5, HalfPow(5, -1)}}});

  // Exhaustive search over 3-cusp plats with 8 crossings, tb = 1, r = 0 and
  // the Jones polynomial of 5_2 finds exactly two values of Aug_0; these are
  // the lexicographically smallest words realizing each.
  entries.push_back({"chekanov_5_2_a", {3, {2, 1, 4, 3, 3, 2, 4, 4}}, 1, 0,
                     "Legendrian 5_2 with tb=1, r=0; smallest 3-cusp word with Aug_0 = 3*2^(-1/2)",
                     {{0, {-1, 1}, 6, 3, HalfPow(3, -1)}, {1, {-1, 1}, 96, 11, HalfPow(3, -1)}}});

  entries.push_back({"chekanov_5_2_b", {3, {2, 2, 1, 3, 2, 2, 2, 4}}, 1, 0,
                     "Legendrian 5_2 with tb=1, r=0; smallest 3-cusp word with Aug_0 = 2^(1/2)",
                     {{0, {1}, 1, -1, HalfPow(1, 1)}, {1, {-1, 1}, 96, 11, HalfPow(3, -1)}}});

  return entries;
}

}  // namespace

const std::vector<AtlasEntry>& atlas() {
  static const std::vector<AtlasEntry> entries = build_atlas();
  return entries;
}

const AtlasEntry* find_atlas(std::string_view name) {
  const auto& all = atlas();
  auto it = std::find_if(all.begin(), all.end(), [&](const AtlasEntry& e) { return e.name == name; });
  return it == all.end() ? nullptr : &*it;
}

}  // namespace augrule
