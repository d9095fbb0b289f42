#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "augrule/diagram.hpp"
#include "augrule/halfpow.hpp"

namespace augrule {

struct AtlasExpectation {
  int rho = 0;
  std::vector<int> thetas;  // sorted
  std::size_t augmentations = 0;
  std::optional<std::int64_t> chi;  // absent for even rho
  std::optional<HalfPow> aug;
};

struct AtlasEntry {
  std::string name;
  PlatDiagram diagram;
  std::int64_t tb = 0;
  std::int64_t rotation = 0;
  std::string provenance;
  std::vector<AtlasExpectation> expected;
};

const std::vector<AtlasEntry>& atlas();
const AtlasEntry* find_atlas(std::string_view name);

}  // namespace augrule
