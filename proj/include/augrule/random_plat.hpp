#pragma once

#include <cstdint>

#include "augrule/diagram.hpp"

namespace augrule {

// Uniform word over [1, 2n-2]^m, rejection-sampled until it closes up into
// a knot.  Deterministic in `seed`; throws GiveUp after `max_attempts`.
PlatDiagram random_plat(int cusps, int crossings, std::uint64_t seed, int max_attempts = 10'000);

}  // namespace augrule
