#pragma once

// JSON views of the library's values.  Crossings are named q1..qm and
// right cusps c1..cn throughout; switch lists use the same 1-based numbers.

#include "json.hpp"

#include "augrule/augment.hpp"
#include "augrule/correspond.hpp"
#include "augrule/dga.hpp"
#include "augrule/diagram.hpp"
#include "augrule/halfpow.hpp"
#include "augrule/ruling.hpp"
#include "augrule/verify.hpp"

namespace augrule {

using Json = nlohmann::ordered_json;

Json to_json(const PlatDiagram& d);
Json to_json(const HalfPow& h);
Json to_json(const LaurentPolynomial& p);
Json to_json(const Dga& g);
Json to_json(const Dga& g, const Augmentation& eps);
// Classification omits crossings whose degree rho does not divide.
Json to_json(const Ruling& r);
Json to_json(const Dga& g, const FiberTable& table, std::int64_t chi);
Json to_json(const Dga& g, const Correspondence& c);
Json to_json(const CorrespondenceReport& report, const Dga& g);
Json to_json(const Check& c);
Json to_json(const DiagramReport& report);
Json to_json(const SweepReport& report);

// Diagram, tb, rotation, writhe and the Maslov potential per strand.
Json info_json(const PlatDiagram& d, const MaslovData& m);

}  // namespace augrule
