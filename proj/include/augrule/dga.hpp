#pragma once

// Chekanov DGA of a plat front over Z/2.
//
// The differential is read off the Lagrangian resolution of the front.
// In plat position every disk counted by the resolution is an embedded
// region of the front bounded by two x-monotone paths that start at the
// two branches of one left cusp and run rightward to the positive corner,
// the upper path strictly above the lower one throughout.  The positive
// corner is either a crossing whose left quadrant the disk fills, or a
// right cusp.  Negative corners are convex: the upper path may keep its
// row through a crossing when it arrives on the lower-left strand (the
// disk fills the bottom quadrant), the lower path when it arrives on the
// upper-left strand (the disk fills the top quadrant).  Each right cusp
// also bounds the small loop of the resolution, which contributes the
// constant word.
//
// A disk's word lists its negative corners counterclockwise from the
// positive corner: upper-path corners right to left, then lower-path
// corners left to right.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "augrule/diagram.hpp"

namespace augrule {

enum class GeneratorKind { Crossing, RightCusp, Stabilization };

struct Generator {
  GeneratorKind kind = GeneratorKind::Crossing;
  int index = 0;  // 0-based position among generators of its kind
  Grading grading;
  std::string name;  // "q1", "c1", ...
};

// Noncommutative monomial as generator indices; empty = the unit.
using Word = std::vector<int>;

struct Dga {
  std::vector<Generator> generators;
  // differential[g] is the Z/2 sum of the listed (distinct, sorted) words.
  std::vector<std::vector<Word>> differential;
  std::int64_t modulus = 0;

  int size() const { return static_cast<int>(generators.size()); }
  Grading word_grading(const Word& w) const;
};

struct DiskOptions {
  // Maximum number of enumeration states before ResourceLimit.
  std::size_t budget = 10'000'000;
};

// Generators are crossings q1..qm followed by right cusps c1..cn.
Dga build_dga(const PlatDiagram& d, const MaslovData& m, DiskOptions options = {});

// Throws RhoIncompatible unless rho divides the grading modulus.
void check_rho(std::int64_t modulus, int rho);
// Additionally rejects even nonzero rho with EvenRhoUnsupported.
void check_normalizable_rho(std::int64_t modulus, int rho);

// Counts of generators per grading class mod rho.
std::map<std::int64_t, int> degree_distribution(const Dga& g, int rho);

// Shifted Euler characteristic; rho must be 0 or odd.
std::int64_t chi_star(const Dga& g, int rho);

// d(d(x)) == 0 for every generator, expanding d as a derivation mod 2.
bool verify_d_squared(const Dga& g);

// d applied to a word as a derivation, with Z/2 cancellation.
std::vector<Word> differential_of_word(const Dga& g, const Word& w);

// Adds generators a (degree i-1) and b (degree i) with d b = a, d a = 0.
Dga stabilize(const Dga& g, std::int64_t degree);

}  // namespace augrule
