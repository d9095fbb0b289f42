#pragma once

// Property checks tying the DGA, augmentation, ruling and correspondence
// modules together, for one diagram or a seeded batch of random ones.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "augrule/augment.hpp"
#include "augrule/correspond.hpp"
#include "augrule/dga.hpp"
#include "augrule/diagram.hpp"

namespace augrule {

inline constexpr const char* kToolVersion = "0.1.0";

struct VerifyOptions {
  DiskOptions disk;
  AugmentOptions augment;
};

struct Check {
  std::string name;
  std::optional<int> rho;  // absent for rho-independent checks
  bool passed = true;
  std::string detail;
};

struct RhoSummary {
  int rho = 0;
  std::size_t rulings = 0;
  std::size_t augmentations = 0;
  std::vector<int> thetas;
  std::optional<std::int64_t> chi;
  std::optional<HalfPow> aug;
  std::optional<HalfPow> theta_sum;
};

struct DiagramReport {
  PlatDiagram diagram;
  std::int64_t tb = 0;
  std::int64_t rotation = 0;
  std::vector<int> skipped_rhos;  // requested but not dividing 2r
  std::vector<RhoSummary> summaries;
  std::vector<Check> checks;

  bool passed() const;
  const Check* first_failure() const;
};

// Runs every check for each requested rho that divides 2r(K).  Throws
// ResourceLimit when a budget is exhausted.
DiagramReport verify_diagram(const PlatDiagram& d, std::span<const int> rhos, const VerifyOptions& options = {});

struct SweepOptions {
  int count = 200;
  int max_cusps = 4;
  int min_crossings = 0;
  int max_crossings = 12;
  std::uint64_t seed = 1;
  std::vector<int> rhos = {0, 1};
  int threads = 0;  // 0: one per hardware thread
  VerifyOptions verify;
};

struct SweepFailure {
  std::size_t index = 0;
  PlatDiagram diagram;
  PlatDiagram shrunk;  // smallest knot found that still fails the same check
  Check check;
};

struct SweepReport {
  SweepOptions options;
  std::size_t diagrams = 0;
  std::size_t checks_run = 0;
  std::size_t checks_passed = 0;
  std::vector<SweepFailure> failures;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

// The diagram drawn for position `index` of a sweep.
PlatDiagram sweep_diagram(const SweepOptions& options, std::size_t index);

SweepReport sweep_verify(const SweepOptions& options);

}  // namespace augrule
