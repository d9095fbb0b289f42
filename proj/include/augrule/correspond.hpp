#pragma once

// Augmentation -> ruling correspondence.
//
// The ruling is extended over the crossings from left to right.  At an
// eligible crossing q_j the current virtual augmentation eps_j decides:
// non-interlaced disks and eps_j(q_j) = 1 give a switch, non-interlaced and
// eps_j(q_j) = 0 a departure, interlaced disks a return.  When q_j is
// augmented and its configuration is not R1, eps_{j+1} is obtained from
// eps_j by flipping q_k (k > j, increasing) whenever an odd number of
// special disks end at q_k.  A special disk is bounded on the left by a
// vertical segment just right of q_j and on the right by the left quadrant
// of q_k, with convex corners only at crossings the partial virtual
// augmentation sends to 1.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "augrule/augment.hpp"
#include "augrule/dga.hpp"
#include "augrule/diagram.hpp"
#include "augrule/halfpow.hpp"
#include "augrule/ruling.hpp"

namespace augrule {

// Where the companions of the two crossing strands sit relative to them.
enum class CompanionLayout { Straddle, BothAbove, BothBelow };

CompanionLayout companion_layout(const PairingState& before, int top_row);

struct ConfigLabel {
  CrossingType type = CrossingType::Ineligible;
  int number = 0;  // 1..3; 0 for ineligible crossings

  friend bool operator==(const ConfigLabel&, const ConfigLabel&) = default;
};

// The nine configurations (S1..R3) by crossing type and companion layout.
ConfigLabel config_label(CrossingType type, CompanionLayout layout);
std::string to_string(const ConfigLabel& label);

enum class SegmentKind { CrossingStrands, CompanionStrands };

// Vertical segment on slice `slice` joining rows top_row < bottom_row.
struct Segment {
  int slice = 0;
  int top_row = 0;
  int bottom_row = 1;
};

// Parity of the special disks from `segment` to the left quadrant of
// crossing `target` (0-based), with corners allowed only at crossings that
// `partial` augments.
bool special_disk_parity(const PlatDiagram& d, const Segment& segment, int target, const Augmentation& partial);

struct ExtensionRecord {
  int crossing = 0;
  ConfigLabel label;
  std::vector<SegmentKind> passes;
  // Crossings flipped during each pass, in order.
  std::vector<std::vector<int>> flipped;
  // eps'_{j+1} between the two passes of S2/S3.
  std::optional<Augmentation> intermediate;
};

struct VirtualAugTrace {
  // eps_1 (the input) through eps_{m+1} (the final virtual augmentation).
  std::vector<Augmentation> virtuals;
  std::vector<ExtensionRecord> records;

  const Augmentation& final_virtual() const { return virtuals.back(); }
};

struct Correspondence {
  Ruling ruling;
  VirtualAugTrace trace;
};

// Thrown when the sweep leaves the space of valid rulings or of rho-graded
// virtual augmentations.
class CorrespondenceBreakdown : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Correspondence ruling_from_augmentation(const PlatDiagram& d, const MaslovData& m, const Dga& g,
                                        const Augmentation& eps, int rho);

struct Fiber {
  Ruling ruling;
  std::vector<Augmentation> augmentations;
  std::vector<Augmentation> finals;  // parallel to `augmentations`
};

// One fiber per rho-graded ruling (possibly empty), in canonical ruling order.
using FiberTable = std::vector<Fiber>;

FiberTable fibers(const PlatDiagram& d, const MaslovData& m, const Dga& g, int rho, AugmentOptions options = {});

struct Clause {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct CorrespondenceReport {
  int rho = 0;
  std::int64_t chi = 0;
  std::size_t augmentation_count = 0;
  FiberTable fibers;
  HalfPow aug;
  HalfPow theta_sum;
  std::vector<Clause> clauses;

  bool passed() const;
  const Clause* first_failure() const;
  // Throws ReportFailure naming the first failed clause.
  void require() const;
};

// Expected fiber size exponent (theta + chi*)/2.
std::int64_t expected_fiber_exponent(const Ruling& ruling, std::int64_t chi);

CorrespondenceReport verify_correspondence(const PlatDiagram& d, const MaslovData& m, const Dga& g, int rho,
                                           AugmentOptions options = {});
CorrespondenceReport verify_correspondence(const PlatDiagram& d, int rho, DiskOptions disk = {},
                                           AugmentOptions options = {});

}  // namespace augrule
