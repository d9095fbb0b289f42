#include "augrule/correspond.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "augrule/errors.hpp"

namespace augrule {

CompanionLayout companion_layout(const PairingState& before, int top_row) {
  int a = before.partner(top_row);
  int b = before.partner(top_row + 1);
  if (a < top_row && b < top_row) return CompanionLayout::BothAbove;
  if (a > top_row + 1 && b > top_row + 1) return CompanionLayout::BothBelow;
  return CompanionLayout::Straddle;
}

ConfigLabel config_label(CrossingType type, CompanionLayout layout) {
  if (type == CrossingType::Ineligible) return {};
  // Within each row of configurations: 1 = companions on opposite sides of
  // the crossing, 2 = both above, 3 = both below.  For D and R the straddling
  // case is forced by the crossing degrees (D1: m(a2)-m(b2)-1, R1:
  // m(b2)-m(a2)+1); the S row follows the same layout.
  static constexpr int kNumber[3] = {1, 2, 3};
  return {type, kNumber[static_cast<int>(layout)]};
}

std::string to_string(const ConfigLabel& label) {
  if (label.type == CrossingType::Ineligible) return ".";
  return std::string(1, static_cast<char>(label.type)) + std::to_string(label.number);
}

bool special_disk_parity(const PlatDiagram& d, const Segment& segment, int target, const Augmentation& partial) {
  if (target < segment.slice || target >= d.crossings()) return false;
  if (segment.top_row >= segment.bottom_row) return false;
  // Boundary rows (upper, lower) -> parity of disks reaching them.
  std::map<std::pair<int, int>, bool> states;
  states[{segment.top_row, segment.bottom_row}] = true;
  for (int i = segment.slice; i < target; ++i) {
    const int top = d.top_row(i);
    const bool corner_ok = partial[i];
    std::map<std::pair<int, int>, bool> next;
    auto add = [&](int u, int l) {
      if (u >= l) return;
      auto [it, inserted] = next.try_emplace({u, l}, true);
      if (!inserted) next.erase(it);
    };
    for (const auto& [rows, present] : states) {
      auto [u, l] = rows;
      if (u == top && l == top + 1) continue;
      std::vector<int> uppers;
      if (u == top) {
        uppers = {top + 1};
      } else if (u == top + 1) {
        uppers = {top};
        if (corner_ok) uppers.push_back(top + 1);
      } else {
        uppers = {u};
      }
      std::vector<int> lowers;
      if (l == top) {
        lowers = {top + 1};
        if (corner_ok) lowers.push_back(top);
      } else if (l == top + 1) {
        lowers = {top};
      } else {
        lowers = {l};
      }
      for (int nu : uppers)
        for (int nl : lowers) add(nu, nl);
    }
    states = std::move(next);
  }
  const int top = d.top_row(target);
  return states.count({top, top + 1}) != 0;
}

namespace {

std::vector<SegmentKind> passes_for(const ConfigLabel& label) {
  using enum SegmentKind;
  if (label.type == CrossingType::Switch) {
    switch (label.number) {
      case 1: return {CrossingStrands};
      case 2: return {CompanionStrands, CrossingStrands};
      case 3: return {CrossingStrands, CompanionStrands};
    }
  }
  if (label.type == CrossingType::Return && label.number != 1) return {CompanionStrands};
  return {};
}

Segment segment_for(SegmentKind kind, int slice, int top, const PairingState& before) {
  if (kind == SegmentKind::CrossingStrands) return {slice, top, top + 1};
  const int a = before.partner(top);
  const int b = before.partner(top + 1);
  return {slice, std::min(a, b), std::max(a, b)};
}

}  // namespace

Correspondence ruling_from_augmentation(const PlatDiagram& d, const MaslovData& m, const Dga& g,
                                        const Augmentation& eps, int rho) {
  check_normalizable_rho(m.modulus, rho);
  if (!is_augmentation(g, eps, rho)) throw NotAnAugmentation("input is not a rho-graded augmentation");

  auto gradings = crossing_gradings(d, m);
  Correspondence out;
  out.trace.virtuals.push_back(eps);
  Augmentation current = eps;
  PairingState state = PairingState::standard(d.cusps);
  std::vector<int> switches;

  for (int j = 0; j < d.crossings(); ++j) {
    const int top = d.top_row(j);
    if (state.partner(top) == top + 1)
      throw CorrespondenceBreakdown("q" + std::to_string(j + 1) + " joins paired strands");
    const bool eligible = gradings[static_cast<std::size_t>(j)].divisible_by(rho);
    const bool augmented = current[j];
    if (augmented && !eligible)
      throw CorrespondenceBreakdown("virtual augmentation sends ineligible q" + std::to_string(j + 1) + " to 1");

    CrossingType type = CrossingType::Ineligible;
    if (eligible) {
      if (state.interlaced(top, top + 1))
        type = CrossingType::Return;
      else
        type = augmented ? CrossingType::Switch : CrossingType::Departure;
    }

    ExtensionRecord record;
    record.crossing = j;
    record.label = config_label(type, companion_layout(state, top));
    const PairingState before = state;
    if (type == CrossingType::Switch)
      switches.push_back(j);
    else
      state.transpose(top);

    if (augmented) record.passes = passes_for(record.label);
    for (std::size_t pass = 0; pass < record.passes.size(); ++pass) {
      Segment segment = segment_for(record.passes[pass], j + 1, top, before);
      std::vector<int> flipped;
      for (int k = j + 1; k < d.crossings(); ++k) {
        if (special_disk_parity(d, segment, k, current)) {
          current.values[static_cast<std::size_t>(k)] ^= 1;
          flipped.push_back(k);
        }
      }
      record.flipped.push_back(std::move(flipped));
      if (pass + 1 < record.passes.size()) record.intermediate = current;
    }
    out.trace.records.push_back(std::move(record));
    out.trace.virtuals.push_back(current);
  }

  try {
    out.ruling = make_ruling(d, m, rho, switches);
  } catch (const std::invalid_argument& e) {
    throw CorrespondenceBreakdown(std::string("sweep did not produce a ruling: ") + e.what());
  }
  return out;
}

FiberTable fibers(const PlatDiagram& d, const MaslovData& m, const Dga& g, int rho, AugmentOptions options) {
  check_normalizable_rho(m.modulus, rho);
  FiberTable table;
  for (Ruling& r : enumerate_rulings(d, m, rho)) table.push_back(Fiber{std::move(r), {}, {}});
  for (const Augmentation& eps : enumerate_augmentations(g, rho, options)) {
    Correspondence c = ruling_from_augmentation(d, m, g, eps, rho);
    auto it = std::lower_bound(table.begin(), table.end(), c.ruling,
                               [](const Fiber& f, const Ruling& r) { return f.ruling < r; });
    if (it == table.end() || !(it->ruling == c.ruling))
      throw CorrespondenceBreakdown("augmentation mapped to a ruling missing from the enumeration");
    it->augmentations.push_back(eps);
    it->finals.push_back(c.trace.final_virtual());
  }
  return table;
}

bool CorrespondenceReport::passed() const { return first_failure() == nullptr; }

const Clause* CorrespondenceReport::first_failure() const {
  for (const Clause& c : clauses)
    if (!c.passed) return &c;
  return nullptr;
}

void CorrespondenceReport::require() const {
  if (const Clause* c = first_failure()) throw ReportFailure(c->name + ": " + c->detail);
}

std::int64_t expected_fiber_exponent(const Ruling& ruling, std::int64_t chi) { return (ruling.theta + chi) / 2; }

namespace {

std::string ruling_tag(const Ruling& r) { return r.pattern().empty() ? "(empty)" : r.pattern(); }

bool is_power_of_two(std::size_t n, std::int64_t exponent) {
  return exponent >= 0 && exponent < 63 && n == (std::size_t{1} << exponent);
}

}  // namespace

CorrespondenceReport verify_correspondence(const PlatDiagram& d, const MaslovData& m, const Dga& g, int rho,
                                           AugmentOptions options) {
  CorrespondenceReport report;
  report.rho = rho;
  report.chi = chi_star(g, rho);
  auto augs = enumerate_augmentations(g, rho, options);
  report.augmentation_count = augs.size();

  Clause totality{"totality", true, ""};
  try {
    report.fibers = fibers(d, m, g, rho, options);
  } catch (const CorrespondenceBreakdown& e) {
    totality = {"totality", false, e.what()};
  }
  report.clauses.push_back(totality);
  report.aug = aug_number(g, rho, options);
  for (const Fiber& f : report.fibers) report.theta_sum += HalfPow::power(f.ruling.theta);
  if (!totality.passed) return report;

  Clause partition{"fiber_partition", true, ""};
  std::size_t covered = 0;
  for (const Fiber& f : report.fibers) covered += f.augmentations.size();
  if (covered != augs.size())
    partition = {"fiber_partition", false,
                 std::to_string(covered) + " of " + std::to_string(augs.size()) + " augmentations placed"};
  report.clauses.push_back(partition);

  Clause sized{"fiber_size", true, ""};
  Clause returns{"returns_fiber_size", true, ""};
  Clause support{"final_support", true, ""};
  for (const Fiber& f : report.fibers) {
    const Ruling& r = f.ruling;
    if ((r.theta + report.chi) % 2 != 0) {
      sized = {"fiber_size", false, ruling_tag(r) + ": theta + chi* is odd"};
    } else if (sized.passed && !is_power_of_two(f.augmentations.size(), expected_fiber_exponent(r, report.chi))) {
      sized = {"fiber_size", false,
                 ruling_tag(r) + ": fiber " + std::to_string(f.augmentations.size()) + " != 2^" +
                     std::to_string(expected_fiber_exponent(r, report.chi))};
    }
    std::int64_t returns_exponent = r.r + (rho == 1 ? d.cusps : 0);
    if (returns.passed && !is_power_of_two(f.augmentations.size(), returns_exponent))
      returns = {"returns_fiber_size", false,
               ruling_tag(r) + ": fiber " + std::to_string(f.augmentations.size()) + " != 2^" +
                   std::to_string(returns_exponent)};
    for (const Augmentation& fin : f.finals) {
      for (int j = 0; j < d.crossings() && support.passed; ++j) {
        CrossingType t = r.types[static_cast<std::size_t>(j)];
        bool allowed = t == CrossingType::Switch || t == CrossingType::Return;
        bool required = t == CrossingType::Switch;
        if ((fin[j] && !allowed) || (!fin[j] && required))
          support = {"final_support", false,
                     ruling_tag(r) + ": final virtual augmentation wrong at q" + std::to_string(j + 1)};
      }
    }
  }
  report.clauses.push_back(sized);
  report.clauses.push_back(returns);

  Clause sum{"aug_equals_theta_sum", report.aug == report.theta_sum, ""};
  if (!sum.passed) sum.detail = to_string(report.aug) + " != " + to_string(report.theta_sum);
  report.clauses.push_back(sum);
  report.clauses.push_back(support);

  Clause injective{"final_injective", true, ""};
  std::set<Augmentation> finals;
  for (const Fiber& f : report.fibers)
    for (const Augmentation& fin : f.finals)
      if (!finals.insert(fin).second) injective = {"final_injective", false, "two augmentations share a final"};
  report.clauses.push_back(injective);
  return report;
}

CorrespondenceReport verify_correspondence(const PlatDiagram& d, int rho, DiskOptions disk, AugmentOptions options) {
  MaslovData m = maslov(d);
  Dga g = build_dga(d, m, disk);
  return verify_correspondence(d, m, g, rho, options);
}

}  // namespace augrule
