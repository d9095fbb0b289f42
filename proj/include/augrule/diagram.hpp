#pragma once

// Plat-position front diagrams.
//
// A plat with n cusps has 2n strand rows, numbered 0..2n-1 from the top
// internally (1..2n in every serialized form).  Left cusps join rows
// (2k, 2k+1), right cusps join the same pairs, and the word lists the
// crossings from left to right: a letter p (1-based, in [1, 2n-2]) is a
// crossing between rows p-1 and p.
//
// A "slice" is a generic vertical line.  Slice 0 lies just right of the
// left cusps and slice t lies just right of crossing t-1, so a plat with
// m crossings has slices 0..m.
//
// Strands are the arcs running from a left cusp to a right cusp; a strand
// is identified by the row it occupies at slice 0.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace augrule {

struct PlatDiagram {
  int cusps = 1;
  std::vector<int> word;

  int rows() const { return 2 * cusps; }
  int crossings() const { return static_cast<int>(word.size()); }
  // Upper row (0-based) of crossing j.
  int top_row(int j) const { return word[static_cast<std::size_t>(j)] - 1; }

  friend bool operator==(const PlatDiagram&, const PlatDiagram&) = default;
};

// Number of closed components of the closure.  Does not validate ranges.
int count_components(int cusps, std::span<const int> word);

// Validates ranges and the single-component condition.
PlatDiagram make_plat(int cusps, std::vector<int> word);

// Accepts `plat <n> : <p_1> ... <p_m>` or `{"cusps": n, "word": [...]}`.
PlatDiagram parse_plat(std::string_view text);

// `plat <n> : <p_1> ... <p_m>`.
std::string to_text(const PlatDiagram& d);
// `{"cusps":n,"word":[...]}`.
std::string to_json_text(const PlatDiagram& d);

// row_strands(d)[t][row] is the strand occupying `row` at slice t.
std::vector<std::vector<int>> row_strands(const PlatDiagram& d);

// Residue class modulo `modulus`; an ordinary integer when modulus == 0.
class Grading {
 public:
  Grading() = default;
  Grading(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  // Representative reduced modulo rho (rho must divide the modulus).  For
  // rho == 0 this is the value itself.
  std::int64_t reduce(int rho) const;
  bool divisible_by(int rho) const { return reduce(rho) == 0; }

  Grading operator+(const Grading& o) const;
  Grading operator-(const Grading& o) const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  std::int64_t value_ = 0;
  std::int64_t modulus_ = 0;
};

std::string to_string(const Grading& g);

enum class Orientation {
  // Arc leaving the top of left cusp 1 points rightward.
  Default,
  Reversed,
};

struct MaslovData {
  // Potential per strand; upper strand of every cusp exceeds the lower one
  // by exactly 1.  Normalized so strand 0 has value 0.
  std::vector<std::int64_t> potential;
  // +1 when the strand is traversed rightward, -1 leftward.
  std::vector<int> direction;
  // Total change of the potential along one traversal: -2 r(K).
  std::int64_t monodromy = 0;
  std::int64_t modulus = 0;  // 2|r(K)|
  std::int64_t rotation = 0;
  std::int64_t tb = 0;
  std::int64_t writhe = 0;
};

MaslovData maslov(const PlatDiagram& d, Orientation orientation = Orientation::Default);

// Maslov potential of the strand at `row` on slice `t`, as a residue.
Grading strand_index(const MaslovData& m, std::span<const int> strands_at_slice, int row);

// |q_j| = mu(upper-left strand) - mu(lower-left strand), mod 2|r|.
Grading crossing_grading(const PlatDiagram& d, const MaslovData& m, int j);
std::vector<Grading> crossing_gradings(const PlatDiagram& d, const MaslovData& m);

// Fixed-point-free involution on rows at a generic slice.
class PairingState {
 public:
  PairingState() = default;
  explicit PairingState(std::vector<int> partner);

  // (0,1)(2,3)...: the pairing at the cusps.
  static PairingState standard(int cusps);

  int rows() const { return static_cast<int>(partner_.size()); }
  int partner(int row) const { return partner_[static_cast<std::size_t>(row)]; }
  const std::vector<int>& partners() const { return partner_; }

  // Exchange which pairs rows `row` and `row + 1` belong to.
  void transpose(int row);

  // True if the pairs through rows x and y alternate top to bottom.
  bool interlaced(int x, int y) const;

  auto operator<=>(const PairingState&) const = default;

 private:
  std::vector<int> partner_;
};

std::string to_string(const PairingState& s);

// Pairing at each of the m+1 slices when the crossings in `switches`
// (0-based indices) keep the pairing and every other crossing transposes.
std::vector<PairingState> slice_pairing_sweep(const PlatDiagram& d, std::span<const int> switches);

}  // namespace augrule
