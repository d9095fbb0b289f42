#include "augrule/dga.hpp"

#include <algorithm>
#include <compare>

#include "augrule/errors.hpp"

namespace augrule {

namespace {

// A partially built disk: the boundary rows at the current slice and the
// corners collected so far on each path.
struct DiskFront {
  int upper;
  int lower;
  Word upper_corners;
  Word lower_corners;

  auto operator<=>(const DiskFront&) const = default;
};

void toggle(std::map<Word, bool>& sum, Word w) {
  auto [it, inserted] = sum.try_emplace(std::move(w), true);
  if (!inserted) sum.erase(it);
}

void toggle(std::map<DiskFront, bool>& states, DiskFront s) {
  auto [it, inserted] = states.try_emplace(std::move(s), true);
  if (!inserted) states.erase(it);
}

std::vector<Word> collect(const std::map<Word, bool>& sum) {
  std::vector<Word> out;
  out.reserve(sum.size());
  for (const auto& [w, odd] : sum)
    if (odd) out.push_back(w);
  return out;
}

Word disk_word(const DiskFront& s) {
  Word w(s.upper_corners.rbegin(), s.upper_corners.rend());
  w.insert(w.end(), s.lower_corners.begin(), s.lower_corners.end());
  return w;
}

bool odd(std::int64_t k) { return k % 2 != 0; }

}  // namespace

Grading Dga::word_grading(const Word& w) const {
  Grading total(0, modulus);
  for (int x : w) total = total + generators[static_cast<std::size_t>(x)].grading;
  return total;
}

void check_rho(std::int64_t modulus, int rho) {
  if (rho < 0) throw RhoIncompatible("rho must be non-negative");
  if (rho == 0) {
    if (modulus != 0) throw RhoIncompatible("rho = 0 needs rotation number 0");
    return;
  }
  if (modulus % rho != 0)
    throw RhoIncompatible("rho = " + std::to_string(rho) + " does not divide 2r = " +
                          std::to_string(modulus));
}

void check_normalizable_rho(std::int64_t modulus, int rho) {
  check_rho(modulus, rho);
  if (rho != 0 && rho % 2 == 0)
    throw EvenRhoUnsupported("no normalized count exists for even rho = " + std::to_string(rho));
}

Dga build_dga(const PlatDiagram& d, const MaslovData& m, DiskOptions options) {
  const int crossings = d.crossings();
  Dga g;
  g.modulus = m.modulus;
  auto gradings = crossing_gradings(d, m);
  for (int j = 0; j < crossings; ++j)
    g.generators.push_back({GeneratorKind::Crossing, j, gradings[j], "q" + std::to_string(j + 1)});
  for (int k = 0; k < d.cusps; ++k)
    g.generators.push_back({GeneratorKind::RightCusp, k, Grading(1, m.modulus), "c" + std::to_string(k + 1)});

  std::vector<std::map<Word, bool>> sums(g.generators.size());
  std::size_t work = 0;
  auto charge = [&] {
    if (++work > options.budget)
      throw ResourceLimit("disk enumeration exceeded budget of " + std::to_string(options.budget) + " states");
  };

  std::map<DiskFront, bool> states;
  for (int k = 0; k < d.cusps; ++k) {
    charge();
    toggle(states, DiskFront{2 * k, 2 * k + 1, {}, {}});
  }

  for (int j = 0; j < crossings; ++j) {
    const int top = d.top_row(j);
    std::map<DiskFront, bool> next;
    for (const auto& [s, present] : states) {
      if (s.upper == top && s.lower == top + 1) {
        toggle(sums[j], disk_word(s));
        continue;
      }
      // Upper path: crosses smoothly, or corners if it sits on the lower-left strand.
      int upper_moves[2];
      bool upper_corner[2];
      int n_upper = 0;
      if (s.upper == top) {
        upper_moves[n_upper] = top + 1, upper_corner[n_upper++] = false;
      } else if (s.upper == top + 1) {
        upper_moves[n_upper] = top, upper_corner[n_upper++] = false;
        upper_moves[n_upper] = top + 1, upper_corner[n_upper++] = true;
      } else {
        upper_moves[n_upper] = s.upper, upper_corner[n_upper++] = false;
      }
      int lower_moves[2];
      bool lower_corner[2];
      int n_lower = 0;
      if (s.lower == top) {
        lower_moves[n_lower] = top + 1, lower_corner[n_lower++] = false;
        lower_moves[n_lower] = top, lower_corner[n_lower++] = true;
      } else if (s.lower == top + 1) {
        lower_moves[n_lower] = top, lower_corner[n_lower++] = false;
      } else {
        lower_moves[n_lower] = s.lower, lower_corner[n_lower++] = false;
      }
      for (int a = 0; a < n_upper; ++a) {
        for (int b = 0; b < n_lower; ++b) {
          if (upper_moves[a] >= lower_moves[b]) continue;
          DiskFront t{upper_moves[a], lower_moves[b], s.upper_corners, s.lower_corners};
          if (upper_corner[a]) t.upper_corners.push_back(j);
          if (lower_corner[b]) t.lower_corners.push_back(j);
          charge();
          toggle(next, std::move(t));
        }
      }
    }
    states = std::move(next);
  }

  for (int k = 0; k < d.cusps; ++k) {
    auto& sum = sums[static_cast<std::size_t>(crossings + k)];
    toggle(sum, Word{});  // the loop of the resolved cusp
    for (const auto& [s, present] : states)
      if (s.upper == 2 * k && s.lower == 2 * k + 1) toggle(sum, disk_word(s));
  }

  g.differential.reserve(sums.size());
  for (const auto& sum : sums) g.differential.push_back(collect(sum));
  return g;
}

std::map<std::int64_t, int> degree_distribution(const Dga& g, int rho) {
  check_rho(g.modulus, rho);
  std::map<std::int64_t, int> counts;
  for (const auto& gen : g.generators) ++counts[gen.grading.reduce(rho)];
  return counts;
}

std::int64_t chi_star(const Dga& g, int rho) {
  check_normalizable_rho(g.modulus, rho);
  std::int64_t chi = 0;
  for (auto [k, a] : degree_distribution(g, rho)) {
    if (rho == 0 && k < 0)
      chi += odd(k + 1) ? -a : a;
    else
      chi += odd(k) ? -a : a;
  }
  return chi;
}

std::vector<Word> differential_of_word(const Dga& g, const Word& w) {
  std::map<Word, bool> sum;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const Word& term : g.differential[static_cast<std::size_t>(w[i])]) {
      Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      out.insert(out.end(), term.begin(), term.end());
      out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
      toggle(sum, std::move(out));
    }
  }
  return collect(sum);
}

bool verify_d_squared(const Dga& g) {
  for (const auto& terms : g.differential) {
    std::map<Word, bool> sum;
    for (const Word& w : terms)
      for (Word& x : differential_of_word(g, w)) toggle(sum, std::move(x));
    if (!sum.empty()) return false;
  }
  return true;
}

Dga stabilize(const Dga& g, std::int64_t degree) {
  Dga out = g;
  int tag = 1 + static_cast<int>(std::count_if(g.generators.begin(), g.generators.end(), [](const Generator& x) {
              return x.kind == GeneratorKind::Stabilization;
            })) / 2;
  int alpha = out.size();
  out.generators.push_back(
      {GeneratorKind::Stabilization, 2 * tag - 2, Grading(degree - 1, g.modulus), "a" + std::to_string(tag)});
  out.generators.push_back(
      {GeneratorKind::Stabilization, 2 * tag - 1, Grading(degree, g.modulus), "b" + std::to_string(tag)});
  out.differential.push_back({});
  out.differential.push_back({Word{alpha}});
  return out;
}

}  // namespace augrule
