#include "augrule/augment.hpp"

#include <algorithm>

#include "augrule/errors.hpp"

namespace augrule {

bool evaluate(const Augmentation& eps, const Word& w) {
  return std::all_of(w.begin(), w.end(), [&](int x) { return eps[x]; });
}

bool evaluate(const Augmentation& eps, const std::vector<Word>& sum) {
  bool total = false;
  for (const Word& w : sum) total ^= evaluate(eps, w);
  return total;
}

bool is_augmentation(const Dga& g, const Augmentation& eps, int rho) {
  check_rho(g.modulus, rho);
  if (static_cast<int>(eps.values.size()) != g.size()) return false;
  for (int x = 0; x < g.size(); ++x)
    if (eps[x] && !g.generators[static_cast<std::size_t>(x)].grading.divisible_by(rho)) return false;
  for (const auto& sum : g.differential)
    if (evaluate(eps, sum)) return false;
  return true;
}

namespace {

struct Equation {
  std::vector<Word> words;  // only words made of eligible generators
  int last = -1;            // search position of its last variable
};

class AugmentationSearch {
 public:
  AugmentationSearch(const Dga& g, int rho, const AugmentOptions& options) {
    std::vector<bool> eligible(static_cast<std::size_t>(g.size()));
    int eligible_count = 0;
    for (int x = 0; x < g.size(); ++x) {
      eligible[x] = g.generators[static_cast<std::size_t>(x)].grading.divisible_by(rho);
      eligible_count += eligible[x] ? 1 : 0;
    }
    if (eligible_count > options.max_eligible)
      throw ResourceLimit(std::to_string(eligible_count) + " eligible generators exceed the bound of " +
                          std::to_string(options.max_eligible));

    // Variables ordered by first appearance in the differential.
    std::vector<int> position(static_cast<std::size_t>(g.size()), -1);
    auto place = [&](int x) {
      if (eligible[x] && position[x] < 0) {
        position[x] = static_cast<int>(order_.size());
        order_.push_back(x);
      }
    };
    for (const auto& sum : g.differential)
      for (const Word& w : sum)
        for (int x : w) place(x);
    for (int x = 0; x < g.size(); ++x) place(x);

    by_last_.resize(order_.size());
    for (const auto& sum : g.differential) {
      Equation eq;
      for (const Word& w : sum) {
        if (!std::all_of(w.begin(), w.end(), [&](int x) { return eligible[x]; })) continue;
        eq.words.push_back(w);
        for (int x : w) eq.last = std::max(eq.last, position[x]);
      }
      if (eq.words.empty()) continue;
      if (eq.last < 0) {
        // Only the unit survives: an odd count makes the system inconsistent.
        if (eq.words.size() % 2 != 0) inconsistent_ = true;
        continue;
      }
      by_last_[static_cast<std::size_t>(eq.last)].push_back(std::move(eq));
    }
    current_.values.assign(static_cast<std::size_t>(g.size()), 0);
  }

  std::vector<Augmentation> run() {
    if (!inconsistent_) descend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void descend(std::size_t depth) {
    if (depth == order_.size()) {
      found_.push_back(current_);
      return;
    }
    for (std::uint8_t bit : {0, 1}) {
      current_.values[static_cast<std::size_t>(order_[depth])] = bit;
      bool ok = std::none_of(by_last_[depth].begin(), by_last_[depth].end(),
                             [&](const Equation& eq) { return evaluate(current_, eq.words); });
      if (ok) descend(depth + 1);
    }
    current_.values[static_cast<std::size_t>(order_[depth])] = 0;
  }

  std::vector<int> order_;
  std::vector<std::vector<Equation>> by_last_;
  bool inconsistent_ = false;
  Augmentation current_;
  std::vector<Augmentation> found_;
};

}  // namespace

std::vector<Augmentation> enumerate_augmentations(const Dga& g, int rho, AugmentOptions options) {
  check_rho(g.modulus, rho);
  return AugmentationSearch(g, rho, options).run();
}

HalfPow aug_number(const Dga& g, int rho, AugmentOptions options) {
  check_normalizable_rho(g.modulus, rho);
  auto count = enumerate_augmentations(g, rho, options).size();
  return HalfPow::scaled(count, -chi_star(g, rho));
}

}  // namespace augrule
