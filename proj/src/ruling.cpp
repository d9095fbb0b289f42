#include "augrule/ruling.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "augrule/dga.hpp"
#include "augrule/errors.hpp"

namespace augrule {

namespace {

std::vector<bool> eligible_crossings(const PlatDiagram& d, const MaslovData& m, int rho) {
  check_rho(m.modulus, rho);
  std::vector<bool> eligible;
  eligible.reserve(d.word.size());
  for (const Grading& g : crossing_gradings(d, m)) eligible.push_back(g.divisible_by(rho));
  return eligible;
}

class RulingSearch {
 public:
  RulingSearch(const PlatDiagram& d, const MaslovData& m, int rho)
      : d_(d), m_(m), rho_(rho), eligible_(eligible_crossings(d, m, rho)), target_(PairingState::standard(d.cusps)) {}

  std::vector<Ruling> run() {
    descend(0, PairingState::standard(d_.cusps));
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void descend(int j, PairingState state) {
    if (j == d_.crossings()) {
      if (state == target_) found_.push_back(make_ruling(d_, m_, rho_, switches_));
      return;
    }
    const int top = d_.top_row(j);
    if (state.partner(top) == top + 1) return;
    if (eligible_[static_cast<std::size_t>(j)] && !state.interlaced(top, top + 1)) {
      switches_.push_back(j);
      descend(j + 1, state);
      switches_.pop_back();
    }
    state.transpose(top);
    descend(j + 1, std::move(state));
  }

  const PlatDiagram& d_;
  const MaslovData& m_;
  int rho_;
  std::vector<bool> eligible_;
  PairingState target_;
  std::vector<int> switches_;
  std::vector<Ruling> found_;
};

bool is_odd(std::int64_t x) { return x % 2 != 0; }

// Sign of an interlaced pair a1 b1 a2 b2 from m(a2) - m(b2).
int interlacing_sign(std::int64_t gap, int rho) {
  if (rho == 1) return 1;
  if (rho == 0) {
    if (gap <= 0) return is_odd(gap) ? -1 : 1;
    return is_odd(gap) ? 1 : -1;
  }
  std::int64_t r = ((gap % rho) + rho) % rho;
  return (r == 0 || is_odd(r)) ? 1 : -1;
}

}  // namespace

std::string Ruling::pattern() const {
  std::string out;
  for (CrossingType t : types) out += static_cast<char>(t);
  return out;
}

Ruling make_ruling(const PlatDiagram& d, const MaslovData& m, int rho, std::vector<int> switches) {
  auto eligible = eligible_crossings(d, m, rho);
  std::sort(switches.begin(), switches.end());
  std::vector<bool> is_switch(d.word.size(), false);
  for (int j : switches) {
    if (j < 0 || j >= d.crossings()) throw IndexError("switch index out of range");
    if (!eligible[static_cast<std::size_t>(j)])
      throw std::invalid_argument("switch at q" + std::to_string(j + 1) + " has degree not divisible by rho");
    is_switch[static_cast<std::size_t>(j)] = true;
  }

  Ruling ruling;
  ruling.switches = std::move(switches);
  ruling.types.reserve(d.word.size());
  PairingState state = PairingState::standard(d.cusps);
  for (int j = 0; j < d.crossings(); ++j) {
    const int top = d.top_row(j);
    if (state.partner(top) == top + 1)
      throw std::invalid_argument("q" + std::to_string(j + 1) + " joins paired strands");
    bool interlaced = state.interlaced(top, top + 1);
    if (is_switch[static_cast<std::size_t>(j)]) {
      if (interlaced) throw std::invalid_argument("switch at q" + std::to_string(j + 1) + " with interlaced disks");
      ruling.types.push_back(CrossingType::Switch);
      ++ruling.s;
      continue;
    }
    state.transpose(top);
    if (!eligible[static_cast<std::size_t>(j)]) {
      ruling.types.push_back(CrossingType::Ineligible);
    } else if (interlaced) {
      ruling.types.push_back(CrossingType::Return);
      ++ruling.r;
    } else {
      ruling.types.push_back(CrossingType::Departure);
      ++ruling.d;
    }
  }
  if (state != PairingState::standard(d.cusps))
    throw std::invalid_argument("paths do not close up at the right cusps");
  ruling.theta = d.cusps - ruling.s;
  return ruling;
}

std::vector<Ruling> enumerate_rulings(const PlatDiagram& d, const MaslovData& m, int rho) {
  return RulingSearch(d, m, rho).run();
}

std::vector<int> theta_multiset(std::span<const Ruling> rulings) {
  std::vector<int> thetas;
  thetas.reserve(rulings.size());
  for (const Ruling& r : rulings) thetas.push_back(r.theta);
  std::sort(thetas.begin(), thetas.end());
  return thetas;
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, std::int64_t coefficient) {
  LaurentPolynomial p;
  if (coefficient != 0) p.terms_[exponent] = coefficient;
  return p;
}

std::int64_t LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.terms_) {
    std::int64_t& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.terms_[e + k] = c;
  return out;
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto [e, c] : p.terms()) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << "z";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

LaurentPolynomial ruling_polynomial(const PlatDiagram& d, const MaslovData& m, int rho) {
  auto eligible = eligible_crossings(d, m, rho);
  std::map<PairingState, LaurentPolynomial> layer;
  layer.emplace(PairingState::standard(d.cusps), LaurentPolynomial::monomial(d.cusps));
  for (int j = 0; j < d.crossings(); ++j) {
    const int top = d.top_row(j);
    std::map<PairingState, LaurentPolynomial> next;
    for (const auto& [state, weight] : layer) {
      if (state.partner(top) == top + 1) continue;
      if (eligible[static_cast<std::size_t>(j)] && !state.interlaced(top, top + 1))
        next[state] += weight.shifted(-1);
      PairingState passed = state;
      passed.transpose(top);
      next[passed] += weight;
    }
    layer = std::move(next);
  }
  auto it = layer.find(PairingState::standard(d.cusps));
  return it == layer.end() ? LaurentPolynomial{} : it->second;
}

std::vector<int> interlacing_trace(const PlatDiagram& d, const MaslovData& m, const Ruling& ruling, int rho) {
  check_rho(m.modulus, rho);
  if (rho != 0 && rho % 2 == 0)
    throw EvenRhoUnsupported("interlacing signs are undefined for even rho = " + std::to_string(rho));
  auto states = slice_pairing_sweep(d, ruling.switches);
  auto strands = row_strands(d);
  std::vector<int> trace;
  trace.reserve(states.size());
  for (std::size_t t = 0; t < states.size(); ++t) {
    const PairingState& state = states[t];
    int total = 0;
    for (int a1 = 0; a1 < state.rows(); ++a1) {
      int a2 = state.partner(a1);
      if (a2 < a1) continue;
      for (int b1 = a1 + 1; b1 < a2; ++b1) {
        int b2 = state.partner(b1);
        if (b2 <= a2) continue;
        std::int64_t gap = m.potential[strands[t][a2]] - m.potential[strands[t][b2]];
        total += interlacing_sign(gap, rho);
      }
    }
    trace.push_back(total);
  }
  return trace;
}

int interlacing_step(std::int64_t degree, CrossingType type) {
  if (type == CrossingType::Switch) return 0;
  if (degree == 0) return type == CrossingType::Return ? -1 : 1;
  if (degree < 0) return is_odd(degree) ? 1 : -1;
  return is_odd(degree) ? -1 : 1;
}

}  // namespace augrule
