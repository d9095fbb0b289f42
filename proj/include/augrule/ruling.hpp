#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "augrule/diagram.hpp"

namespace augrule {

enum class CrossingType : char {
  Switch = 'S',
  Departure = 'D',
  Return = 'R',
  // Grading not divisible by rho: the ruling passes straight through.
  Ineligible = '.',
};

struct Ruling {
  std::vector<int> switches;        // 0-based crossing indices, increasing
  std::vector<CrossingType> types;  // one entry per crossing
  int s = 0;
  int d = 0;
  int r = 0;
  int theta = 0;  // c(D) - s

  // "SDR", with '.' for ineligible crossings.
  std::string pattern() const;

  friend bool operator==(const Ruling& a, const Ruling& b) { return a.switches == b.switches; }
  friend auto operator<=>(const Ruling& a, const Ruling& b) { return a.switches <=> b.switches; }
};

// Classifies the crossings of the ruling with the given switch set, or
// throws std::invalid_argument if it is not a valid rho-graded ruling.
Ruling make_ruling(const PlatDiagram& d, const MaslovData& m, int rho, std::vector<int> switches);

// Every rho-graded normal ruling, ordered lexicographically on the switch set.
std::vector<Ruling> enumerate_rulings(const PlatDiagram& d, const MaslovData& m, int rho);

// Sorted multiset of theta values.
std::vector<int> theta_multiset(std::span<const Ruling> rulings);

// Integer Laurent polynomial in z: exponent -> coefficient, no zero entries.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int exponent, std::int64_t coefficient = 1);

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int exponent) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  // Multiply by z^k.
  LaurentPolynomial shifted(int k) const;
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<int, std::int64_t> terms_;
};

// "z^-1 + 2z", "0".
std::string to_string(const LaurentPolynomial& p);

// Sum over rho-graded rulings of z^theta, by a transfer sweep over pairing states.
LaurentPolynomial ruling_polynomial(const PlatDiagram& d, const MaslovData& m, int rho);

// Signed interlacing number at every slice (unsigned count for rho = 1).
std::vector<int> interlacing_trace(const PlatDiagram& d, const MaslovData& m, const Ruling& ruling, int rho);

// Expected change of the rho = 0 interlacing number across a non-switch
// crossing of degree `degree`.
int interlacing_step(std::int64_t degree, CrossingType type);

}  // namespace augrule
