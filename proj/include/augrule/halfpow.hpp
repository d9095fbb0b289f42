#pragma once

#include <cstdint>
#include <string>

namespace augrule {

// Exact value m * 2^(e/2) with m odd, or zero.
//
// Sums are only defined between terms whose half-exponents share parity;
// every sum this library forms (2^(theta/2) over a ruling invariant) meets
// that condition, and a mismatch is reported as std::domain_error.
class HalfPow {
 public:
  HalfPow() = default;
  HalfPow(std::uint64_t mantissa, std::int64_t halfexp);

  static HalfPow zero() { return {}; }
  // 2^(e/2).
  static HalfPow power(std::int64_t halfexp) { return HalfPow(1, halfexp); }
  // count * 2^(e/2).
  static HalfPow scaled(std::uint64_t count, std::int64_t halfexp) { return HalfPow(count, halfexp); }

  std::uint64_t mantissa() const { return mantissa_; }
  std::int64_t halfexp() const { return halfexp_; }
  bool is_zero() const { return mantissa_ == 0; }

  HalfPow& operator+=(const HalfPow& o);
  friend HalfPow operator+(HalfPow a, const HalfPow& b) { return a += b; }
  friend bool operator==(const HalfPow&, const HalfPow&) = default;

  double to_double() const;

 private:
  std::uint64_t mantissa_ = 0;
  std::int64_t halfexp_ = 0;
};

// "5*2^(-1/2)", "2^(1/2)", "3", "0".
std::string to_string(const HalfPow& h);

}  // namespace augrule
