#include "augrule/halfpow.hpp"

#include <cmath>
#include <stdexcept>

namespace augrule {

HalfPow::HalfPow(std::uint64_t mantissa, std::int64_t halfexp) : mantissa_(mantissa), halfexp_(halfexp) {
  if (mantissa_ == 0) {
    halfexp_ = 0;
    return;
  }
  while ((mantissa_ & 1u) == 0) {
    mantissa_ >>= 1;
    halfexp_ += 2;
  }
}

HalfPow& HalfPow::operator+=(const HalfPow& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::int64_t gap = halfexp_ - o.halfexp_;
  if (gap % 2 != 0) throw std::domain_error("HalfPow sum of terms with mixed exponent parity");
  const HalfPow& lo = gap < 0 ? *this : o;
  const HalfPow& hi = gap < 0 ? o : *this;
  std::int64_t shift = (hi.halfexp_ - lo.halfexp_) / 2;
  if (shift >= 63 || (hi.mantissa_ >> (63 - shift)) != 0)
    throw std::overflow_error("HalfPow mantissa overflow");
  std::uint64_t sum = 0;
  if (__builtin_add_overflow(lo.mantissa_, hi.mantissa_ << shift, &sum))
    throw std::overflow_error("HalfPow mantissa overflow");
  return *this = HalfPow(sum, lo.halfexp_);
}

double HalfPow::to_double() const {
  return static_cast<double>(mantissa_) * std::exp2(static_cast<double>(halfexp_) / 2.0);
}

std::string to_string(const HalfPow& h) {
  if (h.is_zero()) return "0";
  std::string power;
  if (h.halfexp() % 2 == 0) {
    if (h.halfexp() != 0) power = "2^" + std::to_string(h.halfexp() / 2);
  } else {
    power = "2^(" + std::to_string(h.halfexp()) + "/2)";
  }
  if (power.empty()) return std::to_string(h.mantissa());
  if (h.mantissa() == 1) return power;
  return std::to_string(h.mantissa()) + "*" + power;
}

}  // namespace augrule
