#pragma once

#include <complex>
#include <string>

#include "verlinde/rational.hpp"

namespace verlinde {

// A root of unity carried by its exact exponent: value = e^{2 pi i exponent},
// exponent normalized into [0, 1). Equality is exact.
struct PhaseValue {
  Rat exponent;

  PhaseValue() : exponent(0) {}
  explicit PhaseValue(const Rat& e) : exponent(frac_mod1(e)) {}

  std::complex<double> value() const {
    static const double two_pi = 8.0 * std::atan(1.0);
    return std::polar(1.0, two_pi * to_double(exponent));
  }

  PhaseValue operator*(const PhaseValue& o) const {
    return PhaseValue(exponent + o.exponent);
  }
  PhaseValue pow(long long n) const { return PhaseValue(exponent * Rat(n)); }
  PhaseValue conj() const { return PhaseValue(-exponent); }

  bool operator==(const PhaseValue& o) const { return exponent == o.exponent; }
  bool is_one() const { return exponent == 0; }

  // "1", "-1", "i", "-i", or "e(p/q)" for e^{2 pi i p/q}.
  std::string str() const;
};

inline std::string PhaseValue::str() const {
  if (exponent == 0) return "1";
  if (exponent == Rat(1, 2)) return "-1";
  if (exponent == Rat(1, 4)) return "i";
  if (exponent == Rat(3, 4)) return "-i";
  return "e(" + rat_str(exponent) + ")";
}

}  // namespace verlinde
