#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace verlinde {

// All lattice and root-system arithmetic is exact. cpp_int/cpp_rational keep
// intermediate Smith/Hermite pivots and accumulated Weyl words from ever
// overflowing.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rat& x) { return rat_den(x) == 1; }

inline Int floor_int(const Rat& x) {
  Int n = rat_num(x), d = rat_den(x);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

// x reduced mod 1 into [0, 1).
inline Rat frac_mod1(const Rat& x) { return x - Rat(floor_int(x)); }

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

inline long long to_ll(const Int& x) { return x.convert_to<long long>(); }

inline std::string rat_str(const Rat& x) {
  if (is_integer(x)) return rat_num(x).str();
  return rat_num(x).str() + "/" + rat_den(x).str();
}

}  // namespace verlinde
