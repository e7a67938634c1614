#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace svq {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. boost::multiprecision maintains both invariants.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Renders `r` as `<num>/<den>` in lowest terms, denominator always present.
inline std::string rational_text(const Rational& r) {
  return rational_num(r).str() + "/" + rational_den(r).str();
}

/// Renders `r` with the denominator elided when it is 1 (CLI-facing form).
inline std::string rational_display(const Rational& r) {
  if (rational_den(r) == 1) return rational_num(r).str();
  return rational_text(r);
}

/// Accepts `<num>` or `<num>/<den>`; throws std::invalid_argument on junk.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational pow_rational(const Rational& base, int exp) {
  Rational acc = 1;
  Rational b = exp < 0 ? Rational(1) / base : base;
  for (int i = 0, n = exp < 0 ? -exp : exp; i < n; ++i) acc *= b;
  return acc;
}

}  // namespace svq
