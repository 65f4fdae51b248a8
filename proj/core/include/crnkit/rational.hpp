#pragma once

#include <gmpxx.h>

#include <string>
#include <type_traits>
#include <string_view>
#include <vector>

namespace crnkit {

/// Arbitrary precision rational; every structural computation is exact.
using Rational = mpq_class;

/// Parses "3/2", "-4", "1.5", "2.5e-3" into an exact rational.
/// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" with q omitted when it is 1.
std::string to_string(const Rational& value);

[[nodiscard]] inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

[[nodiscard]] inline int sign(const Rational& value) { return sgn(value); }

[[nodiscard]] inline double to_double(const Rational& value) { return value.get_d(); }

/// Best rational approximation is not attempted: decimal text of a double is
/// converted exactly through its shortest round-trip representation.
Rational rational_from_double(double value);

/// Converts to any floating type constructible from decimal strings
/// (double, long double, boost::multiprecision floats).
template <class Real>
Real to_real(const Rational& value) {
  if constexpr (std::is_same_v<Real, double>) {
    return value.get_d();
  } else {
    return Real(value.get_num().get_str()) / Real(value.get_den().get_str());
  }
}

/// Formats a double with 12 significant digits, the precision used in reports.
std::string format_number(double value);

/// Rounds a double to 12 significant digits.
double round12(double value);

}  // namespace crnkit
