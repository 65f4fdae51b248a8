#pragma once

#include "crnkit/network.hpp"
#include "crnkit/rational.hpp"

#include <string>

namespace crnkit {

/// Kinetic orders of the two land-atmosphere reactions:
/// R1 contributes a1^p1 a2^q1 and R2 contributes a1^p2 a2^q2.
struct RegimeOrders {
  Rational p1, q1, p2, q2;

  [[nodiscard]] Bindings to_bindings() const;
  /// Reads p1, q1, p2, q2; throws InputError if one is missing.
  static RegimeOrders from_bindings(const Bindings& bindings);
  /// "(p1, q1, p2, q2)" with exact values.
  [[nodiscard]] std::string to_string() const;
  bool operator==(const RegimeOrders&) const = default;
};

}  // namespace crnkit
