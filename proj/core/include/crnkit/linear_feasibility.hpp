#pragma once

#include "crnkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace crnkit {

/// coeffs . x >= rhs, or coeffs . x == rhs.
struct LinearConstraint {
  enum class Kind { GreaterEq, Equal };
  std::vector<Rational> coeffs;
  Rational rhs;
  Kind kind = Kind::GreaterEq;
};

/// Exact feasibility by equality substitution followed by Fourier-Motzkin
/// elimination. Returns a feasible point or nullopt when the system is empty.
/// Intended for the small systems met here (tens of variables at most).
std::optional<std::vector<Rational>> find_feasible_point(std::size_t nvars,
                                                         const std::vector<LinearConstraint>& constraints);

}  // namespace crnkit
