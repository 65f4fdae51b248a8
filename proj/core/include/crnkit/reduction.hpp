#pragma once

#include "crnkit/network.hpp"
#include "crnkit/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace crnkit {

/// Box lower <= x <= upper intersected with sum(x) = total.
struct Region {
  std::vector<Rational> lower;
  std::vector<Rational> upper;
  Rational total;
};

/// Throws InputError when bounds are inconsistent or the region is empty.
void validate(const Region& region);

/// Parses "lb=v1,v2,...:ub=w1,w2,..."; a single value is broadcast to all species.
Region parse_region(std::string_view text, std::size_t species_count, const Rational& total);

struct LinearExtremum {
  Rational value;
  std::vector<Rational> point;
};

/// Exact optimum of w.x over the region: start from the lower corner and pour
/// the remaining mass into coordinates in order of increasing (decreasing) weight.
LinearExtremum minimize_linear(const Region& region, const std::vector<Rational>& weights);
LinearExtremum maximize_linear(const Region& region, const std::vector<Rational>& weights);

struct DocReduction {
  Rational m_prime;  ///< min of A2
  Rational M_prime;  ///< max of A1 + A2 + A4 + A17
  Rational lhs;      ///< k3 / (k4 + k7)
  Rational rhs;      ///< (T - M') / m'
  Rational margin;   ///< rhs - lhs
  bool holds = false;
};

/// Sufficient condition for A3* < A3 at the start. Throws DomainError when
/// the region touches the A2 = 0 face (m' = 0).
DocReduction reduction_check_doc(const std::vector<std::string>& species, const Bindings& rates,
                                 const Region& region);

/// (k3 k5 k7 + k6 k4 (k5 + k7)) / (k4 k5 k7)
Rational dac_k_star(const Bindings& rates);

struct DacCondition {
  std::string branch;  ///< "p1!=p2", "q1!=q2" or "null"
  double lhs = 0;      ///< 1 + M''/m'
  double rhs = 0;
  double margin = 0;
  bool holds = false;
};

struct DacReduction {
  Rational m_prime;   ///< min of A2
  Rational M_second;  ///< max of A1 + A3 + A4 + A5
  Rational k_star;
  bool null_system = false;
  std::vector<DacCondition> conditions;
  bool holds = false;  ///< any listed condition holds
};

/// Sufficient condition for A2* < A2 at the start. Needs rates and the four
/// orders in `bindings`. Throws UnsupportedError for degenerate orders.
DacReduction reduction_check_dac(const std::vector<std::string>& species, const Bindings& bindings,
                                 const Region& region);

}  // namespace crnkit
