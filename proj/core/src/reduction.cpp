#include "crnkit/reduction.hpp"

#include "crnkit/analysis.hpp"
#include "crnkit/errors.hpp"
#include "crnkit/orders.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace crnkit {

void validate(const Region& region) {
  if (region.lower.size() != region.upper.size()) throw InputError("region bounds differ in length");
  Rational lo = 0, hi = 0;
  for (std::size_t i = 0; i < region.lower.size(); ++i) {
    if (region.lower[i] < 0) throw InputError("region lower bounds must be nonnegative");
    if (region.lower[i] > region.upper[i]) throw InputError("region lower bound exceeds upper bound");
    lo += region.lower[i];
    hi += region.upper[i];
  }
  if (region.total < lo || region.total > hi)
    throw InputError("region is empty: total " + to_string(region.total) + " outside [" + to_string(lo) + ", " +
                     to_string(hi) + "]");
}

namespace {

std::vector<Rational> parse_list(std::string_view text, std::size_t n) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_rational(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() == 1) out.assign(n, out[0]);
  if (out.size() != n)
    throw InputError("region bound lists need 1 or " + std::to_string(n) + " values, got " +
                     std::to_string(out.size()));
  return out;
}

std::size_t index_of(const std::vector<std::string>& species, const char* name) {
  const auto it = std::find(species.begin(), species.end(), name);
  if (it == species.end()) throw InputError(std::string("species ") + name + " is required by this check");
  return static_cast<std::size_t>(it - species.begin());
}

std::vector<Rational> indicator(const std::vector<std::string>& species, std::initializer_list<const char*> names) {
  std::vector<Rational> w(species.size(), 0);
  for (const auto* n : names) w[index_of(species, n)] = 1;
  return w;
}

const Rational& rate(const Bindings& b, const char* name) {
  const auto it = b.find(name);
  if (it == b.end()) throw InputError(std::string("rate ") + name + " is not bound");
  if (it->second <= 0) throw InputError(std::string("rate ") + name + " must be positive");
  return it->second;
}

LinearExtremum pour(const Region& region, const std::vector<Rational>& weights, bool ascending) {
  validate(region);
  if (weights.size() != region.lower.size()) throw InputError("objective length does not match region");
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ascending ? weights[a] < weights[b] : weights[a] > weights[b];
  });
  LinearExtremum out;
  out.point = region.lower;
  Rational left = region.total;
  for (const auto& l : region.lower) left -= l;
  for (std::size_t i : order) {
    if (left == 0) break;
    const Rational room = region.upper[i] - region.lower[i];
    const Rational add = room < left ? room : left;
    out.point[i] += add;
    left -= add;
  }
  out.value = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) out.value += weights[i] * out.point[i];
  return out;
}

}  // namespace

Region parse_region(std::string_view text, std::size_t species_count, const Rational& total) {
  Region r;
  r.total = total;
  bool lb = false, ub = false;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t colon = text.find(':', start);
    const std::string_view part = text.substr(start, colon == std::string_view::npos ? colon : colon - start);
    if (part.rfind("lb=", 0) == 0) {
      r.lower = parse_list(part.substr(3), species_count);
      lb = true;
    } else if (part.rfind("ub=", 0) == 0) {
      r.upper = parse_list(part.substr(3), species_count);
      ub = true;
    } else {
      throw InputError("region part '" + std::string(part) + "' must start with lb= or ub=");
    }
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (!lb || !ub) throw InputError("region needs both lb= and ub=");
  validate(r);
  return r;
}

LinearExtremum minimize_linear(const Region& region, const std::vector<Rational>& weights) {
  return pour(region, weights, true);
}

LinearExtremum maximize_linear(const Region& region, const std::vector<Rational>& weights) {
  return pour(region, weights, false);
}

DocReduction reduction_check_doc(const std::vector<std::string>& species, const Bindings& rates,
                                 const Region& region) {
  DocReduction out;
  out.m_prime = minimize_linear(region, indicator(species, {"A2"})).value;
  out.M_prime = maximize_linear(region, indicator(species, {"A1", "A2", "A4", "A17"})).value;
  if (out.m_prime == 0) throw DomainError("region touches the A2 = 0 face, so m' = 0");
  out.lhs = rate(rates, "k3") / (rate(rates, "k4") + rate(rates, "k7"));
  out.rhs = (region.total - out.M_prime) / out.m_prime;
  out.margin = out.rhs - out.lhs;
  out.holds = out.lhs < out.rhs;
  return out;
}

Rational dac_k_star(const Bindings& rates) {
  const Rational &k3 = rate(rates, "k3"), &k4 = rate(rates, "k4"), &k5 = rate(rates, "k5"),
                 &k6 = rate(rates, "k6"), &k7 = rate(rates, "k7");
  return (k3 * k5 * k7 + k6 * k4 * (k5 + k7)) / (k4 * k5 * k7);
}

DacReduction reduction_check_dac(const std::vector<std::string>& species, const Bindings& bindings,
                                 const Region& region) {
  const auto regime = classify(RegimeOrders::from_bindings(bindings));
  if (regime.regime == Regime::Degenerate) throw UnsupportedError("reduction check needs p1 != p2 or q1 != q2");
  DacReduction out;
  out.m_prime = minimize_linear(region, indicator(species, {"A2"})).value;
  out.M_second = maximize_linear(region, indicator(species, {"A1", "A3", "A4", "A5"})).value;
  if (out.m_prime == 0) throw DomainError("region touches the A2 = 0 face, so m' = 0");
  out.k_star = dac_k_star(bindings);
  out.null_system = regime.regime == Regime::PNull || regime.regime == Regime::QNull;

  const double lhs = to_double(1 + out.M_second / out.m_prime);
  const double ks = to_double(out.k_star);
  const double ratio = to_double(rate(bindings, "k1") / rate(bindings, "k2"));
  const double mp = to_double(out.m_prime);
  const auto& o = regime.orders;
  auto add = [&](std::string branch, double rhs) {
    out.conditions.push_back({std::move(branch), lhs, rhs, rhs - lhs, lhs < rhs});
  };
  if (out.null_system) {
    add("null", ks);
  } else {
    add("p1!=p2", std::pow(ratio, 1 / to_double(o.p2 - o.p1)) * std::pow(mp, -to_double(*regime.Q)) + ks);
    add("q1!=q2", std::pow(ratio, 1 / to_double(o.q2 - o.q1)) * std::pow(mp, -to_double(*regime.R)) + ks);
  }
  out.holds = std::any_of(out.conditions.begin(), out.conditions.end(), [](const DacCondition& c) { return c.holds; });
  return out;
}

}  // namespace crnkit
