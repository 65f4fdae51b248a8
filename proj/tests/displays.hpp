#pragma once
// Closed-form steady-state parametrizations of the builtin models, entered by
// hand so that the library's merged parametrizations can be compared to them.

#include "crnkit/orders.hpp"
#include "crnkit/steady_state.hpp"

#include <string>
#include <vector>

namespace displays {

using namespace crnkit;

inline LogMonomial S(const char* name) { return LogMonomial::symbol(name); }
inline LogMonomial sum(const char* a, const char* b) {
  return LogMonomial::from_polynomial(Polynomial::variable(a) + Polynomial::variable(b));
}

// One free parameter: x_j = coeff_j * tau^{e_j}.
inline MonomialParametrization expected(std::vector<std::string> species, std::vector<LogMonomial> coeffs,
                                 std::vector<Rational> exps) {
  MonomialParametrization p;
  p.species = std::move(species);
  p.coefficients = std::move(coeffs);
  p.exponents = ExactMatrix(p.species.size(), 1);
  for (std::size_t j = 0; j < exps.size(); ++j) p.exponents(j, 0) = exps[j];
  p.parameter_names = {"tau"};
  p.parameter_species = {""};
  return p;
}

// Displays with p1 != p2 ("p") or q1 != q2 ("q") and bound orders.
inline MonomialParametrization doc_display(const RegimeOrders& o, char branch) {
  const Rational dq = o.q2 - o.q1, dp = o.p1 - o.p2;
  const LogMonomial ratio = S("k1") / S("k2");
  const LogMonomial lift = branch == 'p' ? LogMonomial() : ratio.pow(1 / dq);
  const LogMonomial a1 = branch == 'p' ? ratio.pow(Rational(1) / (o.p2 - o.p1)) : LogMonomial();
  const LogMonomial k47 = sum("k4", "k7");
  return expected({"A1", "A2", "A3", "A4", "A17"},
                  {a1, lift, S("k3") / k47 * lift, S("k3") * S("k7") / (S("k5") * k47) * lift,
                   S("k3") * S("k7") / (S("k6") * k47) * lift},
                  {dq, dp, dp, dp, dp});
}

inline MonomialParametrization dac_display(const RegimeOrders& o, char branch) {
  const Rational dq = o.q2 - o.q1, dp = o.p1 - o.p2;
  const LogMonomial ratio = S("k1") / S("k2");
  const LogMonomial lift = branch == 'p' ? LogMonomial() : ratio.pow(1 / dq);
  const LogMonomial a1 = branch == 'p' ? ratio.pow(Rational(1) / (o.p2 - o.p1)) : LogMonomial();
  return expected({"A1", "A2", "A3", "A4", "A5"},
                  {a1, lift, S("k3") / S("k4") * lift, S("k6") / S("k5") * lift, S("k6") / S("k7") * lift},
                  {dq, dp, dp, dp, dp});
}

inline MonomialParametrization integrated_display(const RegimeOrders& o, char branch) {
  const Rational dq = o.q2 - o.q1, dp = o.p1 - o.p2;
  const LogMonomial ratio = S("k1") / S("k2");
  const LogMonomial lift = branch == 'p' ? LogMonomial() : ratio.pow(1 / dq);
  const LogMonomial a1 = branch == 'p' ? ratio.pow(Rational(1) / (o.p2 - o.p1)) : LogMonomial();
  const LogMonomial k47 = sum("k4", "k7");
  const Polynomial num = Polynomial::variable("k3") * Polynomial::variable("k7") +
                         Polynomial::variable("k4") * Polynomial::variable("k8") +
                         Polynomial::variable("k7") * Polynomial::variable("k8");
  return expected({"A1", "A2", "A3", "A4", "A5", "A17"},
                  {a1, lift, S("k3") / k47 * lift, LogMonomial::from_polynomial(num) / (S("k5") * k47) * lift,
                   S("k8") / S("k9") * lift, S("k3") * S("k7") / (S("k6") * k47) * lift},
                  {dq, dp, dp, dp, dp, dp});
}

}  // namespace displays
