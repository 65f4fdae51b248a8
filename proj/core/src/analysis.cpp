#include "crnkit/analysis.hpp"

#include "crnkit/errors.hpp"
#include "crnkit/linear_feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace crnkit {

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::Positive: return "positive";
    case Regime::Negative: return "negative";
    case Regime::PNull: return "P-null";
    case Regime::QNull: return "Q-null";
    case Regime::Degenerate: return "degenerate";
  }
  return "?";
}

RegimeClassification classify(const RegimeOrders& orders) {
  RegimeClassification out;
  out.orders = orders;
  const Rational dp = orders.p2 - orders.p1;
  const Rational dq = orders.q2 - orders.q1;
  if (dq != 0) out.R = Rational(dp / dq);
  if (dp != 0) out.Q = Rational(dq / dp);
  if (dp == 0 && dq == 0) out.regime = Regime::Degenerate;
  else if (dp == 0) out.regime = Regime::PNull;
  else if (dq == 0) out.regime = Regime::QNull;
  else out.regime = *out.R > 0 ? Regime::Positive : Regime::Negative;
  return out;
}

namespace {

// Kinetic vector per complex: the orders of the reactions it starts, or its
// own stoichiometry when it is never a reactant.
std::vector<std::vector<Rational>> complex_kinetics(const Network& net) {
  const ExactMatrix F = kinetic_order_matrix(net);
  std::vector<std::optional<std::vector<Rational>>> kv(net.complexes().size());
  for (std::size_t j = 0; j < net.reaction_count(); ++j) {
    auto row = F.row(j);
    auto& slot = kv[net.reactant_of(j)];
    if (slot && *slot != row)
      throw UnsupportedError("reactant complex of " + net.reactions()[j].label +
                             " carries two different kinetic-order vectors");
    slot = std::move(row);
  }
  std::vector<std::vector<Rational>> out;
  for (std::size_t c = 0; c < kv.size(); ++c)
    out.push_back(kv[c] ? *kv[c] : net.complex_vector(net.complexes()[c]));
  return out;
}

std::vector<LinearConstraint> sign_constraints(const ExactMatrix& basis, const SignVector& s, std::size_t upto) {
  std::vector<LinearConstraint> cs;
  for (std::size_t i = 0; i < upto; ++i) {
    LinearConstraint c;
    c.coeffs = basis.row(i);
    if (s[i] == 0) {
      c.kind = LinearConstraint::Kind::Equal;
      c.rhs = 0;
    } else {
      // Scaling lets strict inequalities become x_i >= 1 or -x_i >= 1.
      if (s[i] < 0)
        for (auto& v : c.coeffs) v = -v;
      c.rhs = 1;
    }
    cs.push_back(std::move(c));
  }
  return cs;
}

bool prefix_feasible(const ExactMatrix& basis, const SignVector& s, std::size_t upto) {
  if (basis.cols() == 0) {
    for (std::size_t i = 0; i < upto; ++i)
      if (s[i] != 0) return false;
    return true;
  }
  return find_feasible_point(basis.cols(), sign_constraints(basis, s, upto)).has_value();
}

void enumerate_signs(const ExactMatrix& basis, SignVector& s, std::size_t i, std::vector<SignVector>& out,
                     std::size_t& checks) {
  if (i == basis.rows()) {
    out.push_back(s);
    return;
  }
  for (int v : {1, -1, 0}) {
    s[i] = v;
    ++checks;
    if (prefix_feasible(basis, s, i + 1)) enumerate_signs(basis, s, i + 1, out, checks);
  }
  s[i] = 0;
}

bool is_zero_sign(const SignVector& s) {
  return std::all_of(s.begin(), s.end(), [](int v) { return v == 0; });
}

}  // namespace

KineticSubspaces kinetic_subspaces(const Network& net) {
  const auto kv = complex_kinetics(net);
  const std::size_t m = net.species_count();
  std::vector<std::vector<Rational>> gens, reaction_vectors;
  for (std::size_t j = 0; j < net.reaction_count(); ++j) {
    const auto& a = kv[net.reactant_of(j)];
    const auto& b = kv[net.product_of(j)];
    std::vector<Rational> g(m);
    for (std::size_t i = 0; i < m; ++i) g[i] = b[i] - a[i];
    gens.push_back(std::move(g));
    reaction_vectors.push_back(net.reaction_vector(j));
  }
  KineticSubspaces out;
  out.S = ExactMatrix::from_columns(reaction_vectors, m).column_basis();
  const ExactMatrix gen = ExactMatrix::from_columns(gens, m);
  out.S_tilde = gen.column_basis();
  out.S_tilde_perp = gen.transpose().nullspace();
  if (out.S.cols() == 0) out.S = ExactMatrix(m, 0);
  if (out.S_tilde.cols() == 0) out.S_tilde = ExactMatrix(m, 0);
  return out;
}

std::string to_string(const SignVector& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i] > 0 ? "+" : s[i] < 0 ? "-" : "0";
  }
  return out + ")";
}

bool sign_realizable(const ExactMatrix& basis, const SignVector& s) {
  if (s.size() != basis.rows()) throw InputError("sign vector length does not match the ambient dimension");
  return prefix_feasible(basis, s, s.size());
}

std::vector<SignVector> sign_vectors(const ExactMatrix& basis) {
  std::vector<SignVector> out;
  SignVector s(basis.rows(), 0);
  std::size_t checks = 0;
  enumerate_signs(basis, s, 0, out, checks);
  return out;
}

SignTestResult multistationarity_sign_test(const ExactMatrix& S, const ExactMatrix& S_tilde_perp) {
  if (S.rows() != S_tilde_perp.rows()) throw InputError("subspaces live in different dimensions");
  if (S.rows() > kSignTestMaxDimension)
    throw UnsupportedError("sign test refuses dimension " + std::to_string(S.rows()) + " > " +
                           std::to_string(kSignTestMaxDimension));
  SignTestResult out;
  const bool perp_first = S_tilde_perp.cols() <= S.cols();
  const ExactMatrix& enumerated = perp_first ? S_tilde_perp : S;
  const ExactMatrix& other = perp_first ? S : S_tilde_perp;
  std::vector<SignVector> signs;
  SignVector s(enumerated.rows(), 0);
  enumerate_signs(enumerated, s, 0, signs, out.feasibility_checks);
  for (const auto& v : signs) {
    if (is_zero_sign(v)) continue;
    if (perp_first) out.perp_signs.push_back(v);
    if (out.witness) continue;
    ++out.feasibility_checks;
    if (sign_realizable(other, v)) out.witness = v;
  }
  return out;
}

std::string to_string(InjectivityVerdict v) {
  switch (v) {
    case InjectivityVerdict::InjectivePositive: return "injective (+)";
    case InjectivityVerdict::InjectiveNegative: return "injective (-)";
    case InjectivityVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw InputError("determinant of a non-square matrix");
  if (n == 0) return Polynomial(1);
  if (n > 30) throw UnsupportedError("polynomial determinant limited to 30 x 30");
  std::unordered_map<std::uint32_t, Polynomial> memo;
  std::function<Polynomial(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t used) -> Polynomial {
    if (i == n) return Polynomial(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Polynomial acc;
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (!a[i][c].is_zero()) {
        Polynomial term = a[i][c] * rec(i + 1, used | (1u << c));
        if (position % 2) acc -= term;
        else acc += term;
      }
      ++position;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(0, 0);
}

std::map<std::string, int> sign_by_symbol(const Polynomial& p, const std::vector<std::string>& symbols) {
  std::map<std::string, int> out;
  for (const auto& sym : symbols)
    for (const auto& [mono, coeff] : p.terms()) {
      if (mono.power_of(sym) == 0) continue;
      const int s = sign(coeff);
      auto [it, inserted] = out.emplace(sym, s);
      if (!inserted && it->second != s) it->second = 0;
    }
  return out;
}

namespace {

// Degree in the symbols named prefix followed by digits only.
int group_degree(const Monomial& m, char prefix) {
  int d = 0;
  for (const auto& [sym, pow] : m.factors())
    if (sym.size() > 1 && sym[0] == prefix &&
        std::all_of(sym.begin() + 1, sym.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      d += pow;
  return d;
}

}  // namespace

InjectivityResult injectivity_determinant(const Network& net) {
  const std::size_t m = net.species_count(), r = net.reaction_count();
  const ExactMatrix N = build_matrices(net).N;
  const auto F = kinetic_order_polynomials(net);
  std::vector<Polynomial> z, k;
  for (std::size_t j = 0; j < r; ++j) z.push_back(Polynomial::variable("z" + std::to_string(j + 1)));
  for (std::size_t l = 0; l < m; ++l) k.push_back(Polynomial::variable("k" + std::to_string(l + 1)));

  InjectivityResult out;
  out.m_star.assign(m, std::vector<Polynomial>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < m; ++l) {
      Polynomial entry;
      for (std::size_t j = 0; j < r; ++j)
        if (N(i, j) != 0 && !F[j][l].is_zero()) entry += Polynomial(N(i, j)) * z[j] * F[j][l];
      out.m_star[i][l] = entry * k[l];
    }
  const ExactMatrix W = N.left_kernel();
  for (std::size_t w = 0; w < W.rows(); ++w) {
    std::size_t first = 0;
    while (first < m && W(w, first) == 0) ++first;
    for (std::size_t l = 0; l < m; ++l) out.m_star[first][l] = Polynomial(W(w, l));
  }

  out.determinant = polynomial_determinant(out.m_star);
  std::optional<std::pair<int, int>> degrees;
  out.homogeneous = !out.determinant.is_zero();
  for (const auto& [mono, coeff] : out.determinant.terms()) {
    (sign(coeff) > 0 ? out.positive_terms : out.negative_terms)++;
    const std::pair<int, int> d{group_degree(mono, 'z'), group_degree(mono, 'k')};
    if (!degrees) degrees = d;
    else if (*degrees != d) out.homogeneous = false;
  }
  if (out.determinant.is_zero()) out.verdict = InjectivityVerdict::Inconclusive;
  else if (out.negative_terms == 0) out.verdict = InjectivityVerdict::InjectivePositive;
  else if (out.positive_terms == 0) out.verdict = InjectivityVerdict::InjectiveNegative;
  else out.verdict = InjectivityVerdict::Inconclusive;
  return out;
}

std::vector<std::string> acr_hyperplane(const Network& net) {
  const ExactMatrix perp = kinetic_subspaces(net).S_tilde_perp;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < net.species_count(); ++i) {
    bool zero = true;
    for (std::size_t c = 0; c < perp.cols() && zero; ++c) zero = perp(i, c) == 0;
    if (zero) out.push_back(net.species()[i]);
  }
  return out;
}

std::vector<std::string> acr_from_parametrization(const MonomialParametrization& param) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < param.species.size(); ++j) {
    bool zero = true;
    for (std::size_t c = 0; c < param.exponents.cols() && zero; ++c) zero = param.exponents(j, c) == 0;
    if (zero) out.push_back(param.species[j]);
  }
  return out;
}

RateValues rate_values(const Bindings& bindings) {
  RateValues out;
  for (const auto& [k, v] : bindings) out[k] = to_double(v);
  return out;
}

namespace {

std::function<double(const std::string&)> rate_lookup(const RateValues& rates) {
  return [&rates](const std::string& s) {
    auto it = rates.find(s);
    if (it == rates.end()) throw InputError("no value bound for rate symbol '" + s + "'");
    return it->second;
  };
}

}  // namespace

ConservationFunction::ConservationFunction(const MonomialParametrization& param, const RateValues& rates, double total,
                                           std::vector<double> weights)
    : total_(total) {
  if (param.parameter_count() != 1)
    throw UnsupportedError("root counting needs a one-parameter parametrization, got " +
                           std::to_string(param.parameter_count()));
  if (weights.empty()) weights.assign(param.species.size(), 1.0);
  if (weights.size() != param.species.size()) throw InputError("conservation weights do not match species");
  const auto lookup = rate_lookup(rates);
  std::map<Rational, double, std::greater<>> grouped;
  for (std::size_t j = 0; j < param.species.size(); ++j) {
    if (weights[j] == 0) continue;
    grouped[param.exponents(j, 0)] += weights[j] * param.coefficients[j].evaluate<double>(lookup);
  }
  for (const auto& [e, c] : grouped) terms_.push_back({e, c});
}

double ConservationFunction::operator()(double tau) const {
  double y = -total_;
  for (const auto& t : terms_) y += t.coefficient * std::pow(tau, to_double(t.exponent));
  return y;
}

double ConservationFunction::derivative(double tau) const {
  double d = 0;
  for (const auto& t : terms_) {
    const double e = to_double(t.exponent);
    d += t.coefficient * e * std::pow(tau, e - 1);
  }
  return d;
}

int sign_changes(const std::vector<double>& coefficients_descending) {
  int changes = 0, last = 0;
  for (double c : coefficients_descending) {
    const int s = c > 0 ? 1 : c < 0 ? -1 : 0;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RootReport count_roots(const MonomialParametrization& param, const RateValues& rates, double total,
                       std::vector<double> weights) {
  if (!(total > 0)) throw InputError("total must be positive");
  const ConservationFunction y(param, rates, total, std::move(weights));
  RootReport out;
  out.terms = y.terms();
  if (std::all_of(out.terms.begin(), out.terms.end(), [](const PowerTerm& t) { return t.exponent == 0; }))
    throw UnsupportedError("every exponent is zero; the class equation does not involve the parameter");

  // The case table treats the constant as negative; the exact count folds -T
  // into whatever positive terms have exponent zero.
  std::map<Rational, double, std::greater<>> structural{{Rational(0), -1.0}}, exact{{Rational(0), -total}};
  for (const auto& t : out.terms) {
    exact[t.exponent] += t.coefficient;
    if (t.exponent != 0) structural[t.exponent] += t.coefficient;
  }
  auto values_of = [](const auto& m) {
    std::vector<double> v;
    for (const auto& [e, c] : m) v.push_back(c);
    return v;
  };
  out.structural_sign_changes = sign_changes(values_of(structural));
  out.exact_sign_changes = sign_changes(values_of(exact));

  std::vector<double> grid;
  for (int i = -60; i <= 60; ++i) grid.push_back(std::ldexp(1.0, i));
  std::vector<PowerTerm> moving;
  for (const auto& t : out.terms)
    if (t.exponent != 0) moving.push_back(t);
  if (moving.size() == 2 && sign(moving[0].exponent) != sign(moving[1].exponent)) {
    const double e1 = to_double(moving[0].exponent), e2 = to_double(moving[1].exponent);
    const double c1 = moving[0].coefficient, c2 = moving[1].coefficient;
    const double star = std::pow(-(c2 * e2) / (c1 * e1), 1.0 / (e1 - e2));
    if (std::isfinite(star) && star > 0) {
      out.stationary_point = star;
      grid.push_back(star);
    }
  }
  std::sort(grid.begin(), grid.end());

  auto add_root = [&](double tau) {
    for (double r : out.roots)
      if (std::abs(r - tau) <= 1e-12 * r) return;
    out.roots.push_back(tau);
  };
  std::vector<double> values;
  for (double t : grid) values.push_back(y(t));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0) {
      add_root(grid[i]);
      continue;
    }
    if (i + 1 == grid.size() || values[i + 1] == 0 || (values[i] > 0) == (values[i + 1] > 0)) continue;
    double lo = grid[i], hi = grid[i + 1];
    const bool lo_positive = values[i] > 0;
    for (int it = 0; it < 400 && hi / lo - 1 > 1e-15; ++it) {
      const double mid = std::sqrt(lo * hi);
      const double v = y(mid);
      if (v == 0) {
        lo = hi = mid;
        break;
      }
      ((v > 0) == lo_positive ? lo : hi) = mid;
    }
    const double root = std::abs(y(lo)) <= std::abs(y(hi)) ? lo : hi;
    add_root(root);
  }
  std::sort(out.roots.begin(), out.roots.end());
  const auto lookup = rate_lookup(rates);
  for (double root : out.roots) {
    out.residuals.push_back(std::abs(y(root)) / total);
    const std::vector<double> tau{root};
    out.steady_states.push_back(param.evaluate<double>(lookup, std::span<const double>(tau)));
  }
  return out;
}

std::string to_string(Stationarity s) {
  switch (s) {
    case Stationarity::Multistationary: return "multistationary";
    case Stationarity::Monostationary: return "monostationary";
    case Stationarity::Unknown: return "unknown";
    case Stationarity::Unsupported: return "unsupported";
  }
  return "?";
}

StationarityVerdict monostationarity_verdict(const RegimeClassification& regime, const InjectivityResult* injectivity,
                                             const SignTestResult* sign_test) {
  switch (regime.regime) {
    case Regime::Degenerate:
      return {Stationarity::Unsupported, "degenerate orders: steady states exist only on the set k1 = k2"};
    case Regime::Positive:
      if (sign_test && sign_test->witness)
        return {Stationarity::Multistationary,
                "sign(S) and sign(S~perp) share " + to_string(*sign_test->witness)};
      return {Stationarity::Unknown, "no common sign vector found"};
    case Regime::Negative:
      if (injectivity && injectivity->verdict != InjectivityVerdict::Inconclusive)
        return {Stationarity::Monostationary,
                "determinant of M* has all coefficients of one sign: " + to_string(injectivity->verdict)};
      return {Stationarity::Unknown, "determinant of M* has mixed signs; the criterion is only sufficient"};
    case Regime::PNull:
    case Regime::QNull:
      return {Stationarity::Monostationary,
              "the conservation law and the ACR species fix the steady state in each class"};
  }
  return {Stationarity::Unknown, ""};
}

}  // namespace crnkit
