#pragma once

#include "crnkit/matrix.hpp"
#include "crnkit/network.hpp"
#include "crnkit/orders.hpp"
#include "crnkit/polynomial.hpp"
#include "crnkit/rational.hpp"
#include "crnkit/steady_state.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crnkit {

// ---------------------------------------------------------------------------
// Regimes

enum class Regime { Positive, Negative, PNull, QNull, Degenerate };

std::string to_string(Regime regime);

/// R = (p2-p1)/(q2-q1) is defined iff q1 != q2; Q = 1/R iff p1 != p2.
/// P-null means p1 = p2 (R = 0), Q-null means q1 = q2 (Q = 0).
struct RegimeClassification {
  RegimeOrders orders;
  std::optional<Rational> R;
  std::optional<Rational> Q;
  Regime regime = Regime::Degenerate;
};

RegimeClassification classify(const RegimeOrders& orders);

// ---------------------------------------------------------------------------
// Kinetic subspaces; bases are stored as matrix columns.

struct KineticSubspaces {
  ExactMatrix S;
  ExactMatrix S_tilde;
  ExactMatrix S_tilde_perp;
};

/// S from reaction vectors, S~ from the columns of Y~ I_a, S~perp as the
/// null space of S~^T. Complexes that are never reactants get their own
/// stoichiometry as kinetic vector. Requires bound orders.
KineticSubspaces kinetic_subspaces(const Network& net);

// ---------------------------------------------------------------------------
// Sign vectors

/// Entries in {-1, 0, +1}.
using SignVector = std::vector<int>;

std::string to_string(const SignVector& s);

/// True if some x in the column span of `basis` has sign(x) = s.
bool sign_realizable(const ExactMatrix& basis, const SignVector& s);

/// All sign vectors of the column span, enumerated depth first with branch
/// order +, -, 0 and infeasible prefixes pruned. Includes the zero vector.
std::vector<SignVector> sign_vectors(const ExactMatrix& basis);

struct SignTestResult {
  std::optional<SignVector> witness;
  std::vector<SignVector> perp_signs;  ///< nonzero sign vectors of S~perp
  std::size_t feasibility_checks = 0;
};

/// Throws UnsupportedError when the ambient dimension exceeds this bound.
inline constexpr std::size_t kSignTestMaxDimension = 14;

/// Looks for a nonzero sign vector shared by S and S~perp. Enumerates the
/// lower-dimensional space first and tests each pattern against the other.
SignTestResult multistationarity_sign_test(const ExactMatrix& S, const ExactMatrix& S_tilde_perp);

// ---------------------------------------------------------------------------
// Injectivity

enum class InjectivityVerdict { InjectivePositive, InjectiveNegative, Inconclusive };

std::string to_string(InjectivityVerdict v);

struct InjectivityResult {
  std::vector<std::vector<Polynomial>> m_star;  ///< m x m
  Polynomial determinant;
  std::size_t positive_terms = 0;
  std::size_t negative_terms = 0;
  bool homogeneous = false;
  InjectivityVerdict verdict = InjectivityVerdict::Inconclusive;
};

/// M = N diag(z) F diag(k) with z indexed by reactions and k by species;
/// the row at the first nonzero entry of each reduced left-kernel vector of N
/// is replaced by that vector. Unbound order symbols stay symbolic, in which
/// case the verdict reflects the raw coefficient signs only.
InjectivityResult injectivity_determinant(const Network& net);

/// Determinant of a square polynomial matrix by cofactor expansion with
/// memoization on the set of used columns.
Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& a);

/// For each listed symbol, the signs of the coefficients of the terms that
/// contain it: +1, -1, or 0 when both occur.
std::map<std::string, int> sign_by_symbol(const Polynomial& p, const std::vector<std::string>& symbols);

// ---------------------------------------------------------------------------
// Absolute concentration robustness

/// Species whose coordinate vanishes in every basis vector of S~perp.
std::vector<std::string> acr_hyperplane(const Network& net);

/// Species whose exponent row in the parametrization is zero.
std::vector<std::string> acr_from_parametrization(const MonomialParametrization& param);

// ---------------------------------------------------------------------------
// Root counting on a stoichiometric class

using RateValues = std::map<std::string, double, SymbolLess>;

RateValues rate_values(const Bindings& bindings);

struct PowerTerm {
  Rational exponent;
  double coefficient = 0;
};

/// y(tau) = sum_j w_j x_j(tau) - T for a one-parameter parametrization.
class ConservationFunction {
 public:
  ConservationFunction(const MonomialParametrization& param, const RateValues& rates, double total,
                       std::vector<double> weights = {});

  [[nodiscard]] double operator()(double tau) const;
  [[nodiscard]] double derivative(double tau) const;
  /// Positive terms grouped by exponent, descending, without the -T term.
  [[nodiscard]] const std::vector<PowerTerm>& terms() const noexcept { return terms_; }
  [[nodiscard]] double total() const noexcept { return total_; }

 private:
  std::vector<PowerTerm> terms_;
  double total_;
};

struct RootReport {
  std::vector<PowerTerm> terms;  ///< positive terms, descending exponents
  /// Sign changes with the constant taken as negative, as in the case table.
  int structural_sign_changes = 0;
  /// Sign changes after folding -T into the zero-exponent coefficient.
  int exact_sign_changes = 0;
  std::vector<double> roots;
  std::vector<double> residuals;  ///< |y(root)| / T
  std::optional<double> stationary_point;
  std::vector<std::vector<double>> steady_states;
};

/// Grid 2^i for i in [-60, 60] plus the stationary point, then bisection.
/// Throws UnsupportedError for parametrizations with more or fewer than one
/// free parameter, or when every exponent is zero.
RootReport count_roots(const MonomialParametrization& param, const RateValues& rates, double total,
                       std::vector<double> weights = {});

int sign_changes(const std::vector<double>& coefficients_descending);

// ---------------------------------------------------------------------------
// Verdict

enum class Stationarity { Multistationary, Monostationary, Unknown, Unsupported };

std::string to_string(Stationarity s);

struct StationarityVerdict {
  Stationarity verdict = Stationarity::Unknown;
  std::string reason;
};

StationarityVerdict monostationarity_verdict(const RegimeClassification& regime, const InjectivityResult* injectivity,
                                             const SignTestResult* sign_test);

}  // namespace crnkit
