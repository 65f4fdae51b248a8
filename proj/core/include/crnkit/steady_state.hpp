#pragma once

#include "crnkit/decomposition.hpp"
#include "crnkit/matrix.hpp"
#include "crnkit/monomial.hpp"
#include "crnkit/network.hpp"
#include "crnkit/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crnkit {

/// Offsets added to the reactant and product complex of one reaction.
/// A valid translation uses the same offset on both sides.
struct ReactionShift {
  std::vector<Rational> reactant_offset;
  std::vector<Rational> product_offset;
};

/// Parses "-A1-A2", "+2A3", "0" into a vector in the network's species order.
std::vector<Rational> parse_species_vector(const Network& net, std::string_view text);

/// Same offset on both sides of every listed reaction; others unshifted.
std::vector<ReactionShift> uniform_shifts(const Network& net, const std::map<std::string, std::string>& by_label);

struct TranslatedNode {
  std::vector<Rational> complex;  ///< translated complex, species order
  std::vector<Rational> kinetic;  ///< kinetic-order vector of reactions leaving this node
  bool has_kinetic = false;
};

struct TranslatedEdge {
  std::size_t from = 0, to = 0;
  Polynomial rate;  ///< rate symbol or numeric rate as a polynomial
  std::string label;
};

struct TranslatedNetwork {
  std::vector<std::string> species;
  std::vector<TranslatedNode> nodes;
  std::vector<TranslatedEdge> edges;
  std::vector<bool> stoichiometry_preserved;
  bool weakly_reversible = false;
  long deficiency = 0;

  [[nodiscard]] std::string node_name(std::size_t i) const;
};

/// Applies the shifts, attaches kinetic vectors to nodes and checks that the
/// result is weakly reversible with deficiency zero. Throws InputError naming
/// the failing property.
TranslatedNetwork translate(const Network& subnet, const std::vector<ReactionShift>& shifts);

/// K_i: sum over spanning trees of i's component directed toward i of the
/// product of edge rates.
std::vector<Polynomial> tree_constants(const TranslatedNetwork& tn);
/// Same for an arbitrary digraph given as (from, to, rate) edges.
std::vector<Polynomial> tree_constants(std::size_t nodes, const std::vector<TranslatedEdge>& edges);

struct ParametrizationMatrices {
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;  ///< (parent, child)
  ExactMatrix M;  ///< tree edges x species: kinetic(child) - kinetic(parent)
  ExactMatrix H;  ///< species x tree edges, M H M = M
  ExactMatrix B;  ///< species x free parameters, M B = 0
  std::vector<std::size_t> free_species;
  std::vector<LogMonomial> kappa;  ///< K_child / K_parent per tree edge
};

/// Spanning forest by breadth-first search in edge order, then the M/H/B
/// construction. Species named in `preferred_free` are made free where the
/// rank allows it.
ParametrizationMatrices parametrization_matrices(const TranslatedNetwork& tn,
                                                 const std::vector<std::string>& preferred_free = {});

/// x_j = coefficient_j * prod_l tau_l^{exponents(j, l)}, valid when every
/// condition equals 1.
struct MonomialParametrization {
  std::vector<std::string> species;
  std::vector<LogMonomial> coefficients;
  ExactMatrix exponents;  ///< species x parameters
  std::vector<std::string> parameter_names;
  /// Species whose value is exactly the corresponding parameter, or "" if none.
  std::vector<std::string> parameter_species;
  std::vector<LogMonomial> conditions;

  [[nodiscard]] std::size_t parameter_count() const { return exponents.cols(); }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view species_name) const;

  template <class Real, class Lookup>
  std::vector<Real> evaluate(const Lookup& rate_of, std::span<const Real> tau) const {
    using std::log;
    using std::exp;
    std::vector<Real> out(species.size());
    for (std::size_t j = 0; j < species.size(); ++j) {
      Real lx = log(coefficients[j].template evaluate<Real>(rate_of));
      for (std::size_t l = 0; l < exponents.cols(); ++l)
        if (exponents(j, l) != 0) lx += to_real<Real>(exponents(j, l)) * log(tau[l]);
      out[j] = exp(lx);
    }
    return out;
  }

  /// Same solution set: equal species, equal exponent column spaces, and every
  /// coefficient difference absorbable by rescaling the parameters.
  [[nodiscard]] bool equivalent(const MonomialParametrization& other) const;
  /// One "a1 = ... * tau^(...)" line per species.
  [[nodiscard]] std::string to_text() const;
  [[nodiscard]] std::string expression(std::size_t j) const;
};

/// Parametrization of one translated component set.
MonomialParametrization parametrize(const TranslatedNetwork& tn, const std::vector<std::string>& preferred_free = {});

/// Joins parametrizations over shared species in log space. Parameters of the
/// first part stay free; later ones are solved for. Inconsistent constant
/// matches throw EmptyIntersectionError; rate-dependent ones become conditions.
MonomialParametrization merge(const std::vector<MonomialParametrization>& parts,
                              const std::vector<std::string>& all_species);

struct ParametrizeOptions {
  std::map<std::string, std::string> shifts;  ///< reaction label -> offset text
  std::vector<std::string> preferred_free;
};

struct NetworkParametrization {
  Decomposition decomposition;
  std::vector<TranslatedNetwork> translated;
  std::vector<MonomialParametrization> parts;
  MonomialParametrization merged;
};

/// Translates and parametrizes every part of an independent decomposition and merges.
NetworkParametrization parametrize_network(const Network& net, const Decomposition& decomposition,
                                           const ParametrizeOptions& options);

struct ResidualReport {
  double max_abs_residual = 0;
  double max_rel_residual = 0;  ///< residual over the largest flux at that state
  std::size_t trials = 0;
};

/// Samples rates and parameters log-uniformly in [1e-2, 1e2], evaluates the
/// parametrized state and the vector field in 50-digit arithmetic. Rate values
/// in `fixed` are not sampled. Conditions are enforced by solving for their
/// last rate symbol.
ResidualReport verify_parametrization(const Network& net, const MonomialParametrization& param,
                                      std::size_t trials, std::uint64_t seed, const Bindings& fixed = {});

struct ExistenceReport {
  bool independent = false;
  bool t_hat_independent = false;
  // Partition used for the T̂ check: the finest one, or the merge of parts
  // sharing a reactant complex when the finest one fails.
  Partition t_hat_partition;
  bool exists_for_all_rates = false;
  std::vector<std::string> conditions;
  std::string verdict;
};

/// Positive steady states exist for all rates when the merged parametrization
/// carries no conditions. Throws UnsupportedError when the decomposition is not independent.
ExistenceReport existence_report(const Network& net, const NetworkParametrization& param);

}  // namespace crnkit
