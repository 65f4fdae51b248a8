#pragma once

#include "crnkit/errors.hpp"
#include "crnkit/matrix.hpp"
#include "crnkit/polynomial.hpp"
#include "crnkit/rational.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace crnkit {

/// Species name -> positive stoichiometric coefficient. Empty map is the zero complex.
using Complex = std::map<std::string, Rational, SymbolLess>;

/// A kinetic order is a rational or a symbol awaiting a binding.
using OrderValue = std::variant<Rational, std::string>;
/// A rate constant is a symbol or a positive rational.
using RateValue = std::variant<std::string, Rational>;

using Bindings = std::map<std::string, Rational, SymbolLess>;

struct Reaction {
  std::string label;
  Complex reactant;
  Complex product;
  RateValue rate;
  /// Absent means mass action.
  std::optional<std::map<std::string, OrderValue, SymbolLess>> orders;
  int line = 0;
};

std::string complex_to_string(const Complex& c);
std::string rate_to_string(const RateValue& rate);
std::string order_to_string(const OrderValue& order);

class Network {
 public:
  Network() = default;
  /// Validates and derives the complex list. Throws InputError.
  Network(std::string name, std::vector<std::string> species, std::vector<Reaction> reactions);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const std::vector<std::string>& species() const noexcept { return species_; }
  [[nodiscard]] const std::vector<Reaction>& reactions() const noexcept { return reactions_; }
  [[nodiscard]] const std::vector<Complex>& complexes() const noexcept { return complexes_; }

  [[nodiscard]] std::size_t species_count() const noexcept { return species_.size(); }
  [[nodiscard]] std::size_t reaction_count() const noexcept { return reactions_.size(); }
  [[nodiscard]] std::size_t complex_count() const noexcept { return complexes_.size(); }

  [[nodiscard]] std::optional<std::size_t> species_index(std::string_view name) const;
  [[nodiscard]] std::optional<std::size_t> reaction_index(std::string_view label) const;
  [[nodiscard]] std::size_t reactant_of(std::size_t reaction) const { return reactant_idx_[reaction]; }
  [[nodiscard]] std::size_t product_of(std::size_t reaction) const { return product_idx_[reaction]; }

  /// Coefficient vector of a complex in species order.
  [[nodiscard]] std::vector<Rational> complex_vector(const Complex& c) const;
  /// product - reactant in species order.
  [[nodiscard]] std::vector<Rational> reaction_vector(std::size_t reaction) const;

  /// Order symbols that still need a binding.
  [[nodiscard]] std::set<std::string, SymbolLess> unbound_order_symbols() const;
  [[nodiscard]] std::set<std::string, SymbolLess> rate_symbols() const;

 private:
  std::string name_;
  std::vector<std::string> species_;
  std::vector<Reaction> reactions_;
  std::vector<Complex> complexes_;
  std::vector<std::size_t> reactant_idx_;
  std::vector<std::size_t> product_idx_;
};

/// Parses the line-oriented network description. Throws ParseError with the line.
Network parse_network(std::string_view text);
/// Inverse of parse_network up to whitespace and comments.
std::string format_network(const Network& net);

/// "p1=3/2 q1=1,k1=0.5": space or comma separated; '#' comments allowed.
Bindings parse_bindings(std::string_view text);
/// Later entries override earlier ones.
Bindings merge_bindings(const Bindings& base, const Bindings& overrides);

/// Replaces bound order symbols by their values; rate symbols are left alone.
Network bind_orders(const Network& net, const Bindings& bindings);

/// Keeps the listed reactions and the species they involve, in original order.
Network subnetwork(const Network& net, std::span<const std::size_t> reactions, std::string name = {});

struct NetworkMatrices {
  ExactMatrix Y;    ///< m x n molecularity
  ExactMatrix Ia;   ///< n x r incidence
  ExactMatrix N;    ///< m x r stoichiometric, Y * Ia
};
NetworkMatrices build_matrices(const Network& net);

/// r x m kinetic orders; throws InputError when an order symbol is unbound.
ExactMatrix kinetic_order_matrix(const Network& net);
/// r x m kinetic orders as polynomials, so unbound symbols stay symbolic.
std::vector<std::vector<Polynomial>> kinetic_order_polynomials(const Network& net);

/// Distinct reactant complexes (complex indices) in first-appearance order.
std::vector<std::size_t> reactant_complexes(const Network& net);

struct NetworkNumbers {
  std::size_t m = 0, n = 0, n_r = 0, r_rev = 0, r_irrev = 0, r = 0;
  std::size_t linkage_classes = 0, strong_linkage_classes = 0, terminal_classes = 0;
  std::size_t s = 0;
  long deficiency = 0;
  bool operator==(const NetworkNumbers&) const = default;
};
NetworkNumbers network_numbers(const Network& net);

struct StructuralFlags {
  bool weakly_reversible = false;
  bool conservative = false;
  std::vector<Rational> conservation_certificate;   ///< positive w with w^T N = 0
  bool positive_dependent = false;
  std::vector<Rational> dependence_certificate;     ///< positive v with N v = 0
  bool independent_linkage_classes = false;
  bool maximally_closed = false;
  bool high_reactant_diversity = false;
  std::string concordance = "unsupported";
};
StructuralFlags structural_flags(const Network& net);

/// Power-law vector field N K(x), all symbols bound.
class PowerLawSystem {
 public:
  PowerLawSystem(const Network& net, const Bindings& bindings);

  [[nodiscard]] std::size_t species_count() const noexcept { return m_; }
  [[nodiscard]] std::size_t reaction_count() const noexcept { return r_; }
  [[nodiscard]] const std::vector<std::string>& species() const noexcept { return species_; }
  [[nodiscard]] const std::vector<Rational>& rates() const noexcept { return rates_; }
  [[nodiscard]] const ExactMatrix& orders() const noexcept { return orders_; }
  [[nodiscard]] const ExactMatrix& stoichiometry() const noexcept { return N_; }

  /// Reaction fluxes K_i(x). Throws DomainError for a fractional power of a nonpositive base.
  template <class Real>
  std::vector<Real> fluxes(std::span<const Real> x) const {
    using std::pow;
    if (x.size() != m_) throw InputError("state length does not match species count");
    std::vector<Real> out(r_);
    for (std::size_t i = 0; i < r_; ++i) {
      Real v = rate_as<Real>(i);
      for (std::size_t j = 0; j < m_; ++j) {
        const std::size_t at = i * m_ + j;
        if (order_kind_[at] == OrderKind::Zero) continue;
        const Real& base = x[j];
        if (order_kind_[at] == OrderKind::NonNegInt) {
          for (long e = 0; e < int_order_[at]; ++e) v *= base;
          continue;
        }
        if (!(base > 0)) throw DomainError("power of nonpositive concentration of " + species_[j]);
        if (order_kind_[at] == OrderKind::NegInt) {
          Real p = 1;
          for (long e = 0; e < -int_order_[at]; ++e) p *= base;
          v /= p;
        } else {
          v *= pow(base, order_as<Real>(at));
        }
      }
      out[i] = v;
    }
    return out;
  }

  template <class Real>
  std::vector<Real> rhs(std::span<const Real> x) const {
    const std::vector<Real> k = fluxes<Real>(x);
    std::vector<Real> out(m_, Real(0));
    for (const auto& e : n_entries_) {
      if constexpr (std::is_same_v<Real, double>) out[e.row] += e.approx * k[e.col];
      else out[e.row] += to_real<Real>(e.exact) * k[e.col];
    }
    return out;
  }

  std::vector<double> rhs(const std::vector<double>& x) const { return rhs<double>(std::span<const double>(x)); }

  /// Exact right-hand side; only for integer kinetic orders.
  [[nodiscard]] std::vector<Rational> rhs_exact(std::span<const Rational> x) const;

 private:
  enum class OrderKind : unsigned char { Zero, NonNegInt, NegInt, Fractional };

  template <class Real>
  Real rate_as(std::size_t i) const {
    if constexpr (std::is_same_v<Real, double>) return rates_d_[i];
    else return to_real<Real>(rates_[i]);
  }
  template <class Real>
  Real order_as(std::size_t at) const {
    if constexpr (std::is_same_v<Real, double>) return orders_d_[at];
    else return to_real<Real>(orders_(at / m_, at % m_));
  }

  std::size_t m_ = 0, r_ = 0;
  std::vector<std::string> species_;
  std::vector<Rational> rates_;
  std::vector<double> rates_d_;
  ExactMatrix orders_;
  std::vector<double> orders_d_;
  std::vector<OrderKind> order_kind_;
  std::vector<long> int_order_;
  ExactMatrix N_;
  struct Entry {
    std::size_t row, col;
    Rational exact;
    double approx;
  };
  std::vector<Entry> n_entries_;
};

/// N K(x) in double precision.
std::vector<double> ode_rhs(const Network& net, const Bindings& bindings, std::span<const double> x);

}  // namespace crnkit
