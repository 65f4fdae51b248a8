#pragma once

#include "crnkit/rational.hpp"

#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crnkit {

/// Orders symbols by alphabetic prefix, then numerically by trailing digits,
/// so k2 < k10 and A4 < A17.
struct SymbolLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const;
};

/// Product of symbols with positive integer powers, kept sorted by SymbolLess.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::string symbol, int power = 1);

  [[nodiscard]] const std::vector<std::pair<std::string, int>>& factors() const noexcept { return factors_; }
  [[nodiscard]] bool is_one() const noexcept { return factors_.empty(); }
  [[nodiscard]] int degree() const;
  [[nodiscard]] int power_of(std::string_view symbol) const;

  Monomial operator*(const Monomial& rhs) const;
  /// Componentwise minimum of powers.
  [[nodiscard]] Monomial gcd(const Monomial& rhs) const;
  /// Requires rhs to divide *this.
  [[nodiscard]] Monomial divide(const Monomial& rhs) const;
  [[nodiscard]] bool divides(const Monomial& rhs) const;

  bool operator==(const Monomial& rhs) const = default;
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<std::pair<std::string, int>> factors_;
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  static Polynomial variable(std::string symbol);
  static Polynomial term(const Monomial& m, const Rational& coefficient);

  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rational constant_value() const;
  [[nodiscard]] bool is_monomial() const noexcept { return terms_.size() == 1; }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  bool operator==(const Polynomial& rhs) const;

  /// Replaces each bound symbol by a rational value.
  [[nodiscard]] Polynomial substitute(const std::map<std::string, Rational, SymbolLess>& values) const;

  /// Greatest common monomial of all terms (1 for the zero polynomial).
  [[nodiscard]] Monomial monomial_content() const;
  [[nodiscard]] Polynomial divide_monomial(const Monomial& m) const;
  /// Coefficient of the leading term (largest monomial).
  [[nodiscard]] Rational leading_coefficient() const;

  template <class Real, class Lookup>
  Real evaluate(const Lookup& value_of) const {
    Real total = 0;
    for (const auto& [mono, coeff] : terms_) {
      Real t = to_real<Real>(coeff);
      for (const auto& [sym, pow] : mono.factors()) {
        const Real v = value_of(sym);
        for (int i = 0; i < pow; ++i) t *= v;
      }
      total += t;
    }
    return total;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

}  // namespace crnkit
