#pragma once

#include "crnkit/polynomial.hpp"
#include "crnkit/rational.hpp"

#include <compare>
#include <cmath>
#include <map>
#include <string>
#include <utility>

namespace crnkit {

/// Multiplicative building block of a steady-state coefficient: a rate symbol,
/// a primitive non-monomial polynomial in rate symbols, or a prime.
struct Atom {
  enum class Kind { Prime, Symbol, Poly };
  Kind kind = Kind::Symbol;
  std::string symbol;       ///< Symbol
  Polynomial poly;          ///< Poly: integer coefficients, content 1, positive leading term
  unsigned long prime = 0;  ///< Prime (or an integer too large to factor)

  static Atom of_symbol(std::string name);
  static Atom of_prime(unsigned long p);
  static Atom of_poly(Polynomial p);

  [[nodiscard]] std::string to_string() const;
};

struct AtomLess {
  bool operator()(const Atom& a, const Atom& b) const;
};

/// Product of atoms raised to rational exponents; the empty product is 1.
/// Written additively this is a vector in log space, which is how merging uses it.
class LogMonomial {
 public:
  using Map = std::map<Atom, Rational, AtomLess>;

  LogMonomial() = default;
  static LogMonomial symbol(const std::string& name);
  /// Factors a positive rational into primes. Throws InputError if value <= 0.
  static LogMonomial constant(const Rational& value);
  /// Splits a polynomial into constant, monomial content and primitive remainder.
  /// Throws InputError when the polynomial is not positive-leading.
  static LogMonomial from_polynomial(const Polynomial& p);

  [[nodiscard]] const Map& atoms() const noexcept { return atoms_; }
  [[nodiscard]] bool is_one() const noexcept { return atoms_.empty(); }
  /// True when every atom is a prime, i.e. the value is a fixed number.
  [[nodiscard]] bool is_numeric() const;
  [[nodiscard]] Rational exponent_of(const Atom& a) const;

  LogMonomial& operator*=(const LogMonomial& rhs);
  LogMonomial& operator/=(const LogMonomial& rhs);
  LogMonomial operator*(const LogMonomial& rhs) const;
  LogMonomial operator/(const LogMonomial& rhs) const;
  [[nodiscard]] LogMonomial pow(const Rational& e) const;
  bool operator==(const LogMonomial& rhs) const;

  /// value_of(symbol) must return the rate value as Real.
  template <class Real, class Lookup>
  Real evaluate(const Lookup& value_of) const {
    using std::log;
    using std::exp;
    Real log_total = 0;
    for (const auto& [atom, e] : atoms_) {
      Real base = 1;
      switch (atom.kind) {
        case Atom::Kind::Prime: base = Real(static_cast<double>(atom.prime)); break;
        case Atom::Kind::Symbol: base = value_of(atom.symbol); break;
        case Atom::Kind::Poly: base = atom.poly.template evaluate<Real>(value_of); break;
      }
      log_total += to_real<Real>(e) * log(base);
    }
    return exp(log_total);
  }

  /// Exact value when every exponent is an integer; throws UnsupportedError otherwise.
  [[nodiscard]] Rational evaluate_exact(const std::map<std::string, Rational, SymbolLess>& values) const;

  /// "k3*k7/(k5*(k4 + k7))", "(k1/k2)^(2)", or "1".
  [[nodiscard]] std::string to_string() const;
  /// "k1 = k2" reading of the condition *this == 1.
  [[nodiscard]] std::string condition_string() const;

 private:
  void add(const Atom& a, const Rational& e);
  Map atoms_;
};

}  // namespace crnkit
