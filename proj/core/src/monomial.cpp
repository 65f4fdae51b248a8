#include "crnkit/monomial.hpp"

#include "crnkit/errors.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace crnkit {
namespace {

// Trial division up to 10^6; any cofactor left is kept whole.
std::vector<std::pair<unsigned long, int>> factor(mpz_class n) {
  std::vector<std::pair<unsigned long, int>> out;
  for (unsigned long p = 2; p <= 1000000 && n > 1; ++p) {
    if (mpz_class(p) * mpz_class(p) > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) {
    if (!n.fits_ulong_p()) throw UnsupportedError("integer constant too large to factor");
    out.emplace_back(n.get_ui(), 1);
  }
  return out;
}

std::string exponent_suffix(const Rational& e) {
  if (e == 1) return "";
  return "^(" + to_string(e) + ")";
}

std::string atom_text(const Atom& a) {
  if (a.kind == Atom::Kind::Poly) return "(" + a.poly.to_string() + ")";
  return a.to_string();
}

// Product of atoms, ignoring exponents, with primes folded into one integer.
std::string product_text(const std::vector<const Atom*>& atoms, std::size_t* factor_count) {
  mpz_class integer = 1;
  std::vector<std::string> parts;
  for (const Atom* a : atoms) {
    if (a->kind == Atom::Kind::Prime) integer *= a->prime;
    else parts.push_back(atom_text(*a));
  }
  if (integer != 1) parts.insert(parts.begin(), integer.get_str());
  *factor_count = parts.size();
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out.empty() ? "1" : out;
}

}  // namespace

Atom Atom::of_symbol(std::string name) {
  Atom a;
  a.kind = Kind::Symbol;
  a.symbol = std::move(name);
  return a;
}

Atom Atom::of_prime(unsigned long p) {
  Atom a;
  a.kind = Kind::Prime;
  a.prime = p;
  return a;
}

Atom Atom::of_poly(Polynomial p) {
  Atom a;
  a.kind = Kind::Poly;
  a.poly = std::move(p);
  return a;
}

std::string Atom::to_string() const {
  switch (kind) {
    case Kind::Prime: return std::to_string(prime);
    case Kind::Symbol: return symbol;
    case Kind::Poly: return poly.to_string();
  }
  return {};
}

bool AtomLess::operator()(const Atom& a, const Atom& b) const {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  switch (a.kind) {
    case Atom::Kind::Prime: return a.prime < b.prime;
    case Atom::Kind::Symbol: return SymbolLess{}(a.symbol, b.symbol);
    case Atom::Kind::Poly: {
      if (a.poly.term_count() != b.poly.term_count()) return a.poly.term_count() < b.poly.term_count();
      return a.poly.to_string() < b.poly.to_string();
    }
  }
  return false;
}

LogMonomial LogMonomial::symbol(const std::string& name) {
  LogMonomial out;
  out.add(Atom::of_symbol(name), 1);
  return out;
}

LogMonomial LogMonomial::constant(const Rational& value) {
  if (value <= 0) throw InputError("log-monomial constant must be positive");
  LogMonomial out;
  for (const auto& [p, e] : factor(value.get_num())) out.add(Atom::of_prime(p), e);
  for (const auto& [p, e] : factor(value.get_den())) out.add(Atom::of_prime(p), -e);
  return out;
}

LogMonomial LogMonomial::from_polynomial(const Polynomial& p) {
  if (p.is_zero()) throw InputError("zero polynomial has no logarithm");
  const Monomial content = p.monomial_content();
  Polynomial rest = p.divide_monomial(content);
  // Rational content: gcd of numerators over lcm of denominators.
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : rest.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational scale(num_gcd, den_lcm);
  scale.canonicalize();
  if (rest.leading_coefficient() < 0) scale = -scale;
  rest = rest * Polynomial(Rational(1) / scale);
  if (scale < 0) throw InputError("polynomial " + p.to_string() + " is not positive");
  LogMonomial out = constant(scale);
  for (const auto& [s, e] : content.factors()) out.add(Atom::of_symbol(s), e);
  if (!rest.is_constant()) {
    for (const auto& [m, c] : rest.terms())
      if (c < 0) throw InputError("polynomial " + p.to_string() + " has mixed signs");
    out.add(Atom::of_poly(rest), 1);
  }
  return out;
}

bool LogMonomial::is_numeric() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const auto& kv) { return kv.first.kind == Atom::Kind::Prime; });
}

Rational LogMonomial::exponent_of(const Atom& a) const {
  auto it = atoms_.find(a);
  return it == atoms_.end() ? Rational(0) : it->second;
}

void LogMonomial::add(const Atom& a, const Rational& e) {
  if (e == 0) return;
  auto [it, inserted] = atoms_.emplace(a, e);
  if (!inserted) {
    it->second += e;
    if (it->second == 0) atoms_.erase(it);
  }
}

LogMonomial& LogMonomial::operator*=(const LogMonomial& rhs) {
  for (const auto& [a, e] : rhs.atoms_) add(a, e);
  return *this;
}

LogMonomial& LogMonomial::operator/=(const LogMonomial& rhs) {
  for (const auto& [a, e] : rhs.atoms_) add(a, -e);
  return *this;
}

LogMonomial LogMonomial::operator*(const LogMonomial& rhs) const {
  LogMonomial out = *this;
  out *= rhs;
  return out;
}

LogMonomial LogMonomial::operator/(const LogMonomial& rhs) const {
  LogMonomial out = *this;
  out /= rhs;
  return out;
}

LogMonomial LogMonomial::pow(const Rational& e) const {
  LogMonomial out;
  if (e == 0) return out;
  for (const auto& [a, x] : atoms_) out.atoms_.emplace(a, x * e);
  return out;
}

bool LogMonomial::operator==(const LogMonomial& rhs) const {
  if (atoms_.size() != rhs.atoms_.size()) return false;
  auto a = atoms_.begin();
  auto b = rhs.atoms_.begin();
  for (; a != atoms_.end(); ++a, ++b) {
    if (AtomLess{}(a->first, b->first) || AtomLess{}(b->first, a->first)) return false;
    if (a->second != b->second) return false;
  }
  return true;
}

Rational LogMonomial::evaluate_exact(const std::map<std::string, Rational, SymbolLess>& values) const {
  Rational out = 1;
  for (const auto& [atom, e] : atoms_) {
    if (!is_integer(e)) throw UnsupportedError("exact evaluation needs integer exponents");
    Rational base;
    switch (atom.kind) {
      case Atom::Kind::Prime: base = Rational(mpz_class(atom.prime)); break;
      case Atom::Kind::Symbol: {
        auto it = values.find(atom.symbol);
        if (it == values.end()) throw InputError("symbol '" + atom.symbol + "' is unbound");
        base = it->second;
        break;
      }
      case Atom::Kind::Poly: {
        const Polynomial v = atom.poly.substitute(values);
        if (!v.is_constant()) throw InputError("unbound symbol in " + atom.poly.to_string());
        base = v.constant_value();
        break;
      }
    }
    long n = e.get_num().get_si();
    const bool invert = n < 0;
    if (invert) n = -n;
    Rational p = 1;
    for (long i = 0; i < n; ++i) p *= base;
    out *= invert ? Rational(1 / p) : p;
  }
  return out;
}

std::string LogMonomial::to_string() const {
  if (atoms_.empty()) return "1";
  std::set<Rational> magnitudes;
  for (const auto& [a, e] : atoms_) magnitudes.insert(abs(e));
  std::vector<std::string> groups;
  // Exponent 1 first, then increasing magnitude.
  std::vector<Rational> order(magnitudes.begin(), magnitudes.end());
  std::stable_partition(order.begin(), order.end(), [](const Rational& g) { return g == 1; });
  for (const auto& g : order) {
    std::vector<const Atom*> num, den;
    for (const auto& [a, e] : atoms_) {
      if (e == g) num.push_back(&a);
      else if (e == -g) den.push_back(&a);
    }
    std::size_t nn = 0, nd = 0;
    std::string text = product_text(num, &nn);
    if (!den.empty()) {
      std::string d = product_text(den, &nd);
      text += "/" + (nd > 1 ? "(" + d + ")" : d);
    }
    if (g != 1) {
      const bool single = den.empty() && nn == 1;
      text = (single ? text : "(" + text + ")") + exponent_suffix(g);
    }
    groups.push_back(text);
  }
  std::string out;
  for (const auto& g : groups) out += (out.empty() ? "" : "*") + g;
  return out;
}

std::string LogMonomial::condition_string() const {
  auto side = [&](int s) {
    std::string out;
    mpz_class integer = 1;
    for (const auto& [a, e] : atoms_) {
      if (sgn(e) != s) continue;
      const Rational mag = abs(e);
      if (a.kind == Atom::Kind::Prime && is_integer(mag)) {
        for (long i = 0; i < mag.get_num().get_si(); ++i) integer *= a.prime;
        continue;
      }
      out += (out.empty() ? "" : "*") + atom_text(a) + exponent_suffix(mag);
    }
    if (integer != 1) out = integer.get_str() + (out.empty() ? "" : "*" + out);
    return out.empty() ? std::string("1") : out;
  };
  return side(1) + " = " + side(-1);
}

}  // namespace crnkit
