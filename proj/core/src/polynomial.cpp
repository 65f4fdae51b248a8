#include "crnkit/polynomial.hpp"

#include "crnkit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace crnkit {
namespace {

std::pair<std::string_view, std::string_view> split_suffix(std::string_view s) {
  std::size_t cut = s.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1])) != 0) --cut;
  return {s.substr(0, cut), s.substr(cut)};
}

}  // namespace

bool SymbolLess::operator()(std::string_view a, std::string_view b) const {
  auto [pa, da] = split_suffix(a);
  auto [pb, db] = split_suffix(b);
  if (pa != pb) return pa < pb;
  // Compare digit strings numerically without overflow.
  auto strip = [](std::string_view d) {
    while (d.size() > 1 && d.front() == '0') d.remove_prefix(1);
    return d;
  };
  std::string_view na = strip(da), nb = strip(db);
  if (na.size() != nb.size()) return na.size() < nb.size();
  if (na != nb) return na < nb;
  return da < db;
}

Monomial::Monomial(std::string symbol, int power) {
  if (power < 0) throw InputError("negative power in monomial");
  if (power > 0) factors_.emplace_back(std::move(symbol), power);
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::power_of(std::string_view symbol) const {
  for (const auto& [s, p] : factors_)
    if (s == symbol) return p;
  return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  SymbolLess less;
  auto a = factors_.begin(), b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && less(a->first, b->first))) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || less(b->first, a->first)) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& rhs) const {
  Monomial out;
  for (const auto& [s, p] : factors_) {
    const int q = rhs.power_of(s);
    if (q > 0) out.factors_.emplace_back(s, std::min(p, q));
  }
  return out;
}

bool Monomial::divides(const Monomial& rhs) const {
  for (const auto& [s, p] : factors_)
    if (rhs.power_of(s) < p) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& rhs) const {
  if (!rhs.divides(*this)) throw InputError("monomial division is not exact");
  Monomial out;
  for (const auto& [s, p] : factors_) {
    const int left = p - rhs.power_of(s);
    if (left > 0) out.factors_.emplace_back(s, left);
  }
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [s, p] : factors_) {
    if (!out.empty()) out += '*';
    out += s;
    if (p != 1) out += "^" + std::to_string(p);
  }
  return out;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  // Graded order: lower degree first, then lexicographic over sorted factors.
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  SymbolLess less;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].first != fb[i].first) return less(fb[i].first, fa[i].first);
    if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
  }
  return fa.size() < fb.size();
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(std::string symbol) {
  Polynomial out;
  out.terms_.emplace(Monomial(std::move(symbol)), Rational(1));
  return out;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& coefficient) {
  Polynomial out;
  out.add_term(m, coefficient);
  return out;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out -= rhs;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

Polynomial Polynomial::substitute(const std::map<std::string, Rational, SymbolLess>& values) const {
  Polynomial out;
  for (const auto& [mono, coeff] : terms_) {
    Rational c = coeff;
    Monomial rest;
    for (const auto& [s, p] : mono.factors()) {
      auto it = values.find(s);
      if (it == values.end()) {
        rest = rest * Monomial(s, p);
      } else {
        Rational v = 1;
        for (int i = 0; i < p; ++i) v *= it->second;
        c *= v;
      }
    }
    out.add_term(rest, c);
  }
  return out;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) g = g.gcd(m);
  return g;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
  Polynomial out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono.divide(m), c);
  return out;
}

Rational Polynomial::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest-degree terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (m.is_one()) {
      os << crnkit::to_string(mag);
    } else {
      if (mag != 1) os << crnkit::to_string(mag) << '*';
      os << m.to_string();
    }
    first = false;
  }
  return os.str();
}

}  // namespace crnkit
