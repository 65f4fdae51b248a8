#include "crnkit/monomial.hpp"
#include "crnkit/network.hpp"
#include "crnkit/polynomial.hpp"

#include <gtest/gtest.h>

using crnkit::LogMonomial;
using crnkit::Polynomial;
using crnkit::Rational;

namespace {
Polynomial v(const char* s) { return Polynomial::variable(s); }
}  // namespace

TEST(SymbolOrder, NumericSuffixes) {
  crnkit::SymbolLess less;
  EXPECT_TRUE(less("k2", "k10"));
  EXPECT_TRUE(less("A4", "A17"));
  EXPECT_FALSE(less("k10", "k2"));
  EXPECT_TRUE(less("k9", "p1"));
}

TEST(Polynomial, ArithmeticAndPrinting) {
  const Polynomial p = v("k4") + v("k7");
  const Polynomial q = v("k5") * v("k6") * p;
  EXPECT_EQ(q.term_count(), 2u);
  EXPECT_EQ(p.to_string(), "k4 + k7");
  EXPECT_EQ((p - p).is_zero(), true);
  EXPECT_EQ((p * p).term_count(), 3u);
  const auto content = q.monomial_content();
  EXPECT_EQ(content.to_string(), "k5*k6");
  EXPECT_EQ(q.divide_monomial(content), p);
}

TEST(Polynomial, EvaluateAndSubstitute) {
  const Polynomial p = Polynomial(Rational(3)) * v("x") * v("x") - v("y");
  const double val = p.evaluate<double>([](const std::string& s) { return s == "x" ? 2.0 : 5.0; });
  EXPECT_DOUBLE_EQ(val, 7.0);
  crnkit::Bindings b{{"x", Rational(1, 2)}};
  EXPECT_EQ(p.substitute(b), Polynomial(Rational(3, 4)) - v("y"));
}

TEST(LogMonomial, FromPolynomialSplitsContent) {
  const Polynomial K = Polynomial(Rational(2)) * v("k5") * v("k6") * (v("k4") + v("k7"));
  const LogMonomial m = LogMonomial::from_polynomial(K);
  EXPECT_EQ(m.atoms().size(), 4u);
  EXPECT_EQ(m.to_string(), "2*k5*k6*(k4 + k7)");
}

TEST(LogMonomial, RatiosPrintLikeFractions) {
  const LogMonomial a = LogMonomial::symbol("k3") / LogMonomial::from_polynomial(v("k4") + v("k7"));
  EXPECT_EQ(a.to_string(), "k3/(k4 + k7)");
  const LogMonomial b = (LogMonomial::symbol("k1") / LogMonomial::symbol("k2")).pow(Rational(2));
  EXPECT_EQ(b.to_string(), "(k1/k2)^(2)");
  EXPECT_EQ((LogMonomial::symbol("k1") / LogMonomial::symbol("k2")).condition_string(), "k1 = k2");
  EXPECT_TRUE((b / b).is_one());
}

TEST(LogMonomial, NumericConstantsFactor) {
  const LogMonomial six = LogMonomial::constant(Rational(6));
  const LogMonomial two_three = LogMonomial::constant(Rational(2)) * LogMonomial::constant(Rational(3));
  EXPECT_EQ(six, two_three);
  EXPECT_TRUE(six.is_numeric());
  EXPECT_TRUE(LogMonomial::constant(Rational(1)).is_one());
}

TEST(LogMonomial, EvaluatesNumerically) {
  const LogMonomial m = (LogMonomial::symbol("k1") / LogMonomial::symbol("k2")).pow(Rational(1, 2));
  const double val = m.evaluate<double>([](const std::string& s) { return s == "k1" ? 9.0 : 4.0; });
  EXPECT_NEAR(val, 1.5, 1e-14);
  crnkit::Bindings b{{"k1", Rational(9)}, {"k2", Rational(4)}};
  EXPECT_EQ((LogMonomial::symbol("k1") / LogMonomial::symbol("k2")).evaluate_exact(b), Rational(9, 4));
}
