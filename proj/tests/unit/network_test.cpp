#include "crnkit/errors.hpp"
#include "crnkit/models.hpp"
#include "crnkit/network.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace crnkit;

namespace {

Network shuffled(const Network& net, unsigned seed) {
  std::vector<Reaction> rx = net.reactions();
  std::mt19937 rng(seed);
  std::shuffle(rx.begin(), rx.end(), rng);
  return Network(net.name(), net.species(), rx);
}

}  // namespace

TEST(Parse, DocModel) {
  const Network net = load_builtin("doc");
  EXPECT_EQ(net.species_count(), 5u);
  EXPECT_EQ(net.reaction_count(), 7u);
  EXPECT_EQ(net.complex_count(), 6u);
  EXPECT_EQ(net.unbound_order_symbols().size(), 4u);
}

TEST(Parse, MassActionDefault) {
  const Network net = parse_network("species A B\nreaction A -> B\n");
  EXPECT_EQ(net.reactions()[0].label, "R1");
  const ExactMatrix F = kinetic_order_matrix(net);
  EXPECT_EQ(F(0, 0), 1);
  EXPECT_EQ(F(0, 1), 0);
  const auto mats = build_matrices(net);
  EXPECT_EQ(mats.N(0, 0), -1);
  EXPECT_EQ(mats.N(1, 0), 1);
}

TEST(Parse, CompactComplexSyntax) {
  const Network net = parse_network("species A1 A2\nreaction R1: A1+2A2 -> 2A1 + A2 rate k1 orders A1=3/2 A2=1.5\n");
  EXPECT_EQ(net.reactions()[0].reactant.at("A2"), 2);
  const ExactMatrix F = kinetic_order_matrix(net);
  EXPECT_EQ(F(0, 0), Rational(3, 2));
  EXPECT_EQ(F(0, 1), Rational(3, 2));
}

TEST(Parse, ErrorsCarryLineNumbers) {
  try {
    parse_network("network X\nspecies A B\n\nreaction R1: A -> A9\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("A9"), std::string::npos);
  }
  EXPECT_THROW(parse_network("species A B\nreaction R1: A -> B\nreaction R1: B -> A\n"), ParseError);
  EXPECT_THROW(parse_network("species A B\nreaction R1: A -> B rate -1\n"), ParseError);
  EXPECT_THROW(parse_network("species A B\nreaction R1: A -> B rate 0\n"), ParseError);
  EXPECT_THROW(parse_network("species A B\nreaction R1: A B\n"), ParseError);
  EXPECT_THROW(parse_network("species A B\nfrobnicate\n"), ParseError);
}

TEST(Parse, FormatRoundTrip) {
  const Network net = load_builtin("doc-dac");
  const Network again = parse_network(format_network(net));
  EXPECT_EQ(format_network(again), format_network(net));
  EXPECT_EQ(network_numbers(again), network_numbers(net));
}

TEST(Bindings, ParseSpaceAndComma) {
  const Bindings b = parse_bindings("p1=3/2 q1=1,k1=0.5 # note\nk2=2");
  EXPECT_EQ(b.at("p1"), Rational(3, 2));
  EXPECT_EQ(b.at("k1"), Rational(1, 2));
  EXPECT_EQ(b.size(), 4u);
  EXPECT_THROW(parse_bindings("p1"), InputError);
  EXPECT_THROW(parse_bindings("p1=x"), InputError);
}

TEST(Matrices, DocStoichiometryMatchesDisplay) {
  const auto mats = build_matrices(load_builtin("doc"));
  const ExactMatrix expected{{1, -1, 0, 0, 0, 0, 0},
                             {-1, 1, -1, 1, 1, 0, 0},
                             {0, 0, 1, -1, 0, 0, -1},
                             {0, 0, 0, 0, -1, 1, 0},
                             {0, 0, 0, 0, 0, -1, 1}};
  EXPECT_EQ(mats.N, expected);
  EXPECT_EQ(mats.Y * mats.Ia, mats.N);
  EXPECT_EQ(mats.N.rank(), 4u);
}

TEST(Numbers, BuiltinModels) {
  const NetworkNumbers doc_expected{5, 6, 6, 2, 3, 7, 2, 2, 2, 4, 0};
  const NetworkNumbers int_expected{6, 7, 7, 2, 5, 9, 2, 2, 2, 5, 0};
  EXPECT_EQ(network_numbers(load_builtin("doc")), doc_expected);
  EXPECT_EQ(network_numbers(load_builtin("dac")), doc_expected);
  EXPECT_EQ(network_numbers(load_builtin("doc-dac")), int_expected);
}

TEST(Numbers, ReversiblePair) {
  const Network net = parse_network("species A B\nreaction A -> B\nreaction B -> A\n");
  const NetworkNumbers expected{2, 2, 2, 1, 0, 2, 1, 1, 1, 1, 0};
  EXPECT_EQ(network_numbers(net), expected);
}

TEST(Numbers, InvariantUnderReactionShuffle) {
  for (const auto* id : {"doc", "dac", "doc-dac"}) {
    const Network net = load_builtin(id);
    for (unsigned seed = 0; seed < 10; ++seed) {
      const Network other = shuffled(net, seed);
      ASSERT_EQ(network_numbers(other), network_numbers(net)) << id << " seed " << seed;
      // Re-parsing the shuffled text must give the same answer too.
      ASSERT_EQ(network_numbers(parse_network(format_network(other))), network_numbers(net));
    }
  }
}

TEST(Flags, BuiltinModelsHaveAllFlags) {
  for (const auto* id : {"doc", "dac", "doc-dac"}) {
    const Network net = load_builtin(id);
    const auto f = structural_flags(net);
    EXPECT_TRUE(f.weakly_reversible) << id;
    EXPECT_TRUE(f.conservative) << id;
    EXPECT_TRUE(f.positive_dependent) << id;
    EXPECT_TRUE(f.independent_linkage_classes) << id;
    EXPECT_TRUE(f.maximally_closed) << id;
    EXPECT_TRUE(f.high_reactant_diversity) << id;
    EXPECT_EQ(f.concordance, "unsupported");
    // Certificates are checked directly against N.
    const auto N = build_matrices(net).N;
    for (std::size_t j = 0; j < N.cols(); ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < N.rows(); ++i) s += f.conservation_certificate[i] * N(i, j);
      EXPECT_EQ(s, 0);
    }
    for (const auto& w : f.conservation_certificate) EXPECT_GT(w, 0);
    const auto Nv = N.apply(f.dependence_certificate);
    for (const auto& v : Nv) EXPECT_EQ(v, 0);
    for (const auto& v : f.dependence_certificate) EXPECT_GT(v, 0);
  }
}

TEST(Flags, IrreversibleChain) {
  const auto f = structural_flags(parse_network("species A B C\nreaction A -> B\nreaction B -> C\n"));
  EXPECT_FALSE(f.weakly_reversible);
  EXPECT_TRUE(f.conservative);
  EXPECT_FALSE(f.positive_dependent);
}

TEST(OdeRhs, ReferenceRatesAtUnitState) {
  const Network net = load_builtin("doc");
  Bindings b = merge_bindings(reference_rates(), order_preset("sim-pnull").orders.to_bindings());
  const std::vector<double> x(5, 1.0);
  const auto f = ode_rhs(net, b, x);
  EXPECT_NEAR(f[2], -0.4, 1e-15);
  EXPECT_NEAR(std::accumulate(f.begin(), f.end(), 0.0), 0.0, 1e-15);
}

TEST(OdeRhs, SumIsZeroForRandomStates) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (const auto* id : {"doc", "dac", "doc-dac"}) {
    const Network net = load_builtin(id);
    const Bindings b = merge_bindings(builtin_model(id).default_rates, order_preset("positive").orders.to_bindings());
    const PowerLawSystem sys(net, b);
    for (int t = 0; t < 50; ++t) {
      std::vector<double> x(net.species_count());
      for (auto& v : x) v = u(rng);
      const auto f = sys.rhs(x);
      double sum = 0, scale = 0;
      for (double v : f) sum += v, scale += std::abs(v);
      ASSERT_LE(std::abs(sum), 1e-14 * std::max(1.0, scale));
    }
  }
}

TEST(OdeRhs, FractionalPowerAtZeroIsDomainError) {
  const Network net = load_builtin("doc");
  Bindings b = merge_bindings(reference_rates(), order_preset("sim-pnull").orders.to_bindings());
  const std::vector<double> x{1.0, 0.0, 1.0, 1.0, 1.0};
  EXPECT_THROW(ode_rhs(net, b, x), DomainError);
  EXPECT_THROW(ode_rhs(net, reference_rates(), std::vector<double>(5, 1.0)), InputError);
}

TEST(OdeRhs, ExactAgreesWithDoubleForIntegerOrders) {
  const Network net = load_builtin("doc");
  const Bindings b = merge_bindings(reference_rates(), order_preset("degenerate").orders.to_bindings());
  const PowerLawSystem sys(net, b);
  const std::vector<Rational> x{Rational(1, 2), Rational(3, 4), Rational(1), Rational(2), Rational(1, 3)};
  std::vector<double> xd;
  for (const auto& v : x) xd.push_back(v.get_d());
  const auto exact = sys.rhs_exact(x);
  const auto approx = sys.rhs(xd);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(exact[i].get_d(), approx[i], 1e-15);
}
