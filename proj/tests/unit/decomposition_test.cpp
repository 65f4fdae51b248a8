#include "crnkit/decomposition.hpp"
#include "crnkit/errors.hpp"
#include "crnkit/models.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

using namespace crnkit;

namespace {

Network doc_with(const char* preset) {
  return bind_orders(load_builtin("doc"), order_preset(preset).orders.to_bindings());
}

// All set partitions of {0..n-1}, by restricted growth strings.
std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      Partition p(used);
      for (std::size_t j = 0; j < n; ++j) p[a[j]].push_back(j);
      out.push_back(p);
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      a[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

std::size_t oracle_rank(const ExactMatrix& N, const std::vector<std::size_t>& cols) {
  oracle::Mat m(N.rows());
  for (std::size_t i = 0; i < N.rows(); ++i)
    for (auto c : cols) m[i].push_back(N(i, c));
  return oracle::rank(m);
}

std::set<std::set<std::size_t>> as_sets(const Partition& p) {
  std::set<std::set<std::size_t>> out;
  for (const auto& part : p) out.emplace(part.begin(), part.end());
  return out;
}

Network random_network(std::mt19937& rng, std::size_t reactions) {
  const std::vector<std::string> species{"X1", "X2", "X3", "X4"};
  std::uniform_int_distribution<int> coeff(0, 2);
  std::vector<Reaction> rx;
  while (rx.size() < reactions) {
    Complex a, b;
    for (const auto& s : species) {
      if (int c = coeff(rng); c > 0 && coeff(rng) == 0) a[s] = c;
      if (int c = coeff(rng); c > 0 && coeff(rng) == 0) b[s] = c;
    }
    if (a == b) continue;
    rx.push_back({"R" + std::to_string(rx.size() + 1), a, b, std::string("k") + std::to_string(rx.size() + 1),
                  std::nullopt, 0});
  }
  return Network("random", species, rx);
}

}  // namespace

TEST(Decomposition, DocFinest) {
  const Network net = load_builtin("doc");
  const auto d = finest_independent_decomposition(net);
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.labels(net)[0], (std::vector<std::string>{"R1", "R2"}));
  EXPECT_EQ(d.labels(net)[1], (std::vector<std::string>{"R3", "R4", "R5", "R6", "R7"}));
  EXPECT_EQ(d.part_ranks, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(d.whole_rank, 4u);
  EXPECT_TRUE(d.independent());
}

TEST(Decomposition, IntegratedRankSum) {
  const Network net = load_builtin("doc-dac");
  const auto d = finest_independent_decomposition(net);
  EXPECT_EQ(d.whole_rank, 5u);
  EXPECT_TRUE(verify_independence(net, d.parts).independent);
  std::size_t sum = 0;
  for (const auto& p : d.parts) sum += oracle_rank(build_matrices(net).N, p);
  EXPECT_EQ(sum, 5u);
}

TEST(Decomposition, SingleReaction) {
  const Network net = parse_network("species A B\nreaction A -> B\n");
  const auto d = finest_independent_decomposition(net);
  EXPECT_EQ(d.parts.size(), 1u);
  EXPECT_TRUE(d.independent());
}

TEST(Independence, SplitDocIsDependent) {
  const Network net = load_builtin("doc");
  const auto good = verify_independence(net, partition_from_labels(net, {{"R1", "R2"}, {"R3", "R4", "R5", "R6", "R7"}}));
  EXPECT_TRUE(good.independent);
  const auto bad = verify_independence(net, partition_from_labels(net, {{"R1"}, {"R2", "R3", "R4", "R5", "R6", "R7"}}));
  EXPECT_FALSE(bad.independent);
  EXPECT_EQ(bad.part_ranks, (std::vector<std::size_t>{1, 4}));
  Partition whole(1);
  for (std::size_t j = 0; j < net.reaction_count(); ++j) whole[0].push_back(j);
  EXPECT_TRUE(verify_independence(net, whole).independent);
}

TEST(Independence, RejectsBadPartitions) {
  const Network net = load_builtin("doc");
  EXPECT_THROW(partition_from_labels(net, {{"R1", "R2"}}), InputError);
  EXPECT_THROW(partition_from_labels(net, {{"R1", "R2", "R3", "R4", "R5", "R6", "R7"}, {"R1"}}), InputError);
  EXPECT_THROW(partition_from_labels(net, {{"R9"}}), InputError);
}

TEST(THat, NonDegenerateRanks) {
  const Network net = doc_with("sim-generic");
  const auto d = finest_independent_decomposition(net);
  const auto T = t_hat_matrix(net, d.parts);
  EXPECT_EQ(T.rows(), 7u);
  EXPECT_EQ(T.cols(), 6u);
  const auto rep = verify_t_hat_independence(net, d.parts);
  EXPECT_EQ(rep.whole_rank, 6u);
  EXPECT_EQ(rep.part_ranks, (std::vector<std::size_t>{2, 4}));
  EXPECT_TRUE(rep.independent);
}

TEST(THat, DegenerateRanks) {
  const Network net = doc_with("degenerate");
  const auto d = finest_independent_decomposition(net);
  const auto rep = verify_t_hat_independence(net, d.parts);
  EXPECT_EQ(rep.whole_rank, 5u);
  EXPECT_EQ(rep.part_ranks, (std::vector<std::size_t>{1, 4}));
  EXPECT_TRUE(rep.independent);
}

TEST(THat, DuplicateReactionSplit) {
  const Network net = parse_network("species A B\nreaction R1: A -> B\nreaction R2: A -> B\n");
  const auto rep = verify_t_hat_independence(net, {{0}, {1}});
  EXPECT_EQ(rep.whole_rank, 1u);
  EXPECT_FALSE(rep.independent);
}

TEST(THat, ConflictingOrdersUnsupported) {
  const Network net = parse_network(
      "species A B C\nreaction R1: A -> B orders A=1\nreaction R2: A -> C orders A=2\n");
  EXPECT_THROW(t_hat_matrix(net, {{0, 1}}), UnsupportedError);
}

TEST(Decomposition, MatchesBruteForceOnRandomNetworks) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 2 + trial % 5;
    const Network net = random_network(rng, r);
    const ExactMatrix N = build_matrices(net).N;
    const std::size_t whole = oracle_rank(N, [&] {
      std::vector<std::size_t> all(r);
      for (std::size_t j = 0; j < r; ++j) all[j] = j;
      return all;
    }());
    // The finest independent partition is the independent one with most parts.
    Partition best;
    for (const auto& p : all_partitions(r)) {
      std::size_t sum = 0;
      for (const auto& part : p) sum += oracle_rank(N, part);
      if (sum == whole && p.size() > best.size()) best = p;
    }
    const auto d = finest_independent_decomposition(net);
    ASSERT_EQ(as_sets(d.parts), as_sets(best)) << format_network(net);
  }
}

TEST(Decomposition, MergingPartsStaysIndependent) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = random_network(rng, 6);
    const auto d = finest_independent_decomposition(net);
    for (std::size_t a = 0; a < d.parts.size(); ++a)
      for (std::size_t b = a + 1; b < d.parts.size(); ++b) {
        Partition merged;
        std::vector<std::size_t> joint = d.parts[a];
        joint.insert(joint.end(), d.parts[b].begin(), d.parts[b].end());
        merged.push_back(joint);
        for (std::size_t c = 0; c < d.parts.size(); ++c)
          if (c != a && c != b) merged.push_back(d.parts[c]);
        ASSERT_TRUE(verify_independence(net, merged).independent);
      }
  }
}

TEST(Decomposition, ReorderInvariant) {
  for (const auto* id : {"doc", "dac", "doc-dac"}) {
    const Network net = load_builtin(id);
    const auto base = finest_independent_decomposition(net).labels(net);
    std::set<std::set<std::string>> expected;
    for (const auto& p : base) expected.emplace(p.begin(), p.end());
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
      std::vector<Reaction> rx = net.reactions();
      std::shuffle(rx.begin(), rx.end(), rng);
      const Network other(net.name(), net.species(), rx);
      std::set<std::set<std::string>> got;
      for (const auto& p : finest_independent_decomposition(other).labels(other)) got.emplace(p.begin(), p.end());
      ASSERT_EQ(got, expected) << id;
    }
  }
}
