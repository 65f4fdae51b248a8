#include "crnkit/decomposition.hpp"

#include "crnkit/errors.hpp"
#include "crnkit/graph.hpp"

#include <algorithm>
#include <map>

namespace crnkit {

bool Decomposition::independent() const {
  std::size_t sum = 0;
  for (auto r : part_ranks) sum += r;
  return sum == whole_rank;
}

std::vector<std::vector<std::string>> Decomposition::labels(const Network& net) const {
  std::vector<std::vector<std::string>> out;
  for (const auto& part : parts) {
    auto& names = out.emplace_back();
    for (auto j : part) names.push_back(net.reactions()[j].label);
  }
  return out;
}

Decomposition finest_independent_decomposition(const Network& net) {
  const ExactMatrix N = build_matrices(net).N;
  const std::size_t r = net.reaction_count();
  const auto echelon = N.rref();
  const auto& basis = echelon.pivots;
  const ExactMatrix B = N.select_columns(basis);

  std::vector<Edge> links;
  std::vector<bool> in_basis(r, false);
  for (auto b : basis) in_basis[b] = true;
  for (std::size_t j = 0; j < r; ++j) {
    if (in_basis[j]) continue;
    ExactMatrix rhs(N.rows(), 1);
    for (std::size_t i = 0; i < N.rows(); ++i) rhs(i, 0) = N(i, j);
    const auto coords = B.solve(rhs);
    if (!coords) throw NumericalError("reaction vector outside the span of the pivot basis");
    std::vector<std::size_t> circuit{j};
    for (std::size_t k = 0; k < basis.size(); ++k)
      if ((*coords)(k, 0) != 0) circuit.push_back(basis[k]);
    for (std::size_t a = 1; a < circuit.size(); ++a) links.emplace_back(circuit[0], circuit[a]);
  }
  const auto comp = weak_components(r, links);
  Decomposition out;
  out.parts.resize(component_count(comp));
  for (std::size_t j = 0; j < r; ++j) out.parts[comp[j]].push_back(j);
  for (const auto& part : out.parts) out.part_ranks.push_back(N.select_columns(part).rank());
  out.whole_rank = basis.size();
  return out;
}

void validate_partition(const Network& net, const Partition& partition) {
  std::vector<int> seen(net.reaction_count(), 0);
  for (const auto& part : partition) {
    if (part.empty()) throw InputError("partition contains an empty part");
    for (auto j : part) {
      if (j >= net.reaction_count()) throw InputError("partition references a missing reaction");
      if (++seen[j] > 1) throw InputError("reaction " + net.reactions()[j].label + " appears in two parts");
    }
  }
  for (std::size_t j = 0; j < seen.size(); ++j)
    if (seen[j] == 0) throw InputError("reaction " + net.reactions()[j].label + " is not in any part");
}

Partition partition_from_labels(const Network& net, const std::vector<std::vector<std::string>>& labels) {
  Partition out;
  for (const auto& part : labels) {
    auto& idx = out.emplace_back();
    for (const auto& l : part) {
      auto j = net.reaction_index(l);
      if (!j) throw InputError("unknown reaction label '" + l + "'");
      idx.push_back(*j);
    }
  }
  validate_partition(net, out);
  return out;
}

RankReport verify_independence(const Network& net, const Partition& partition) {
  validate_partition(net, partition);
  const ExactMatrix N = build_matrices(net).N;
  RankReport out;
  out.whole_rank = N.rank();
  std::size_t sum = 0;
  for (const auto& part : partition) {
    out.part_ranks.push_back(N.select_columns(part).rank());
    sum += out.part_ranks.back();
  }
  out.independent = sum == out.whole_rank;
  return out;
}

namespace {

// Kinetic-order column per distinct reactant complex, checking consistency.
ExactMatrix reactant_kinetic_columns(const Network& net, const std::vector<std::size_t>& reactants) {
  const ExactMatrix F = kinetic_order_matrix(net);
  const std::size_t m = net.species_count();
  ExactMatrix out(m, reactants.size());
  for (std::size_t c = 0; c < reactants.size(); ++c) {
    bool set = false;
    for (std::size_t j = 0; j < net.reaction_count(); ++j) {
      if (net.reactant_of(j) != reactants[c]) continue;
      for (std::size_t s = 0; s < m; ++s) {
        if (!set) {
          out(s, c) = F(j, s);
        } else if (out(s, c) != F(j, s)) {
          throw UnsupportedError("reactant complex " + complex_to_string(net.complexes()[reactants[c]]) +
                                 " carries two different kinetic-order vectors");
        }
      }
      set = true;
    }
  }
  return out;
}

}  // namespace

ExactMatrix t_hat_matrix(const Network& net, const Partition& partition) {
  validate_partition(net, partition);
  const auto reactants = reactant_complexes(net);
  ExactMatrix species_rows = reactant_kinetic_columns(net, reactants);
  ExactMatrix indicators(partition.size(), reactants.size());
  for (std::size_t p = 0; p < partition.size(); ++p)
    for (auto j : partition[p]) {
      const auto c = static_cast<std::size_t>(
          std::find(reactants.begin(), reactants.end(), net.reactant_of(j)) - reactants.begin());
      indicators(p, c) = 1;
    }
  return species_rows.append_rows(indicators);
}

RankReport verify_t_hat_independence(const Network& net, const Partition& partition) {
  RankReport out;
  out.whole_rank = t_hat_matrix(net, partition).rank();
  std::size_t sum = 0;
  for (const auto& part : partition) {
    // The part on its own has a single indicator row of ones.
    std::vector<std::size_t> reactants;
    for (auto j : part)
      if (std::find(reactants.begin(), reactants.end(), net.reactant_of(j)) == reactants.end())
        reactants.push_back(net.reactant_of(j));
    ExactMatrix sub = reactant_kinetic_columns(net, reactants);
    ExactMatrix ones(1, reactants.size());
    for (std::size_t c = 0; c < reactants.size(); ++c) ones(0, c) = 1;
    out.part_ranks.push_back(sub.append_rows(ones).rank());
    sum += out.part_ranks.back();
  }
  out.independent = sum == out.whole_rank;
  return out;
}

Partition merge_shared_reactants(const Network& net, const Partition& partition) {
  validate_partition(net, partition);
  std::vector<Edge> links;
  for (std::size_t a = 0; a < partition.size(); ++a)
    for (std::size_t b = a + 1; b < partition.size(); ++b)
      for (auto i : partition[a])
        for (auto j : partition[b])
          if (net.reactant_of(i) == net.reactant_of(j)) links.push_back({a, b});
  const auto comp = weak_components(partition.size(), links);
  std::map<std::size_t, std::vector<std::size_t>> grouped;
  for (std::size_t p = 0; p < partition.size(); ++p)
    grouped[comp[p]].insert(grouped[comp[p]].end(), partition[p].begin(), partition[p].end());
  Partition out;
  for (auto& [id, part] : grouped) {
    std::sort(part.begin(), part.end());
    out.push_back(std::move(part));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace crnkit
