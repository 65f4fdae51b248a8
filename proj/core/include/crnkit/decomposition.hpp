#pragma once

#include "crnkit/matrix.hpp"
#include "crnkit/network.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace crnkit {

/// Reaction indices per part.
using Partition = std::vector<std::vector<std::size_t>>;

struct Decomposition {
  Partition parts;                    ///< sorted indices, parts ordered by first reaction
  std::vector<std::size_t> part_ranks;
  std::size_t whole_rank = 0;

  [[nodiscard]] bool independent() const;
  [[nodiscard]] std::vector<std::vector<std::string>> labels(const Network& net) const;
};

/// Finest partition whose stoichiometric subspaces form a direct sum: components of the
/// graph linking each non-basis reaction vector to the basis vectors in its expansion.
Decomposition finest_independent_decomposition(const Network& net);

struct RankReport {
  bool independent = false;
  std::vector<std::size_t> part_ranks;
  std::size_t whole_rank = 0;
};

/// Throws InputError when the partition does not cover the reactions exactly once.
void validate_partition(const Network& net, const Partition& partition);
Partition partition_from_labels(const Network& net, const std::vector<std::vector<std::string>>& labels);

/// Rank-sum test on stoichiometric matrices.
RankReport verify_independence(const Network& net, const Partition& partition);

/// Columns are the distinct reactant complexes; rows are species kinetic orders followed
/// by one indicator row per part. Orders must be bound. Throws UnsupportedError when two
/// reactions from one reactant complex carry different kinetic-order vectors.
ExactMatrix t_hat_matrix(const Network& net, const Partition& partition);
/// Rank-sum test on the augmented kinetic-order matrices.
RankReport verify_t_hat_independence(const Network& net, const Partition& partition);

/// Merges parts that share a reactant complex, transitively. Rank-sum
/// independence survives merging, and no T̂ column is split across parts.
Partition merge_shared_reactants(const Network& net, const Partition& partition);

}  // namespace crnkit
