#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace crnkit {

using Edge = std::pair<std::size_t, std::size_t>;

// Component ids are assigned in order of first node, starting at 0.
std::vector<std::size_t> weak_components(std::size_t nodes, const std::vector<Edge>& edges);
std::vector<std::size_t> strong_components(std::size_t nodes, const std::vector<Edge>& edges);

/// A strong component is terminal when no edge leaves it.
std::vector<bool> terminal_components(std::size_t nodes, const std::vector<Edge>& edges,
                                      const std::vector<std::size_t>& strong);

std::size_t component_count(const std::vector<std::size_t>& ids);

}  // namespace crnkit
