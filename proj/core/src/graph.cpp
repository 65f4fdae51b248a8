#include "crnkit/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace crnkit {
namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

// Renumbers ids so that components appear in order of their smallest node.
std::vector<std::size_t> canonical(const std::vector<std::size_t>& raw) {
  std::vector<std::size_t> remap(raw.size() + 1, kUnset);
  std::vector<std::size_t> out(raw.size());
  std::size_t next = 0;
  for (std::size_t v = 0; v < raw.size(); ++v) {
    if (remap[raw[v]] == kUnset) remap[raw[v]] = next++;
    out[v] = remap[raw[v]];
  }
  return out;
}

}  // namespace

std::vector<std::size_t> weak_components(std::size_t nodes, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : edges) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::size_t> raw(nodes);
  for (std::size_t v = 0; v < nodes; ++v) raw[v] = find(v);
  return canonical(raw);
}

std::vector<std::size_t> strong_components(std::size_t nodes, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (const auto& [a, b] : edges) adj[a].push_back(b);

  // Iterative Tarjan.
  std::vector<std::size_t> index(nodes, kUnset), low(nodes, 0), comp(nodes, kUnset);
  std::vector<bool> on_stack(nodes, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;
  std::size_t counter = 0, comps = 0;
  for (std::size_t s = 0; s < nodes; ++s) {
    if (index[s] != kUnset) continue;
    call.emplace_back(s, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (next < adj[v].size()) {
        const std::size_t w = adj[v][next++];
        if (index[w] == kUnset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
      const std::size_t finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }
  return canonical(comp);
}

std::vector<bool> terminal_components(std::size_t nodes, const std::vector<Edge>& edges,
                                      const std::vector<std::size_t>& strong) {
  std::vector<bool> terminal(component_count(strong), true);
  for (const auto& [a, b] : edges)
    if (strong[a] != strong[b]) terminal[strong[a]] = false;
  (void)nodes;
  return terminal;
}

std::size_t component_count(const std::vector<std::size_t>& ids) {
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

}  // namespace crnkit
