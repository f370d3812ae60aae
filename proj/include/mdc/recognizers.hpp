#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "mdc/graph.hpp"

namespace mdc {

/// True iff every edge lies in some triangle.
inline bool is_triangular(const Graph& g) {
  AdjBits bits(g);
  for (const Edge& e : g.edges())
    if (bits.common_count(e.u, e.v) == 0) return false;
  return true;
}

/// Chordality via maximum-cardinality search, then explicit verification
/// that the returned order v_1..v_n is simplicial (each vertex's neighbors
/// among the later vertices form a clique). Absent when G is not chordal.
inline std::optional<std::vector<int>> is_chordal(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0), visit_order;
  std::vector<char> visited(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
    visited[best] = 1;
    visit_order.push_back(best);
    for (const auto& [w, e] : g.incident(best)) {
      (void)e;
      if (!visited[w]) ++weight[w];
    }
  }
  // MCS visits a reverse perfect elimination order; reverse it.
  std::vector<int> order(visit_order.rbegin(), visit_order.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  AdjBits bits(g);
  for (int i = 0; i < n; ++i) {
    std::vector<int> later;
    for (const auto& [w, e] : g.incident(order[i])) {
      (void)e;
      if (pos[w] > i) later.push_back(w);
    }
    for (size_t a = 0; a < later.size(); ++a)
      for (size_t b = a + 1; b < later.size(); ++b)
        if (!bits.get(later[a], later[b])) return std::nullopt;
  }
  return order;
}

/// Complete-multipartite recognition: parts are the components of the
/// complement; valid iff no part contains an edge of G. K_n yields n
/// singleton parts. Parts ordered by smallest contained vertex.
inline std::optional<std::vector<std::vector<int>>> is_complete_multipartite(const Graph& g) {
  const auto parts = components(complement(g));
  for (const auto& part : parts)
    for (size_t a = 0; a < part.size(); ++a)
      for (size_t b = a + 1; b < part.size(); ++b)
        if (g.adjacent(part[a], part[b])) return std::nullopt;
  return parts;
}

}  // namespace mdc
