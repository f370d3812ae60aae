#pragma once

// Shared fixtures and generators for the test suites.

#include <utility>
#include <vector>

#include "mdc/blocks.hpp"
#include "mdc/constructions.hpp"
#include "mdc/graph.hpp"
#include "mdc/random.hpp"
#include "mdc/recognizers.hpp"

namespace mdc::testing {

inline Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) pairs.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) pairs.push_back({i, i + 5});
  for (int i = 0; i < 5; ++i) pairs.push_back({i + 5, (i + 2) % 5 + 5});
  return build_graph(10, pairs);
}

/// Two triangles sharing vertex 2.
inline Graph bowtie() {
  return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

/// K_n minus the edge (0,1).
inline Graph complete_minus_edge(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u == 0 && v == 1)) pairs.push_back({u, v});
  return build_graph(n, pairs);
}

/// Deletion test, independent of block_decomposition: connected, n >= 3,
/// and still connected after removing any one vertex.
inline bool is_two_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;
  for (int victim = 0; victim < n; ++victim) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      if (e.u == victim || e.v == victim) continue;
      edges.push_back({e.u - (e.u > victim), e.v - (e.v > victim)});
    }
    if (!is_connected(Graph(n - 1, std::move(edges)))) return false;
  }
  return true;
}

/// Random 2-connected chordal graph on n >= 3 vertices: grow from a
/// triangle by attaching each new vertex to a clique of size >= 2 (a random
/// edge extended by a random subset of its common neighborhood).
inline Graph random_two_connected_chordal(int n, SplitMix64& rng) {
  std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::vector<int>> adj(n);
  adj[0] = {1, 2};
  adj[1] = {0, 2};
  adj[2] = {0, 1};
  for (int v = 3; v < n; ++v) {
    const int idx = static_cast<int>(rng.next_below(pairs.size()));
    const auto [a, b] = pairs[idx];
    std::vector<int> clique{a, b};
    for (int w : adj[a])
      if (w != b && std::find(adj[b].begin(), adj[b].end(), w) != adj[b].end() &&
          rng.next_below(2) == 0) {
        // w adjacent to everything chosen so far?
        bool ok = true;
        for (int c : clique)
          if (c != a && c != b &&
              std::find(adj[w].begin(), adj[w].end(), c) == adj[w].end())
            ok = false;
        if (ok) clique.push_back(w);
      }
    for (int c : clique) {
      pairs.push_back({std::min(c, v), std::max(c, v)});
      adj[c].push_back(v);
      adj[v].push_back(c);
    }
  }
  return build_graph(n, pairs);
}

}  // namespace mdc::testing
