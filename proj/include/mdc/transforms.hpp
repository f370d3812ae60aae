#pragma once

#include <algorithm>
#include <vector>

#include "mdc/graph.hpp"

namespace mdc {

/// G ∨ H: disjoint union plus all cross edges. H's vertices are relabeled
/// above G's. Edge order: G's edges, H's edges, then cross pairs (u, nG+w)
/// lexicographically.
inline Graph join(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.push_back({e.u + ng, e.v + ng});
  for (int u = 0; u < ng; ++u)
    for (int w = 0; w < nh; ++w) edges.push_back({u, ng + w});
  return Graph(ng + nh, std::move(edges));
}

/// G²: u,v adjacent iff d_G(u,v) ≤ 2. Edges in lexicographic order.
inline Graph square(const Graph& g) {
  if (g.edge_count() < 1) throw domain_error("square: graph must have at least one edge");
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  std::vector<char> near(n, 0);
  for (int u = 0; u < n; ++u) {
    std::fill(near.begin(), near.end(), 0);
    for (const auto& [w, e1] : g.incident(u)) {
      (void)e1;
      near[w] = 1;
      for (const auto& [x, e2] : g.incident(w)) {
        (void)e2;
        near[x] = 1;
      }
    }
    for (int v = u + 1; v < n; ++v)
      if (near[v]) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

/// L(G): vertices are G's edge ids, adjacent iff the edges share an endpoint.
/// Edges in lexicographic (i,j) order over edge-id pairs.
inline Graph line_graph(const Graph& g) {
  if (g.edge_count() < 1) throw domain_error("line_graph: graph must have at least one edge");
  const int m = g.edge_count();
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Edge a = g.edge(i), b = g.edge(j);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) edges.push_back({i, j});
    }
  return Graph(m, std::move(edges));
}

}  // namespace mdc
