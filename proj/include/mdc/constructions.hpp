#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mdc/blocks.hpp"
#include "mdc/coloring.hpp"
#include "mdc/graph.hpp"

namespace mdc {

/// C_n with vertices 0..n-1 in cyclic order; edge j joins j and j+1,
/// edge n-1 closes the cycle.
inline Graph cycle_graph(int n) {
  if (n < 3) throw domain_error("cycle_graph: n must be >= 3");
  std::vector<Edge> edges;
  for (int j = 0; j + 1 < n; ++j) edges.push_back({j, j + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
  if (n < 1) throw domain_error("path_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (int j = 0; j + 1 < n; ++j) edges.push_back({j, j + 1});
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
  if (n < 1) throw domain_error("complete_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

/// Parts occupy consecutive vertex ranges in the given order; edges are all
/// cross-part pairs, lexicographic.
inline Graph complete_multipartite_graph(const std::vector<int>& parts) {
  if (parts.empty()) throw domain_error("complete_multipartite_graph: no parts");
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw domain_error("complete_multipartite_graph: part sizes must be >= 1");
    n += p;
  }
  std::vector<int> part_of(n);
  int v = 0;
  for (size_t id = 0; id < parts.size(); ++id)
    for (int i = 0; i < parts[id]; ++i) part_of[v++] = static_cast<int>(id);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part_of[a] != part_of[b]) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

inline Graph star_graph(int leaves) { return complete_multipartite_graph({1, leaves}); }

namespace detail {

/// Edge ids of a cycle graph in walk order, starting at vertex 0 toward its
/// smaller neighbor. Requires every vertex to have degree 2.
inline std::vector<int> cycle_walk_edges(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) throw domain_error("cycle_walk_edges: not a cycle");
  std::vector<int> order;
  int prev = 0;
  auto [a, ea] = g.incident(0)[0];
  auto [b, eb] = g.incident(0)[1];
  int cur = std::min(a, b);
  order.push_back(a < b ? ea : eb);
  while (cur != 0) {
    const auto& inc = g.incident(cur);
    const auto& step = (inc[0].first == prev) ? inc[1] : inc[0];
    prev = cur;
    cur = step.first;
    order.push_back(step.second);
  }
  return order;
}

/// The cycle construction on an arbitrary cycle graph: edge j of the walk
/// gets color (j mod floor(n/2)) + 1. Output indexed by the graph's edge
/// ids, canonical form.
inline EdgeColoring cycle_coloring(const Graph& cycle) {
  const auto walk = cycle_walk_edges(cycle);
  const int r = static_cast<int>(walk.size()) / 2;
  std::vector<int> colors(walk.size());
  for (int j = 0; j < static_cast<int>(walk.size()); ++j) colors[walk[j]] = j % r + 1;
  return canonicalize(EdgeColoring(std::move(colors)));
}

}  // namespace detail

/// C_n together with its extremal MD-coloring of floor(n/2) colors.
inline std::pair<Graph, EdgeColoring> color_cycle(int n) {
  if (n < 3) throw domain_error("color_cycle: n must be >= 3");
  Graph g = cycle_graph(n);
  EdgeColoring c = detail::cycle_coloring(g);
  return {std::move(g), std::move(c)};
}

/// All-distinct coloring of a tree: n-1 colors, every edge a bridge.
inline EdgeColoring color_tree(const Graph& t) {
  if (!is_connected(t) || t.edge_count() != t.vertex_count() - 1)
    throw domain_error("color_tree: input is not a tree");
  std::vector<int> colors(t.edge_count());
  std::iota(colors.begin(), colors.end(), 1);
  return EdgeColoring(std::move(colors));
}

/// Coloring of a connected unicyclic graph: the cycle takes the cycle
/// construction, each tree edge a fresh color; n - ceil(|C|/2) colors.
inline EdgeColoring color_unicyclic(const Graph& g) {
  const int n = g.vertex_count();
  if (!is_connected(g)) throw domain_error("color_unicyclic: graph is disconnected");
  if (g.edge_count() != n) throw domain_error("color_unicyclic: needs exactly n edges");
  // peel degree-1 vertices to expose the cycle
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) stack.push_back(v);
  std::vector<char> peeled(n, 0);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    peeled[v] = 1;
    for (const auto& [w, e] : g.incident(v)) {
      (void)e;
      if (!peeled[w] && --deg[w] == 1) stack.push_back(w);
    }
  }
  std::vector<int> cycle_edges;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!peeled[g.edge(e).u] && !peeled[g.edge(e).v]) cycle_edges.push_back(e);
  const Subgraph cycle = edge_subgraph(g, cycle_edges);
  const EdgeColoring on_cycle = detail::cycle_coloring(cycle.graph);
  const int r = on_cycle.palette();
  std::vector<int> colors(g.edge_count(), 0);
  for (size_t i = 0; i < cycle.edge_ids.size(); ++i)
    colors[cycle.edge_ids[i]] = on_cycle.colors[i];
  int fresh = r;
  for (int e = 0; e < g.edge_count(); ++e)
    if (colors[e] == 0) colors[e] = ++fresh;
  return canonicalize(EdgeColoring(std::move(colors)));
}

/// Assembles a global coloring from per-block MD-colorings using disjoint
/// color ranges; the palette is the sum of the block palettes. per_block[i]
/// must color block i of block_decomposition(g), edges in ascending
/// edge-id order.
inline EdgeColoring compose_block_colorings(const Graph& g,
                                            const std::vector<EdgeColoring>& per_block) {
  const BlockDecomposition dec = block_decomposition(g);
  if (per_block.size() != dec.blocks.size())
    throw domain_error("compose_block_colorings: expected " +
                       std::to_string(dec.blocks.size()) + " block colorings, got " +
                       std::to_string(per_block.size()));
  std::vector<int> colors(g.edge_count(), 0);
  int offset = 0;
  for (size_t i = 0; i < dec.blocks.size(); ++i) {
    const Subgraph sub = edge_subgraph(g, dec.blocks[i]);
    const EdgeColoring local = canonicalize(per_block[i]);
    if (!verify_md(sub.graph, local).is_md)
      throw domain_error("compose_block_colorings: block " + std::to_string(i) +
                         " coloring is not an MD-coloring of its block");
    for (size_t j = 0; j < sub.edge_ids.size(); ++j)
      colors[sub.edge_ids[j]] = local.colors[j] + offset;
    offset += local.palette();
  }
  return canonicalize(EdgeColoring(std::move(colors)));
}

/// The broom B_n: a star whose center 0 has leaves 1..n-2, with leaf 1
/// extended by the pendant vertex n-1. Delta(B_n) = n-2; the complement is
/// K_{n-1} minus an edge plus a pendant edge, connected for n >= 5.
inline Graph broom(int n) {
  if (n < 4) throw domain_error("broom: n must be >= 4");
  std::vector<Edge> edges;
  for (int v = 1; v <= n - 2; ++v) edges.push_back({0, v});
  edges.push_back({1, n - 1});
  return Graph(n, std::move(edges));
}

/// The lower-bound graph for the Nordhaus-Gaddum sum: the complete
/// bipartite graph with parts A∪{a,u} and B∪{b,v} minus the 4-cycle
/// a-b-u-v. Labels: a=0, u=1, b=2, v=3, then A, then B; surplus vertices go
/// to A. Both the graph and its complement are connected with md = 1.
inline Graph ng_lower_graph(int n) {
  if (n < 8) throw domain_error("ng_lower_graph: n must be >= 8");
  const int size_a = (n - 4 + 1) / 2;
  std::vector<int> side_x{0, 1}, side_y{2, 3};
  for (int v = 4; v < 4 + size_a; ++v) side_x.push_back(v);
  for (int v = 4 + size_a; v < n; ++v) side_y.push_back(v);
  std::vector<Edge> edges;
  for (int x : side_x)
    for (int y : side_y) {
      if (x <= 1 && y <= 3) continue;  // the deleted 4-cycle
      edges.push_back({std::min(x, y), std::max(x, y)});
    }
  return Graph(n, std::move(edges));
}

/// The n=6 product lower-bound pair: C_5 plus a pendant vertex (md 3) and
/// its complement (md 1).
inline std::pair<Graph, Graph> n6_product_lower_pair() {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}};
  Graph g(6, std::move(edges));
  Graph gc = complement(g);
  return {std::move(g), std::move(gc)};
}

}  // namespace mdc
