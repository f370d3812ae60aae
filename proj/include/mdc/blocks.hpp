#pragma once

#include <algorithm>
#include <vector>

#include "mdc/graph.hpp"

namespace mdc {

/// Blocks (maximal subgraphs without a cut vertex) as edge-id sets, plus the
/// cut vertices. Blocks partition the edge set; a block with one edge is a
/// bridge. Block order is deterministic: sorted by smallest contained edge id.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // edge ids, ascending within a block
  std::vector<int> cut_vertices;         // ascending
  std::vector<bool> is_bridge;           // per block
};

/// Lowpoint DFS (iterative, edge-stacked). Works per component; isolated
/// vertices contribute no block.
inline BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<int> edge_stack;
  int timer = 0;

  struct Frame {
    int v;
    int parent_edge;
    size_t next;  // index into incident list
  };
  std::vector<Frame> stack;

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const int v = f.v;
      if (f.next < g.incident(v).size()) {
        const auto [w, e] = g.incident(v)[f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        const int parent_edge = f.parent_edge;
        stack.pop_back();
        if (stack.empty()) break;
        const int parent = stack.back().v;
        low[parent] = std::min(low[parent], low[v]);
        if (low[v] >= disc[parent]) {
          // pop the block closed by tree edge parent->v
          std::vector<int> block;
          while (true) {
            const int e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == parent_edge) break;
          }
          std::sort(block.begin(), block.end());
          out.blocks.push_back(std::move(block));
          if (parent != root) is_cut[parent] = 1;
        }
      }
    }
    if (root_children >= 2) is_cut[root] = 1;
  }

  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  out.is_bridge.reserve(out.blocks.size());
  for (const auto& b : out.blocks) out.is_bridge.push_back(b.size() == 1);
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

/// A block (or any edge subset) lifted out as a standalone graph with
/// relabeled vertices. vertex_ids/edge_ids map local ids back to g's.
struct Subgraph {
  Graph graph;
  std::vector<int> vertex_ids;  // local -> original, ascending
  std::vector<int> edge_ids;    // local -> original, ascending
};

inline Subgraph edge_subgraph(const Graph& g, std::vector<int> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end());
  std::vector<int> verts;
  for (int e : edge_ids) {
    verts.push_back(g.edge(e).u);
    verts.push_back(g.edge(e).v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
  std::vector<Edge> edges;
  edges.reserve(edge_ids.size());
  for (int e : edge_ids) {
    int u = local[g.edge(e).u], v = local[g.edge(e).v];
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  return {Graph(static_cast<int>(verts.size()), std::move(edges)), std::move(verts),
          std::move(edge_ids)};
}

}  // namespace mdc
