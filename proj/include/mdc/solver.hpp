#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdc/blocks.hpp"
#include "mdc/certificate.hpp"
#include "mdc/coloring.hpp"
#include "mdc/constructions.hpp"
#include "mdc/graph.hpp"

namespace mdc {

struct BlockReport {
  std::vector<int> edge_ids;
  std::string method;  // bridge | cycle-formula | closure-certificate | search | oracle
  int value = 0;
};

struct MdResult {
  int value = 0;
  EdgeColoring witness;
  std::vector<BlockReport> blocks;
  std::vector<std::pair<int, std::string>> bounds_log;
};

/// Searches for an MD-coloring of the connected graph g using at least k
/// colors; returns one with exactly k colors when it exists (merging two
/// classes of an MD-coloring keeps it MD, so capping the palette at k loses
/// nothing). Canonical restricted-growth enumeration in edge-id order with
/// edge 0 fixed to color 1. Pruning: (a) a color occurring exactly once on
/// a fully assigned cycle of a fundamental cycle basis can never be cut off
/// twice, (b) the remaining edges cannot lift the palette to k. Sequential
/// and deterministic: the witness is the lexicographically least one.
inline std::optional<EdgeColoring> md_decide(const Graph& g, int k) {
  if (k < 1) throw domain_error("md_decide: k must be >= 1");
  if (!is_connected(g)) throw domain_error("md_decide: graph must be connected");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (k > n - 1) return std::nullopt;  // only trees reach n-1 and nothing exceeds it
  if (k == 1) return EdgeColoring(std::vector<int>(m, 1));
  if (k > m) return std::nullopt;

  // fundamental cycle basis over the lowest-edge-id spanning tree
  detail::UnionFind uf(n);
  std::vector<char> is_tree(m, 0);
  std::vector<std::vector<std::pair<int, int>>> tree_adj(n);
  for (int e = 0; e < m; ++e)
    if (uf.unite(g.edge(e).u, g.edge(e).v)) {
      is_tree[e] = 1;
      tree_adj[g.edge(e).u].push_back({g.edge(e).v, e});
      tree_adj[g.edge(e).v].push_back({g.edge(e).u, e});
    }
  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
  {
    std::vector<int> queue{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (size_t h = 0; h < queue.size(); ++h) {
      const int v = queue[h];
      for (const auto& [w, e] : tree_adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          parent_edge[w] = e;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        }
    }
  }
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> trigger(m);  // basis cycles completed by edge id
  for (int e = 0; e < m; ++e) {
    if (is_tree[e]) continue;
    std::vector<int> cyc{e};
    int a = g.edge(e).u, b = g.edge(e).v;
    while (depth[a] > depth[b]) {
      cyc.push_back(parent_edge[a]);
      a = parent[a];
    }
    while (depth[b] > depth[a]) {
      cyc.push_back(parent_edge[b]);
      b = parent[b];
    }
    while (a != b) {
      cyc.push_back(parent_edge[a]);
      a = parent[a];
      cyc.push_back(parent_edge[b]);
      b = parent[b];
    }
    trigger[*std::max_element(cyc.begin(), cyc.end())].push_back(
        static_cast<int>(cycles.size()));
    cycles.push_back(std::move(cyc));
  }

  std::vector<int> colors(m, 0);
  std::vector<int> count(k + 1, 0);
  MdChecker checker(g);
  std::optional<EdgeColoring> found;

  auto cycle_ok = [&](int ci) {
    const auto& cyc = cycles[ci];
    for (int e : cyc) ++count[colors[e]];
    bool ok = true;
    for (int e : cyc) {
      if (count[colors[e]] == 1) ok = false;
      count[colors[e]] = 0;  // also resets duplicates harmlessly
    }
    return ok;
  };

  auto dfs = [&](auto&& self, int i, int used) -> bool {
    if (used + (m - i) < k) return false;
    if (i == m) {
      if (used == k && checker.is_md(colors)) {
        found = EdgeColoring(colors);
        return true;
      }
      return false;
    }
    const int limit = std::min(used + 1, k);
    for (int c = 1; c <= limit; ++c) {
      colors[i] = c;
      bool ok = true;
      for (int ci : trigger[i])
        if (!cycle_ok(ci)) {
          ok = false;
          break;
        }
      if (ok && self(self, i + 1, std::max(used, c))) return true;
    }
    colors[i] = 0;
    return false;
  };
  dfs(dfs, 0, 0);
  return found;
}

namespace detail {

inline bool is_cycle_block(const Graph& g) {
  if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

}  // namespace detail

/// Sum over blocks of 1 for bridges and floor(n_B/2) for 2-connected
/// blocks; never below md(G), and equal to n-1 exactly on trees.
inline std::pair<int, std::vector<std::string>> upper_bound(const Graph& g) {
  if (!is_connected(g)) throw domain_error("upper_bound: graph must be connected");
  const BlockDecomposition dec = block_decomposition(g);
  int bound = 0;
  std::vector<std::string> sources;
  for (size_t i = 0; i < dec.blocks.size(); ++i) {
    if (dec.is_bridge[i]) {
      bound += 1;
      sources.push_back("block " + std::to_string(i) + ": bridge -> 1");
    } else {
      const int nb = edge_subgraph(g, dec.blocks[i]).graph.vertex_count();
      bound += nb / 2;
      sources.push_back("block " + std::to_string(i) + ": 2-connected on " +
                        std::to_string(nb) + " vertices -> " + std::to_string(nb / 2));
    }
  }
  return {bound, std::move(sources)};
}

/// Exact md(G). Disconnected inputs resolve by component additivity, which
/// block additivity subsumes: md(G) is the sum of the per-block values.
/// Blocks are solved in order bridge -> cycle formula -> closure
/// certificate -> palette search downward from floor(n_B/2). The witness
/// is assembled from the block witnesses on disjoint color ranges and is
/// deterministic.
inline MdResult md_exact(const Graph& g) {
  MdResult res;
  if (g.edge_count() == 0) return res;  // md of an edgeless graph is 0
  if (is_connected(g))
    res.bounds_log.push_back({g.vertex_count() - 1, "spanning-tree bound"});
  const BlockDecomposition dec = block_decomposition(g);
  std::vector<EdgeColoring> per_block;
  per_block.reserve(dec.blocks.size());
  for (size_t i = 0; i < dec.blocks.size(); ++i) {
    const Subgraph sub = edge_subgraph(g, dec.blocks[i]);
    BlockReport rep{dec.blocks[i], "", 0};
    EdgeColoring wit;
    if (dec.is_bridge[i]) {
      rep.method = "bridge";
      rep.value = 1;
      wit = EdgeColoring({1});
    } else if (detail::is_cycle_block(sub.graph)) {
      rep.method = "cycle-formula";
      rep.value = sub.graph.vertex_count() / 2;
      wit = detail::cycle_coloring(sub.graph);
      res.bounds_log.push_back(
          {rep.value, "cycle formula on block " + std::to_string(i)});
    } else if (md1_certificate(sub.graph).has_value()) {
      rep.method = "closure-certificate";
      rep.value = 1;
      wit = EdgeColoring(std::vector<int>(sub.graph.edge_count(), 1));
    } else {
      const int ub = sub.graph.vertex_count() / 2;
      res.bounds_log.push_back(
          {ub, "2-connected bound on block " + std::to_string(i)});
      rep.method = "search";
      rep.value = 1;
      wit = EdgeColoring(std::vector<int>(sub.graph.edge_count(), 1));
      for (int k = ub; k >= 2; --k)
        if (auto w = md_decide(sub.graph, k)) {
          rep.value = k;
          wit = std::move(*w);
          break;
        }
    }
    res.value += rep.value;
    res.blocks.push_back(std::move(rep));
    per_block.push_back(std::move(wit));
  }
  res.witness = compose_block_colorings(g, per_block);
  return res;
}

/// Unpruned oracle: enumerates every set partition of the edge set as a
/// restricted-growth string and verifies each, returning the first
/// maximum-palette MD partition in enumeration order. Verification is
/// skipped while the palette cannot beat the best value found, which leaves
/// the result unchanged. Shares no search machinery with md_exact.
inline MdResult brute_force_oracle(const Graph& g, int cap = 12) {
  const int m = g.edge_count();
  if (m > cap)
    throw domain_error("brute_force_oracle: m=" + std::to_string(m) + " exceeds cap " +
                       std::to_string(cap) + " (raise the cap to override)");
  MdResult res;
  std::vector<int> all_edges(m);
  std::iota(all_edges.begin(), all_edges.end(), 0);
  if (m == 0) {
    res.blocks.push_back({{}, "oracle", 0});
    return res;
  }
  MdChecker checker(g);
  std::vector<int> a(m, 0), mp(m + 1, 0), buf(m);
  for (int i = 1; i <= m; ++i) mp[i] = 1;  // prefix class counts of the all-zero string
  int best = 0;
  std::vector<int> best_colors;
  for (;;) {
    if (mp[m] > best) {
      for (int e = 0; e < m; ++e) buf[e] = a[e] + 1;
      if (checker.is_md(buf)) {
        best = mp[m];
        best_colors = buf;
      }
    }
    int i = m - 1;
    while (i > 0 && a[i] >= mp[i]) --i;
    if (i == 0) break;
    ++a[i];
    mp[i + 1] = std::max(mp[i], a[i] + 1);
    for (int j = i + 1; j < m; ++j) {
      a[j] = 0;
      mp[j + 1] = mp[j];
    }
  }
  res.value = best;
  res.witness = EdgeColoring(std::move(best_colors));
  res.blocks.push_back({std::move(all_edges), "oracle", best});
  return res;
}

}  // namespace mdc
