#pragma once

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mdc/graph.hpp"

namespace mdc {

/// One positive color id per edge id. Color names are immaterial: only the
/// partition of the edge set matters, and canonicalize() maps every
/// partition-equivalent coloring to the same restricted-growth form.
struct EdgeColoring {
  std::vector<int> colors;

  EdgeColoring() = default;
  explicit EdgeColoring(std::vector<int> c) : colors(std::move(c)) {}

  int palette() const {
    std::vector<int> distinct(colors);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return static_cast<int>(distinct.size());
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Restricted-growth relabeling: scanning edges in id order, the first
/// occurrence of each new color gets the smallest unused id. Idempotent.
inline EdgeColoring canonicalize(const EdgeColoring& c) {
  std::unordered_map<int, int> remap;
  std::vector<int> out;
  out.reserve(c.colors.size());
  for (int col : c.colors) {
    auto [it, fresh] = remap.try_emplace(col, static_cast<int>(remap.size()) + 1);
    (void)fresh;
    out.push_back(it->second);
  }
  return EdgeColoring(std::move(out));
}

namespace detail {

/// Union-find with path halving; storage reused across calls.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { reset(n); }

  void reset(int n) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

/// Distinct colors in first-appearance order.
inline std::vector<int> color_classes(const std::vector<int>& colors) {
  std::vector<int> classes;
  for (int c : colors)
    if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
  return classes;
}

/// Component labels of g minus the edges colored `color`.
inline void components_excluding(const Graph& g, const std::vector<int>& colors, int color,
                                 UnionFind& uf) {
  uf.reset(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e)
    if (colors[e] != color) uf.unite(g.edge(e).u, g.edge(e).v);
}

}  // namespace detail

/// Exact MD verdict engine for one graph, reusable across many colorings.
/// A pair is covered iff it lies in different components of g (the empty
/// cut separates it) or some color class splits it. Any uv-cut contains the
/// edge uv itself, so for adjacent pairs only the class of that edge's
/// color can separate them; the engine exploits this for early rejection.
/// Not thread-safe: hold one instance per thread.
class MdChecker {
 public:
  explicit MdChecker(const Graph& g)
      : g_(&g), n_(g.vertex_count()), whole_(component_labels(g)), uf_(n_) {
    AdjBits bits(g);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (whole_[u] == whole_[v] && !bits.get(u, v)) pairs_.push_back({u, v});
  }

  bool is_md(const std::vector<int>& colors) {
    const Graph& g = *g_;
    classes_.clear();
    for (int c : colors)
      if (std::find(classes_.begin(), classes_.end(), c) == classes_.end())
        classes_.push_back(c);
    const int k = static_cast<int>(classes_.size());
    comp_.resize(static_cast<size_t>(k) * n_);
    for (int ci = 0; ci < k; ++ci) {
      const int color = classes_[ci];
      detail::components_excluding(g, colors, color, uf_);
      for (int e = 0; e < g.edge_count(); ++e)
        if (colors[e] == color && uf_.find(g.edge(e).u) == uf_.find(g.edge(e).v))
          return false;  // this pair has no other candidate cut
      int* row = comp_.data() + static_cast<size_t>(ci) * n_;
      for (int v = 0; v < n_; ++v) row[v] = uf_.find(v);
    }
    for (const auto& [u, v] : pairs_) {
      bool covered = false;
      for (int ci = 0; ci < k; ++ci) {
        const int* row = comp_.data() + static_cast<size_t>(ci) * n_;
        if (row[u] != row[v]) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  }

 private:
  const Graph* g_;
  int n_;
  std::vector<int> whole_;
  detail::UnionFind uf_;
  std::vector<int> classes_;
  std::vector<int> comp_;
  std::vector<std::pair<int, int>> pairs_;  // nonadjacent same-component
};

/// One-shot form of MdChecker::is_md.
inline bool is_md_coloring(const Graph& g, const std::vector<int>& colors) {
  MdChecker checker(g);
  return checker.is_md(colors);
}

/// Colors whose class, removed from g, leaves u and v in different
/// components. For a cross-component pair every color separates, so the
/// full palette is returned.
inline std::vector<int> separating_colors(const Graph& g, const EdgeColoring& c, int u, int v) {
  if (u == v) throw domain_error("separating_colors: u and v must differ");
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
    throw domain_error("separating_colors: vertex out of range");
  if (static_cast<int>(c.colors.size()) != g.edge_count())
    throw domain_error("separating_colors: coloring length != edge count");
  auto classes = detail::color_classes(c.colors);
  std::sort(classes.begin(), classes.end());
  const auto whole = component_labels(g);
  if (whole[u] != whole[v]) return classes;
  std::vector<int> out;
  detail::UnionFind uf(g.vertex_count());
  for (int color : classes) {
    detail::components_excluding(g, c.colors, color, uf);
    if (uf.find(u) != uf.find(v)) out.push_back(color);
  }
  return out;
}

struct MdVerdict {
  bool is_md = false;
  std::vector<std::pair<int, int>> uncovered_pairs;  // lexicographic
};

/// Decides whether c is an MD-coloring of g and lists every failing pair.
/// One component labeling per color class; pair coverage accumulates in
/// per-vertex bitmask rows (a class covers exactly the pairs it splits, the
/// complement of its component blocks). Pairs in different components of g
/// start covered: the empty cut separates them.
inline MdVerdict verify_md(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.edge_count())
    throw domain_error("verify_md: coloring length != edge count");
  for (int col : c.colors)
    if (col < 1) throw domain_error("verify_md: color ids must be positive");

  const int n = g.vertex_count();
  const int words = (n + 63) / 64;
  std::vector<uint64_t> covered(static_cast<size_t>(n) * words, 0);
  std::vector<uint64_t> block(words);
  detail::UnionFind uf(n);
  std::vector<int> comp(n);

  const auto mark_split_pairs = [&](const std::vector<int>& labels) {
    // group rows by component, then cover each vertex against everything
    // outside its block
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    size_t at = 0;
    while (at < order.size()) {
      size_t end = at;
      std::fill(block.begin(), block.end(), 0);
      while (end < order.size() && labels[order[end]] == labels[order[at]]) {
        block[order[end] / 64] |= uint64_t{1} << (order[end] % 64);
        ++end;
      }
      for (size_t i = at; i < end; ++i) {
        uint64_t* row = covered.data() + static_cast<size_t>(order[i]) * words;
        for (int w = 0; w < words; ++w) row[w] |= ~block[w];
      }
      at = end;
    }
  };

  mark_split_pairs(component_labels(g));  // cross-component pairs
  for (int color : detail::color_classes(c.colors)) {
    detail::components_excluding(g, c.colors, color, uf);
    for (int v = 0; v < n; ++v) comp[v] = uf.find(v);
    mark_split_pairs(comp);
  }

  MdVerdict verdict;
  verdict.is_md = true;
  for (int u = 0; u < n; ++u) {
    const uint64_t* row = covered.data() + static_cast<size_t>(u) * words;
    for (int v = u + 1; v < n; ++v)
      if (!((row[v / 64] >> (v % 64)) & 1)) {
        verdict.is_md = false;
        verdict.uncovered_pairs.push_back({u, v});
      }
  }
  return verdict;
}

}  // namespace mdc
