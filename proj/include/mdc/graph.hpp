#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdc {

/// Raised when an operation's precondition is violated.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct Edge {
  int u = 0, v = 0;  // stored with u < v
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with dense vertex ids 0..n-1 and edge ids
/// 0..m-1 in construction order. Instances are immutable once built;
/// every transform returns a new graph, so sharing between tasks is safe.
class Graph {
 public:
  Graph() = default;

  // `edges` must already be normalized: endpoints in range, u < v, no
  // duplicates. Use build_graph() for raw input.
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
    if (n_ < 0) throw domain_error("Graph: negative vertex count");
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      const Edge& ed = edges_[e];
      if (ed.u < 0 || ed.v >= n_ || ed.u >= ed.v)
        throw domain_error("Graph: malformed edge (" + std::to_string(ed.u) + "," +
                           std::to_string(ed.v) + ")");
      adj_[ed.u].push_back({ed.v, e});
      adj_[ed.v].push_back({ed.u, e});
    }
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end(),
              [](Edge a, Edge b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    for (size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1])
        throw domain_error("Graph: duplicate edge (" + std::to_string(sorted[i].u) + "," +
                           std::to_string(sorted[i].v) + ")");
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  /// (neighbor, edge id) pairs of v, in edge-insertion order.
  const std::vector<std::pair<int, int>>& incident(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(int u, int v) const { return edge_id(u, v).has_value(); }

  std::optional<int> edge_id(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
    const auto& list = degree(u) <= degree(v) ? adj_[u] : adj_[v];
    const int target = degree(u) <= degree(v) ? v : u;
    for (const auto& [w, e] : list)
      if (w == target) return e;
    return std::nullopt;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Builds the underlying simple graph from raw vertex pairs: duplicate
/// pairs are collapsed keeping the first occurrence's edge-id order,
/// loops are rejected.
inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw domain_error("build_graph: negative vertex count");
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> seen;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw domain_error("build_graph: vertex out of range in pair (" + std::to_string(a) +
                         "," + std::to_string(b) + ")");
    if (a == b)
      throw domain_error("build_graph: loop edge (" + std::to_string(a) + "," +
                         std::to_string(b) + ")");
    const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    edges.push_back({key.first, key.second});
  }
  return Graph(n, std::move(edges));
}

/// Per-vertex component labels; labels are the smallest vertex id of the
/// component, so label order follows vertex order.
inline std::vector<int> component_labels(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = s;
    queue.assign(1, s);
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      for (const auto& [w, e] : g.incident(v)) {
        (void)e;
        if (label[w] == -1) {
          label[w] = s;
          queue.push_back(w);
        }
      }
    }
  }
  return label;
}

/// Maximal connected vertex sets, ordered by smallest contained vertex id.
inline std::vector<std::vector<int>> components(const Graph& g) {
  const auto label = component_labels(g);
  std::vector<std::vector<int>> parts;
  std::vector<int> index(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (index[label[v]] == -1) {
      index[label[v]] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[index[label[v]]].push_back(v);
  }
  return parts;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto label = component_labels(g);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (label[v] != label[0]) return false;
  return true;
}

/// Adjacency matrix packed into 64-bit rows, for neighborhood set algebra.
class AdjBits {
 public:
  explicit AdjBits(const Graph& g)
      : n_(g.vertex_count()), words_((n_ + 63) / 64), bits_(static_cast<size_t>(n_) * words_) {
    for (const Edge& e : g.edges()) {
      set(e.u, e.v);
      set(e.v, e.u);
    }
  }

  bool get(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
  }

  int common_count(int u, int v) const {
    const uint64_t* a = row(u);
    const uint64_t* b = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
  }

  std::vector<int> common(int u, int v) const {
    const uint64_t* a = row(u);
    const uint64_t* b = row(v);
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
      uint64_t bits = a[w] & b[w];
      while (bits) {
        const int t = std::countr_zero(bits);
        out.push_back(w * 64 + t);
        bits &= bits - 1;
      }
    }
    return out;
  }

 private:
  const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
  void set(int u, int v) {
    bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t{1} << (v % 64);
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

/// N(u) ∩ N(v), ascending.
inline std::vector<int> common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw domain_error("common_neighbors: u and v must differ");
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
    throw domain_error("common_neighbors: vertex out of range");
  std::vector<char> mark(g.vertex_count(), 0);
  for (const auto& [w, e] : g.incident(u)) {
    (void)e;
    mark[w] = 1;
  }
  std::vector<int> out;
  for (const auto& [w, e] : g.incident(v)) {
    (void)e;
    if (mark[w]) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Complement graph: uv is an edge iff it is absent in g. Edges emitted in
/// lexicographic (u,v) order.
inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  AdjBits bits(g);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!bits.get(u, v)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

}  // namespace mdc
