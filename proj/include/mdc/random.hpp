#pragma once

#include <cstdint>
#include <vector>

#include "mdc/graph.hpp"

namespace mdc {

/// SplitMix64 (Steele, Lea, Vigna): state advances by the golden-ratio
/// increment, output is the 64-bit finalizer. Portable across platforms;
/// used for every randomized operation in the library.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1): top 53 bits scaled.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound). bound >= 1. Modulo reduction; the bias is
  /// below 2^-50 for desk-scale bounds.
  uint64_t next_below(uint64_t bound) { return next() % bound; }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(static_cast<uint64_t>(hi - lo + 1)));
  }
};

/// Substream derivation: stream k of a run seeded with s starts from
/// SplitMix64(s)·skip(k)… concretely mix(s + (k+1)·golden). Documented so
/// reports are reproducible across implementations.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
  SplitMix64 rng(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
  return rng.next();
}

/// G(n,p) edge set: one draw per unordered pair, pairs in lexicographic
/// order (0,1),(0,2),…,(n-2,n-1); the pair is an edge iff draw < p.
inline std::vector<Edge> gnp_edges(int n, double p, SplitMix64& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < p) edges.push_back({u, v});
  return edges;
}

/// Uniform random labeled tree via Prüfer decode.
inline Graph random_tree(int n, SplitMix64& rng) {
  if (n <= 0) throw domain_error("random_tree: n must be positive");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = rng.next_int(0, n - 1);
  std::vector<int> deg(n, 1);
  for (int x : prufer) ++deg[x];
  std::vector<Edge> edges;
  // smallest-leaf elimination
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : prufer) {
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      while (deg[++ptr] != 1) {
      }
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n - 1});
  return Graph(n, std::move(edges));
}

/// Connected graph with exactly one cycle (m = n): cycle of length c on a
/// random vertex subset shape, remaining vertices attached as tree edges.
inline Graph random_unicyclic(int n, int cycle_len, SplitMix64& rng) {
  if (cycle_len < 3 || cycle_len > n) throw domain_error("random_unicyclic: bad cycle length");
  std::vector<Edge> edges;
  for (int i = 0; i < cycle_len; ++i) {
    int u = i, v = (i + 1) % cycle_len;
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  for (int v = cycle_len; v < n; ++v) {
    int u = static_cast<int>(rng.next_below(static_cast<uint64_t>(v)));
    edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

/// Connected graph with exactly m edges: random spanning tree plus random
/// extra non-edges. Requires n-1 <= m <= n(n-1)/2.
inline Graph random_connected_with_m(int n, int m, SplitMix64& rng) {
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m) throw domain_error("random_connected_with_m: m out of range");
  Graph tree = random_tree(n, rng);
  std::vector<Edge> edges = tree.edges();
  AdjBits bits(tree);
  std::vector<Edge> rest;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!bits.get(u, v)) rest.push_back({u, v});
  // Fisher-Yates prefix of the needed size
  const int need = m - (n - 1);
  for (int i = 0; i < need; ++i) {
    const int j = i + static_cast<int>(rng.next_below(rest.size() - i));
    std::swap(rest[i], rest[j]);
    edges.push_back(rest[i]);
  }
  return Graph(n, std::move(edges));
}

/// G(n,p) conditioned on connectivity by resampling.
inline Graph random_connected_gnp(int n, double p, SplitMix64& rng) {
  for (;;) {
    Graph g(n, gnp_edges(n, p, rng));
    if (is_connected(g)) return g;
  }
}

}  // namespace mdc
