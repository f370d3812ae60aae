#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mdc/certificate.hpp"
#include "mdc/graph.hpp"
#include "mdc/random.hpp"
#include "mdc/solver.hpp"

namespace mdc {

struct NgRecord {
  int n = 0;
  Graph graph;
  int md = 0;
  int md_complement = 0;
  int sum = 0;
  int product = 0;
};

/// Nordhaus-Gaddum record for a complement pair; both sides must be
/// connected and n >= 4.
inline NgRecord ng_pair(const Graph& g) {
  if (g.vertex_count() < 4) throw domain_error("ng_pair: n must be >= 4");
  const Graph gc = complement(g);
  if (!is_connected(g)) throw domain_error("ng_pair: the graph is disconnected");
  if (!is_connected(gc)) throw domain_error("ng_pair: the complement is disconnected");
  NgRecord rec;
  rec.n = g.vertex_count();
  rec.graph = g;
  rec.md = md_exact(g).value;
  rec.md_complement = md_exact(gc).value;
  rec.sum = rec.md + rec.md_complement;
  rec.product = rec.md * rec.md_complement;
  return rec;
}

/// Adjacency-mask helpers for exhaustive small-order scans. Pairs are
/// indexed lexicographically: (0,1),(0,2),...,(n-2,n-1).
inline int pair_index(int n, int u, int v) { return u * n - u * (u + 1) / 2 + (v - u - 1); }

inline Graph graph_from_mask(int n, uint64_t mask) {
  std::vector<Edge> edges;
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx)
      if ((mask >> idx) & 1) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline uint64_t mask_from_graph(const Graph& g) {
  uint64_t mask = 0;
  for (const Edge& e : g.edges())
    mask |= uint64_t{1} << pair_index(g.vertex_count(), e.u, e.v);
  return mask;
}

/// Minimum adjacency mask over all vertex permutations; brute force, meant
/// for n <= 7.
inline uint64_t canonical_mask(int n, uint64_t mask) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t{0};
  do {
    uint64_t relabeled = 0;
    int idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx)
        if ((mask >> idx) & 1) {
          const int a = std::min(perm[u], perm[v]);
          const int b = std::max(perm[u], perm[v]);
          relabeled |= uint64_t{1} << pair_index(n, a, b);
        }
    best = std::min(best, relabeled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct ScanExtreme {
  int value = 0;
  uint64_t witness_mask = 0;
};

struct ScanReport {
  int n = 0;
  bool dedup = false;
  uint64_t scanned = 0;    // adjacency masks visited
  uint64_t qualified = 0;  // masks with both sides connected
  ScanExtreme min_sum, max_sum, min_prod, max_prod;
};

/// Exhaustive scan of all graphs of order n (4..6) whose complement is also
/// connected; reports the extreme Nordhaus-Gaddum sums and products with
/// one witness per extreme (the smallest achieving mask). md values are
/// memoized per mask, so each complement pair is solved once. With dedup,
/// only permutation-canonical masks are visited; the extremes are
/// unchanged because md is isomorphism-invariant and canonical masks are
/// the smallest in their class.
inline ScanReport scan_order(int n, bool dedup = false) {
  if (n < 4 || n > 6)
    throw domain_error("scan_order: full scan supports 4 <= n <= 6 (use sampled_search)");
  const int bits = n * (n - 1) / 2;
  const uint64_t full = (uint64_t{1} << bits) - 1;
  ScanReport rep;
  rep.n = n;
  rep.dedup = dedup;
  std::unordered_map<uint64_t, int> memo;
  const auto md_of = [&](uint64_t mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int value = md_exact(graph_from_mask(n, mask)).value;
    memo.emplace(mask, value);
    return value;
  };
  bool first = true;
  for (uint64_t mask = 0; mask <= full; ++mask) {
    if (dedup && canonical_mask(n, mask) != mask) continue;
    ++rep.scanned;
    const Graph g = graph_from_mask(n, mask);
    if (!is_connected(g) || !is_connected(graph_from_mask(n, full ^ mask))) continue;
    ++rep.qualified;
    const int sum = md_of(mask) + md_of(full ^ mask);
    const int prod = md_of(mask) * md_of(full ^ mask);
    if (first || sum < rep.min_sum.value) rep.min_sum = {sum, mask};
    if (first || sum > rep.max_sum.value) rep.max_sum = {sum, mask};
    if (first || prod < rep.min_prod.value) rep.min_prod = {prod, mask};
    if (first || prod > rep.max_prod.value) rep.max_prod = {prod, mask};
    first = false;
  }
  if (first) throw domain_error("scan_order: no qualifying graph");  // cannot happen for 4..6
  return rep;
}

struct SearchTarget {
  enum class Kind { sum, product } kind = Kind::sum;
  int value = 0;
};

/// Parses "sum=K", "prod=K" or "product=K".
inline SearchTarget parse_target(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw domain_error("target must look like sum=2 or product=1");
  const std::string head = text.substr(0, eq);
  SearchTarget t;
  if (head == "sum")
    t.kind = SearchTarget::Kind::sum;
  else if (head == "prod" || head == "product")
    t.kind = SearchTarget::Kind::product;
  else
    throw domain_error("unknown target '" + head + "' (want sum or product)");
  try {
    t.value = std::stoi(text.substr(eq + 1));
  } catch (const std::exception&) {
    throw domain_error("target value is not an integer");
  }
  return t;
}

struct SearchHit {
  Graph graph;
  int md = 0;
  int md_complement = 0;
  uint64_t attempts = 0;  // samples drawn including the hit
};

namespace detail {

/// Exact md(G)=1 test for a connected graph: sound certificate first, the
/// complete palette-2 search only when the certificate is silent.
inline bool md_is_one(const Graph& g) {
  if (g.edge_count() < 1) return false;
  if (block_decomposition(g).blocks.size() != 1) return false;  // blocks add up
  if (md1_certificate(g).has_value()) return true;
  return !md_decide(g, 2).has_value();
}

inline bool meets_target(const Graph& g, const Graph& gc, const SearchTarget& t) {
  if (t.kind == SearchTarget::Kind::sum && t.value == 2)
    return detail::md_is_one(g) && detail::md_is_one(gc);
  const int a = md_exact(g).value;
  if (t.kind == SearchTarget::Kind::sum) {
    if (a >= t.value) return false;  // the complement contributes at least 1
    return md_exact(gc).value == t.value - a;
  }
  if (a > t.value || t.value % a != 0) return false;
  return md_exact(gc).value == t.value / a;
}

}  // namespace detail

/// Seeded random search for a complement pair meeting the target. Attempt
/// t draws G(n,1/2) from substream derive_seed(seed, t); pairs whose two
/// sides are not both connected count against the budget. Absent after
/// budget attempts is a valid outcome.
inline std::optional<SearchHit> sampled_search(int n, const SearchTarget& target,
                                               uint64_t budget, uint64_t seed) {
  if (n < 7) throw domain_error("sampled_search: n must be >= 7 (use scan_order below)");
  for (uint64_t t = 0; t < budget; ++t) {
    SplitMix64 rng(derive_seed(seed, t));
    Graph g(n, gnp_edges(n, 0.5, rng));
    if (!is_connected(g)) continue;
    Graph gc = complement(g);
    if (!is_connected(gc)) continue;
    if (detail::meets_target(g, gc, target)) {
      SearchHit hit;
      hit.graph = std::move(g);
      hit.md = md_exact(hit.graph).value;
      hit.md_complement = md_exact(gc).value;
      hit.attempts = t + 1;
      return hit;
    }
  }
  return std::nullopt;
}

}  // namespace mdc
