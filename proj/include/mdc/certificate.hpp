#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mdc/coloring.hpp"
#include "mdc/graph.hpp"

namespace mdc {

enum class GadgetKind { triangle, k23 };

/// One md=1 building block: a triangle, or a complete bipartite K_{2,t}
/// (t >= 3) spanned by a vertex pair and its common neighborhood.
struct Gadget {
  GadgetKind kind;
  std::vector<int> vertices;  // triangle: {a<b<c}; k23: {u, v, w_1..w_t}
  std::vector<int> edge_ids;  // ascending
};

/// Evidence step: gadgets a and b share the two vertices u, v.
struct MergeStep {
  int a = 0, b = 0;
  int u = 0, v = 0;
};

/// Checkable proof that md(G) = 1: under any MD-coloring each gadget is
/// monochromatic, and gadgets sharing two vertices are forced onto the same
/// color, so if the merges chain every edge into one class the whole graph
/// is monochromatic.
struct ClosureCertificate {
  std::vector<Gadget> gadgets;
  std::vector<MergeStep> merge_trace;
};

/// True iff every unordered vertex pair has at least three common
/// neighbors (vacuous for n < 2). When this holds a closure certificate
/// always exists.
inline bool has_three_common_neighbors(const Graph& g) {
  const int n = g.vertex_count();
  AdjBits bits(g);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bits.common_count(u, v) < 3) return false;
  return true;
}

/// Builds the closure over all triangles and all K_{2,t} gadgets (one per
/// vertex pair with >= 3 common neighbors, on the full common
/// neighborhood). Present => md(G) = 1. Absence proves nothing.
inline std::optional<ClosureCertificate> md1_certificate(const Graph& g) {
  if (!is_connected(g)) throw domain_error("md1_certificate: graph must be connected");
  if (g.edge_count() < 1) throw domain_error("md1_certificate: graph has no edges");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m == 1) return ClosureCertificate{};  // a single edge is trivially one class

  AdjBits bits(g);
  ClosureCertificate cert;
  // triangles, each once via its lexicographically smallest edge
  for (int e = 0; e < m; ++e) {
    const auto [u, v] = g.edge(e);
    for (int w : bits.common(u, v)) {
      if (w <= v) continue;
      Gadget t{GadgetKind::triangle, {u, v, w}, {e, *g.edge_id(u, w), *g.edge_id(v, w)}};
      std::sort(t.edge_ids.begin(), t.edge_ids.end());
      cert.gadgets.push_back(std::move(t));
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const auto common = bits.common(u, v);
      if (common.size() < 3) continue;
      Gadget k{GadgetKind::k23, {u, v}, {}};
      for (int w : common) {
        k.vertices.push_back(w);
        k.edge_ids.push_back(*g.edge_id(u, w));
        k.edge_ids.push_back(*g.edge_id(v, w));
      }
      std::sort(k.edge_ids.begin(), k.edge_ids.end());
      cert.gadgets.push_back(std::move(k));
    }
  if (cert.gadgets.empty()) return std::nullopt;

  // merge gadgets sharing a vertex pair, bucketed by pair
  detail::UnionFind uf(static_cast<int>(cert.gadgets.size()));
  std::unordered_map<long long, int> bucket;
  for (int gi = 0; gi < static_cast<int>(cert.gadgets.size()); ++gi) {
    const auto& verts = cert.gadgets[gi].vertices;
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j) {
        const int x = std::min(verts[i], verts[j]);
        const int y = std::max(verts[i], verts[j]);
        const long long key = static_cast<long long>(x) * n + y;
        auto [it, fresh] = bucket.try_emplace(key, gi);
        if (!fresh && uf.find(it->second) != uf.find(gi)) {
          uf.unite(it->second, gi);
          cert.merge_trace.push_back({it->second, gi, x, y});
        }
      }
  }

  std::vector<int> cover(m, -1);
  for (int gi = 0; gi < static_cast<int>(cert.gadgets.size()); ++gi)
    for (int e : cert.gadgets[gi].edge_ids)
      if (cover[e] == -1) cover[e] = gi;
  for (int e = 0; e < m; ++e)
    if (cover[e] == -1) return std::nullopt;
  const int root = uf.find(cover[0]);
  for (int e = 1; e < m; ++e)
    if (uf.find(cover[e]) != root) return std::nullopt;
  return cert;
}

/// Re-validates a certificate from scratch: every gadget must be a genuine
/// subgraph of its kind, every merge step must name two vertices present in
/// both gadgets, and replaying the merges (plus gadget-internal edge
/// identification) must leave all edges in a single class. Trusts nothing
/// from md1_certificate.
inline bool check_certificate(const Graph& g, const ClosureCertificate& cert,
                              std::string* reason = nullptr) {
  const auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  const int m = g.edge_count();
  if (m < 1) return fail("graph has no edges");

  for (size_t gi = 0; gi < cert.gadgets.size(); ++gi) {
    const Gadget& gad = cert.gadgets[gi];
    const std::string tag = "gadget " + std::to_string(gi);
    std::vector<int> verts = gad.vertices;
    for (int v : verts)
      if (v < 0 || v >= g.vertex_count()) return fail(tag + ": vertex out of range");
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return fail(tag + ": repeated vertex");
    std::vector<int> expect;
    if (gad.kind == GadgetKind::triangle) {
      if (verts.size() != 3) return fail(tag + ": triangle needs 3 vertices");
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const auto e = g.edge_id(verts[i], verts[j]);
          if (!e) return fail(tag + ": missing triangle edge");
          expect.push_back(*e);
        }
    } else {
      if (verts.size() < 5) return fail(tag + ": K_{2,t} needs t >= 3");
      const int u = verts[0], v = verts[1];
      for (size_t i = 2; i < verts.size(); ++i) {
        const auto eu = g.edge_id(u, verts[i]);
        const auto ev = g.edge_id(v, verts[i]);
        if (!eu || !ev) return fail(tag + ": K_{2,t} vertex not adjacent to both ends");
        expect.push_back(*eu);
        expect.push_back(*ev);
      }
    }
    std::sort(expect.begin(), expect.end());
    std::vector<int> claimed = gad.edge_ids;
    std::sort(claimed.begin(), claimed.end());
    if (claimed != expect) return fail(tag + ": edge list does not match the gadget");
  }

  detail::UnionFind classes(m);
  for (const Gadget& gad : cert.gadgets)
    for (size_t i = 1; i < gad.edge_ids.size(); ++i)
      classes.unite(gad.edge_ids[0], gad.edge_ids[i]);
  for (size_t si = 0; si < cert.merge_trace.size(); ++si) {
    const MergeStep& s = cert.merge_trace[si];
    const std::string tag = "merge " + std::to_string(si);
    if (s.a < 0 || s.b < 0 || s.a >= static_cast<int>(cert.gadgets.size()) ||
        s.b >= static_cast<int>(cert.gadgets.size()))
      return fail(tag + ": gadget id out of range");
    if (s.u == s.v) return fail(tag + ": shared vertices must differ");
    for (int gid : {s.a, s.b}) {
      const auto& verts = cert.gadgets[gid].vertices;
      if (std::find(verts.begin(), verts.end(), s.u) == verts.end() ||
          std::find(verts.begin(), verts.end(), s.v) == verts.end())
        return fail(tag + ": gadgets do not share the named vertex pair");
    }
    classes.unite(cert.gadgets[s.a].edge_ids[0], cert.gadgets[s.b].edge_ids[0]);
  }

  int covered = 0;
  std::vector<char> in_gadget(m, 0);
  for (const Gadget& gad : cert.gadgets)
    for (int e : gad.edge_ids) in_gadget[e] = 1;
  for (int e = 0; e < m; ++e) covered += in_gadget[e];

  const int root = classes.find(0);
  for (int e = 1; e < m; ++e)
    if (classes.find(e) != root)
      return fail("coverage " + std::to_string(covered) + " of " + std::to_string(m) +
                  " edges; edge classes not fully merged");
  return true;
}

}  // namespace mdc
