#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "mdc/blocks.hpp"
#include "mdc/graph.hpp"
#include "mdc/random.hpp"
#include "mdc/recognizers.hpp"
#include "mdc/transforms.hpp"
#include "support.hpp"

using namespace mdc;

TEST_CASE("build_graph collapses parallel edges keeping first occurrence") {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}, {0, 1}});
  REQUIRE(g.edge_count() == 2);
  REQUIRE(g.edge(0) == Edge{0, 1});
  REQUIRE(g.edge(1) == Edge{1, 2});
}

TEST_CASE("build_graph trivia and rejections") {
  REQUIRE(build_graph(2, {{0, 1}}).edge_count() == 1);
  REQUIRE_THROWS_AS(build_graph(1, {{0, 0}}), domain_error);
  REQUIRE_THROWS_AS(build_graph(2, {{0, 2}}), domain_error);
  REQUIRE_THROWS_AS(build_graph(2, {{-1, 0}}), domain_error);
  // reversed pairs are the same unordered edge
  REQUIRE(build_graph(3, {{1, 0}, {0, 1}}).edge_count() == 1);
}

TEST_CASE("components ordering") {
  const Graph two_k2 = build_graph(4, {{0, 1}, {2, 3}});
  REQUIRE(components(two_k2) == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  REQUIRE(components(cycle_graph(5)).size() == 1);
  REQUIRE(components(Graph(3, {})) == std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("block decomposition on the named shapes") {
  const auto bow = block_decomposition(testing::bowtie());
  REQUIRE(bow.blocks.size() == 2);
  REQUIRE(bow.cut_vertices == std::vector<int>{2});
  REQUIRE_FALSE(bow.is_bridge[0]);

  const auto p4 = block_decomposition(path_graph(4));
  REQUIRE(p4.blocks.size() == 3);
  REQUIRE(p4.cut_vertices == std::vector<int>{1, 2});
  REQUIRE(std::all_of(p4.is_bridge.begin(), p4.is_bridge.end(), [](bool b) { return b; }));

  const auto c6 = block_decomposition(cycle_graph(6));
  REQUIRE(c6.blocks.size() == 1);
  REQUIRE(c6.cut_vertices.empty());
  REQUIRE(c6.blocks[0].size() == 6);
}

TEST_CASE("block invariants on random graphs") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.next_int(1, 9);
    Graph g(n, gnp_edges(n, 0.4, rng));
    const auto dec = block_decomposition(g);
    // blocks partition the edge set
    std::vector<int> seen(g.edge_count(), 0);
    for (const auto& b : dec.blocks)
      for (int e : b) ++seen[e];
    REQUIRE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    // a block with >= 2 edges induces a 2-connected subgraph
    for (const auto& b : dec.blocks) {
      if (b.size() < 2) continue;
      const Subgraph sub = edge_subgraph(g, b);
      REQUIRE(testing::is_two_connected(sub.graph));
    }
    // block/cut-vertex incidence is a forest
    int incidences = 0;
    for (const auto& b : dec.blocks) {
      const Subgraph sub = edge_subgraph(g, b);
      for (int v : sub.vertex_ids)
        if (std::binary_search(dec.cut_vertices.begin(), dec.cut_vertices.end(), v))
          ++incidences;
    }
    const int nodes = static_cast<int>(dec.blocks.size() + dec.cut_vertices.size());
    REQUIRE((nodes == 0 || incidences <= nodes - 1));
  }
}

TEST_CASE("complement basics") {
  REQUIRE(complement(complete_graph(4)).edge_count() == 0);
  const Graph c5c = complement(cycle_graph(5));
  REQUIRE(c5c.edge_count() == 5);
  for (int v = 0; v < 5; ++v) REQUIRE(c5c.degree(v) == 2);
  REQUIRE(is_connected(c5c));  // C_5 is self-complementary
}

TEST_CASE("complement of the broom is K_{n-1} minus an edge plus a pendant") {
  for (int n = 5; n <= 8; ++n) {
    const Graph bc = complement(broom(n));
    REQUIRE(is_connected(bc));
    REQUIRE(bc.degree(0) == 1);  // the old star center becomes the pendant
    // {1..n-1} forms a clique except the single missing pair (1, n-1)
    int missing = 0;
    for (int u = 1; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!bc.adjacent(u, v)) {
          ++missing;
          REQUIRE(u == 1);
          REQUIRE(v == n - 1);
        }
    REQUIRE(missing == 1);
  }
}

TEST_CASE("complement identities on random graphs") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.next_int(1, 10);
    Graph g(n, gnp_edges(n, 0.5, rng));
    const Graph gc = complement(g);
    REQUIRE(g.edge_count() + gc.edge_count() == n * (n - 1) / 2);
    const Graph back = complement(gc);
    REQUIRE(back.edge_count() == g.edge_count());
    for (const Edge& e : g.edges()) REQUIRE(back.adjacent(e.u, e.v));
  }
}

TEST_CASE("join, square, line graph shapes") {
  const Graph fan = join(complete_graph(1), path_graph(3));
  REQUIRE(fan.vertex_count() == 4);
  REQUIRE(fan.edge_count() == 5);
  REQUIRE(fan.degree(0) == 3);

  const Graph sq = square(path_graph(4));
  REQUIRE(sq.edge_count() == 5);
  REQUIRE(sq.adjacent(0, 2));
  REQUIRE(sq.adjacent(1, 3));
  REQUIRE_FALSE(sq.adjacent(0, 3));

  const Graph lk3 = line_graph(complete_graph(3));
  REQUIRE(lk3.vertex_count() == 3);
  REQUIRE(lk3.edge_count() == 3);

  REQUIRE_THROWS_AS(square(Graph(2, {})), domain_error);
  REQUIRE_THROWS_AS(line_graph(Graph(2, {})), domain_error);
}

TEST_CASE("line graph degree identity and square containment") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.next_int(2, 8);
    Graph g(n, gnp_edges(n, 0.5, rng));
    if (g.edge_count() == 0) continue;
    const Graph lg = line_graph(g);
    for (int e = 0; e < g.edge_count(); ++e)
      REQUIRE(lg.degree(e) == g.degree(g.edge(e).u) + g.degree(g.edge(e).v) - 2);
    const Graph sq = square(g);
    for (const Edge& e : g.edges()) REQUIRE(sq.adjacent(e.u, e.v));
  }
  // diameter <= 2 squares to the complete graph
  const Graph star_sq = square(star_graph(5));
  REQUIRE(star_sq.edge_count() == 6 * 5 / 2);
}

TEST_CASE("recognizers") {
  REQUIRE(is_triangular(complete_graph(4)));
  REQUIRE_FALSE(is_triangular(cycle_graph(4)));
  REQUIRE_FALSE(is_chordal(cycle_graph(4)).has_value());
  REQUIRE(is_chordal(complete_graph(5)).has_value());

  const auto parts = is_complete_multipartite(complete_multipartite_graph({2, 3}));
  REQUIRE(parts.has_value());
  REQUIRE(parts->size() == 2);
  REQUIRE((*parts)[0].size() + (*parts)[1].size() == 5);

  const auto kn_parts = is_complete_multipartite(complete_graph(4));
  REQUIRE(kn_parts.has_value());
  REQUIRE(kn_parts->size() == 4);

  REQUIRE_FALSE(is_complete_multipartite(path_graph(4)).has_value());
}

TEST_CASE("chordal order is verified simplicial") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.next_int(3, 9);
    const Graph g = testing::random_two_connected_chordal(n, rng);
    const auto order = is_chordal(g);
    REQUIRE(order.has_value());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[(*order)[i]] = i;
    for (int i = 0; i < n; ++i) {
      std::vector<int> later;
      for (const auto& [w, e] : g.incident((*order)[i])) {
        (void)e;
        if (pos[w] > i) later.push_back(w);
      }
      for (size_t a = 0; a < later.size(); ++a)
        for (size_t b = a + 1; b < later.size(); ++b) REQUIRE(g.adjacent(later[a], later[b]));
    }
  }
}

TEST_CASE("common neighbors") {
  REQUIRE(common_neighbors(complete_graph(5), 0, 1) == std::vector<int>{2, 3, 4});
  REQUIRE(common_neighbors(cycle_graph(5), 0, 2) == std::vector<int>{1});
  REQUIRE(common_neighbors(cycle_graph(5), 0, 1).empty());
  REQUIRE_THROWS_AS(common_neighbors(cycle_graph(5), 3, 3), domain_error);
}

TEST_CASE("random tree generator yields trees") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.next_int(1, 12);
    const Graph t = random_tree(n, rng);
    REQUIRE(t.vertex_count() == n);
    REQUIRE(t.edge_count() == n - 1);
    REQUIRE(is_connected(t));
  }
}
