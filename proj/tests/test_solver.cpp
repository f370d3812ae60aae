#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "mdc/constructions.hpp"
#include "mdc/random.hpp"
#include "mdc/solver.hpp"
#include "support.hpp"

using namespace mdc;

TEST_CASE("md_decide on cycles and K_{2,3}") {
  const Graph c5 = cycle_graph(5);
  const auto two = md_decide(c5, 2);
  REQUIRE(two.has_value());
  REQUIRE(two->palette() == 2);
  REQUIRE(verify_md(c5, *two).is_md);
  std::map<int, int> sizes;
  for (int c : two->colors) ++sizes[c];
  REQUIRE(std::max(sizes[1], sizes[2]) == 3);

  REQUIRE_FALSE(md_decide(c5, 3).has_value());
  REQUIRE_FALSE(md_decide(complete_multipartite_graph({2, 3}), 2).has_value());
}

TEST_CASE("md_decide bounds and rejections") {
  REQUIRE_FALSE(md_decide(path_graph(4), 4).has_value());  // beyond n-1
  REQUIRE(md_decide(path_graph(4), 3).has_value());
  REQUIRE_THROWS_AS(md_decide(path_graph(4), 0), domain_error);
  REQUIRE_THROWS_AS(md_decide(build_graph(4, {{0, 1}, {2, 3}}), 1), domain_error);
  REQUIRE(md_decide(build_graph(2, {{0, 1}}), 1)->colors == std::vector<int>{1});
}

TEST_CASE("md_decide agrees with the cycle formula off the formula path") {
  REQUIRE(md_decide(cycle_graph(7), 3).has_value());
  REQUIRE_FALSE(md_decide(cycle_graph(7), 4).has_value());
  REQUIRE(md_decide(cycle_graph(8), 4).has_value());
  REQUIRE_FALSE(md_decide(cycle_graph(8), 5).has_value());
}

TEST_CASE("md_decide is deterministic") {
  const Graph g = testing::petersen();
  const auto a = md_decide(g, 2);
  const auto b = md_decide(g, 2);
  REQUIRE(a.has_value());
  REQUIRE(a->colors == b->colors);
}

TEST_CASE("md_exact on trees, bowtie, Petersen") {
  REQUIRE(md_exact(path_graph(4)).value == 3);
  REQUIRE(md_exact(testing::bowtie()).value == 2);

  const Graph pet = testing::petersen();
  const MdResult r = md_exact(pet);
  REQUIRE(r.value <= 10 / 2);
  // the decide sweep is the independent reference for the frozen value
  int sweep = 1;
  for (int k = 5; k >= 2; --k)
    if (md_decide(pet, k)) {
      sweep = k;
      break;
    }
  REQUIRE(r.value == sweep);
  REQUIRE(r.value == 2);
  REQUIRE(r.blocks.size() == 1);
  REQUIRE(r.blocks[0].method == "search");
  REQUIRE(verify_md(pet, r.witness).is_md);
  REQUIRE(r.witness.palette() == 2);
}

TEST_CASE("md_exact resolves blocks by the right method") {
  const MdResult tree = md_exact(star_graph(3));
  for (const auto& b : tree.blocks) REQUIRE(b.method == "bridge");

  const MdResult cyc = md_exact(cycle_graph(9));
  REQUIRE(cyc.blocks[0].method == "cycle-formula");
  REQUIRE(cyc.value == 4);

  const MdResult k5 = md_exact(complete_graph(5));
  REQUIRE(k5.blocks[0].method == "closure-certificate");
  REQUIRE(k5.value == 1);
}

TEST_CASE("md_exact handles degenerate graphs") {
  REQUIRE(md_exact(Graph(0, {})).value == 0);
  REQUIRE(md_exact(Graph(1, {})).value == 0);
  REQUIRE(md_exact(Graph(5, {})).value == 0);
  // disconnected: component additivity
  const Graph two_c4 =
      build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
  REQUIRE(md_exact(two_c4).value == 4);
  REQUIRE(verify_md(two_c4, md_exact(two_c4).witness).is_md);
}

TEST_CASE("witnesses always verify with the claimed palette") {
  SplitMix64 rng(123);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = rng.next_int(1, 8);
    Graph g(n, gnp_edges(n, 0.45, rng));
    const MdResult r = md_exact(g);
    REQUIRE(verify_md(g, r.witness).is_md);
    REQUIRE(r.witness.palette() == r.value);
    REQUIRE(r.value <= std::max(0, n - 1));
  }
}

TEST_CASE("upper bound over blocks") {
  SplitMix64 tree_rng(5);
  const auto [tree_bound, tree_src] = upper_bound(random_tree(7, tree_rng));
  REQUIRE(tree_bound == 6);
  REQUIRE(tree_src.size() == 6);

  const Graph c5p = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
  REQUIRE(upper_bound(c5p).first == 3);
  REQUIRE(upper_bound(complete_graph(6)).first == 3);
  REQUIRE_THROWS_AS(upper_bound(build_graph(4, {{0, 1}, {2, 3}})), domain_error);

  SplitMix64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.next_int(2, 8);
    Graph g = random_connected_gnp(n, 0.5, rng);
    REQUIRE(upper_bound(g).first >= md_exact(g).value);
  }
}

TEST_CASE("brute-force oracle on known values") {
  REQUIRE(brute_force_oracle(cycle_graph(6)).value == 3);
  REQUIRE(brute_force_oracle(complete_graph(4)).value == 1);
  REQUIRE(brute_force_oracle(complete_multipartite_graph({2, 3})).value == 1);
  REQUIRE(brute_force_oracle(Graph(3, {})).value == 0);
}

TEST_CASE("oracle cap and override") {
  const Graph big = complete_multipartite_graph({3, 5});  // m = 15
  REQUIRE_THROWS_AS(brute_force_oracle(big), domain_error);
  const Graph medium = star_graph(13);  // m = 13
  REQUIRE_THROWS_AS(brute_force_oracle(medium), domain_error);
  REQUIRE(brute_force_oracle(medium, 13).value == 13);
}

TEST_CASE("oracle equivalence spot checks") {
  SplitMix64 rng(999);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.next_int(2, 6);
    const int max_m = std::min(10, n * (n - 1) / 2);
    if (max_m < n - 1) continue;
    const int m = rng.next_int(n - 1, max_m);
    Graph g = random_connected_with_m(n, m, rng);
    REQUIRE(md_exact(g).value == brute_force_oracle(g).value);
  }
}
