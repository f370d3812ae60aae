#include <catch2/catch_amalgamated.hpp>

#include "mdc/experiments.hpp"
#include "support.hpp"

using namespace mdc;

TEST_CASE("sample_gnp endpoints and determinism") {
  REQUIRE(sample_gnp(5, 0.0, 123).edge_count() == 0);
  REQUIRE(sample_gnp(5, 1.0, 123).edge_count() == 10);
  const Graph a = sample_gnp(30, 0.5, 42);
  const Graph b = sample_gnp(30, 0.5, 42);
  REQUIRE(a.edges() == b.edges());
  const Graph c = sample_gnp(30, 0.5, 43);
  REQUIRE(a.edges() != c.edges());
  REQUIRE_THROWS_AS(sample_gnp(5, 1.5, 0), domain_error);
  REQUIRE_THROWS_AS(sample_gnp(5, -0.1, 0), domain_error);
}

TEST_CASE("md1_fraction on degenerate p") {
  const ExperimentReport full = md1_fraction(5, 1.0, 3, 9);
  REQUIRE(full.count_connected == 3);
  REQUIRE(full.count_property == 3);
  REQUIRE(full.count_certified == 3);

  const ExperimentReport empty = md1_fraction(5, 0.0, 3, 9);
  REQUIRE(empty.count_connected == 0);
  REQUIRE(empty.count_property == 0);
  REQUIRE(empty.count_certified == 0);

  REQUIRE_THROWS_AS(md1_fraction(5, 0.5, 0, 9), domain_error);
}

TEST_CASE("md1_fraction reports are deterministic") {
  const ExperimentReport a = md1_fraction(20, 0.5, 30, 7);
  const ExperimentReport b = md1_fraction(20, 0.5, 30, 7);
  REQUIRE(a.count_connected == b.count_connected);
  REQUIRE(a.count_property == b.count_property);
  REQUIRE(a.count_certified == b.count_certified);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    REQUIRE(a.rows[i].connected == b.rows[i].connected);
    REQUIRE(a.rows[i].property == b.rows[i].property);
    REQUIRE(a.rows[i].certified == b.rows[i].certified);
  }
}

TEST_CASE("property never exceeds certificates") {
  for (uint64_t seed : {1ull, 2ull, 3ull}) {
    for (double p : {0.3, 0.5, 0.8}) {
      const ExperimentReport r = md1_fraction(12, p, 40, seed);
      REQUIRE(r.count_property <= r.count_certified);
      REQUIRE(r.count_certified <= r.count_connected);
      REQUIRE(r.count_connected <= r.trials);
    }
  }
}

TEST_CASE("the property rate grows with n at p = 1/2") {
  // direction of the almost-all statement at desk scale
  const double f20 = md1_fraction(20, 0.5, 200, 11).fraction_property();
  const double f40 = md1_fraction(40, 0.5, 200, 11).fraction_property();
  const double f60 = md1_fraction(60, 0.5, 200, 11).fraction_property();
  REQUIRE(f40 >= f20 - 0.1);
  REQUIRE(f60 >= f40 - 0.1);
}
