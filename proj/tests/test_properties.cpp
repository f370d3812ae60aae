#include <catch2/catch_amalgamated.hpp>

#include "property_suites.hpp"

using namespace mdc::testing;

// Smaller instance counts here; the acceptance suite runs the full 500.
static constexpr int kInstances = 120;

TEST_CASE("restriction property") {
  const SuiteResult r = suite_restriction(kInstances, 1001);
  INFO(r.detail);
  REQUIRE(r.ok);
}

TEST_CASE("cycle multiplicity property") {
  const SuiteResult r = suite_cycle_multiplicity(kInstances, 1002);
  INFO(r.detail);
  REQUIRE(r.ok);
}

TEST_CASE("monotonicity under spanning subgraphs") {
  const SuiteResult r = suite_monotonicity(kInstances, 1003);
  INFO(r.detail);
  REQUIRE(r.ok);
}

TEST_CASE("vertex deletion monotonicity") {
  const SuiteResult r = suite_vertex_deletion(kInstances, 1004);
  INFO(r.detail);
  REQUIRE(r.ok);
}

TEST_CASE("block additivity against the oracle") {
  const SuiteResult r = suite_block_additivity(kInstances, 1005);
  INFO(r.detail);
  REQUIRE(r.ok);
}

TEST_CASE("certificate soundness against the oracle") {
  const SuiteResult r = suite_certificate_soundness(kInstances, 1006);
  INFO(r.detail);
  REQUIRE(r.ok);
}
