#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mdc/certificate.hpp"
#include "mdc/graph.hpp"
#include "mdc/random.hpp"

namespace mdc {

/// Reproducible G(n,p): SplitMix64 stream seeded with `seed`, one draw per
/// unordered pair in lexicographic order, edge iff draw < p. Identical
/// (n, p, seed) gives an identical edge set on every platform.
inline Graph sample_gnp(int n, double p, uint64_t seed) {
  if (n < 0) throw domain_error("sample_gnp: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw domain_error("sample_gnp: p must be in [0,1]");
  SplitMix64 rng(seed);
  return Graph(n, gnp_edges(n, p, rng));
}

struct TrialRow {
  int trial = 0;
  bool connected = false;
  bool property = false;   // every pair has >= 3 common neighbors
  bool certified = false;  // closure certificate found
};

struct ExperimentReport {
  int n = 0;
  double p = 0.0;
  int trials = 0;
  uint64_t seed = 0;
  int count_connected = 0;
  int count_property = 0;
  int count_certified = 0;
  std::vector<TrialRow> rows;

  double fraction_connected() const { return static_cast<double>(count_connected) / trials; }
  double fraction_property() const { return static_cast<double>(count_property) / trials; }
  double fraction_certified() const { return static_cast<double>(count_certified) / trials; }
};

/// Per-trial pipeline: sample G(n,p) from substream derive_seed(seed, t),
/// check connectivity, check the three-common-neighbors property, then
/// attempt a closure certificate. The property provably implies a
/// certificate, so a trial with the property but no certificate aborts the
/// run. Certificates are a sound lower bound on the md=1 rate; disconnected
/// trials skip both checks.
inline ExperimentReport md1_fraction(int n, double p, int trials, uint64_t seed) {
  if (trials < 1) throw domain_error("md1_fraction: trials must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw domain_error("md1_fraction: p must be in [0,1]");
  ExperimentReport rep;
  rep.n = n;
  rep.p = p;
  rep.trials = trials;
  rep.seed = seed;
  for (int t = 0; t < trials; ++t) {
    const Graph g = sample_gnp(n, p, derive_seed(seed, static_cast<uint64_t>(t)));
    TrialRow row;
    row.trial = t;
    row.connected = is_connected(g);
    if (row.connected && g.edge_count() >= 1 && n >= 2) {
      row.property = has_three_common_neighbors(g);
      row.certified = md1_certificate(g).has_value();
      if (row.property && !row.certified)
        throw std::logic_error(
            "md1_fraction: trial " + std::to_string(t) +
            " has >= 3 common neighbors everywhere but no closure certificate");
    }
    rep.count_connected += row.connected;
    rep.count_property += row.property;
    rep.count_certified += row.certified;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace mdc
