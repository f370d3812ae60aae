#pragma once

#include <json.hpp>

#include "mdc/certificate.hpp"
#include "mdc/coloring.hpp"
#include "mdc/experiments.hpp"
#include "mdc/graph.hpp"
#include "mdc/nordhaus.hpp"
#include "mdc/solver.hpp"

namespace mdc {

using json = nlohmann::json;

inline json graph_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

inline json md_result_json(const MdResult& r) {
  json blocks = json::array();
  for (const BlockReport& b : r.blocks)
    blocks.push_back({{"edges", b.edge_ids}, {"method", b.method}, {"value", b.value}});
  json bounds = json::array();
  for (const auto& [bound, source] : r.bounds_log) bounds.push_back({bound, source});
  return {{"md", r.value}, {"witness", r.witness.colors}, {"blocks", blocks},
          {"bounds", bounds}};
}

inline json verdict_json(const MdVerdict& v) {
  json pairs = json::array();
  for (const auto& [a, b] : v.uncovered_pairs) pairs.push_back({a, b});
  return {{"is_md", v.is_md}, {"uncovered_pairs", pairs}};
}

inline json certificate_json(const ClosureCertificate& c) {
  json gadgets = json::array();
  for (const Gadget& g : c.gadgets)
    gadgets.push_back({{"kind", g.kind == GadgetKind::triangle ? "triangle" : "k23"},
                       {"vertices", g.vertices},
                       {"edges", g.edge_ids}});
  json trace = json::array();
  for (const MergeStep& s : c.merge_trace) trace.push_back({s.a, s.b, s.u, s.v});
  return {{"gadgets", gadgets}, {"merge_trace", trace}};
}

inline json ng_record_json(const NgRecord& r) {
  return {{"n", r.n},       {"graph", graph_json(r.graph)}, {"md", r.md},
          {"md_complement", r.md_complement}, {"sum", r.sum}, {"product", r.product}};
}

inline json scan_report_json(const ScanReport& r) {
  const auto extreme = [&](const ScanExtreme& e) {
    return json{{"value", e.value},
                {"witness", graph_json(graph_from_mask(r.n, e.witness_mask))}};
  };
  return {{"n", r.n},
          {"dedup", r.dedup},
          {"scanned", r.scanned},
          {"qualified", r.qualified},
          {"min_sum", extreme(r.min_sum)},
          {"max_sum", extreme(r.max_sum)},
          {"min_product", extreme(r.min_prod)},
          {"max_product", extreme(r.max_prod)}};
}

inline json search_hit_json(const SearchHit& h) {
  return {{"found", true},
          {"graph", graph_json(h.graph)},
          {"md", h.md},
          {"md_complement", h.md_complement},
          {"sum", h.md + h.md_complement},
          {"product", h.md * h.md_complement},
          {"attempts", h.attempts}};
}

inline json experiment_json(const ExperimentReport& r) {
  return {{"n", r.n},
          {"p", r.p},
          {"trials", r.trials},
          {"seed", r.seed},
          {"count_connected", r.count_connected},
          {"count_property", r.count_property},
          {"count_certified", r.count_certified},
          {"fraction_connected", r.fraction_connected()},
          {"fraction_property", r.fraction_property()},
          {"fraction_certified", r.fraction_certified()}};
}

}  // namespace mdc
