// Command-line front end: every library operation behind one batch tool.
// Exit codes: 0 success, 1 domain rejection, 2 IO/parse/usage failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mdc/constructions.hpp"
#include "mdc/experiments.hpp"
#include "mdc/io.hpp"
#include "mdc/json_report.hpp"
#include "mdc/nordhaus.hpp"
#include "mdc/random.hpp"
#include "mdc/recognizers.hpp"
#include "mdc/solver.hpp"
#include "mdc/transforms.hpp"

namespace {

using mdc::json;

struct Options {
  std::string format = "json";
  bool deterministic = false;  // searches are always sequential in this build
};

void emit(const Options& opt, const json& body, const std::string& plain) {
  if (opt.format == "json")
    std::cout << body.dump(2) << "\n";
  else
    std::cout << plain;
}

std::string plain_md(const mdc::MdResult& r) {
  std::ostringstream out;
  out << "md: " << r.value << "\n";
  out << "witness:";
  for (int c : r.witness.colors) out << ' ' << c;
  out << "\n";
  for (size_t i = 0; i < r.blocks.size(); ++i) {
    out << "block " << i << " [" << r.blocks[i].method << "] value " << r.blocks[i].value
        << ": edges";
    for (int e : r.blocks[i].edge_ids) out << ' ' << e;
    out << "\n";
  }
  for (const auto& [bound, src] : r.bounds_log) out << "bound " << bound << " (" << src << ")\n";
  return out.str();
}

bool looks_like_cycle(const mdc::Graph& g) {
  if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count() || !mdc::is_connected(g))
    return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

/// Extremal when the family guarantees md: all-distinct on trees, the cycle
/// construction on cycles, trivial otherwise.
mdc::EdgeColoring default_family_coloring(const mdc::Graph& g) {
  if (mdc::is_connected(g) && g.edge_count() == g.vertex_count() - 1)
    return mdc::color_tree(g);
  if (looks_like_cycle(g)) return mdc::detail::cycle_coloring(g);
  return mdc::EdgeColoring(std::vector<int>(g.edge_count(), 1));
}

int require_int(const std::vector<std::string>& params, size_t at, const std::string& family) {
  if (at >= params.size())
    throw mdc::domain_error("family '" + family + "' needs more parameters");
  try {
    return std::stoi(params[at]);
  } catch (const std::exception&) {
    throw mdc::domain_error("family '" + family + "': parameter '" + params[at] +
                            "' is not an integer");
  }
}

struct FamilyOutput {
  mdc::Graph graph;
  mdc::EdgeColoring coloring;
  std::string base;
  // the n6_lower family also emits its complement pair
  bool with_complement = false;
  mdc::Graph complement_graph;
  mdc::EdgeColoring complement_coloring;
};

FamilyOutput build_family(const std::string& family, const std::vector<std::string>& params,
                          uint64_t seed) {
  FamilyOutput out;
  out.base = family;
  for (const std::string& p : params)
    if (p.find('/') == std::string::npos && p.find('.') == std::string::npos)
      out.base += "_" + p;
  mdc::SplitMix64 rng(seed);
  if (family == "cycle") {
    auto [g, c] = mdc::color_cycle(require_int(params, 0, family));
    out.graph = std::move(g);
    out.coloring = std::move(c);
  } else if (family == "tree") {
    out.graph = mdc::random_tree(require_int(params, 0, family), rng);
    out.coloring = mdc::color_tree(out.graph);
  } else if (family == "unicyclic") {
    out.graph = mdc::random_unicyclic(require_int(params, 0, family),
                                      require_int(params, 1, family), rng);
    out.coloring = mdc::color_unicyclic(out.graph);
  } else if (family == "complete") {
    out.graph = mdc::complete_graph(require_int(params, 0, family));
    out.coloring = default_family_coloring(out.graph);
  } else if (family == "complete_multipartite") {
    if (params.size() < 2) throw mdc::domain_error("complete_multipartite needs >= 2 parts");
    std::vector<int> parts;
    for (size_t i = 0; i < params.size(); ++i) parts.push_back(require_int(params, i, family));
    out.graph = mdc::complete_multipartite_graph(parts);
    out.coloring = default_family_coloring(out.graph);
  } else if (family == "broom") {
    out.graph = mdc::broom(require_int(params, 0, family));
    out.coloring = mdc::color_tree(out.graph);
  } else if (family == "ng_lower") {
    out.graph = mdc::ng_lower_graph(require_int(params, 0, family));
    out.coloring = default_family_coloring(out.graph);
  } else if (family == "n6_lower") {
    auto [g, gc] = mdc::n6_product_lower_pair();
    out.graph = std::move(g);
    const auto dec = mdc::block_decomposition(out.graph);
    std::vector<mdc::EdgeColoring> per_block;
    for (size_t i = 0; i < dec.blocks.size(); ++i) {
      const auto sub = mdc::edge_subgraph(out.graph, dec.blocks[i]);
      per_block.push_back(dec.is_bridge[i] ? mdc::EdgeColoring({1})
                                           : mdc::detail::cycle_coloring(sub.graph));
    }
    out.coloring = mdc::compose_block_colorings(out.graph, per_block);
    out.with_complement = true;
    out.complement_graph = std::move(gc);
    out.complement_coloring = mdc::EdgeColoring(
        std::vector<int>(out.complement_graph.edge_count(), 1));
  } else if (family == "join" || family == "square" || family == "line_graph") {
    if (params.empty())
      throw mdc::domain_error("family '" + family + "' needs a base graph file");
    const mdc::Graph h = mdc::read_graph_file(params[0]);
    if (family == "join")
      out.graph = mdc::join(mdc::complete_graph(1), h);
    else if (family == "square")
      out.graph = mdc::square(h);
    else
      out.graph = mdc::line_graph(h);
    out.coloring = default_family_coloring(out.graph);
  } else {
    throw mdc::domain_error("unknown family '" + family + "'");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monochromatic-disconnection toolbox"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "plain"}))
      ->capture_default_str();
  app.add_flag("--deterministic", opt.deterministic,
               "force sequential search (always on in this build)");

  std::string graph_path, coloring_path, out_path, target = "sum=2", csv_path, family;
  std::vector<std::string> params;
  int k = 2, n = 0, trials = 100, oracle_cap = 12;
  double p = 0.5;
  uint64_t seed = 0, budget = 100000;
  bool dedup = false;

  auto* cmd_md = app.add_subcommand("md", "exact md of a graph");
  cmd_md->add_option("graph", graph_path)->required();

  auto* cmd_verify = app.add_subcommand("verify", "check a coloring for the MD property");
  cmd_verify->add_option("graph", graph_path)->required();
  cmd_verify->add_option("coloring", coloring_path)->required();

  auto* cmd_decide = app.add_subcommand("decide", "find an MD-coloring with at least k colors");
  cmd_decide->add_option("graph", graph_path)->required();
  cmd_decide->add_option("-k", k, "target palette")->required();

  auto* cmd_cert = app.add_subcommand("certify1", "closure certificate for md = 1");
  cmd_cert->add_option("graph", graph_path)->required();

  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force md over all edge partitions");
  cmd_oracle->add_option("graph", graph_path)->required();
  cmd_oracle->add_option("--oracle-cap", oracle_cap, "edge-count cap")->capture_default_str();

  auto* cmd_construct = app.add_subcommand("construct", "emit a family graph with its coloring");
  cmd_construct->add_option("family", family)->required();
  cmd_construct->add_option("params", params);
  cmd_construct->add_option("-o,--output", out_path, "output base name");
  cmd_construct->add_option("--seed", seed)->capture_default_str();

  auto* cmd_generate = app.add_subcommand("generate", "emit a family graph only");
  cmd_generate->add_option("family", family)->required();
  cmd_generate->add_option("params", params);
  cmd_generate->add_option("-o,--output", out_path, "output base name");
  cmd_generate->add_option("--seed", seed)->capture_default_str();

  auto* cmd_complement = app.add_subcommand("complement", "complement graph");
  cmd_complement->add_option("graph", graph_path)->required();
  cmd_complement->add_option("-o,--output", out_path, "write edge list here");

  auto* cmd_ng = app.add_subcommand("ng", "Nordhaus-Gaddum record of a complement pair");
  cmd_ng->add_option("graph", graph_path)->required();

  auto* cmd_scan = app.add_subcommand("scan", "exhaustive complement-pair scan (n = 4..6)");
  cmd_scan->add_option("-n", n, "order")->required();
  cmd_scan->add_flag("--dedup", dedup, "visit only permutation-canonical masks");

  auto* cmd_search = app.add_subcommand("search", "random search for a target complement pair");
  cmd_search->add_option("-n", n, "order")->required();
  cmd_search->add_option("--target", target, "sum=K or product=K")->capture_default_str();
  cmd_search->add_option("--budget", budget)->capture_default_str();
  cmd_search->add_option("--seed", seed)->capture_default_str();

  auto* cmd_random = app.add_subcommand("random", "seeded G(n,p) md=1 experiment");
  cmd_random->add_option("-n", n, "order")->required();
  cmd_random->add_option("-p", p, "edge probability")->capture_default_str();
  cmd_random->add_option("-t,--trials", trials)->capture_default_str();
  cmd_random->add_option("--seed", seed)->capture_default_str();
  cmd_random->add_option("--csv", csv_path, "write one row per trial");

  try {
    app.parse(argc, argv);

    if (*cmd_md) {
      const mdc::MdResult r = mdc::md_exact(mdc::read_graph_file(graph_path));
      emit(opt, mdc::md_result_json(r), plain_md(r));
    } else if (*cmd_verify) {
      const mdc::Graph g = mdc::read_graph_file(graph_path);
      const mdc::EdgeColoring c = mdc::read_coloring_file(coloring_path);
      const mdc::MdVerdict v = mdc::verify_md(g, c);
      std::ostringstream plain;
      plain << (v.is_md ? "MD-coloring: yes" : "MD-coloring: no") << "\n";
      for (const auto& [a, b] : v.uncovered_pairs)
        plain << "uncovered: " << a << ' ' << b << "\n";
      emit(opt, mdc::verdict_json(v), plain.str());
    } else if (*cmd_decide) {
      const auto w = mdc::md_decide(mdc::read_graph_file(graph_path), k);
      json body{{"k", k}, {"found", w.has_value()}};
      std::ostringstream plain;
      if (w) {
        body["witness"] = w->colors;
        plain << "found:";
        for (int c : w->colors) plain << ' ' << c;
        plain << "\n";
      } else {
        body["witness"] = nullptr;
        plain << "none\n";
      }
      emit(opt, body, plain.str());
    } else if (*cmd_cert) {
      const mdc::Graph g = mdc::read_graph_file(graph_path);
      const auto cert = mdc::md1_certificate(g);
      if (cert) {
        std::string reason;
        const bool checked = mdc::check_certificate(g, *cert, &reason);
        json body = mdc::certificate_json(*cert);
        body["found"] = true;
        body["checked"] = checked;
        emit(opt, body,
             "certificate with " + std::to_string(cert->gadgets.size()) + " gadgets\n");
      } else {
        emit(opt, json{{"found", false}}, "none\n");
      }
    } else if (*cmd_oracle) {
      const mdc::MdResult r =
          mdc::brute_force_oracle(mdc::read_graph_file(graph_path), oracle_cap);
      emit(opt, mdc::md_result_json(r), plain_md(r));
    } else if (*cmd_construct || *cmd_generate) {
      FamilyOutput fam = build_family(family, params, seed);
      const std::string base = out_path.empty() ? fam.base : out_path;
      json files;
      mdc::write_edge_list_file(base + ".edges", fam.graph);
      files["graph"] = base + ".edges";
      json body{{"family", family},
                {"n", fam.graph.vertex_count()},
                {"m", fam.graph.edge_count()}};
      if (*cmd_construct) {
        mdc::write_coloring_file(base + ".colors", fam.coloring);
        files["coloring"] = base + ".colors";
        body["palette"] = fam.coloring.palette();
        if (fam.with_complement) {
          mdc::write_edge_list_file(base + "_complement.edges", fam.complement_graph);
          mdc::write_coloring_file(base + "_complement.colors", fam.complement_coloring);
          files["complement_graph"] = base + "_complement.edges";
          files["complement_coloring"] = base + "_complement.colors";
        }
      } else if (fam.with_complement) {
        mdc::write_edge_list_file(base + "_complement.edges", fam.complement_graph);
        files["complement_graph"] = base + "_complement.edges";
      }
      body["files"] = files;
      std::ostringstream plain;
      plain << "wrote " << base << ".edges (n=" << fam.graph.vertex_count()
            << " m=" << fam.graph.edge_count() << ")\n";
      emit(opt, body, plain.str());
    } else if (*cmd_complement) {
      const mdc::Graph gc = mdc::complement(mdc::read_graph_file(graph_path));
      if (!out_path.empty()) {
        mdc::write_edge_list_file(out_path, gc);
        emit(opt, json{{"file", out_path}, {"n", gc.vertex_count()}, {"m", gc.edge_count()}},
             "wrote " + out_path + "\n");
      } else {
        std::ostringstream text;
        mdc::write_edge_list(text, gc);
        emit(opt, mdc::graph_json(gc), text.str());
      }
    } else if (*cmd_ng) {
      const mdc::NgRecord rec = mdc::ng_pair(mdc::read_graph_file(graph_path));
      std::ostringstream plain;
      plain << "md: " << rec.md << "\nmd_complement: " << rec.md_complement
            << "\nsum: " << rec.sum << "\nproduct: " << rec.product << "\n";
      emit(opt, mdc::ng_record_json(rec), plain.str());
    } else if (*cmd_scan) {
      const mdc::ScanReport rep = mdc::scan_order(n, dedup);
      std::ostringstream plain;
      plain << "n=" << rep.n << " qualified=" << rep.qualified << "\n"
            << "sum: " << rep.min_sum.value << ".." << rep.max_sum.value << "\n"
            << "product: " << rep.min_prod.value << ".." << rep.max_prod.value << "\n";
      emit(opt, mdc::scan_report_json(rep), plain.str());
    } else if (*cmd_search) {
      const auto hit = mdc::sampled_search(n, mdc::parse_target(target), budget, seed);
      if (hit) {
        std::ostringstream plain;
        plain << "found after " << hit->attempts << " attempts (md " << hit->md << " + "
              << hit->md_complement << ")\n";
        emit(opt, mdc::search_hit_json(*hit), plain.str());
      } else {
        emit(opt, json{{"found", false}, {"attempts", budget}}, "none\n");
      }
    } else if (*cmd_random) {
      const mdc::ExperimentReport rep = mdc::md1_fraction(n, p, trials, seed);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw mdc::parse_error(0, "cannot write '" + csv_path + "'");
        csv << "trial,connected,property,certified\n";
        for (const auto& row : rep.rows)
          csv << row.trial << ',' << row.connected << ',' << row.property << ','
              << row.certified << "\n";
      }
      std::ostringstream plain;
      plain << "connected: " << rep.count_connected << "/" << rep.trials << "\n"
            << "property: " << rep.count_property << "/" << rep.trials << "\n"
            << "certified: " << rep.count_certified << "/" << rep.trials << "\n";
      emit(opt, mdc::experiment_json(rep), plain.str());
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const mdc::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mdc::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
