#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mdc/coloring.hpp"
#include "mdc/graph.hpp"

namespace mdc {

/// Malformed input file; line is 1-based, 0 when not line-specific.
struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_no, const std::string& msg)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
};

namespace detail {

inline bool parse_int(const std::string& token, int& out) {
  if (token.empty()) return false;
  size_t pos = 0;
  try {
    out = std::stoi(token, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == token.size();
}

/// Standard one-line graph6: 6-bit chars offset by 63, upper triangle in
/// column order x(0,1),x(0,2),x(1,2),x(0,3),...
inline Graph decode_graph6(const std::string& line, int line_no) {
  std::string s = line;
  if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
  if (s.empty()) throw parse_error(line_no, "empty graph6 line");
  size_t at = 0;
  long long n = 0;
  if (s[at] == 126) {  // '~': extended order
    if (at + 3 >= s.size()) throw parse_error(line_no, "truncated graph6 header");
    if (s[at + 1] == 126) throw parse_error(line_no, "graph6 orders above 258047 unsupported");
    for (int i = 1; i <= 3; ++i) {
      const int c = s[at + i] - 63;
      if (c < 0 || c > 63) throw parse_error(line_no, "invalid graph6 character");
      n = (n << 6) | c;
    }
    at += 4;
  } else {
    const int c = s[at] - 63;
    if (c < 0 || c > 62) throw parse_error(line_no, "invalid graph6 character");
    n = c;
    ++at;
  }
  std::vector<Edge> edges;
  int bit = 0;
  int current = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (bit == 0) {
        if (at >= s.size()) throw parse_error(line_no, "graph6 data too short");
        current = s[at] - 63;
        if (current < 0 || current > 63) throw parse_error(line_no, "invalid graph6 character");
        ++at;
        bit = 6;
      }
      --bit;
      if ((current >> bit) & 1) edges.push_back({u, v});
    }
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace detail

/// Reads the canonical edge-list format ("n m" then m lines "u v"), or a
/// one-line graph6 encoding, detected by the absence of a space in the
/// first line.
inline Graph read_graph(std::istream& in) {
  std::string first;
  if (!std::getline(in, first)) throw parse_error(1, "empty input");
  if (!first.empty() && first.back() == '\r') first.pop_back();
  if (first.find(' ') == std::string::npos) return detail::decode_graph6(first, 1);

  std::istringstream head(first);
  std::string tok_n, tok_m, extra;
  head >> tok_n >> tok_m;
  int n = 0, m = 0;
  if (!detail::parse_int(tok_n, n) || !detail::parse_int(tok_m, m) || (head >> extra))
    throw parse_error(1, "expected header 'n m'");
  if (n < 0 || m < 0) throw parse_error(1, "negative counts in header");
  std::vector<std::pair<int, int>> pairs;
  std::string line;
  for (int i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw parse_error(i + 2, "expected " + std::to_string(m) +
                                                              " edge lines, file ended early");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream row(line);
    std::string tok_u, tok_v;
    row >> tok_u >> tok_v;
    int u = 0, v = 0;
    if (!detail::parse_int(tok_u, u) || !detail::parse_int(tok_v, v) || (row >> extra))
      throw parse_error(i + 2, "expected an edge line 'u v'");
    pairs.push_back({u, v});
  }
  return build_graph(n, pairs);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open '" + path + "'");
  return read_graph(in);
}

/// Canonical edge-list writer: "n m" header, one "u v" line per edge in
/// edge-id order, single spaces, LF endings.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw parse_error(0, "cannot write '" + path + "'");
  write_edge_list(out, g);
}

/// Coloring file: whitespace-separated positive integers, color of edge id
/// i at position i.
inline EdgeColoring read_coloring(std::istream& in) {
  std::vector<int> colors;
  std::string token;
  while (in >> token) {
    int c = 0;
    if (!detail::parse_int(token, c)) throw parse_error(1, "bad color token '" + token + "'");
    if (c < 1) throw domain_error("color ids must be positive, got " + std::to_string(c));
    colors.push_back(c);
  }
  return EdgeColoring(std::move(colors));
}

inline EdgeColoring read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open '" + path + "'");
  return read_coloring(in);
}

inline void write_coloring(std::ostream& out, const EdgeColoring& c) {
  for (size_t i = 0; i < c.colors.size(); ++i) {
    if (i) out << ' ';
    out << c.colors[i];
  }
  out << '\n';
}

inline void write_coloring_file(const std::string& path, const EdgeColoring& c) {
  std::ofstream out(path);
  if (!out) throw parse_error(0, "cannot write '" + path + "'");
  write_coloring(out, c);
}

}  // namespace mdc
