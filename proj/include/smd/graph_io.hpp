#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "smd/error.hpp"
#include "smd/signed_graph.hpp"

namespace smd {

// Graph file format:
//
//   # comment
//   n 4
//   0 1 +
//   1 2 -
//
// Blank lines and lines starting with '#' are ignored. The header must come
// before any edge line.

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace detail

inline SignedGraph parse_graph(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<SignedEdge> edges;
  std::vector<std::size_t> edge_line;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n") throw ParseError(line_no, "expected header 'n <count>'");
      n = detail::parse_count(tokens[1]);
      if (!n || *n == 0) throw ParseError(line_no, "vertex count must be a positive integer");
    } else {
      if (tokens.size() != 3) throw ParseError(line_no, "expected edge line 'u v +|-'");
      auto u = detail::parse_count(tokens[0]);
      auto v = detail::parse_count(tokens[1]);
      if (!u || !v) throw ParseError(line_no, "edge endpoints must be non-negative integers");
      if (*u >= *n || *v >= *n) throw ParseError(line_no, "edge endpoint out of range");
      if (*u == *v) throw ParseError(line_no, "self-loop");
      Sign s;
      if (tokens[2] == "+")
        s = Sign::positive;
      else if (tokens[2] == "-")
        s = Sign::negative;
      else
        throw ParseError(line_no, "edge sign must be '+' or '-'");
      edges.push_back({*u, *v, s});
      edge_line.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (!n) throw ParseError(0, "missing header 'n <count>'");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto key = std::pair(std::min(edges[i].u, edges[i].v), std::max(edges[i].u, edges[i].v));
    if (!seen.insert(key).second) throw ParseError(edge_line[i], "duplicate edge");
  }
  try {
    return SignedGraph::build(*n, edges);
  } catch (const Disconnected& e) {
    throw ParseError(0, e.what());
  }
}

inline SignedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

// Canonical text: header then edges sorted lexicographically, no comments.
inline std::string write_graph(const SignedGraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + to_char(e.sign) + "\n";
  return out;
}

// Undirected DOT. Positive edges solid, negative edges dashed, basis vertices
// filled black.
inline std::string to_dot(const SignedGraph& g, std::span<const Vertex> basis = {}) {
  std::set<Vertex> filled(basis.begin(), basis.end());
  std::string out = "graph signed {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    if (filled.count(v)) out += " [style=filled, fillcolor=black, fontcolor=white]";
    out += ";\n";
  }
  for (const auto& e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
    out += e.sign == Sign::positive ? " [style=solid];\n" : " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace smd
